#pragma once

#include "covlat/cover.hpp"
#include "covlat/exact.hpp"

#include <map>

namespace covlat {

/// Unramified genuine character of the covering torus attached to a lattice
/// (Y_{Q,n} by default), with monomial values zeta^j v^c on the canonical
/// basis.
struct GenuineCharacter {
    CoverDatum cover;
    LatticeBasis lattice;                     // defining lattice (HNF basis)
    std::vector<std::pair<long, long>> jc;    // per basis row: (zeta exp, v exp)

    long modulus() const { return cover.scalar_modulus(); }
    bool is_unitary() const;
    ExactScalar value(int i) const;  // value on basis vector i
};

GenuineCharacter make_character(const CoverDatum& c, const std::vector<std::pair<long, long>>& jc);
GenuineCharacter make_character_on(const CoverDatum& c, const LatticeBasis& lattice,
                                   const std::vector<std::pair<long, long>>& jc);
GenuineCharacter trivial_character(const CoverDatum& c);
GenuineCharacter trivial_character_on(const CoverDatum& c, const LatticeBasis& lattice);

// chi(s_y); y must lie in the defining lattice. Exact for both epsilon = +1
// (plain homomorphism) and epsilon = -1 (cocycle correction from the torus
// multiplication rule).
ExactScalar eval(const GenuineCharacter& chi, const Vec& y);

// chi(h_alpha(pi^{n_alpha})) = chi(s_{n_alpha alpha^vee})
ExactScalar chi_alpha(const GenuineCharacter& chi, const Vec& coroot);
ExactScalar chi_alpha_simple(const GenuineCharacter& chi, int i);

// (w chi)(s_y) = chi(s_{w^{-1} y}); epsilon = +1 only.
GenuineCharacter weyl_act(const RootDatum& d, const WeylElement& w, const GenuineCharacter& chi);

// chi twisted by conjugation with w_alpha, evaluated at z in the lattice:
// (w_alpha chi)(s_z) = chi(s_z) * chi(s_{-<z,alpha> alpha^vee}); valid for
// either epsilon (relation (D) of the torus presentation).
ExactScalar simple_twist_eval(const GenuineCharacter& chi, int simple_index, const Vec& z);

std::vector<WeylElement> stabilizer(const GenuineCharacter& chi);
bool is_regular(const GenuineCharacter& chi);

// roots alpha with chi(h_alpha(pi^{n_alpha})) = q^{-1}
std::vector<std::pair<Vec, Vec>> phi_set(const GenuineCharacter& chi);

// W_S = { w : Phi(chi)^vee ∩ w(Phi_-^vee) = S^vee }, indexed by the subset of
// phi_pairs selected (bitmask); partitions W.
std::map<unsigned long, std::vector<WeylElement>> w_s_partition(
    const RootDatum& d, const std::vector<WeylElement>& weyl,
    const std::vector<std::pair<Vec, Vec>>& phi_pairs);
std::map<unsigned long, std::vector<WeylElement>> w_s_sets(const GenuineCharacter& chi);

// mu(w_alpha, i(chi))^{-1}; poles rejected at chi_alpha = 1
ExactScalar plancherel_inverse(const GenuineCharacter& chi, const Vec& coroot);
// c_gk(w_alpha, chi) = (1 - q^{-1} chi_alpha) / (1 - chi_alpha)
ExactScalar gk_constant(const GenuineCharacter& chi, const Vec& coroot);
// gamma(w_alpha, chi) = c_gk^{-1}
ExactScalar gamma_factor(const GenuineCharacter& chi, const Vec& coroot);

}  // namespace covlat
