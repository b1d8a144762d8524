#pragma once

#include "covlat/rootdata.hpp"

#include <map>

namespace covlat {

/// Brylinski--Deligne cover datum: root datum, degree n, the bilinear form D
/// (upper-triangular convention) with B = D + D^T symmetric and Weyl
/// invariant, and the sign epsilon modeling (-1, pi)_n.
struct CoverDatum {
    RootDatum datum;
    long n = 1;
    IntMat d_form;  // D on the ambient basis of Y
    IntMat b_form;  // B = D + D^T
    int epsilon = +1;

    Int q_value(const Vec& y) const;              // Q(y) = D(y, y)
    Int b_value(const Vec& y, const Vec& z) const;
    Int d_value(const Vec& y, const Vec& z) const;

    long n_alpha(const Vec& coroot) const;  // n / gcd(n, Q(coroot))
    long n_alpha_simple(int i) const { return n_alpha(datum.simple_coroots[i]); }

    // default cyclotomic modulus for scalars attached to this cover
    long scalar_modulus() const;

    void validate() const;  // W-invariance of B, B = D + D^T, diag consistency
};

struct CoverParams {
    Family family = Family::GL;
    int rank = 2;
    long n = 1;
    Int p = 0;               // family parameter p (GL/GSp-II/GSpin)
    Int q = 1;               // family parameter q (GL); derived elsewhere
    std::optional<Int> q_e0; // override for Q(e_0) on GSp covers
    std::optional<Int> q_coroot;  // Q(alpha^vee) scale for SL/Sp/SO3/Spin
    int epsilon = +1;
};

CoverDatum make_cover(const CoverParams& params);
CoverDatum make_cover(const RootDatum& d, long n, const IntMat& b_form, int epsilon);

struct CoverInvariants {
    LatticeBasis y;           // ambient Z^rank
    LatticeBasis y_qn;        // { y : B(y, Y) ⊆ nZ }
    LatticeBasis y_qn_sc;     // span of n_alpha alpha^vee over all coroots
    LatticeBasis y_sc;        // coroot span
    LatticeBasis y0;          // Y ∩ QΦ^vee
    LatticeBasis y0_qn;       // { y in Y_0 : B(y, Y_0) ⊆ nZ }
    LatticeBasis y0_cap_yqn;
    LatticeBasis y_frak_c;    // { y : B(y, Y_{0,Q,n}) ⊆ nZ }
    LatticeBasis y_k_natural; // { y : B(y, Y_0) ⊆ nZ }
    std::optional<LatticeBasis> y_c, y_z, y_c_qn;  // need connected center

    FinAbGroup x_qn;      // Y / Y_{Q,n}
    FinAbGroup x0_qn;     // Y_0 / Y_{0,Q,n}
    FinAbGroup x_gamma;   // Y / (Y_0 + Y_{Q,n})
    FinAbGroup x_frakc;   // Y^c / (Y_0 + Y_{Q,n})
    FinAbGroup x_gamma_mod_frakc;  // Y / Y^c

    std::map<long, long> n_alpha_by_simple;

    bool is_isotypic_pair = false;  // Y_0 ∩ Y_{Q,n} == Y_{0,Q,n}
    bool is_saturated = false;      // Y^sc ∩ Y_{Q,n} == Y^sc_{Q,n}
    bool is_saturated_derived = false;  // Y^sc ∩ Y_{0,Q,n} == Y^sc_{Q,n}
};

CoverInvariants cover_invariants(const CoverDatum& c);

LatticeBasis y_qn(const CoverDatum& c);

// Dual root datum on Y_{Q,n} (its HNF basis): coroots n_alpha alpha^vee,
// roots alpha / n_alpha; Cartan integrality is validated.
RootDatum dual_datum(const CoverDatum& c);

struct CenterLattices {
    LatticeBasis y_c, y_z, y_c_qn;
};
CenterLattices center_lattices(const CoverDatum& c);

enum class QAction { Trivial, Free, Neither };
std::string q_action_name(QAction a);

struct QGroupReport {
    FinAbGroup q_dagger;  // Y / (Y_c + Y_0)
    FinAbGroup q_z;       // Y_{c,Q,n} / Y_z
    FinAbGroup q_m0;      // L(Z(M0~)) / L(M0~ ∩ Z(M~))
    QAction action_on_z = QAction::Trivial;
    QAction action_on_m0 = QAction::Trivial;
    bool z_torsor = false;
    bool m0_torsor = false;
    bool m0_center_connected = true;  // premise for the L(Z(M0~)) formula
    bool induction_irreducible = false;      // Theorem's free criterion
    bool restriction_isotypic = false;       // both actions trivial (M = T)
    std::string note;
};

// Levi given by a subset of simple-root indices; pass all indices for M = G
// or empty for M = T.
QGroupReport q_group_analysis(const CoverDatum& c, const std::vector<int>& levi_subset);

// dual type of the derived cover of a GSpin_{2r+1} cover: PGSp / SO / Spin
enum class SpinDualType { PGSp, SO, Spin };
SpinDualType spin_dual_type(const CoverDatum& gspin_cover);
std::string spin_dual_name(SpinDualType t);

}  // namespace covlat
