#pragma once

#include "covlat/scattering.hpp"

namespace covlat {

// abstract finite abelian group with the given invariant factors
FinAbGroup make_abelian_group(const std::vector<Int>& factors);

/// Character of a FinAbGroup: one exponent per invariant-factor generator.
struct AbCharacter {
    std::vector<Int> exps;  // value on generator i is zeta_{d_i}^{exps[i]}
};

std::vector<AbCharacter> all_characters(const FinAbGroup& g);
ExactScalar char_value(const FinAbGroup& g, const AbCharacter& chi, const FinAbElt& x, long modulus);

/// Subgroup of a FinAbGroup given by generators; carries its element set.
struct Subgroup {
    std::vector<FinAbElt> gens;
    std::vector<FinAbElt> elements;  // closed, deterministic order
};

Subgroup make_subgroup(const FinAbGroup& g, const std::vector<FinAbElt>& gens);
bool subgroup_contains(const Subgroup& h, const FinAbElt& x);

/// Class function on a FinAbGroup (values on every element).
struct ClassFunction {
    std::map<FinAbElt, ExactScalar> values;
};

ClassFunction char_to_function(const FinAbGroup& g, const AbCharacter& chi, long modulus);
// all distinct characters of a subgroup, as functions on its elements
std::vector<ClassFunction> subgroup_characters(const FinAbGroup& g, const Subgroup& h, long modulus);

ClassFunction induce(const FinAbGroup& g, const Subgroup& h, const ClassFunction& f, long modulus);
ClassFunction restrict_function(const ClassFunction& f, const Subgroup& h);
// (1/|domain|) sum f conj(g); asserted to be rational
Rat inner_product(const std::vector<FinAbElt>& domain, const ClassFunction& f, const ClassFunction& g,
                  long modulus);

struct SGroupTriple {
    FinAbGroup s_diamond;
    Subgroup s_chi;
    Subgroup s_omega;
    Int x_frakc_order = 1;
};

// |X^c| * < Ind rho, Ind tau >_{S_diamond}; tau on s_chi, rho on s_omega.
// Cross-checked against the Mackey double-coset closed form.
Int uni_multiplicity(const SGroupTriple& t, const ClassFunction& tau, const ClassFunction& rho,
                     long modulus);

// Gamma^tor = (X ∩ X^sc_Q)/X^sc of a root datum
FinAbGroup gamma_tor(const RootDatum& d);
// Coker(Y -> Y_ad); invariant factors asserted equal to gamma_tor's
FinAbGroup gamma_hat_dagger(const RootDatum& d);
// Gamma^tor of the principal endoscopic group: (X_{Q,n} ∩ X^sc_Q)/X^sc_{Q,n}
FinAbGroup gamma_tor_qn(const CoverDatum& c);

struct VarphiMaps {
    // all groups presented in fundamental-coweight coordinates
    FinAbGroup gamma_hat_tor;      // P(X^sc)/P(X ∩ X^sc_Q)
    FinAbGroup gamma_hat_tor_qn;   // P(X^sc_{Q,n})/P(X_{Q,n} ∩ X^sc_Q)
    FinAbGroup domain_mid;         // P(X^sc)/P(X_{Q,n} ∩ X^sc_Q)
    FinAbGroup h_target;           // P(X ∩ X^sc_Q)/P(X_{Q,n} ∩ X^sc_Q)
    FinAbGroup h_quotient;         // Gamma^tor_{Q,n} / H_phi
    std::vector<long> n_alpha;     // the scaling of phi in coweight coordinates
    bool phi_surjective = false;
    Int h_phi_order = 1;           // |H_phi|
    bool s_phi_exists = false;     // homomorphic section of the H_phi quotient
    // lattice-level data for evaluating the maps
    LatticeBasis p_xqn_cap;        // P(X_{Q,n} ∩ X^sc_Q), coweight coords (scaled)
    Int p_scale = 1;               // the common denominator used
    LatticeBasis p_xcap;           // P(X ∩ X^sc_Q) scaled by p_scale
    LatticeBasis p_xqn_sc;         // P(X^sc_{Q,n}) scaled by p_scale
    LatticeBasis h_phi_lattice;    // P(X_{Q,n} ∩ X^sc_Q) + phi(h(Y)) scaled
};

VarphiMaps varphi_maps(const CoverDatum& c);

// phi ∘ h applied to y (an ambient Y vector): class in gamma_hat_tor_qn
FinAbElt phi_h(const VarphiMaps& v, const CoverDatum& c, const Vec& y);

// membership test phi_0(X_{Q,n}) ⊆ X for the coweight-scaling map; semisimple input required
bool tilde_phi0_exists(const CoverDatum& c);

struct RGroupResult {
    bool active = false;             // nontrivial R-group
    std::vector<int> generator_word;
    std::string rule;                // source family rule
};

RGroupResult r_group_family(const CoverDatum& c, const GenuineCharacter& chi);

// S-group triple for the transcribed family situations (S_chi from the
// R-group rule, S_omega/S_diamond from the derived side), with |X^c| filled
// from the cover's lattices. nullopt when the family tables do not apply.
std::optional<SGroupTriple> family_s_group_triple(const CoverDatum& c, const GenuineCharacter& chi);

struct UnramPairsReport {
    FinAbGroup yk_mod_yqn;         // Y_K^nat / Y_{Q,n}
    std::vector<Vec> yk_reps;
    Int p_gamma_image_order = 0;
    Int index_in_x_frakc = 0;
    std::vector<std::pair<Vec, std::vector<Vec>>> fibers;  // image class -> reps above it
    bool s_phi_exists = false;
    std::string family_table;      // transcribed constituent <-> (K, s) table
};

UnramPairsReport unram_pairs_report(const CoverDatum& c);

// gamma_{z,y} of the variation conjecture: needs the searched section s_phi
std::optional<FinAbElt> gamma_zy(const CoverDatum& c, const VarphiMaps& v, const Vec& z,
                                 const FinAbElt& y_in_gamma_hat);

struct ZetaChiResult {
    bool hypothesis_ok = false;  // tilde_phi0 exists (and no exceptional family)
    std::string detail;
    // character of the family R-group attached to each T_ad/T class
    std::vector<std::pair<Vec, int>> values;  // (coweight-coords rep, sign in {+1,-1})
};

ZetaChiResult zeta_chi(const CoverDatum& c, const GenuineCharacter& chi);

}  // namespace covlat
