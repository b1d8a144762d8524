#pragma once

#include "covlat/genchar.hpp"

namespace covlat {

enum class WhichQuotient { Full, Derived };  // X_{Q,n} or X_{0,Q,n}

struct DotOrbit {
    std::vector<FinAbElt> elements;
    bool free = false;  // |orbit| == |W|
};

struct DotOrbitDecomposition {
    FinAbGroup group;
    LatticeBasis carrier;  // Y or Y_0: the lattice whose quotient is acted on
    std::vector<DotOrbit> orbits;
    long total_orbits = 0;
    long free_orbits = 0;
};

DotOrbitDecomposition dot_orbits(const CoverDatum& c, WhichQuotient which,
                                 const Int& cap = Int(1000000));

// translation vector rho - w(rho), always integral (lies in the coroot span)
Vec dot_shift(const RootDatum& d, const WeylElement& w);

struct PermInnerProducts {
    Int with_trivial;  // <sigma, 1> = number of orbits (Burnside-checked)
    Int with_sign;     // <sigma, sign>
};

PermInnerProducts perm_inner_products(const CoverDatum& c, const DotOrbitDecomposition& dec);

struct RestrictionLedger {
    Int multiplicity;              // |X^c_{Q,n}|
    std::vector<Vec> gamma_classes;  // representatives of X^Gamma / X^c in Y
    Int extensions_per_class;      // |Y_{0,Q,n} / (Y_0 ∩ Y_{Q,n})|
    Int dim_big;                   // |X_{Q,n}|
    Int dim_small;                 // |X_{0,Q,n}|
    bool isotypic = false;
    bool conservation_ok = false;  // dim_big == mult * #classes * ext * dim_small
    // unramified class is gamma_classes[0] == 0 by construction
    std::string coincidence_note;  // merged-summand diagnostics when chi given
};

RestrictionLedger restriction_ledger(const CoverDatum& c);
RestrictionLedger restriction_ledger(const CoverDatum& c, const GenuineCharacter& chi);

struct SplittingSearch {
    bool found = false;
    std::vector<std::vector<Vec>> sections;  // each: image vectors indexed by X^Gamma elements
    std::vector<Vec> gamma_reps;             // the X^Gamma elements the images correspond to
    Int searched = 0;
};

// Exhaustive search for W-equivariant splittings of X_{0,Q,n} -> X_{Q,n} ->
// X^Gamma; requires the derived cover to be saturated.
SplittingSearch equivariant_splitting(const CoverDatum& c, const Int& cap = Int(1000000));

// Transcribed closed-form Whittaker dimension tables, keyed by family case
// (gl2-sl2-theta, sl2-whittaker, sp2r-whittaker, gsp-odd, gsp-even-odd,
// gsp-even-even, so3-sigma). These are tabulated values, kept separate from
// the computed routes; inputs are validated against each case's parity
// conditions.
struct FamilyRuleResult {
    std::vector<std::pair<std::string, Int>> values;
};

FamilyRuleResult family_whittaker_rules(const CoverDatum& c, const std::string& case_id);

}  // namespace covlat
