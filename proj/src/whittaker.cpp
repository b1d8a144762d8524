#include "covlat/whittaker.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <set>
#include <sstream>

namespace covlat {

Vec dot_shift(const RootDatum& d, const WeylElement& w) {
    QVec rho = d.rho();
    QVec wrho(rho.size(), Rat(0));
    for (size_t j = 0; j < rho.size(); ++j) {
        Rat s = 0;
        for (size_t i = 0; i < rho.size(); ++i) s += rho[i] * Rat(w.matrix.at(int(i), int(j)));
        wrho[j] = s;
    }
    Vec shift(rho.size());
    for (size_t j = 0; j < rho.size(); ++j) {
        Rat diff = rho[j] - wrho[j];
        if (diff.get_den() != 1) throw compute_error("dot_shift: rho - w(rho) not integral");
        shift[j] = diff.get_num();
    }
    return shift;
}

namespace {

FinAbElt dot_apply(const FinAbGroup& g, const RootDatum& d, int simple_index, const Vec& shift,
                   const FinAbElt& e) {
    Vec v = g.lift(e);
    Vec moved = vec_add(d.reflect_cochar(simple_index, v), shift);
    return g.project(moved);
}

FinAbElt dot_apply_elt(const FinAbGroup& g, const WeylElement& w, const Vec& shift, const FinAbElt& e) {
    Vec v = g.lift(e);
    return g.project(vec_add(w.apply(v), shift));
}

}  // namespace

DotOrbitDecomposition dot_orbits(const CoverDatum& c, WhichQuotient which, const Int& cap) {
    DotOrbitDecomposition dec;
    const RootDatum& d = c.datum;
    CoverInvariants inv = cover_invariants(c);
    if (which == WhichQuotient::Full) {
        dec.carrier = inv.y;
        dec.group = inv.x_qn;
    } else {
        dec.carrier = inv.y0;
        dec.group = inv.x0_qn;
    }
    if (dec.group.free_rank() > 0) throw compute_error("dot_orbits: infinite quotient");
    if (dec.group.order() > cap) throw compute_error("dot_orbits: cap exceeded");

    std::vector<Vec> shifts;
    for (int i = 0; i < d.nsimple(); ++i) {
        WeylElement s;
        s.matrix = d.reflection_matrix(i);
        s.word = {i};
        shifts.push_back(dot_shift(d, s));
    }

    Int wsize = Int(weyl_group(d).size());
    std::set<FinAbElt> rest;
    for (auto& e : dec.group.elements(cap)) rest.insert(e);
    while (!rest.empty()) {
        FinAbElt seed = *rest.begin();
        std::set<FinAbElt> orbit;
        std::vector<FinAbElt> frontier{seed};
        orbit.insert(seed);
        while (!frontier.empty()) {
            std::vector<FinAbElt> next;
            for (auto& e : frontier)
                for (int i = 0; i < d.nsimple(); ++i) {
                    FinAbElt img = dot_apply(dec.group, d, i, shifts[i], e);
                    if (orbit.insert(img).second) next.push_back(img);
                }
            frontier = std::move(next);
        }
        DotOrbit o;
        for (auto& e : orbit) {
            o.elements.push_back(e);
            rest.erase(e);
        }
        o.free = (Int(o.elements.size()) == wsize);
        dec.orbits.push_back(std::move(o));
    }
    std::sort(dec.orbits.begin(), dec.orbits.end(),
              [](const DotOrbit& a, const DotOrbit& b) { return a.elements < b.elements; });
    dec.total_orbits = long(dec.orbits.size());
    for (auto& o : dec.orbits)
        if (o.free) ++dec.free_orbits;
    return dec;
}

PermInnerProducts perm_inner_products(const CoverDatum& c, const DotOrbitDecomposition& dec) {
    const RootDatum& d = c.datum;
    auto weyl = weyl_group(d);
    auto elements = dec.group.elements();
    Int fix_sum = 0, sign_sum = 0;
    for (auto& w : weyl) {
        Vec shift = dot_shift(d, w);
        Int fixed = 0;
        for (auto& e : elements)
            if (dot_apply_elt(dec.group, w, shift, e) == e) ++fixed;
        fix_sum += fixed;
        sign_sum += Int(w.sign) * fixed;
    }
    Int wsize = Int(weyl.size());
    if (floor_mod(fix_sum, wsize) != 0 || floor_mod(sign_sum, wsize) != 0)
        throw compute_error("perm_inner_products: non-integral inner product");
    PermInnerProducts out{fix_sum / wsize, sign_sum / wsize};
    if (out.with_trivial != Int(dec.total_orbits))
        throw compute_error("perm_inner_products: Burnside count disagrees with orbit census");
    return out;
}

RestrictionLedger restriction_ledger(const CoverDatum& c) {
    CoverInvariants inv = cover_invariants(c);
    RestrictionLedger led;
    led.multiplicity = inv.x_frakc.order();
    led.extensions_per_class = quotient(inv.y0_qn, inv.y0_cap_yqn).order();
    led.dim_big = inv.x_qn.order();
    led.dim_small = inv.x0_qn.order();
    led.isotypic = inv.is_isotypic_pair;
    for (auto& e : inv.x_gamma_mod_frakc.elements()) led.gamma_classes.push_back(inv.x_gamma_mod_frakc.lift(e));
    Int check = led.multiplicity * Int(led.gamma_classes.size()) * led.extensions_per_class * led.dim_small;
    led.conservation_ok = (check == led.dim_big);
    if (!led.conservation_ok) throw compute_error("restriction_ledger: conservation identity failed");
    if (led.isotypic && led.gamma_classes.size() != 1)
        throw compute_error("restriction_ledger: isotypic cover with more than one class");
    return led;
}

namespace {

// All unramified-class extensions of chi|_{Y_0 ∩ Y_{Q,n}} to Y_{0,Q,n}, when
// the root extractions stay inside the monomial ring. epsilon = +1 only.
std::optional<std::vector<GenuineCharacter>> unramified_extensions(const CoverDatum& c,
                                                                   const GenuineCharacter& chi,
                                                                   const CoverInvariants& inv) {
    if (c.epsilon != 1) return std::nullopt;
    FinAbGroup ext_group = quotient(inv.y0_qn, inv.y0_cap_yqn);
    std::vector<Vec> rows = ext_group.adapted_basis();  // basis u_i of Y_{0,Q,n}
    auto diag = ext_group.full_diagonal();              // m_i u_i spans Y_0 ∩ Y_{Q,n}
    long n = c.scalar_modulus();
    std::vector<long> ms;
    std::vector<std::pair<long, long>> base;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (diag[i] == 0) return std::nullopt;
        long mi = diag[i].get_si();
        if (n % mi != 0) return std::nullopt;
        auto mono = eval(chi, vec_scale(Int(mi), rows[i])).as_monomial();
        if (!mono) return std::nullopt;
        auto [j, cc] = *mono;
        if (cc % mi != 0) return std::nullopt;
        long j0 = -1;
        for (long t = 0; t < n; ++t)
            if ((mi * t - j) % n == 0) {
                j0 = t;
                break;
            }
        if (j0 < 0) return std::nullopt;
        base.emplace_back(j0, cc / mi);
        ms.push_back(mi);
    }
    // canonical-basis coordinates: the HNF basis of Y_{0,Q,n} equals hr.h of
    // the adapted rows, so row b of hr.u expands canonical vector b in them
    IntMat rowmat = rows.empty() ? IntMat(0, inv.y0_qn.ambient_rank())
                                 : IntMat::from_rows(rows, inv.y0_qn.ambient_rank());
    HnfResult hr = hnf(rowmat);
    for (int b = 0; b < inv.y0_qn.rank(); ++b)
        if (hr.h.row(b) != inv.y0_qn.basis_vector(b))
            throw compute_error("unramified_extensions: basis mismatch");

    std::vector<GenuineCharacter> out;
    std::vector<long> t(rows.size(), 0);
    for (;;) {
        std::vector<std::pair<long, long>> jc = base;
        for (size_t i = 0; i < rows.size(); ++i)
            jc[i].first = (jc[i].first + t[i] * (n / ms[i])) % n;
        std::vector<std::pair<long, long>> canon;
        for (int b = 0; b < inv.y0_qn.rank(); ++b) {
            Int jt = 0, ct = 0;
            for (size_t i = 0; i < rows.size(); ++i) {
                jt += hr.u.at(b, int(i)) * Int(jc[i].first);
                ct += hr.u.at(b, int(i)) * Int(jc[i].second);
            }
            canon.emplace_back(floor_mod(jt, Int(n)).get_si(), ct.get_si());
        }
        out.push_back(make_character_on(c, inv.y0_qn, canon));
        size_t pos = rows.size();
        bool done = rows.empty();
        while (pos > 0) {
            --pos;
            if (++t[pos] < ms[pos]) break;
            t[pos] = 0;
            if (pos == 0) done = true;
        }
        if (done || rows.empty()) break;
    }
    return out;
}

}  // namespace

RestrictionLedger restriction_ledger(const CoverDatum& c, const GenuineCharacter& chi) {
    RestrictionLedger led = restriction_ledger(c);
    CoverInvariants inv = cover_invariants(c);
    if (c.epsilon != 1) {
        led.coincidence_note = "epsilon = -1: Weyl comparison of summands not attempted";
        return led;
    }
    auto exts = unramified_extensions(c, chi, inv);
    if (!exts) {
        led.coincidence_note = "extensions leave the monomial ring; coincidence scan skipped";
        return led;
    }
    auto weyl = weyl_group(c.datum);
    std::ostringstream note;
    for (size_t a = 0; a < exts->size(); ++a)
        for (size_t b = a + 1; b < exts->size(); ++b)
            for (auto& w : weyl) {
                if (w.length == 0) continue;
                GenuineCharacter tw = weyl_act(c.datum, w, (*exts)[a]);
                if (tw.jc == (*exts)[b].jc) {
                    note << "omega_{0," << a << "} and omega_{0," << b
                         << "} are Weyl-conjugate (unramified class); ";
                    goto next_pair;
                }
            next_pair:;
            }
    led.coincidence_note = note.str().empty() ? "no coincidences among unramified-class summands"
                                              : note.str() + "their I(omega) summands merge";
    return led;
}

SplittingSearch equivariant_splitting(const CoverDatum& c, const Int& cap) {
    CoverInvariants inv = cover_invariants(c);
    if (!inv.is_saturated_derived)
        throw compute_error("equivariant_splitting: derived cover is not saturated");
    if (!inv.is_isotypic_pair)
        throw compute_error("equivariant_splitting: unexpected non-isotypic saturated cover");
    SplittingSearch out;
    const FinAbGroup& x = inv.x_qn;
    const FinAbGroup& xg = inv.x_gamma;
    if (x.order() > cap) throw compute_error("equivariant_splitting: cap exceeded");

    auto xs = x.elements(cap);
    const RootDatum& d = c.datum;
    // plain Weyl action fixed points
    std::vector<FinAbElt> fixed;
    for (auto& e : xs) {
        Vec v = x.lift(e);
        bool ok = true;
        for (int i = 0; i < d.nsimple() && ok; ++i)
            if (!(x.project(d.reflect_cochar(i, v)) == e)) ok = false;
        if (ok) fixed.push_back(e);
    }
    auto fclass = [&](const FinAbElt& e) { return xg.project(x.lift(e)); };

    auto gammas = xg.elements(cap);
    for (auto& g : gammas) out.gamma_reps.push_back(xg.lift(g));
    // generators of X^Gamma: adapted basis classes with their orders
    auto adapted = xg.adapted_basis();
    auto diag = xg.full_diagonal();
    std::vector<Vec> gens;
    std::vector<Int> orders;
    for (size_t i = 0; i < adapted.size(); ++i) {
        if (diag[i] == 1) continue;
        gens.push_back(adapted[i]);
        orders.push_back(diag[i] == 0 ? Int(0) : diag[i]);
    }
    for (auto& o : orders)
        if (o == 0) throw compute_error("equivariant_splitting: infinite X^Gamma");

    // candidate images per generator
    std::vector<std::vector<FinAbElt>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        FinAbElt target = xg.project(gens[i]);
        for (auto& e : fixed) {
            if (!(fclass(e) == target)) continue;
            if (!(x.scale(orders[i], e) == x.zero())) continue;
            candidates[i].push_back(e);
        }
    }
    // enumerate tuples
    std::vector<size_t> pick(gens.size(), 0);
    bool any = !gens.empty();
    if (gens.empty()) {
        // trivial X^Gamma: the zero section
        out.found = true;
        out.sections.push_back({x.lift(x.zero())});
        out.searched = 1;
        return out;
    }
    for (;;) {
        bool valid = true;
        for (size_t i = 0; i < gens.size(); ++i)
            if (pick[i] >= candidates[i].size()) valid = false;
        if (valid) {
            out.searched += 1;
            // build the section on all of X^Gamma
            std::vector<Vec> images;
            bool ok = true;
            for (auto& g : gammas) {
                // coordinates of g in the generator presentation
                // g corresponds to residues wrt the invariant factors
                FinAbElt img = x.zero();
                for (size_t i = 0; i < gens.size(); ++i)
                    img = x.add(img, x.scale(g.coords[i], candidates[i][pick[i]]));
                if (!(fclass(img) == g)) ok = false;
                images.push_back(x.lift(img));
            }
            if (ok) out.sections.push_back(images);
        }
        size_t pos = gens.size();
        bool done = false;
        while (pos > 0) {
            --pos;
            if (++pick[pos] < std::max<size_t>(candidates[pos].size(), 1)) break;
            pick[pos] = 0;
            if (pos == 0) done = true;
        }
        if (done) break;
        (void)any;
    }
    out.found = !out.sections.empty();
    return out;
}

namespace {

Int ipow(long b, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

long n_sub(long n, long r) { return n / std::gcd(n, r); }

}  // namespace

FamilyRuleResult family_whittaker_rules(const CoverDatum& c, const std::string& case_id) {
    FamilyRuleResult out;
    long n = c.n;
    int r = c.datum.family_rank;
    auto put = [&](const std::string& k, Int v) { out.values.emplace_back(k, v); };
    if (case_id == "gl2-sl2-theta") {
        if (c.datum.family != Family::GL || r != 2) throw compute_error("gl2-sl2-theta: needs a GL_2 cover");
        if (c.q_value(c.datum.simple_coroots[0]) != -1)
            throw compute_error("gl2-sl2-theta: needs Q(alpha^vee) = -1");
        if (n % 2 != 0) throw compute_error("gl2-sl2-theta: needs even n");
        long m = n / 2;
        put("dim_I_omega", Int(m));
        if (m % 2 == 0) {
            put("pi_Delta[gamma0,0]", Int(m / 2));
            put("pi_Delta[gamma0,1]", Int(m / 2));
            put("pi_Delta[gamma1,0]", Int(m / 2));
            put("pi_Delta[gamma1,1]", Int((m - 2) / 2));
        } else {
            put("pi_Delta[gamma0,0]", Int((m + 1) / 2));
            put("pi_Delta[gamma0,1]", Int((m - 1) / 2));
            put("pi_Delta[gamma1,0]", Int((m - 1) / 2));
            put("pi_Delta[gamma1,1]", Int((m - 1) / 2));
        }
    } else if (case_id == "sl2-whittaker") {
        bool sl2 = (c.datum.family == Family::SL && r == 2) || (c.datum.family == Family::Sp && r == 1);
        if (!sl2) throw compute_error("sl2-whittaker: needs an SL_2 cover");
        if (n % 2 == 0) throw compute_error("sl2-whittaker: needs odd n");
        put("dim_psi[trivial]", Int((n + 1) / 2));
        put("dim_psi[sign]", Int((n - 1) / 2));
        put("dim_epsi[trivial]", Int((n - 1) / 2));
        put("dim_epsi[sign]", Int((n + 1) / 2));
    } else if (case_id == "sp2r-whittaker") {
        if (c.datum.family != Family::Sp) throw compute_error("sp2r-whittaker: needs an Sp cover");
        if (n % 2 == 0) throw compute_error("sp2r-whittaker: reducibility needs odd n");
        put("dim_psi[trivial]", ipow(n, r - 1) * (n + 1) / 2);
        put("dim_psi[sign]", ipow(n, r - 1) * (n - 1) / 2);
        put("dim_epsi[trivial]", ipow(n, r - 1) * (n - 1) / 2);
        put("dim_epsi[sign]", ipow(n, r - 1) * (n + 1) / 2);
    } else if (case_id == "gsp-odd") {
        if (c.datum.family != Family::GSpI && c.datum.family != Family::GSpII)
            throw compute_error("gsp-odd: needs a GSp cover");
        if (n % 2 == 0) throw compute_error("gsp-odd: needs odd n");
        put("multiplicity", Int(2 * n_sub(n, r)));
        put("dim_I_omega", ipow(n, r));
        put("dim_psi[trivial]", (ipow(n, r) + ipow(n, r - 1)) / 2);
        put("dim_psi[sign]", (ipow(n, r) - ipow(n, r - 1)) / 2);
        put("dim_tpsi[trivial]", (ipow(n, r) - ipow(n, r - 1)) / 2);
        put("dim_tpsi[sign]", (ipow(n, r) + ipow(n, r - 1)) / 2);
    } else if (case_id == "gsp-even-odd") {
        if (c.datum.family != Family::GSpI && c.datum.family != Family::GSpII)
            throw compute_error("gsp-even-odd: needs a GSp cover");
        if (n % 2 != 0 || r % 2 != 1) throw compute_error("gsp-even-odd: needs even n, odd r");
        long m = n / 2;
        put("summands", Int(4));
        put("multiplicity", Int(n_sub(n, r) / 2));
        put("dim_I_omega", ipow(m, r));
    } else if (case_id == "gsp-even-even") {
        if (c.datum.family != Family::GSpI && c.datum.family != Family::GSpII)
            throw compute_error("gsp-even-even: needs a GSp cover");
        if (n % 2 != 0 || r % 2 != 0) throw compute_error("gsp-even-even: needs even n, even r");
        long m = n / 2;
        put("summands", Int(4));
        put("multiplicity", Int(n_sub(n, r)));
        put("dim_I_omega", ipow(m, r));
        put("dim_pi[trivial]", 2 * ipow(m, r) * Int(n_sub(n, r)));
        put("dim_pi[sign]", 2 * ipow(m, r) * Int(n_sub(n, r)));
    } else if (case_id == "so3-sigma") {
        if (c.datum.family != Family::SO3) throw compute_error("so3-sigma: needs the SO3 cover");
        if (n % 4 != 0) throw compute_error("so3-sigma: reducibility needs 4 | n");
        put("sigma_wh[trivial]", Int(n / 4));
        put("sigma_wh[sign]", Int(n / 4));
    } else {
        throw compute_error("family_whittaker_rules: unknown case " + case_id);
    }
    return out;
}

}  // namespace covlat
