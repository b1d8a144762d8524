// Acceptance suite: one pass/fail line per criterion, all tolerances zero
// (exact arithmetic). Sub-checks that assert tabulated values known to
// contradict the defining congruences still run as stated; the suite then
// also reports the definition-derived value so the discrepancy is visible.

#include "covlat/commands.hpp"
#include "covlat/regress.hpp"

#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace covlat;

namespace {

struct Suite {
    int criterion = 0;
    bool pass = true;
    std::vector<std::string> notes;
    int checks = 0;

    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            pass = false;
            notes.push_back("FAILED: " + what);
        }
    }
    void info(const std::string& what) { notes.push_back("note: " + what); }
};

std::vector<Suite> suites;
bool overall = true;

void finish(Suite& s, const std::string& title) {
    std::cout << "criterion " << s.criterion << " [" << (s.pass ? "PASS" : "FAIL") << "] " << title
              << " (" << s.checks << " checks)\n";
    for (auto& n : s.notes) std::cout << "    " << n << "\n";
    if (!s.pass) overall = false;
    suites.push_back(s);
}

CoverDatum make(Family f, int r, long n, long p = 0, long q = 1) {
    CoverParams params;
    params.family = f;
    params.rank = r;
    params.n = n;
    params.p = p;
    params.q = q;
    if (f == Family::GSpinOdd && p == 0) params.p = 1;
    return make_cover(params);
}

CoverDatum kp(int r, long n, long p) { return make(Family::GL, r, n, p, 2 * p + 1); }

long nsub(long n, long r) { return n / std::gcd(n, r); }

Int ipow(long b, int e) {
    Int t = 1;
    for (int i = 0; i < e; ++i) t *= b;
    return t;
}

GenuineCharacter minus_one_char(const CoverDatum& c) {
    long nn = c.scalar_modulus();
    std::vector<std::pair<long, long>> jc(size_t(y_qn(c).rank()), {0, 0});
    jc[0] = {nn / 2, 0};
    return make_character(c, jc);
}

int p2(long x) {
    int e = 0;
    while (x % 2 == 0 && x != 0) {
        x /= 2;
        ++e;
    }
    return e;
}

// --- criterion 1 -----------------------------------------------------------

void criterion1() {
    Suite s;
    s.criterion = 1;
    auto t0 = std::chrono::steady_clock::now();
    bool stated_gsp_odd_ok = true, corrected_gsp_odd_ok = true;
    bool stated_gsp_ee_ok = true, corrected_gsp_ee_ok = true;
    bool stated_spin_ok = true, corrected_spin_ok = true;

    // GL_2 Kazhdan-Patterson: (n^2/d, n/d)
    for (long n = 1; n <= 12; ++n)
        for (long p = 0; p <= 3; ++p) {
            CoverInvariants inv = cover_invariants(kp(2, n, p));
            Int d = gcd(Int(4 * p + 1), Int(n));
            s.check(inv.x_qn.order() == Int(n * n) / d, "GL_2 KP |X_{Q,n}| = n^2/d");
            s.check(inv.x_gamma.order() == Int(n) / d, "GL_2 KP |X^Gamma| = n/d");
        }

    // GSp-I, n odd: stated (2 n^r n_(r), 2 n_(r)); corrected (n^r n_(r), n_(r))
    for (int r = 1; r <= 4; ++r)
        for (long n = 1; n <= 12; n += 2) {
            CoverInvariants inv = cover_invariants(make(Family::GSpI, r, n));
            if (!(inv.x_qn.order() == 2 * ipow(n, r) * Int(nsub(n, r)) &&
                  inv.x_gamma.order() == Int(2 * nsub(n, r))))
                stated_gsp_odd_ok = false;
            if (!(inv.x_qn.order() == ipow(n, r) * Int(nsub(n, r)) &&
                  inv.x_gamma.order() == Int(nsub(n, r))))
                corrected_gsp_odd_ok = false;
        }
    s.check(stated_gsp_odd_ok,
            "GSp-I n odd matches the tabulated values (2 n^r n_(r), 2 n_(r))");
    if (!stated_gsp_odd_ok && corrected_gsp_odd_ok)
        s.info("GSp-I n odd matches (n^r n_(r), n_(r)) derived from the defining congruences; "
               "the tabulated basis omits the generator n e_0");
    s.check(corrected_gsp_odd_ok, "GSp-I n odd matches the definition-derived values");

    // brute-force oracle for a small odd case: the computed lattice equals
    // naive membership enumeration
    {
        CoverDatum c = make(Family::GSpI, 2, 3);
        LatticeBasis lat = y_qn(c);
        bool agree = true;
        for (long a = -3; a <= 3; ++a)
            for (long b = -3; b <= 3; ++b)
                for (long e0 = -3; e0 <= 3; ++e0) {
                    Vec y{Int(a), Int(b), Int(e0)};
                    bool in = true;
                    for (int j = 0; j < 3; ++j) {
                        Vec basis = vec_zero(3);
                        basis[j] = 1;
                        if (floor_mod(c.b_value(y, basis), Int(3)) != 0) in = false;
                    }
                    if (in != lat.contains(y)) agree = false;
                }
        s.check(agree, "threefold GSp_4 brute-force membership oracle agrees with the solver");
    }

    // GSp-I, n = 2m, r odd: (2 m^r n_(r), n_(r)) — printed and derived agree
    for (int r = 1; r <= 3; r += 2)
        for (long n = 2; n <= 12; n += 2) {
            long m = n / 2;
            CoverInvariants inv = cover_invariants(make(Family::GSpI, r, n));
            s.check(inv.x_qn.order() == 2 * ipow(m, r) * Int(nsub(n, r)),
                    "GSp-I even n, odd r: |X_{Q,n}| = 2 m^r n_(r)");
            s.check(inv.x_gamma.order() == Int(nsub(n, r)), "GSp-I even n, odd r: |X^Gamma| = n_(r)");
        }

    // GSp-I, n = 2m, r even: stated (4 m^r n_(r), 2 n_(r)); corrected uses
    // m_(r) = m/gcd(m, r)
    for (int r = 2; r <= 4; r += 2)
        for (long n = 2; n <= 12; n += 2) {
            long m = n / 2;
            CoverInvariants inv = cover_invariants(make(Family::GSpI, r, n));
            if (!(inv.x_qn.order() == 4 * ipow(m, r) * Int(nsub(n, r)) &&
                  inv.x_gamma.order() == Int(2 * nsub(n, r))))
                stated_gsp_ee_ok = false;
            if (!(inv.x_qn.order() == 4 * ipow(m, r) * Int(nsub(m, r)) &&
                  inv.x_gamma.order() == Int(2 * nsub(m, r))))
                corrected_gsp_ee_ok = false;
        }
    s.check(stated_gsp_ee_ok,
            "GSp-I even n, even r matches the tabulated values (4 m^r n_(r), 2 n_(r))");
    if (!stated_gsp_ee_ok && corrected_gsp_ee_ok)
        s.info("GSp-I even/even matches (4 m^r m_(r), 2 m_(r)) from the defining congruences; the "
               "tabulated value differs exactly when the 2-adic valuation of m reaches that "
               "of r");
    s.check(corrected_gsp_ee_ok, "GSp-I even n, even r matches the definition-derived values");

    // SO_3: Y_{Q,n} = Z n_(2) e and Y^sc_{Q,n} = Z n_(4) alpha^vee
    for (long n = 1; n <= 12; ++n) {
        CoverDatum c = make(Family::SO3, 1, n);
        CoverInvariants inv = cover_invariants(c);
        s.check(inv.y_qn == LatticeBasis(1, {Vec{Int(nsub(n, 2))}}), "SO_3 Y_{Q,n} = Z n_(2) e");
        s.check(inv.y_qn_sc == LatticeBasis(1, {Vec{Int(2 * nsub(n, 4))}}),
                "SO_3 Y^sc_{Q,n} = Z n_(4) alpha^vee");
    }

    // Spin dual-type trichotomy
    for (int r = 2; r <= 4; ++r)
        for (long n = 1; n <= 12; ++n) {
            SpinDualType t = spin_dual_type(make(Family::GSpinOdd, r, n));
            SpinDualType stated = (n % 2 == 1) ? SpinDualType::PGSp
                                  : ((2 * r - n) % 4 == 0) ? SpinDualType::SO
                                                           : SpinDualType::Spin;
            SpinDualType corrected = (n % 2 == 1) ? SpinDualType::PGSp
                                     : ((n / 2) % 2 == 1 && r % 2 == 1) ? SpinDualType::SO
                                                                        : SpinDualType::Spin;
            if (t != stated) stated_spin_ok = false;
            if (t != corrected) corrected_spin_ok = false;
        }
    s.check(stated_spin_ok,
            "Spin trichotomy follows the tabulated branch condition 'n odd or 4 | (2r - n)'");
    if (!stated_spin_ok && corrected_spin_ok)
        s.info("Spin trichotomy follows PGSp (n odd) / SO (n = 2m, m and r odd) / Spin (else): "
               "the tabulated condition misses that v_0 = m(sum e_i) - (mr/2) e_0 is integral "
               "and orthogonal whenever mr is even");
    s.check(corrected_spin_ok, "Spin trichotomy matches the definition-derived branch condition");

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    s.check(ms.count() < 5000, "lattice golden suite runs in under 5 seconds");
    finish(s, "lattice golden suite");
}

// --- criterion 2 -----------------------------------------------------------

void criterion2() {
    Suite s;
    s.criterion = 2;
    auto run = [&](const CoverDatum& c, const std::string& label) {
        CoverInvariants inv = cover_invariants(c);
        Int ext = quotient(inv.y0_qn, inv.y0_cap_yqn).order();
        Int rhs = inv.x_frakc.order() * inv.x_gamma_mod_frakc.order() * ext * inv.x0_qn.order();
        s.check(inv.x_qn.order() == rhs, "conservation for " + label);
        if (inv.is_isotypic_pair)
            s.check(inv.x_frakc.order() == inv.x_gamma.order(),
                    "isotypic shortcut X^Gamma = X^c for " + label);
    };
    for (long n = 1; n <= 12; ++n) {
        for (int r = 1; r <= 4; ++r)
            for (long p : {0L, 1L}) run(kp(r, n, p), "GL_" + std::to_string(r));
        for (int r = 2; r <= 4; ++r) run(make(Family::SL, r, n), "SL_" + std::to_string(r));
        for (int r = 1; r <= 3; ++r) {
            run(make(Family::Sp, r, n), "Sp_" + std::to_string(2 * r));
            run(make(Family::GSpI, r, n), "GSp-I_" + std::to_string(2 * r));
            run(make(Family::GSpII, r, n, 1), "GSp-II_" + std::to_string(2 * r));
        }
        run(make(Family::SO3, 1, n), "SO_3");
        for (int r = 2; r <= 3; ++r) {
            run(make(Family::SpinOdd, r, n), "Spin_" + std::to_string(2 * r + 1));
            run(make(Family::GSpinOdd, r, n), "GSpin_" + std::to_string(2 * r + 1));
        }
    }
    finish(s, "conservation identity");
}

// --- criterion 3 -----------------------------------------------------------

void criterion3() {
    Suite s;
    s.criterion = 3;
    for (long n = 2; n <= 12; n += 2)
        for (long p = 0; p <= 2; ++p) {
            CoverDatum c = kp(2, n, p);
            long m = n / 2, d = std::gcd(4 * p + 1, n);
            DotOrbitDecomposition dec = dot_orbits(c, WhichQuotient::Full);
            PermInnerProducts ip = perm_inner_products(c, dec);
            s.check(ip.with_trivial == Int(m * (n + 1) / d), "GL_2 KP <sigma, 1> = m(n+1)/d");
            s.check(ip.with_sign == Int(m * (n - 1) / d), "GL_2 KP <sigma, sign> = m(n-1)/d");
        }
    for (long n = 3; n <= 11; n += 2) {
        CoverDatum c = make(Family::SL, 2, n);
        DotOrbitDecomposition dec = dot_orbits(c, WhichQuotient::Full);
        PermInnerProducts ip = perm_inner_products(c, dec);
        s.check(ip.with_trivial == Int((n + 1) / 2), "SL_2 <sigma, 1> = (n+1)/2");
        s.check(ip.with_sign == Int((n - 1) / 2), "SL_2 <sigma, sign> = (n-1)/2");
    }
    // T:GLSL2 family tables: internal consistency of the transcription
    for (long n = 2; n <= 12; n += 2) {
        FamilyRuleResult res = family_whittaker_rules(kp(2, n, 0), "gl2-sl2-theta");
        std::map<std::string, Int> vals(res.values.begin(), res.values.end());
        long m = n / 2;
        Int total = 0;
        for (auto& [k, v] : vals)
            if (k.rfind("pi_Delta", 0) == 0) {
                total += v;
                s.check(v <= Int(m), "T:GLSL2 constituent dim bounded by m");
            }
        s.check(total == Int(n - 1), "T:GLSL2 dims sum to n - 1");
        s.check(vals.at("dim_I_omega") == Int(m), "T:GLSL2 dim I(omega) = m");
    }
    // p-conductor computed block ranks at the regular reducibility point
    for (long n : {3L, 5L, 7L}) {
        CoverDatum c = make(Family::SL, 2, n);
        GenuineCharacter chi = make_character(c, {{0, -2}});  // chi_alpha = q^{-1}
        ScatteringMatrix m = scattering_matrix(c, chi, 0, WhichQuotient::Full);
        long rank_total = 0;
        for (auto& b : m.blocks) {
            BlockDetRank dr = block_det_rank(m, b);
            s.check(dr.decided, "block rank decided at chi_alpha = q^{-1}");
            if (b.size() == 2) s.check(dr.rank == 1, "free block rank 1 at the reducibility point");
            rank_total += dr.rank;
        }
        s.check(rank_total == (n - 1) / 2, "total scattering rank (n-1)/2 at chi_alpha = q^{-1}");
    }
    finish(s, "regular-case dimensions");
}

// --- criterion 4 -----------------------------------------------------------

void criterion4() {
    Suite s;
    s.criterion = 4;
    for (long n : {3L, 5L, 7L, 9L}) {
        CoverDatum c = make(Family::SL, 2, n);
        long mod = c.scalar_modulus();
        GenuineCharacter chi = minus_one_char(c);
        ScatteringMatrix m = scattering_matrix(c, chi, 0, WhichQuotient::Full);
        ExactScalar one = ExactScalar::from_rat(mod, Rat(1));
        ExactScalar qinv = ExactScalar::v_pow(mod, -2);
        auto tr = m.trace().as_exact();
        s.check(tr && *tr == -(one + qinv) * ExactScalar::from_rat(mod, Rat(1, 2)),
                "SL_2 trace = -(1+q^{-1})/2");
        ExactScalar g = gamma_factor(chi, c.datum.simple_coroots[0]);
        auto sq = matrix_product(m, m);
        bool invol = true;
        for (int i = 0; i < m.size(); ++i)
            for (int j = 0; j < m.size(); ++j) {
                GaussScalar want = GaussScalar::from_exact(
                    c.n, c.epsilon,
                    i == j ? (g * g).inverse() : ExactScalar::from_rat(mod, Rat(0)));
                if (!(sq[i][j] == want)) invol = false;
            }
        s.check(invol, "SL_2 involution (gamma M)^2 = Id");
        s.check(sigma_wh_multiplicity(m, g, +1) == Int((n - 1) / 2), "SL_2 sigma^Wh trivial part");
        s.check(sigma_wh_multiplicity(m, g, -1) == Int((n + 1) / 2), "SL_2 sigma^Wh sign part");
    }
    for (long n = 4; n <= 12; n += 4) {
        CoverDatum c = make(Family::SO3, 1, n);
        GenuineCharacter chi = minus_one_char(c);
        ScatteringMatrix m = scattering_matrix(c, chi, 0, WhichQuotient::Full);
        ExactScalar g = gamma_factor(chi, c.datum.simple_coroots[0]);
        s.check(sigma_wh_multiplicity(m, g, +1) == Int(n / 4), "SO_3 multiplicities (n/4, .)");
        s.check(sigma_wh_multiplicity(m, g, -1) == Int(n / 4), "SO_3 multiplicities (., n/4)");
    }
    // free-block determinant vanishes exactly iff chi_alpha in {q, q^{-1}}
    {
        CoverDatum c = make(Family::SL, 2, 5);
        long nn = c.scalar_modulus();
        std::vector<std::pair<std::pair<long, long>, bool>> cases = {
            {{0, -2}, true},         // q^{-1}
            {{0, 2}, true},          // q
            {{nn / 2, 0}, false},    // -1
            {{nn / 4, 0}, false},    // i (unitary quartic)
            {{nn / 2, -2}, false},   // -q^{-1}
            {{0, -4}, false},        // q^{-2}
        };
        for (auto& [jc, vanish] : cases) {
            GenuineCharacter chi = make_character(c, {jc});
            ScatteringMatrix m = scattering_matrix(c, chi, 0, WhichQuotient::Full);
            for (auto& b : m.blocks) {
                if (b.size() != 2) continue;
                BlockDetRank dr = block_det_rank(m, b);
                s.check(dr.decided, "free block determinant reduces");
                s.check(dr.det.is_zero() == vanish,
                        "free-block det vanishing iff chi_alpha in {q, q^{-1}}");
            }
        }
    }
    finish(s, "scattering matrices");
}

// --- criterion 5 -----------------------------------------------------------

std::vector<std::vector<Int>> abelian_types(Int max_order) {
    std::vector<std::vector<Int>> out;
    // invariant factor chains d_1 | d_2 | ... with product <= max_order
    std::function<void(std::vector<Int>&, Int, Int)> rec = [&](std::vector<Int>& cur, Int prod,
                                                               Int last) {
        out.push_back(cur);
        for (Int d = last; prod * d <= max_order; ++d) {
            if (d < 2) continue;
            if (floor_mod(d, last == 1 ? Int(1) : last) != 0) continue;
            cur.push_back(d);
            rec(cur, prod * d, d);
            cur.pop_back();
        }
    };
    std::vector<Int> cur;
    rec(cur, Int(1), Int(1));
    return out;
}

void criterion5() {
    Suite s;
    s.criterion = 5;
    // GSp^(2) example
    {
        SGroupTriple t;
        t.s_diamond = make_abelian_group({Int(2)});
        t.s_chi = make_subgroup(t.s_diamond, {t.s_diamond.elements()[1]});
        t.s_omega = make_subgroup(t.s_diamond, {});
        t.x_frakc_order = 1;
        ClassFunction rho = subgroup_characters(t.s_diamond, t.s_omega, 4)[0];
        for (auto& tau : subgroup_characters(t.s_diamond, t.s_chi, 4))
            s.check(uni_multiplicity(t, tau, rho, 4) == 1, "GSp/Sp double-cover triple multiplicity 1");
    }
    // isotypic shortcut
    {
        FinAbGroup g = make_abelian_group({Int(2), Int(4)});
        SGroupTriple iso;
        iso.s_diamond = g;
        iso.s_omega = make_subgroup(g, g.elements());
        FinAbElt two = g.zero();
        two.coords[1] = 2;
        iso.s_chi = make_subgroup(g, {g.elements()[1], two});
        iso.x_frakc_order = 3;
        long mod = 4;
        for (auto& tau : subgroup_characters(g, iso.s_chi, mod))
            for (auto& rho : subgroup_characters(g, iso.s_omega, mod)) {
                Int lhs = uni_multiplicity(iso, tau, rho, mod);
                Rat rhs = Rat(iso.x_frakc_order) *
                          inner_product(iso.s_chi.elements, restrict_function(rho, iso.s_chi), tau,
                                        mod);
                s.check(Rat(lhs) == rhs, "isotypic shortcut equality");
            }
    }
    // Frobenius reciprocity exhaustive over abelian types of order <= 24,
    // subgroups generated by <= 2 elements plus the full group
    for (auto& type : abelian_types(Int(24))) {
        FinAbGroup g = make_abelian_group(type);
        long mod = 2;
        for (auto& d : g.invariant_factors()) mod = std::lcm(mod, d.get_si());
        auto els = g.elements();
        std::vector<Subgroup> subs;
        subs.push_back(make_subgroup(g, els));  // full
        for (size_t i = 0; i < els.size(); ++i) subs.push_back(make_subgroup(g, {els[i]}));
        if (els.size() <= 8)
            for (size_t i = 0; i < els.size(); ++i)
                for (size_t j = i + 1; j < els.size(); ++j)
                    subs.push_back(make_subgroup(g, {els[i], els[j]}));
        auto gchars = all_characters(g);
        for (auto& h : subs) {
            auto hchar = subgroup_characters(g, h, mod);
            // one representative subgroup character suffices per (G, H) to
            // keep the run under a minute; the unit suite covers them all
            ClassFunction rho = hchar[hchar.size() / 2];
            ClassFunction ind = induce(g, h, rho, mod);
            for (auto& chi : gchars) {
                ClassFunction cf = char_to_function(g, chi, mod);
                Rat lhs = inner_product(g.elements(), ind, cf, mod);
                Rat rhs = inner_product(h.elements, rho, restrict_function(cf, h), mod);
                s.check(lhs == rhs, "Frobenius reciprocity");
            }
        }
    }
    // 200 random triples: uni_multiplicity cross-checks Mackey internally
    {
        std::mt19937 rng(99);
        int done = 0;
        while (done < 200) {
            std::uniform_int_distribution<int> t(0, 30);
            auto types = abelian_types(Int(24));
            FinAbGroup g = make_abelian_group(types[size_t(t(rng)) % types.size()]);
            if (g.order() < 2) continue;
            long mod = 2;
            for (auto& d : g.invariant_factors()) mod = std::lcm(mod, d.get_si());
            auto els = g.elements();
            std::uniform_int_distribution<size_t> pick(0, els.size() - 1);
            SGroupTriple tri;
            tri.s_diamond = g;
            tri.s_chi = make_subgroup(g, {els[pick(rng)]});
            tri.s_omega = make_subgroup(g, {els[pick(rng)], els[pick(rng)]});
            tri.x_frakc_order = 1 + done % 4;
            auto taus = subgroup_characters(g, tri.s_chi, mod);
            auto rhos = subgroup_characters(g, tri.s_omega, mod);
            Int v = uni_multiplicity(tri, taus[done % taus.size()], rhos[done % rhos.size()], mod);
            s.check(v >= 0, "random triple multiplicity is a nonnegative integer");
            ++done;
        }
    }
    finish(s, "unitary multiplicity");
}

// --- criterion 6 -----------------------------------------------------------

void criterion6() {
    Suite s;
    s.criterion = 6;
    bool stated_odd_mult = true, stated_ee = true;
    for (int r = 1; r <= 3; ++r)
        for (long n = 1; n <= 8; ++n) {
            CoverDatum c = make(Family::GSpI, r, n);
            RestrictionLedger led = restriction_ledger(c);
            long m = n / 2;
            if (n % 2 == 1) {
                s.check(led.isotypic, "odd-fold GSp shape: isotypic");
                s.check(led.gamma_classes.size() == 1 && led.extensions_per_class == 1,
                        "odd-fold GSp shape: single summand");
                s.check(led.dim_small == ipow(n, r), "odd-fold GSp dim I(omega) = n^r");
                if (led.multiplicity != Int(2 * nsub(n, r))) stated_odd_mult = false;
                // family rule internal split
                FamilyRuleResult res = family_whittaker_rules(c, "gsp-odd");
                std::map<std::string, Int> vals(res.values.begin(), res.values.end());
                s.check(vals.at("dim_psi[trivial]") + vals.at("dim_psi[sign]") == ipow(n, r),
                        "odd-fold GSp (n^r +- n^{r-1})/2 split sums to n^r");
                s.check(vals.at("dim_psi[trivial]") == (ipow(n, r) + ipow(n, r - 1)) / 2,
                        "odd-fold GSp psi-dim (n^r + n^{r-1})/2");
            } else if (r % 2 == 1) {
                s.check(led.gamma_classes.size() == 2 && led.extensions_per_class == 2,
                        "even-fold GSp, odd r: four summands");
                s.check(led.multiplicity == Int(nsub(n, r) / 2), "even-fold GSp, odd r: multiplicity n_(r)/2");
                s.check(led.dim_small == ipow(m, r), "even-fold GSp, odd r: dim I(omega) = m^r");
            } else {
                s.check(led.gamma_classes.size() == 2 && led.extensions_per_class == 2,
                        "even/even GSp shape: four summands");
                s.check(led.dim_small == ipow(m, r), "even/even GSp dim I(omega) = m^r");
                if (led.multiplicity != Int(nsub(n, r))) stated_ee = false;
                s.check(led.multiplicity == Int(nsub(m, r)),
                        "even/even GSp multiplicity m_(r) from the lattice route");
                // tabulated per-constituent dim 2 m^r n_(r) (16 for the fourfold
                // GSp_4 cover): consistency against dim Wh I(chi) = |X_{Q,n}|
                CoverInvariants inv = cover_invariants(c);
                Int printed_each = 2 * ipow(m, r) * Int(nsub(n, r));
                if (2 * printed_each != inv.x_qn.order()) stated_ee = false;
            }
        }
    s.check(stated_odd_mult, "odd-fold GSp tabulated multiplicity 2 n_(r) matches the lattice route");
    if (!stated_odd_mult)
        s.info("lattice route gives multiplicity |X^Gamma| = n_(r); the tabulated 2 n_(r) "
               "carries the same factor-2 slip as criterion 1");
    s.check(stated_ee, "even/even GSp tabulated multiplicities/dims (n_(r) and 16 for the fourfold GSp_4 "
                       "cover) are consistent with the lattice data");
    if (!stated_ee)
        s.info("for even m the tabulated values double-count: the lattice gives multiplicity "
               "m_(r) and dim Wh I(chi) = |X_{Q,4}| = 16 total for the fourfold GSp_4 cover, so "
               "16 per constituent cannot hold; the consistent per-constituent total is 8 each");

    // q-group verdicts against the propositions and lemmas
    for (long n = 1; n <= 8; ++n) {
        for (int r = 2; r <= 4; ++r) {
            QGroupReport rep = q_group_analysis(kp(r, n, 0), {});
            if (n % r == 0)
                s.check(rep.induction_irreducible && rep.z_torsor, "GL induction irreducible when r | n");
            long na = n;  // KP n_alpha = n
            if (std::gcd(na, long(r)) == 1)
                s.check(cover_invariants(kp(r, n, 0)).is_isotypic_pair, "GL isotypic when gcd(n_alpha, r) = 1");
            if (std::gcd(n, long(r)) == 1)
                s.check(rep.restriction_isotypic, "GL T-dagger isotypic when gcd(n, r) = 1");
        }
        for (int r = 1; r <= 3; ++r) {
            CoverDatum c = make(Family::GSpI, r, n);
            QGroupReport rep = q_group_analysis(c, {});
            s.check(rep.q_z.is_trivial() == (p2(n) <= p2(r)), "GSp Q_Z dichotomy");
            if (p2(n) > p2(r)) s.check(rep.induction_irreducible, "GSp induction irreducible when p2(n) > p2(r)");
            if (n % 2 == 1) s.check(rep.restriction_isotypic, "GSp restriction isotypic for odd n");
            // GSp Levi partition cases
            if (r >= 2) {
                std::vector<int> part{1, r - 1};
                QGroupReport lev = q_group_analysis(c, levi_subset_from_partition(c.datum, part));
                if (n % 2 == 0) {
                    s.check(!lev.q_m0.is_trivial() && lev.m0_torsor, "GSp Levi torsor case: odd GL block");
                    s.check(lev.induction_irreducible, "GSp induction irreducible with an odd GL block");
                } else {
                    s.check(lev.q_m0.is_trivial(), "GSp Levi trivial case: odd n");
                }
            }
        }
        for (int r = 2; r <= 3; ++r) {
            CoverDatum c = make(Family::GSpinOdd, r, n);
            QGroupReport rep = q_group_analysis(c, {});
            Vec e0 = vec_zero(r + 1);
            e0[r] = 1;
            Int q0 = c.q_value(e0);
            Int n1 = Int(n) / gcd(Int(n), 2 * q0);
            Int n2 = Int(n) / gcd(Int(n), q0);
            s.check(rep.q_z.is_trivial() == (n1 == n2), "GSpin Q_Z dichotomy (n_2 = n_1 vs 2 n_1)");
            if (p2(n) >= 3) s.check(rep.induction_irreducible, "GSpin induction irreducible when p2(n) >= 3");
            bool corrected_iso = (n % 2 == 1) || ((n / 2) % 2 == 1 && r % 2 == 1);
            s.check(rep.restriction_isotypic == corrected_iso,
                    "GSpin restriction isotypic (corrected branch condition)");
        }
    }
    finish(s, "GSp suite");
}

// --- criterion 7 -----------------------------------------------------------

void criterion7() {
    Suite s;
    s.criterion = 7;
    // HNF/SNF canonical-form properties on 500 random matrices
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 500; ++trial) {
        int rows = 1 + trial % 6, cols = 1 + (trial / 5) % 6;
        IntMat m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = d(rng);
        HnfResult h = hnf(m);
        s.check(h.u.mul(m) == h.h, "HNF transform");
        SnfResult sn = snf(m);
        s.check(sn.u.mul(m).mul(sn.v) == sn.d, "SNF transform");
        auto diag = sn.diagonal();
        for (size_t i = 0; i + 1 < diag.size(); ++i)
            if (diag[i + 1] != 0)
                s.check(diag[i] != 0 && floor_mod(diag[i + 1], diag[i]) == 0, "SNF divisibility");
    }
    // W-stability of Y_{Q,n} and dual-datum Cartan integrality across presets
    for (Family f : {Family::GL, Family::SL, Family::Sp, Family::GSpI, Family::GSpinOdd,
                     Family::SpinOdd, Family::SO3})
        for (long n = 1; n <= 12; ++n) {
            int r = f == Family::SO3 ? 1 : (f == Family::SL || f == Family::SpinOdd ? 3 : 2);
            CoverDatum c = make(f, r, n);
            LatticeBasis l = y_qn(c);
            for (int i = 0; i < c.datum.nsimple(); ++i) {
                std::vector<Vec> moved;
                for (int k = 0; k < l.rank(); ++k)
                    moved.push_back(c.datum.reflect_cochar(i, l.basis_vector(k)));
                s.check(LatticeBasis(c.datum.rank, moved) == l, "W-stability of Y_{Q,n}");
            }
            try {
                dual_datum(c);
                s.check(true, "dual datum Cartan integrality");
            } catch (compute_error&) {
                s.check(false, "dual datum Cartan integrality");
            }
        }
    // sum over S of |W_S| = |W| for regular characters on rank <= 3
    {
        CoverDatum c = make(Family::SL, 2, 3);
        GenuineCharacter chi = make_character(c, {{c.scalar_modulus() / 3, 0}});
        auto sets = w_s_sets(chi);
        size_t total = 0;
        for (auto& [k, v] : sets) total += v.size();
        s.check(total == weyl_group(c.datum).size(), "W_S partition (SL_2)");
    }
    {
        CoverDatum c = make(Family::GSpI, 2, 1);
        GenuineCharacter chi = make_character(c, {{0, -4}, {0, -2}, {1, 10}});
        auto sets = w_s_sets(chi);
        size_t total = 0;
        for (auto& [k, v] : sets) total += v.size();
        s.check(total == weyl_group(c.datum).size(), "W_S partition (GSp_4, Phi(chi) = Delta)");
    }
    {
        CoverDatum c = make(Family::GL, 4, 1, 0, 1);
        GenuineCharacter chi = make_character(c, {{0, -2}, {0, -4}, {0, -6}, {1, 8}});
        if (is_regular(chi)) {
            auto sets = w_s_sets(chi);
            size_t total = 0;
            for (auto& [k, v] : sets) total += v.size();
            s.check(total == weyl_group(c.datum).size(), "W_S partition (GL_4 rank 3)");
        } else {
            s.check(false, "GL_4 test character should be regular");
        }
    }
    // dot-action well-definedness under representative shifts
    {
        CoverDatum c = make(Family::GSpI, 2, 3);
        DotOrbitDecomposition dec = dot_orbits(c, WhichQuotient::Full);
        const RootDatum& dat = c.datum;
        for (auto& w : weyl_group(dat)) {
            Vec shift = dot_shift(dat, w);
            for (auto& e : dec.group.elements()) {
                Vec v = dec.group.lift(e);
                Vec v2 = vec_add(v, dec.group.small().basis_vector(1));
                s.check(dec.group.project(vec_add(w.apply(v), shift)) ==
                            dec.group.project(vec_add(w.apply(v2), shift)),
                        "dot action independent of representative");
            }
        }
    }
    // n = 1 total degeneration
    for (Family f : {Family::GL, Family::Sp, Family::GSpI, Family::SO3}) {
        int r = f == Family::SO3 ? 1 : 2;
        CoverDatum c = make(f, r, 1);
        CoverInvariants inv = cover_invariants(c);
        s.check(inv.x_qn.is_trivial() && inv.x_gamma.is_trivial() && inv.x0_qn.is_trivial() &&
                    inv.x_frakc.is_trivial(),
                "n = 1: all quotients trivial");
    }
    {
        CoverDatum c = make(Family::SL, 2, 1);
        long mod = c.scalar_modulus();
        GenuineCharacter chi = make_character(c, {{1, -6}});
        ScatteringMatrix m = scattering_matrix(c, chi, 0, WhichQuotient::Full);
        ExactScalar ca = chi_alpha_simple(chi, 0);
        ExactScalar expect =
            (ca - ExactScalar::v_pow(mod, -2)) / (ExactScalar::from_rat(mod, Rat(1)) - ca);
        s.check(m.size() == 1 && *m.entries[0][0].as_exact() == expect,
                "n = 1 scattering is the Gindikin-Karpelevich-type scalar");
    }
    finish(s, "property suites");
}

// --- criterion 8 -----------------------------------------------------------

void criterion8() {
    Suite s;
    s.criterion = 8;
    // GL_2 KP, odd n: section {k e_c}
    for (long n : {3L, 5L, 7L, 9L})
        for (long p : {0L, 1L}) {
            CoverDatum c = kp(2, n, p);
            SplittingSearch ss = equivariant_splitting(c);
            s.check(ss.found, "GL_2 KP odd-fold splitting found");
            CoverInvariants inv = cover_invariants(c);
            bool printed = false;
            for (auto& section : ss.sections) {
                bool match = true;
                for (size_t i = 0; i < ss.gamma_reps.size() && match; ++i) {
                    bool ok = false;
                    for (long k = 0; k < 2 * n && !ok; ++k) {
                        Vec kec{Int(k), Int(k)};
                        if (inv.x_gamma.project(kec) == inv.x_gamma.project(ss.gamma_reps[i]) &&
                            inv.x_qn.project(kec) == inv.x_qn.project(section[i]))
                            ok = true;
                    }
                    if (!ok) match = false;
                }
                if (match) printed = true;
            }
            s.check(printed, "GL_2 KP odd-fold search returns the tabulated section {k e_c}");
        }
    // GSp_4^(3): section {k e_c : 0 <= k <= 2}
    {
        CoverDatum c = make(Family::GSpI, 2, 3);
        SplittingSearch ss = equivariant_splitting(c);
        s.check(ss.found, "threefold GSp_4 splitting found");
        CoverInvariants inv = cover_invariants(c);
        bool printed = false;
        for (auto& section : ss.sections) {
            bool match = true;
            for (size_t i = 0; i < ss.gamma_reps.size() && match; ++i) {
                bool ok = false;
                for (long k = 0; k <= 2 && !ok; ++k) {
                    Vec kec{Int(k), Int(k), Int(2 * k)};
                    if (inv.x_gamma.project(kec) == inv.x_gamma.project(ss.gamma_reps[i]) &&
                        inv.x_qn.project(kec) == inv.x_qn.project(section[i]))
                        ok = true;
                }
                if (!ok) match = false;
            }
            if (match) printed = true;
        }
        s.check(printed, "threefold GSp_4 search returns the tabulated section {k e_c : 0 <= k <= 2}");
    }
    // phi_0 exception detected exactly
    for (int r = 2; r <= 5; ++r)
        for (long n = 1; n <= 12; ++n) {
            bool expect_fail = (r % 2 == 1) && (n % 4 == 2);
            s.check(tilde_phi0_exists(make(Family::SpinOdd, r, n)) == !expect_fail,
                    "phi_0 exception (Spin_{2r+1}, r odd, n_alpha = 2 mod 4)");
        }
    finish(s, "equivariant splittings and the sc-OK exception");
}

}  // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() -
                                                                 start);
    std::cout << "acceptance total: "
              << (overall ? "PASS"
                          : "FAIL (see per-criterion notes; the failing sub-checks assert "
                            "tabulated values that contradict the defining congruences)")
              << " in " << secs.count() << "s\n";
    return overall ? 0 : 1;
}
