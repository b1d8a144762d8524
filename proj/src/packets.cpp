#include "covlat/packets.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace covlat {

FinAbGroup make_abelian_group(const std::vector<Int>& factors) {
    int k = int(factors.size());
    if (k == 0) return quotient(LatticeBasis::full(1), LatticeBasis::full(1));
    std::vector<Vec> rows;
    for (int i = 0; i < k; ++i) {
        Vec r = vec_zero(k);
        r[i] = factors[i];
        rows.push_back(r);
    }
    return quotient(LatticeBasis::full(k), LatticeBasis(k, rows));
}

std::vector<AbCharacter> all_characters(const FinAbGroup& g) {
    if (g.free_rank() > 0) throw compute_error("all_characters: infinite group");
    std::vector<AbCharacter> out;
    std::vector<Int> cur(g.invariant_factors().size(), Int(0));
    for (;;) {
        out.push_back(AbCharacter{cur});
        size_t pos = cur.size();
        bool done = cur.empty();
        while (pos > 0) {
            --pos;
            cur[pos] += 1;
            if (cur[pos] < g.invariant_factors()[pos]) break;
            cur[pos] = 0;
            if (pos == 0) done = true;
        }
        if (done) break;
    }
    return out;
}

ExactScalar char_value(const FinAbGroup& g, const AbCharacter& chi, const FinAbElt& x, long modulus) {
    Int e = 0;
    const auto& d = g.invariant_factors();
    for (size_t i = 0; i < d.size(); ++i) {
        if (modulus % d[i].get_si() != 0)
            throw compute_error("char_value: modulus incompatible with the group exponent");
        e += Int(modulus / d[i].get_si()) * chi.exps[i] * x.coords[i];
    }
    return ExactScalar::zeta_pow(modulus, floor_mod(e, Int(modulus)).get_si());
}

Subgroup make_subgroup(const FinAbGroup& g, const std::vector<FinAbElt>& gens) {
    Subgroup h;
    h.gens = gens;
    std::set<FinAbElt> seen{g.zero()};
    std::vector<FinAbElt> frontier{g.zero()};
    while (!frontier.empty()) {
        std::vector<FinAbElt> next;
        for (auto& e : frontier)
            for (auto& gen : gens) {
                FinAbElt s = g.add(e, gen);
                if (seen.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    h.elements.assign(seen.begin(), seen.end());
    return h;
}

bool subgroup_contains(const Subgroup& h, const FinAbElt& x) {
    return std::binary_search(h.elements.begin(), h.elements.end(), x);
}

ClassFunction char_to_function(const FinAbGroup& g, const AbCharacter& chi, long modulus) {
    ClassFunction f;
    for (auto& e : g.elements()) f.values[e] = char_value(g, chi, e, modulus);
    return f;
}

std::vector<ClassFunction> subgroup_characters(const FinAbGroup& g, const Subgroup& h, long modulus) {
    std::vector<ClassFunction> out;
    std::set<std::string> seen;
    for (auto& chi : all_characters(g)) {
        ClassFunction f;
        std::ostringstream key;
        for (auto& e : h.elements) {
            f.values[e] = char_value(g, chi, e, modulus);
            key << f.values[e].str() << "|";
        }
        if (seen.insert(key.str()).second) out.push_back(f);
    }
    return out;
}

namespace {

// induction between nested subgroups (abelian): supported on the small one,
// scaled by the index
ClassFunction induce_between(const std::vector<FinAbElt>& big, const Subgroup& small,
                             const ClassFunction& f, long modulus) {
    ClassFunction out;
    if (big.size() % small.elements.size() != 0)
        throw compute_error("induce: subgroup size does not divide");
    Int index = Int(big.size()) / Int(small.elements.size());
    ExactScalar idx = ExactScalar::from_rat(modulus, Rat(index));
    ExactScalar zero = ExactScalar::from_rat(modulus, Rat(0));
    for (auto& e : big) out.values[e] = subgroup_contains(small, e) ? idx * f.values.at(e) : zero;
    return out;
}

}  // namespace

ClassFunction induce(const FinAbGroup& g, const Subgroup& h, const ClassFunction& f, long modulus) {
    return induce_between(g.elements(), h, f, modulus);
}

ClassFunction restrict_function(const ClassFunction& f, const Subgroup& h) {
    ClassFunction out;
    for (auto& e : h.elements) out.values[e] = f.values.at(e);
    return out;
}

Rat inner_product(const std::vector<FinAbElt>& domain, const ClassFunction& f, const ClassFunction& g,
                  long modulus) {
    ExactScalar sum = ExactScalar::from_rat(modulus, Rat(0));
    for (auto& e : domain) sum = sum + f.values.at(e) * g.values.at(e).conj();
    auto r = sum.as_rational();
    if (!r) throw compute_error("inner_product: non-rational pairing");
    return *r / Rat(Int(domain.size()));
}

namespace {

Subgroup product_subgroup(const FinAbGroup& g, const Subgroup& a, const Subgroup& b) {
    std::vector<FinAbElt> gens = a.gens;
    gens.insert(gens.end(), b.gens.begin(), b.gens.end());
    return make_subgroup(g, gens);
}

Subgroup intersect_subgroup(const FinAbGroup& g, const Subgroup& a, const Subgroup& b) {
    std::vector<FinAbElt> gens;
    for (auto& e : a.elements)
        if (subgroup_contains(b, e)) gens.push_back(e);
    return make_subgroup(g, gens);
}

}  // namespace

Int uni_multiplicity(const SGroupTriple& t, const ClassFunction& tau, const ClassFunction& rho,
                     long modulus) {
    const FinAbGroup& g = t.s_diamond;
    ClassFunction ind_rho = induce(g, t.s_omega, rho, modulus);
    ClassFunction ind_tau = induce(g, t.s_chi, tau, modulus);
    Rat pairing = inner_product(g.elements(), ind_rho, ind_tau, modulus);
    if (pairing.get_den() != 1) throw compute_error("uni_multiplicity: non-integral pairing");

    // Mackey double-coset route:
    // |S/(S_chi S_omega)| * < Ind_{S_chi ∩ S_omega}^{S_chi} (rho|), tau >
    Subgroup prod = product_subgroup(g, t.s_chi, t.s_omega);
    Int cosets = g.order() / Int(prod.elements.size());
    Subgroup meet = intersect_subgroup(g, t.s_chi, t.s_omega);
    ClassFunction rho_meet = restrict_function(rho, meet);
    ClassFunction ind_meet = induce_between(t.s_chi.elements, meet, rho_meet, modulus);
    Rat check = Rat(cosets) * inner_product(t.s_chi.elements, ind_meet, tau, modulus);
    if (check != pairing)
        throw compute_error("uni_multiplicity: Mackey closed form disagrees with the pairing");
    return t.x_frakc_order * pairing.get_num();
}

FinAbGroup gamma_tor(const RootDatum& d) {
    LatticeBasis xsc = d.root_span();
    if (xsc.rank() == 0) return quotient(LatticeBasis::zero(d.rank), LatticeBasis::zero(d.rank));
    LatticeBasis sat = saturation(xsc, LatticeBasis::full(d.rank));
    return quotient(sat, xsc);
}

namespace {

// coweight coordinates of the projection of y to Q[Delta^vee]:
// coordinate i is <y, alpha_i>
Vec coweight_projection(const RootDatum& d, const Vec& y) {
    Vec out(d.nsimple());
    for (int i = 0; i < d.nsimple(); ++i) out[size_t(i)] = dot(y, d.simple_roots[i]);
    return out;
}

LatticeBasis projected_cochar_lattice(const RootDatum& d) {
    std::vector<Vec> rows;
    for (int b = 0; b < d.rank; ++b) {
        Vec e = vec_zero(d.rank);
        e[b] = 1;
        rows.push_back(coweight_projection(d, e));
    }
    return LatticeBasis(d.nsimple(), rows);
}

}  // namespace

FinAbGroup gamma_hat_dagger(const RootDatum& d) {
    int l = d.nsimple();
    FinAbGroup out = quotient(LatticeBasis::full(l), projected_cochar_lattice(d));
    FinAbGroup tor = gamma_tor(d);
    if (out.invariant_factors() != tor.invariant_factors() || out.free_rank() != 0)
        throw compute_error("gamma_hat_dagger: composite with Gamma^tor is not an isomorphism");
    return out;
}

namespace {

QLattice x_qn_lattice(const CoverDatum& c) { return qlattice_dual(QLattice::integral(y_qn(c))); }

QLattice x_qn_sc_lattice(const CoverDatum& c) {
    const RootDatum& d = c.datum;
    Int scale = 1;
    for (int i = 0; i < d.nsimple(); ++i) scale = lcm(scale, Int(c.n_alpha_simple(i)));
    std::vector<Vec> rows;
    for (int i = 0; i < d.nsimple(); ++i)
        rows.push_back(vec_scale(scale / Int(c.n_alpha_simple(i)), d.simple_roots[i]));
    return QLattice(scale, LatticeBasis(d.rank, rows));
}

}  // namespace

FinAbGroup gamma_tor_qn(const CoverDatum& c) {
    const RootDatum& d = c.datum;
    QLattice xqn = x_qn_lattice(c);
    QLattice xsc = QLattice::integral(d.root_span());
    QLattice cap = qlattice_span_intersect(xqn, xsc);
    return qlattice_quotient(cap, x_qn_sc_lattice(c));
}

VarphiMaps varphi_maps(const CoverDatum& c) {
    const RootDatum& d = c.datum;
    int l = d.nsimple();
    VarphiMaps v;
    for (int i = 0; i < l; ++i) v.n_alpha.push_back(c.n_alpha_simple(i));

    QLattice xsc = QLattice::integral(d.root_span());
    QLattice xcap = QLattice::integral(saturation(d.root_span(), LatticeBasis::full(d.rank)));
    QLattice xqn_cap = qlattice_span_intersect(x_qn_lattice(c), xsc);
    QLattice xqn_sc = x_qn_sc_lattice(c);

    LatticeBasis p_xsc = LatticeBasis::full(l);
    v.p_xcap = coweight_dual(d, xcap);
    v.p_xqn_cap = coweight_dual(d, xqn_cap);
    v.p_xqn_sc = coweight_dual(d, xqn_sc);
    v.p_scale = 1;

    v.gamma_hat_tor = quotient(p_xsc, v.p_xcap);
    v.domain_mid = quotient(p_xsc, v.p_xqn_cap);
    v.h_target = quotient(v.p_xcap, v.p_xqn_cap);
    v.gamma_hat_tor_qn = quotient(v.p_xqn_sc, v.p_xqn_cap);

    // phi scales coweight coordinate i by n_alpha_i; it maps P(X^sc) onto
    // P(X^sc_{Q,n}) by construction
    std::vector<Vec> phi_rows;
    for (int i = 0; i < l; ++i) {
        Vec r = vec_zero(l);
        r[i] = v.n_alpha[size_t(i)];
        phi_rows.push_back(r);
    }
    v.phi_surjective = (LatticeBasis(l, phi_rows) == v.p_xqn_sc);
    if (!v.phi_surjective) throw compute_error("varphi_maps: phi is not surjective (unexpected)");

    // H_phi = image of P(X ∩ X^sc_Q) under phi, inside Gamma-hat^tor_{Q,n}
    std::vector<Vec> scaled;
    for (int i = 0; i < v.p_xcap.rank(); ++i) {
        Vec r = v.p_xcap.basis_vector(i);
        for (int j = 0; j < l; ++j) r[j] *= v.n_alpha[size_t(j)];
        scaled.push_back(r);
    }
    v.h_phi_lattice = lattice_sum(LatticeBasis(l, scaled), v.p_xqn_cap);
    v.h_phi_order = quotient(v.h_phi_lattice, v.p_xqn_cap).order();
    v.h_quotient = quotient(v.p_xqn_sc, v.h_phi_lattice);
    return v;
}

FinAbElt phi_h(const VarphiMaps& v, const CoverDatum& c, const Vec& y) {
    Vec proj = coweight_projection(c.datum, y);
    for (size_t i = 0; i < proj.size(); ++i) proj[i] *= v.n_alpha[i];
    return v.gamma_hat_tor_qn.project(proj);
}

bool tilde_phi0_exists(const CoverDatum& c) {
    const RootDatum& d = c.datum;
    if (d.root_span().rank() != d.rank)
        throw compute_error("tilde_phi0_exists: semisimple datum required");
    QLattice xqn = x_qn_lattice(c);
    for (int i = 0; i < xqn.num.rank(); ++i) {
        QVec x(d.rank);
        for (int k = 0; k < d.rank; ++k) x[k] = Rat(xqn.num.basis_vector(i)[k]) / Rat(xqn.den);
        auto coords = root_coordinates(d, x);
        if (!coords) throw compute_error("tilde_phi0_exists: X_{Q,n} outside the root span");
        // phi_0(x) = sum c_alpha n_alpha alpha; membership in X = Z^rank
        QVec img(d.rank, Rat(0));
        for (int a = 0; a < d.nsimple(); ++a)
            for (int k = 0; k < d.rank; ++k)
                img[k] += (*coords)[a] * Rat(c.n_alpha_simple(a)) * Rat(d.simple_roots[a][k]);
        for (int k = 0; k < d.rank; ++k)
            if (img[k].get_den() != 1) return false;
    }
    return true;
}

RGroupResult r_group_family(const CoverDatum& c, const GenuineCharacter& chi) {
    RGroupResult out;
    long modulus = chi.modulus();
    ExactScalar minus_one = ExactScalar::from_rat(modulus, Rat(-1));
    const RootDatum& d = c.datum;
    if (!chi.is_unitary()) throw compute_error("r_group_family: unitary character required");
    switch (d.family) {
        case Family::GL: {
            // the GL rule needs n_alpha Y ⊆ Y_{Q,n}
            long na = c.n_alpha_simple(0);
            LatticeBasis scaled = lattice_scale(Int(na), LatticeBasis::full(d.rank));
            if (!y_qn(c).contains(scaled))
                throw compute_error("r_group_family: GL rule requires n_alpha Y ⊆ Y_{Q,n}");
            out.rule = "GL: trivial R-group for every unitary unramified character";
            break;
        }
        case Family::SL: {
            if (d.family_rank != 2) throw compute_error("r_group_family: only SL_2 is covered");
            if (c.n % 2 == 1 && chi_alpha_simple(chi, 0) == minus_one) {
                out.active = true;
                out.generator_word = {0};
            }
            out.rule = "SL_2: R = W iff n odd and chi_alpha = -1";
            break;
        }
        case Family::Sp: {
            int last = d.nsimple() - 1;
            if (c.n % 2 == 1 && chi_alpha_simple(chi, last) == minus_one) {
                out.active = true;
                out.generator_word = {last};
            }
            out.rule = "Sp_2r: R = {1, w_{alpha_r}} iff n odd and chi_{alpha_r} = -1";
            break;
        }
        case Family::SO3: {
            if (c.n % 4 == 0 && chi_alpha_simple(chi, 0) == minus_one) {
                out.active = true;
                out.generator_word = {0};
            }
            out.rule = "SO_3: S = W iff 4 | n and chi_alpha is the nontrivial quadratic character";
            break;
        }
        case Family::GSpI:
        case Family::GSpII: {
            int r = d.family_rank;
            if (c.n % 2 == 0 && r % 2 == 0) {
                bool all = true;
                for (int i = 0; i < r; i += 2)
                    if (!(chi_alpha_simple(chi, i) == minus_one)) all = false;
                if (all) {
                    out.active = true;
                    for (int i = 0; i < r; i += 2) out.generator_word.push_back(i);
                }
            }
            out.rule = "GSp_2r: R = {1, w_{a1} w_{a3} ...} iff n, r even and chi_{alpha_odd} = -1";
            break;
        }
        default:
            throw compute_error("r_group_family: family not covered by the transcribed rules");
    }
    if (out.active) {
        // R ⊆ W(chi)
        auto stab = stabilizer(chi);
        IntMat m = IntMat::identity(d.rank);
        for (int i : out.generator_word) m = m.mul(d.reflection_matrix(i));
        bool found = false;
        for (auto& w : stab)
            if (w.matrix == m) found = true;
        if (!found) throw compute_error("r_group_family: R is not contained in W(chi)");
    }
    return out;
}

std::optional<SGroupTriple> family_s_group_triple(const CoverDatum& c, const GenuineCharacter& chi) {
    RGroupResult r;
    try {
        r = r_group_family(c, chi);
    } catch (compute_error&) {
        return std::nullopt;
    }
    CoverInvariants inv = cover_invariants(c);
    SGroupTriple t;
    t.x_frakc_order = inv.x_frakc.order();
    auto z2 = [] { return make_abelian_group({Int(2)}); };
    auto z1 = [] { return make_abelian_group({}); };
    switch (c.datum.family) {
        case Family::SL:
        case Family::Sp:
        case Family::SO3: {
            // G = G_0: all three groups coincide with the R-group
            t.s_diamond = r.active ? z2() : z1();
            t.s_chi = make_subgroup(t.s_diamond, t.s_diamond.elements());
            t.s_omega = make_subgroup(t.s_diamond, t.s_diamond.elements());
            break;
        }
        case Family::GL: {
            t.s_diamond = z1();
            t.s_chi = make_subgroup(t.s_diamond, {});
            t.s_omega = make_subgroup(t.s_diamond, {});
            break;
        }
        case Family::GSpI:
        case Family::GSpII: {
            if (c.n % 2 == 1) {
                // isotypic pair; the derived side carries the R-group of omega
                int last = c.datum.nsimple() - 1;
                bool omega_active =
                    chi_alpha_simple(chi, last) ==
                    ExactScalar::from_rat(chi.modulus(), Rat(-1));
                t.s_diamond = omega_active ? z2() : z1();
                t.s_omega = make_subgroup(t.s_diamond, t.s_diamond.elements());
                t.s_chi = make_subgroup(t.s_diamond, {});
            } else if (r.active) {
                // even/even reducible: S_chi = S_diamond = Z/2, S_omega = 1
                t.s_diamond = z2();
                t.s_chi = make_subgroup(t.s_diamond, t.s_diamond.elements());
                t.s_omega = make_subgroup(t.s_diamond, {});
            } else {
                t.s_diamond = z1();
                t.s_chi = make_subgroup(t.s_diamond, {});
                t.s_omega = make_subgroup(t.s_diamond, {});
            }
            break;
        }
        default:
            return std::nullopt;
    }
    return t;
}

UnramPairsReport unram_pairs_report(const CoverDatum& c) {
    UnramPairsReport rep;
    CoverInvariants inv = cover_invariants(c);
    rep.yk_mod_yqn = quotient(inv.y_k_natural, inv.y_qn);
    for (auto& e : rep.yk_mod_yqn.elements()) rep.yk_reps.push_back(rep.yk_mod_yqn.lift(e));
    // p_Gamma into X^Gamma; the image lies in X^frak-c since Y_K^nat ⊆ Y^c
    if (!inv.y_frak_c.contains(inv.y_k_natural))
        throw compute_error("unram_pairs_report: Y_K^nat outside Y^c");
    std::map<FinAbElt, std::vector<Vec>> fibers;
    for (auto& rep_vec : rep.yk_reps) fibers[inv.x_gamma.project(rep_vec)].push_back(rep_vec);
    rep.p_gamma_image_order = Int(fibers.size());
    rep.index_in_x_frakc = inv.x_frakc.order() / rep.p_gamma_image_order;
    for (auto& [cls, vecs] : fibers) rep.fibers.emplace_back(inv.x_gamma.lift(cls), vecs);
    if (c.datum.nsimple() > 0) {
        VarphiMaps v = varphi_maps(c);
        // section of Gamma-hat^tor_{Q,n} over its H_phi quotient
        rep.s_phi_exists = true;
        auto adapted = v.h_quotient.adapted_basis();
        auto diag = v.h_quotient.full_diagonal();
        for (size_t i = 0; i < adapted.size() && rep.s_phi_exists; ++i) {
            if (diag[i] <= 1) continue;
            bool found = false;
            for (auto& e : v.gamma_hat_tor_qn.elements()) {
                Vec lift = v.gamma_hat_tor_qn.lift(e);
                if (!(v.h_quotient.project(lift) == v.h_quotient.project(adapted[i]))) continue;
                if (v.gamma_hat_tor_qn.scale(diag[i], e) == v.gamma_hat_tor_qn.zero()) {
                    found = true;
                    break;
                }
            }
            rep.s_phi_exists = found;
        }
    }
    switch (c.datum.family) {
        case Family::GSpI:
        case Family::GSpII: {
            int r = c.datum.family_rank;
            if (c.n % 2 == 1)
                rep.family_table =
                    "odd n: I(omega) constituents pi(1) <-> (K_0, s_0), pi(eps) <-> (K_0', s_0')";
            else if (r % 2 == 1)
                rep.family_table =
                    "even n, odd r: I(omega_{0,j}) <-> (K_0, s_0); I(omega_{e_0,j}) <-> (K_0', s_0')";
            else
                rep.family_table = "even n, even r: pi(1) <-> s_K and f_{e_c} x s_K; pi(eps) <-> "
                                   "f_{m e_r} x s_K and f_{e_c - m e_r} x s_K";
            break;
        }
        case Family::SL:
        case Family::Sp:
            rep.family_table = "odd n reducible: pi(1) <-> (K, s_K), pi(eps) <-> (K', s_K')";
            break;
        case Family::SO3:
            rep.family_table = "4 | n reducible: pi(1) <-> s_K, pi(eps) <-> s_K x f_xi";
            break;
        default:
            rep.family_table = "no transcribed table for this family";
    }
    return rep;
}

std::optional<FinAbElt> gamma_zy(const CoverDatum& c, const VarphiMaps& v, const Vec& z,
                                 const FinAbElt& y_in_gamma_hat) {
    // s_phi: search a homomorphic section of gamma_hat_tor_qn -> h_quotient
    auto gammas = v.h_quotient.elements();
    auto adapted = v.h_quotient.adapted_basis();
    auto diag = v.h_quotient.full_diagonal();
    std::vector<Vec> gen_lifts;
    std::vector<Int> orders;
    for (size_t i = 0; i < adapted.size(); ++i) {
        if (diag[i] <= 1) continue;
        gen_lifts.push_back(adapted[i]);
        orders.push_back(diag[i]);
    }
    std::vector<FinAbElt> chosen;
    for (size_t i = 0; i < gen_lifts.size(); ++i) {
        std::optional<FinAbElt> pick;
        for (auto& e : v.gamma_hat_tor_qn.elements()) {
            Vec lift = v.gamma_hat_tor_qn.lift(e);
            if (!(v.h_quotient.project(lift) == v.h_quotient.project(gen_lifts[i]))) continue;
            if (v.gamma_hat_tor_qn.scale(orders[i], e) == v.gamma_hat_tor_qn.zero()) {
                pick = e;
                break;
            }
        }
        if (!pick) return std::nullopt;
        chosen.push_back(*pick);
    }
    // phi(y): scale the coweight coordinates of a lift of y
    Vec ylift = v.gamma_hat_tor.lift(y_in_gamma_hat);
    for (size_t i = 0; i < ylift.size(); ++i) ylift[i] *= v.n_alpha[i];
    FinAbElt phi_y_class = v.h_quotient.project(ylift);
    // express phi_y_class through the section generators
    FinAbElt lifted = v.gamma_hat_tor_qn.zero();
    for (size_t i = 0; i < chosen.size(); ++i)
        lifted = v.gamma_hat_tor_qn.add(lifted,
                                        v.gamma_hat_tor_qn.scale(phi_y_class.coords[i], chosen[i]));
    return v.gamma_hat_tor_qn.add(phi_h(v, c, z), lifted);
}

ZetaChiResult zeta_chi(const CoverDatum& c, const GenuineCharacter& chi) {
    ZetaChiResult out;
    const RootDatum& d = c.datum;
    if (d.root_span().rank() != d.rank) {
        out.detail = "hypothesis fails: datum is not semisimple";
        return out;
    }
    if (!tilde_phi0_exists(c)) {
        out.detail = "hypothesis fails: phi_0(X_{Q,n}) is not contained in X";
        return out;
    }
    out.hypothesis_ok = true;
    RGroupResult r = r_group_family(c, chi);
    VarphiMaps v = varphi_maps(c);
    // T_ad/T modeled by Y_ad/Y in coweight coordinates
    FinAbGroup yad_mod_y = quotient(LatticeBasis::full(d.nsimple()), projected_cochar_lattice(d));
    for (auto& t : yad_mod_y.elements()) {
        Vec lift = yad_mod_y.lift(t);
        Vec scaled = lift;
        for (size_t i = 0; i < scaled.size(); ++i) scaled[i] *= v.n_alpha[i];
        FinAbElt cls = v.gamma_hat_tor_qn.project(scaled);
        int sign = +1;
        if (r.active) {
            if (v.gamma_hat_tor_qn.order() != 2) {
                out.detail = "q_chi beyond the order-2 family cases is not modeled";
                out.hypothesis_ok = false;
                return out;
            }
            sign = (cls == v.gamma_hat_tor_qn.zero()) ? +1 : -1;
        }
        out.values.emplace_back(lift, sign);
    }
    out.detail = r.active ? "S(phi_chi) of order 2 via the family rule" : "S(phi_chi) trivial";
    return out;
}

}  // namespace covlat
