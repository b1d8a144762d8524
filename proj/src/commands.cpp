#include "covlat/commands.hpp"

#include <sstream>

namespace covlat {

namespace {

CoverDatum build_cover(const CoverSpec& spec, const RunOptions& opt) {
    CoverSpec s = spec;
    if (opt.epsilon) s.params.epsilon = *opt.epsilon;
    return cover_from_spec(s);
}

std::string lattice_str(const LatticeBasis& l) { return l.basis().str(); }

void put_group(Report& r, const std::string& key, const FinAbGroup& g) {
    Report& s = r.section(key);
    s.put("invariant_factors", g.factors_str());
    s.put_str("order", g.order());
}

void put_lattice(Report& r, const std::string& key, const LatticeBasis& l) {
    Report& s = r.section(key);
    s.put("rank", long(l.rank()));
    s.put("basis", lattice_str(l));
}

void put_datum(Report& r, const RootDatum& d) {
    r.put("family", family_name(d.family));
    r.put("rank", long(d.rank));
    Report& roots = r.section("simple_roots");
    for (int i = 0; i < d.nsimple(); ++i) roots.put("alpha_" + std::to_string(i + 1), vec_str(d.simple_roots[i]));
    Report& coroots = r.section("simple_coroots");
    for (int i = 0; i < d.nsimple(); ++i)
        coroots.put("alpha_" + std::to_string(i + 1) + "_vee", vec_str(d.simple_coroots[i]));
    r.put("cartan", d.cartan_matrix().str());
}

}  // namespace

Report cmd_show(const CoverSpec& spec, const RunOptions& opt) {
    CoverDatum c = build_cover(spec, opt);
    Report rep;
    Report& datum = rep.section("root_datum");
    put_datum(datum, c.datum);
    Report& cover = rep.section("cover");
    cover.put("n", c.n);
    cover.put("epsilon", long(c.epsilon));
    cover.put("B", c.b_form.str());
    cover.put("D", c.d_form.str());
    CoverInvariants inv = cover_invariants(c);
    Report& lat = rep.section("lattices");
    put_lattice(lat, "Y_Qn", inv.y_qn);
    put_lattice(lat, "Y_Qn_sc", inv.y_qn_sc);
    put_lattice(lat, "Y_sc", inv.y_sc);
    put_lattice(lat, "Y_0", inv.y0);
    put_lattice(lat, "Y_0Qn", inv.y0_qn);
    put_lattice(lat, "Y_0_cap_YQn", inv.y0_cap_yqn);
    put_lattice(lat, "Y_frak_c", inv.y_frak_c);
    put_lattice(lat, "Y_K_natural", inv.y_k_natural);
    if (inv.y_c) put_lattice(lat, "Y_c", *inv.y_c);
    if (inv.y_z) put_lattice(lat, "Y_z", *inv.y_z);
    if (inv.y_c_qn) put_lattice(lat, "Y_cQn", *inv.y_c_qn);
    Report& quot = rep.section("quotients");
    put_group(quot, "X_Qn", inv.x_qn);
    put_group(quot, "X_0Qn", inv.x0_qn);
    put_group(quot, "X_Gamma", inv.x_gamma);
    put_group(quot, "X_frak_c", inv.x_frakc);
    put_group(quot, "X_Gamma_mod_frak_c", inv.x_gamma_mod_frakc);
    Report& nal = rep.section("n_alpha");
    for (auto& [i, na] : inv.n_alpha_by_simple) nal.put("alpha_" + std::to_string(i + 1), na);
    Report& flags = rep.section("flags");
    flags.put("isotypic_pair", inv.is_isotypic_pair ? "true" : "false");
    flags.put("saturated", inv.is_saturated ? "true" : "false");
    flags.put("saturated_derived", inv.is_saturated_derived ? "true" : "false");
    Report& dual = rep.section("dual_datum");
    put_datum(dual, dual_datum(c));
    return rep;
}

Report cmd_restrict(const CoverSpec& spec, const RunOptions& opt) {
    CoverDatum c = build_cover(spec, opt);
    Report rep;
    RestrictionLedger led =
        spec.has_chi ? restriction_ledger(c, character_from_spec(spec, c)) : restriction_ledger(c);
    rep.put_str("multiplicity", led.multiplicity);
    rep.put("gamma_classes", long(led.gamma_classes.size()));
    Report& cls = rep.section("class_representatives");
    for (size_t i = 0; i < led.gamma_classes.size(); ++i)
        cls.put("gamma_" + std::to_string(i), vec_str(led.gamma_classes[i]));
    rep.put_str("extensions_per_class", led.extensions_per_class);
    rep.put_str("dim_Wh_I_chi", led.dim_big);
    rep.put_str("dim_Wh_I_omega", led.dim_small);
    rep.put("summand_count",
            long(led.gamma_classes.size()) * led.extensions_per_class.get_si());
    rep.put("isotypic", led.isotypic ? "true" : "false");
    rep.put("conservation", led.conservation_ok ? "ok" : "FAILED");
    rep.put("unramified_class", "gamma_0");
    if (!led.coincidence_note.empty()) rep.put("coincidences", led.coincidence_note);
    return rep;
}

Report cmd_whittaker(const CoverSpec& spec, const RunOptions& opt) {
    CoverDatum c = build_cover(spec, opt);
    Report rep;
    Int cap = opt.cap.value_or(spec.cap);
    for (auto which : {WhichQuotient::Full, WhichQuotient::Derived}) {
        DotOrbitDecomposition dec = dot_orbits(c, which, cap);
        Report& s = rep.section(which == WhichQuotient::Full ? "X_Qn_orbits" : "X_0Qn_orbits");
        s.put_str("group_order", dec.group.order());
        s.put("total_orbits", dec.total_orbits);
        s.put("free_orbits", dec.free_orbits);
        PermInnerProducts ip = perm_inner_products(c, dec);
        s.put_str("inner_trivial", ip.with_trivial);
        s.put_str("inner_sign", ip.with_sign);
    }
    CoverInvariants inv = cover_invariants(c);
    if (inv.is_saturated_derived) {
        SplittingSearch ss = equivariant_splitting(c, cap);
        Report& s = rep.section("equivariant_splitting");
        s.put("found", ss.found ? "true" : "false");
        s.put("sections", long(ss.sections.size()));
        if (ss.found) {
            Report& sec = s.section("first_section");
            for (size_t i = 0; i < ss.gamma_reps.size(); ++i)
                sec.put(vec_str(ss.gamma_reps[i]), vec_str(ss.sections[0][i]));
        }
    }
    // family rules where the parity conditions apply
    Report& fam = rep.section("family_rules");
    for (const char* id : {"gl2-sl2-theta", "sl2-whittaker", "sp2r-whittaker", "gsp-odd", "gsp-even-odd", "gsp-even-even", "so3-sigma"}) {
        try {
            FamilyRuleResult res = family_whittaker_rules(c, id);
            Report& s = fam.section(id);
            for (auto& [k, v] : res.values) s.put_str(k, v);
        } catch (compute_error&) {
            // case conditions not met; skip
        }
    }
    return rep;
}

Report cmd_scattering(const CoverSpec& spec, const RunOptions& opt) {
    CoverDatum c = build_cover(spec, opt);
    GenuineCharacter chi = character_from_spec(spec, c);
    Report rep;
    int simple = 0;
    ScatteringMatrix m = scattering_matrix(c, chi, simple, WhichQuotient::Full);
    rep.put("size", long(m.size()));
    Report& blocks = rep.section("blocks");
    for (size_t b = 0; b < m.blocks.size(); ++b) {
        std::ostringstream os;
        for (size_t i = 0; i < m.blocks[b].size(); ++i) {
            if (i) os << ", ";
            os << vec_str(m.reps[m.blocks[b][i]]);
        }
        blocks.put("block_" + std::to_string(b), os.str());
    }
    Report& rows = rep.section("matrix");
    for (int i = 0; i < m.size(); ++i) {
        Report& row = rows.section("row_" + vec_str(m.reps[i]));
        for (int j = 0; j < m.size(); ++j) row.put("col_" + vec_str(m.reps[j]), m.entries[i][j].str());
    }
    rep.put("trace", m.trace().str());
    ExactScalar one = ExactScalar::from_rat(chi.modulus(), Rat(1));
    ExactScalar ca = chi_alpha_simple(chi, simple);
    if (!(ca == one)) {
        ExactScalar gamma = gamma_factor(chi, c.datum.simple_coroots[simple]);
        rep.put("gamma_factor", gamma.str());
        try {
            Int mult_triv = sigma_wh_multiplicity(m, gamma, +1);
            Int mult_sign = sigma_wh_multiplicity(m, gamma, -1);
            Report& s = rep.section("sigma_wh_multiplicities");
            s.put_str("trivial", mult_triv);
            s.put_str("sign", mult_sign);
        } catch (compute_error& e) {
            rep.put("sigma_wh_multiplicities", std::string("unavailable: ") + e.what());
        }
    }
    Report& dets = rep.section("block_det_rank");
    for (size_t b = 0; b < m.blocks.size(); ++b) {
        BlockDetRank dr = block_det_rank(m, m.blocks[b]);
        Report& s = dets.section("block_" + std::to_string(b));
        s.put("det", dr.det.str());
        s.put("rank", dr.decided ? std::to_string(dr.rank) : std::string("undecided (1 or 2)"));
    }
    return rep;
}

Report cmd_packets(const CoverSpec& spec, const RunOptions& opt) {
    CoverDatum c = build_cover(spec, opt);
    Report rep;
    put_group(rep, "Gamma_tor", gamma_tor(c.datum));
    put_group(rep, "Gamma_tor_Qn", gamma_tor_qn(c));
    VarphiMaps v = varphi_maps(c);
    Report& vm = rep.section("varphi");
    put_group(vm, "Gamma_hat_tor", v.gamma_hat_tor);
    put_group(vm, "Gamma_hat_tor_Qn", v.gamma_hat_tor_qn);
    put_group(vm, "domain_mid", v.domain_mid);
    vm.put("phi_surjective", v.phi_surjective ? "true" : "false");
    vm.put_str("H_phi_order", v.h_phi_order);
    put_group(vm, "H_phi_quotient", v.h_quotient);
    if (c.datum.root_span().rank() == c.datum.rank)
        rep.put("tilde_phi0_exists", tilde_phi0_exists(c) ? "true" : "false");
    if (spec.has_chi) {
        GenuineCharacter chi = character_from_spec(spec, c);
        try {
            RGroupResult r = r_group_family(c, chi);
            Report& s = rep.section("r_group");
            s.put("active", r.active ? "true" : "false");
            s.put("rule", r.rule);
            if (r.active) {
                std::ostringstream os;
                for (size_t i = 0; i < r.generator_word.size(); ++i) {
                    if (i) os << " ";
                    os << "w_alpha_" << (r.generator_word[i] + 1);
                }
                s.put("generator", os.str());
            }
        } catch (compute_error& e) {
            rep.put("r_group", std::string("unavailable: ") + e.what());
        }
        if (c.datum.root_span().rank() == c.datum.rank) {
            ZetaChiResult z = zeta_chi(c, chi);
            Report& s = rep.section("zeta_chi");
            s.put("hypothesis", z.hypothesis_ok ? "ok" : "fails");
            s.put("detail", z.detail);
            for (auto& [t, sign] : z.values)
                s.put("t=" + vec_str(t), sign > 0 ? "trivial" : "sign");
        }
        if (auto triple = family_s_group_triple(c, chi)) {
            long mod = 4;
            Report& s = rep.section("uni_multiplicities");
            s.put_str("S_diamond_order", triple->s_diamond.order());
            s.put("S_chi_order", long(triple->s_chi.elements.size()));
            s.put("S_omega_order", long(triple->s_omega.elements.size()));
            s.put_str("X_frak_c_order", triple->x_frakc_order);
            auto taus = subgroup_characters(triple->s_diamond, triple->s_chi, mod);
            auto rhos = subgroup_characters(triple->s_diamond, triple->s_omega, mod);
            for (size_t a = 0; a < taus.size(); ++a)
                for (size_t b = 0; b < rhos.size(); ++b) {
                    Int v = uni_multiplicity(*triple, taus[a], rhos[b], mod);
                    s.put_str("dim_Hom[tau_" + std::to_string(a) + ",rho_" + std::to_string(b) + "]",
                              v);
                }
        }
    }
    UnramPairsReport up = unram_pairs_report(c);
    Report& s = rep.section("unramified_pairs");
    put_group(s, "YK_natural_mod_YQn", up.yk_mod_yqn);
    Report& reps = s.section("representatives");
    for (size_t i = 0; i < up.yk_reps.size(); ++i) reps.put("z_" + std::to_string(i), vec_str(up.yk_reps[i]));
    s.put_str("p_Gamma_image_order", up.p_gamma_image_order);
    s.put_str("index_in_X_frak_c", up.index_in_x_frakc);
    Report& fib = s.section("p_Gamma_fibers");
    for (auto& [cls, vecs] : up.fibers) {
        std::ostringstream os;
        for (size_t i = 0; i < vecs.size(); ++i) {
            if (i) os << ", ";
            os << vec_str(vecs[i]);
        }
        fib.put("over_" + vec_str(cls), os.str());
    }
    s.put("s_phi_exists", up.s_phi_exists ? "true" : "false");
    s.put("family_table", up.family_table);
    return rep;
}

Report cmd_tensor(const CoverSpec& spec, const RunOptions& opt) {
    CoverDatum c = build_cover(spec, opt);
    std::vector<int> partition = opt.partition.empty() ? spec.partition : opt.partition;
    if (partition.empty()) throw compute_error("tensor: a partition is required");
    std::vector<int> subset = levi_subset_from_partition(c.datum, partition);
    QGroupReport q = q_group_analysis(c, subset);
    Report rep;
    {
        std::ostringstream os;
        for (size_t i = 0; i < partition.size(); ++i) {
            if (i) os << ",";
            os << partition[i];
        }
        rep.put("partition", os.str());
    }
    put_group(rep, "Q_dagger", q.q_dagger);
    put_group(rep, "Q_Z", q.q_z);
    put_group(rep, "Q_M0", q.q_m0);
    rep.put("action_on_Q_Z_hat", q_action_name(q.action_on_z));
    rep.put("action_on_Q_M0_hat", q_action_name(q.action_on_m0));
    rep.put("Q_Z_torsor", q.z_torsor ? "true" : "false");
    rep.put("Q_M0_torsor", q.m0_torsor ? "true" : "false");
    rep.put("induction_irreducible", q.induction_irreducible ? "true" : "false");
    rep.put("restriction_to_T_dagger_isotypic", q.restriction_isotypic ? "true" : "false");
    if (!q.note.empty()) rep.put("note", q.note);
    return rep;
}

std::string render(const Report& r, const std::string& format) {
    if (format == "structured") return r.to_json();
    if (format == "text") return r.to_text();
    throw compute_error("unknown format: " + format);
}

std::string run_command(const std::string& command, const CoverSpec& spec, const RunOptions& opt) {
    Report rep;
    if (command == "show")
        rep = cmd_show(spec, opt);
    else if (command == "restrict")
        rep = cmd_restrict(spec, opt);
    else if (command == "whittaker")
        rep = cmd_whittaker(spec, opt);
    else if (command == "scattering")
        rep = cmd_scattering(spec, opt);
    else if (command == "packets")
        rep = cmd_packets(spec, opt);
    else if (command == "tensor")
        rep = cmd_tensor(spec, opt);
    else
        throw compute_error("unknown command: " + command);
    return render(rep, opt.format);
}

}  // namespace covlat
