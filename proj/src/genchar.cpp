#include "covlat/genchar.hpp"

#include <set>

namespace covlat {

bool GenuineCharacter::is_unitary() const {
    for (auto& [j, c] : jc)
        if (c != 0) return false;
    return true;
}

ExactScalar GenuineCharacter::value(int i) const {
    return ExactScalar::monomial(modulus(), jc[i].first, jc[i].second);
}

GenuineCharacter make_character_on(const CoverDatum& c, const LatticeBasis& lattice,
                                   const std::vector<std::pair<long, long>>& jc) {
    if (int(jc.size()) != lattice.rank())
        throw compute_error("make_character: one (j, c) pair per basis vector required");
    GenuineCharacter chi;
    chi.cover = c;
    chi.lattice = lattice;
    long n = c.scalar_modulus();
    for (auto [j, cc] : jc) chi.jc.emplace_back(((j % n) + n) % n, cc);
    return chi;
}

GenuineCharacter make_character(const CoverDatum& c, const std::vector<std::pair<long, long>>& jc) {
    return make_character_on(c, y_qn(c), jc);
}

GenuineCharacter trivial_character_on(const CoverDatum& c, const LatticeBasis& lattice) {
    return make_character_on(c, lattice, std::vector<std::pair<long, long>>(lattice.rank(), {0, 0}));
}

GenuineCharacter trivial_character(const CoverDatum& c) { return trivial_character_on(c, y_qn(c)); }

namespace {

// s_{b}^x = s_{xb} * eps^{x(x-1)/2 * D(b,b)} and
// s_{b1}^{x1} ... s_{bk}^{xk} = s_y * eps^{T}; only the parity of the
// exponent matters since eps = +-1.
int eps_exponent_parity(const GenuineCharacter& chi, const Vec& coords) {
    const CoverDatum& c = chi.cover;
    Int t = 0;
    int k = chi.lattice.rank();
    for (int i = 0; i < k; ++i) {
        const Int& xi = coords[i];
        if (xi == 0) continue;
        Vec bi = chi.lattice.basis_vector(i);
        t += (xi * (xi - 1) / 2) * c.d_value(bi, bi);
        for (int j = i + 1; j < k; ++j) {
            if (coords[j] == 0) continue;
            t += xi * coords[j] * c.d_value(bi, chi.lattice.basis_vector(j));
        }
    }
    return floor_mod(t, Int(2)) == 0 ? 0 : 1;
}

}  // namespace

ExactScalar eval(const GenuineCharacter& chi, const Vec& y) {
    auto coords = chi.lattice.coordinates(y);
    if (!coords) throw compute_error("eval: vector outside the character's lattice");
    long n = chi.modulus();
    Int jtot = 0, ctot = 0;
    for (int i = 0; i < chi.lattice.rank(); ++i) {
        jtot += (*coords)[i] * chi.jc[i].first;
        ctot += (*coords)[i] * chi.jc[i].second;
    }
    ExactScalar v = ExactScalar::monomial(n, floor_mod(jtot, Int(n)).get_si(), ctot.get_si());
    if (chi.cover.epsilon == -1 && eps_exponent_parity(chi, *coords) == 1) v = -v;
    return v;
}

ExactScalar chi_alpha(const GenuineCharacter& chi, const Vec& coroot) {
    long na = chi.cover.n_alpha(coroot);
    return eval(chi, vec_scale(Int(na), coroot));
}

ExactScalar chi_alpha_simple(const GenuineCharacter& chi, int i) {
    return chi_alpha(chi, chi.cover.datum.simple_coroots[i]);
}

namespace {

IntMat weyl_inverse_matrix(const RootDatum& d, const WeylElement& w) {
    IntMat m = IntMat::identity(d.rank);
    // inverse of s_{i1} ... s_{ik} is s_{ik} ... s_{i1}
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) m = d.reflection_matrix(*it).mul(m);
    // row convention: composing u then t gives matrix M_t * M_u; build by
    // prepending, which the loop above achieves
    return m;
}

}  // namespace

GenuineCharacter weyl_act(const RootDatum& d, const WeylElement& w, const GenuineCharacter& chi) {
    if (chi.cover.epsilon != 1)
        throw compute_error("weyl_act: only epsilon = +1 is supported; the epsilon = -1 twist "
                            "is not pinned down by the torus relations alone");
    IntMat winv = weyl_inverse_matrix(d, w);
    std::vector<std::pair<long, long>> jc;
    for (int i = 0; i < chi.lattice.rank(); ++i) {
        Vec pre = winv.mul_vec_left(chi.lattice.basis_vector(i));
        auto mono = eval(chi, pre).as_monomial();
        if (!mono) throw compute_error("weyl_act: non-monomial value (unexpected)");
        jc.push_back(*mono);
    }
    return make_character_on(chi.cover, chi.lattice, jc);
}

ExactScalar simple_twist_eval(const GenuineCharacter& chi, int i, const Vec& z) {
    Int pairing = dot(z, chi.cover.datum.simple_roots[i]);
    Vec shift = vec_scale(-pairing, chi.cover.datum.simple_coroots[i]);
    return eval(chi, z) * eval(chi, shift);
}

std::vector<WeylElement> stabilizer(const GenuineCharacter& chi) {
    std::vector<WeylElement> out;
    const RootDatum& d = chi.cover.datum;
    for (auto& w : weyl_group(d)) {
        GenuineCharacter tw = weyl_act(d, w, chi);
        if (tw.jc == chi.jc) out.push_back(w);
    }
    return out;
}

bool is_regular(const GenuineCharacter& chi) { return stabilizer(chi).size() == 1; }

std::vector<std::pair<Vec, Vec>> phi_set(const GenuineCharacter& chi) {
    std::vector<std::pair<Vec, Vec>> out;
    ExactScalar qinv = ExactScalar::v_pow(chi.modulus(), -2);
    for (auto& p : chi.cover.datum.all_pairs())
        if (chi_alpha(chi, p.second) == qinv) out.push_back(p);
    return out;
}

std::map<unsigned long, std::vector<WeylElement>> w_s_partition(
    const RootDatum& d, const std::vector<WeylElement>& weyl,
    const std::vector<std::pair<Vec, Vec>>& phi_pairs) {
    if (phi_pairs.size() > 62) throw compute_error("w_s_partition: too many reducibility roots");
    std::map<unsigned long, std::vector<WeylElement>> out;
    auto positives = d.positive_pairs();
    for (auto& w : weyl) {
        std::set<Vec> image;  // w(Phi_-^vee)
        for (auto& p : positives) image.insert(vec_scale(Int(-1), w.apply(p.second)));
        unsigned long mask = 0;
        for (size_t i = 0; i < phi_pairs.size(); ++i)
            if (image.count(phi_pairs[i].second)) mask |= 1ul << i;
        out[mask].push_back(w);
    }
    return out;
}

std::map<unsigned long, std::vector<WeylElement>> w_s_sets(const GenuineCharacter& chi) {
    if (!is_regular(chi)) throw compute_error("w_s_sets: character is not regular");
    return w_s_partition(chi.cover.datum, weyl_group(chi.cover.datum), phi_set(chi));
}

ExactScalar plancherel_inverse(const GenuineCharacter& chi, const Vec& coroot) {
    long n = chi.modulus();
    ExactScalar one = ExactScalar::from_rat(n, Rat(1));
    ExactScalar qinv = ExactScalar::v_pow(n, -2);
    ExactScalar ca = chi_alpha(chi, coroot);
    if (ca == one) throw compute_error("plancherel_inverse: pole at chi_alpha = 1");
    ExactScalar cainv = ca.inverse();
    return ((one - qinv * ca) * (one - qinv * cainv)) / ((one - ca) * (one - cainv));
}

ExactScalar gk_constant(const GenuineCharacter& chi, const Vec& coroot) {
    long n = chi.modulus();
    ExactScalar one = ExactScalar::from_rat(n, Rat(1));
    ExactScalar qinv = ExactScalar::v_pow(n, -2);
    ExactScalar ca = chi_alpha(chi, coroot);
    if (ca == one) throw compute_error("gk_constant: pole at chi_alpha = 1");
    return (one - qinv * ca) / (one - ca);
}

ExactScalar gamma_factor(const GenuineCharacter& chi, const Vec& coroot) {
    return gk_constant(chi, coroot).inverse();
}

}  // namespace covlat
