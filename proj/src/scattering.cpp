#include "covlat/scattering.hpp"

#include <algorithm>
#include <sstream>

namespace covlat {

GaussScalar::GaussScalar(long n, long modulus, int epsilon)
    : n_(n), modulus_(modulus), epsilon_(epsilon) {}

void GaussScalar::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

void GaussScalar::add_term(std::vector<long> key, const ExactScalar& coeff) {
    // cancel pairs g(k) g(-k) -> eps^k q^{-1}
    ExactScalar c = coeff;
    std::sort(key.begin(), key.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < key.size() && !changed; ++i)
            for (size_t j = i + 1; j < key.size() && !changed; ++j) {
                if ((key[i] + key[j]) % n_ != 0) continue;
                long k = key[i];
                c = c * ExactScalar::v_pow(modulus_, -2);
                if (epsilon_ == -1 && k % 2 != 0) c = -c;
                key.erase(key.begin() + j);
                key.erase(key.begin() + i);
                changed = true;
            }
    }
    auto it = terms_.find(key);
    if (it == terms_.end())
        terms_[key] = c;
    else
        it->second = it->second + c;
}

GaussScalar GaussScalar::from_exact(long n, int epsilon, const ExactScalar& s) {
    GaussScalar g(n, s.modulus(), epsilon);
    if (!s.is_zero()) g.terms_[{}] = s;
    return g;
}

GaussScalar GaussScalar::symbol(long n, long modulus, int epsilon, const Int& k) {
    GaussScalar g(n, modulus, epsilon);
    Int kk = floor_mod(k, Int(n));
    if (kk == 0) {
        g.terms_[{}] = -ExactScalar::v_pow(modulus, -2);
    } else {
        g.terms_[{kk.get_si()}] = ExactScalar::from_rat(modulus, Rat(1));
    }
    return g;
}

GaussScalar GaussScalar::symbol_psi_inv(long n, long modulus, int epsilon, const Int& k) {
    GaussScalar g = symbol(n, modulus, epsilon, k);
    if (epsilon == -1 && floor_mod(k, Int(2)) != 0) g = -g;
    return g;
}

bool GaussScalar::is_zero() const {
    for (auto& [k, c] : terms_)
        if (!c.is_zero()) return false;
    return true;
}

GaussScalar GaussScalar::operator+(const GaussScalar& o) const {
    if (n_ != o.n_ && !o.terms_.empty() && !terms_.empty())
        throw compute_error("GaussScalar: mixed degrees");
    GaussScalar r = terms_.empty() ? GaussScalar(o.n_, o.modulus_, o.epsilon_) : *this;
    if (terms_.empty()) r.terms_.clear();
    for (auto& [k, c] : terms_) r.terms_[k] = c;  // when r started from o's shape
    for (auto& [k, c] : o.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end())
            r.terms_[k] = c;
        else
            it->second = it->second + c;
    }
    r.prune();
    return r;
}

GaussScalar GaussScalar::operator-() const {
    GaussScalar r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

GaussScalar GaussScalar::operator-(const GaussScalar& o) const { return *this + (-o); }

GaussScalar GaussScalar::operator*(const GaussScalar& o) const {
    if (n_ != o.n_ && !o.terms_.empty() && !terms_.empty())
        throw compute_error("GaussScalar: mixed degrees");
    GaussScalar r(terms_.empty() ? o.n_ : n_, terms_.empty() ? o.modulus_ : modulus_,
                  terms_.empty() ? o.epsilon_ : epsilon_);
    for (auto& [ka, ca] : terms_)
        for (auto& [kb, cb] : o.terms_) {
            std::vector<long> key = ka;
            key.insert(key.end(), kb.begin(), kb.end());
            r.add_term(std::move(key), ca * cb);
        }
    r.prune();
    return r;
}

GaussScalar GaussScalar::scale(const ExactScalar& s) const {
    GaussScalar r = *this;
    for (auto& [k, c] : r.terms_) c = c * s;
    r.prune();
    return r;
}

bool GaussScalar::operator==(const GaussScalar& o) const { return (*this - o).is_zero(); }

GaussScalar GaussScalar::conj() const {
    GaussScalar r(n_, modulus_, epsilon_);
    for (auto& [k, c] : terms_) {
        std::vector<long> key;
        ExactScalar coeff = c.conj();
        for (long a : k) {
            key.push_back((n_ - a) % n_);
            if (epsilon_ == -1 && a % 2 != 0) coeff = -coeff;
        }
        r.add_term(std::move(key), coeff);
    }
    r.prune();
    return r;
}

std::optional<ExactScalar> GaussScalar::as_exact() const {
    ExactScalar zero = ExactScalar::from_rat(modulus_, Rat(0));
    ExactScalar out = zero;
    for (auto& [k, c] : terms_) {
        if (c.is_zero()) continue;
        if (!k.empty()) return std::nullopt;
        out = out + c;
    }
    return out;
}

std::string GaussScalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (long a : k) os << "*g(" << a << ")";
    }
    return os.str();
}

GaussScalar gauss(long n, long modulus, int epsilon, const Int& a, const Int& b) {
    ExactScalar zero = ExactScalar::from_rat(modulus, Rat(0));
    if (b < 0) return GaussScalar::from_exact(n, epsilon, zero);
    bool adiv = floor_mod(a, Int(n)) == 0;
    if (b >= 1) {
        if (adiv)
            return GaussScalar::from_exact(
                n, epsilon,
                ExactScalar::from_rat(modulus, Rat(1)) - ExactScalar::v_pow(modulus, -2));
        return GaussScalar::from_exact(n, epsilon, zero);
    }
    return GaussScalar::symbol(n, modulus, epsilon, a);
}

namespace {

// row translation factor for tau(s_{base + z}, -) = factor * tau(s_base, -)
ExactScalar row_translation_factor(const GenuineCharacter& chi, int simple_index, const Vec& base,
                                   const Vec& z) {
    const CoverDatum& c = chi.cover;
    ExactScalar f = simple_twist_eval(chi, simple_index, z).inverse();
    if (c.epsilon == -1 && floor_mod(c.d_value(base, z), Int(2)) != 0) f = -f;
    return f;
}

}  // namespace

GaussScalar tau_entry(const GenuineCharacter& chi, int i, const Vec& y1, const Vec& y) {
    const CoverDatum& c = chi.cover;
    long n = c.n;
    long modulus = chi.modulus();
    const Vec& alpha = c.datum.simple_roots[i];
    const Vec& coroot = c.datum.simple_coroots[i];
    long na = c.n_alpha_simple(i);
    ExactScalar one = ExactScalar::from_rat(modulus, Rat(1));
    ExactScalar qinv = ExactScalar::v_pow(modulus, -2);
    ExactScalar ca = chi_alpha_simple(chi, i);
    if (ca == one) throw compute_error("tau_entry: pole at chi_alpha = 1");

    GaussScalar total = GaussScalar::from_exact(n, c.epsilon, ExactScalar::from_rat(modulus, Rat(0)));

    Vec diff1 = vec_sub(y1, y);
    if (chi.lattice.contains(diff1)) {
        Int pairing = dot(y, alpha);
        Int k = floor_div(pairing, Int(na)) + 1;
        ExactScalar t1 = (one - qinv) * ca.pow(k) / (one - ca);
        t1 = t1 * row_translation_factor(chi, i, y, diff1);
        total = total + GaussScalar::from_exact(n, c.epsilon, t1);
    }
    Vec wy = c.datum.reflect_cochar(i, y);
    Vec diff2 = vec_sub(y1, wy);
    if (chi.lattice.contains(diff2)) {
        Int pairing = dot(y, alpha);
        Int eps_exp = pairing * c.d_value(y, coroot);
        GaussScalar t2 = GaussScalar::symbol_psi_inv(n, modulus, c.epsilon, pairing * c.q_value(coroot));
        if (c.epsilon == -1 && floor_mod(eps_exp, Int(2)) != 0) t2 = -t2;
        t2 = t2.scale(row_translation_factor(chi, i, wy, diff2));
        total = total + t2;
    }
    return total;
}

ScatteringMatrix scattering_matrix(const CoverDatum& c, const GenuineCharacter& chi,
                                   int simple_index, WhichQuotient which) {
    CoverInvariants inv = cover_invariants(c);
    const LatticeBasis& carrier = (which == WhichQuotient::Full) ? inv.y : inv.y0;
    const LatticeBasis& lat = (which == WhichQuotient::Full) ? inv.y_qn : inv.y0_qn;
    if (!(chi.lattice == lat))
        throw compute_error("scattering_matrix: character lattice does not match the quotient");
    FinAbGroup quot = quotient(carrier, lat);
    ScatteringMatrix m;
    m.chi = chi;
    m.word = {simple_index};
    for (auto& e : quot.elements()) m.reps.push_back(quot.lift(e));
    int sz = m.size();
    m.entries.assign(sz, std::vector<GaussScalar>());
    for (int a = 0; a < sz; ++a)
        for (int b = 0; b < sz; ++b) m.entries[a].push_back(tau_entry(chi, simple_index, m.reps[a], m.reps[b]));
    // block partition by plain-action classes {y, w_alpha(y)}
    std::vector<bool> used(sz, false);
    for (int a = 0; a < sz; ++a) {
        if (used[a]) continue;
        std::vector<int> block{a};
        used[a] = true;
        Vec wy = c.datum.reflect_cochar(simple_index, m.reps[a]);
        for (int b = 0; b < sz; ++b) {
            if (used[b]) continue;
            if (lat.contains(vec_sub(m.reps[b], wy))) {
                block.push_back(b);
                used[b] = true;
                break;
            }
        }
        m.blocks.push_back(block);
    }
    return m;
}

GaussScalar ScatteringMatrix::trace() const {
    GaussScalar t;
    for (int i = 0; i < size(); ++i) t = t + entries[i][i];
    return t;
}

namespace {

long weyl_length_of(const RootDatum& d, const IntMat& m) {
    for (auto& w : weyl_group(d))
        if (w.matrix == m) return w.length;
    throw compute_error("weyl_length_of: matrix not in the Weyl group");
}

IntMat word_matrix(const RootDatum& d, const std::vector<int>& word) {
    IntMat m = IntMat::identity(d.rank);
    // composition s_{i1} ∘ ... ∘ s_{ik} has matrix M_{ik} ... M_{i1}
    for (auto it = word.begin(); it != word.end(); ++it) m = m.mul(d.reflection_matrix(*it));
    return m;
}

}  // namespace

ScatteringMatrix compose(const RootDatum& d, const ScatteringMatrix& m2, const ScatteringMatrix& m1) {
    if (m1.size() != m2.size()) throw compute_error("compose: size mismatch");
    std::vector<int> word = m2.word;
    word.insert(word.end(), m1.word.begin(), m1.word.end());
    long l2 = weyl_length_of(d, word_matrix(d, m2.word));
    long l1 = weyl_length_of(d, word_matrix(d, m1.word));
    long l = weyl_length_of(d, word_matrix(d, word));
    if (l != l1 + l2) throw compute_error("compose: length additivity violated");
    ScatteringMatrix out;
    out.chi = m1.chi;
    out.word = word;
    out.reps = m1.reps;
    out.entries = matrix_product(m2, m1);
    return out;
}

std::vector<std::vector<GaussScalar>> matrix_product(const ScatteringMatrix& a,
                                                     const ScatteringMatrix& b) {
    int sz = a.size();
    std::vector<std::vector<GaussScalar>> out(sz, std::vector<GaussScalar>(size_t(sz)));
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) {
            GaussScalar s;
            for (int k = 0; k < sz; ++k) s = s + a.entries[i][k] * b.entries[k][j];
            out[i][j] = s;
        }
    return out;
}

ScatteringMatrix scattering_matrix_word(const CoverDatum& c, const GenuineCharacter& chi,
                                        const std::vector<int>& word, WhichQuotient which) {
    if (word.empty()) throw compute_error("scattering_matrix_word: empty word");
    // tau(s_{i1} ∘ rest, chi) = tau(s_{i1}, {}^{rest}chi) * tau(rest, chi)
    std::vector<int> rest(word.begin() + 1, word.end());
    if (rest.empty()) return scattering_matrix(c, chi, word[0], which);
    ScatteringMatrix m_rest = scattering_matrix_word(c, chi, rest, which);
    RootDatum d = c.datum;
    WeylElement wrest;
    wrest.word = rest;
    wrest.matrix = word_matrix(d, rest);
    GenuineCharacter twisted = weyl_act(d, wrest, chi);
    ScatteringMatrix m_head = scattering_matrix(c, twisted, word[0], which);
    return compose(d, m_head, m_rest);
}

Int sigma_wh_multiplicity(const ScatteringMatrix& m, const ExactScalar& gamma, int rho_sign) {
    auto tr = m.trace().as_exact();
    if (!tr) throw compute_error("sigma_wh_multiplicity: trace has unpaired Gauss symbols");
    long modulus = m.chi.modulus();
    ExactScalar val = ExactScalar::from_rat(modulus, Rat(m.size())) +
                      ExactScalar::from_rat(modulus, Rat(rho_sign)) * gamma * (*tr);
    val = val * ExactScalar::from_rat(modulus, Rat(1, 2));
    auto r = val.as_rational();
    if (!r || r->get_den() != 1 || *r < 0)
        throw compute_error("sigma_wh_multiplicity: not a nonnegative integer: " + val.str());
    return r->get_num();
}

BlockDetRank block_det_rank(const ScatteringMatrix& m, const std::vector<int>& block) {
    BlockDetRank out;
    if (block.size() == 1) {
        out.det = m.entries[block[0]][block[0]];
        out.rank = out.det.is_zero() ? 0 : 1;
        return out;
    }
    if (block.size() != 2) throw compute_error("block_det_rank: block size must be 1 or 2");
    int a = block[0], b = block[1];
    out.det = m.entries[a][a] * m.entries[b][b] - m.entries[a][b] * m.entries[b][a];
    auto de = out.det.as_exact();
    bool entries_zero = m.entries[a][a].is_zero() && m.entries[b][b].is_zero() &&
                        m.entries[a][b].is_zero() && m.entries[b][a].is_zero();
    if (!de) {
        out.decided = false;
        out.rank = -1;
        return out;
    }
    if (!de->is_zero())
        out.rank = 2;
    else
        out.rank = entries_zero ? 0 : 1;
    return out;
}

}  // namespace covlat
