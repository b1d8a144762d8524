#include "covlat/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace covlat {

std::string family_name(Family f) {
    switch (f) {
        case Family::SL: return "SL";
        case Family::GL: return "GL";
        case Family::Sp: return "Sp";
        case Family::GSpI: return "GSp-I";
        case Family::GSpII: return "GSp-II";
        case Family::SO3: return "SO3";
        case Family::SpinOdd: return "Spin";
        case Family::GSpinOdd: return "GSpin";
        case Family::Custom: return "custom";
    }
    return "?";
}

IntMat RootDatum::cartan_matrix() const {
    IntMat c(nsimple(), nsimple());
    for (int j = 0; j < nsimple(); ++j)
        for (int i = 0; i < nsimple(); ++i) c.at(j, i) = dot(simple_roots[j], simple_coroots[i]);
    return c;
}

Vec RootDatum::reflect_cochar(int i, const Vec& y) const {
    return vec_sub(y, vec_scale(dot(y, simple_roots[i]), simple_coroots[i]));
}

Vec RootDatum::reflect_char(int i, const Vec& x) const {
    return vec_sub(x, vec_scale(dot(simple_coroots[i], x), simple_roots[i]));
}

QVec RootDatum::reflect_cochar_q(int i, const QVec& y) const {
    Rat pairing = 0;
    for (int j = 0; j < rank; ++j) pairing += y[j] * Rat(simple_roots[i][j]);
    QVec out(y);
    for (int j = 0; j < rank; ++j) out[j] -= pairing * Rat(simple_coroots[i][j]);
    return out;
}

IntMat RootDatum::reflection_matrix(int i) const {
    IntMat m(rank, rank);
    for (int b = 0; b < rank; ++b) {
        Vec e = vec_zero(rank);
        e[b] = 1;
        m.set_row(b, reflect_cochar(i, e));
    }
    return m;
}

std::vector<std::pair<Vec, Vec>> RootDatum::all_pairs() const {
    std::set<Vec> seen;
    std::vector<std::pair<Vec, Vec>> out;
    std::vector<std::pair<Vec, Vec>> frontier;
    for (int i = 0; i < nsimple(); ++i) frontier.emplace_back(simple_roots[i], simple_coroots[i]);
    while (!frontier.empty()) {
        std::vector<std::pair<Vec, Vec>> next;
        for (auto& p : frontier) {
            if (seen.count(p.first)) continue;
            seen.insert(p.first);
            out.push_back(p);
            for (int i = 0; i < nsimple(); ++i) {
                Vec r = reflect_char(i, p.first);
                Vec c = reflect_cochar(i, p.second);
                if (!seen.count(r)) next.emplace_back(r, c);
            }
        }
        frontier = std::move(next);
        if (out.size() > 100000) throw compute_error("root closure: not finite type?");
    }
    return out;
}

std::optional<QVec> root_coordinates(const RootDatum& d, const QVec& x) {
    // solve x = sum c_j alpha_j by rational elimination
    int l = d.nsimple(), n = d.rank;
    std::vector<QVec> rows;
    for (int j = 0; j < l; ++j) {
        QVec r(n);
        for (int k = 0; k < n; ++k) r[k] = Rat(d.simple_roots[j][k]);
        rows.push_back(r);
    }
    QVec target = x;
    QVec coeff(l, Rat(0));
    std::vector<QVec> work = rows;
    std::vector<QVec> ops(l);  // track combinations
    for (int j = 0; j < l; ++j) {
        ops[j].assign(l, Rat(0));
        ops[j][j] = 1;
    }
    int row = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < n && row < l; ++col) {
        int p = -1;
        for (int i = row; i < l; ++i)
            if (work[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(work[p], work[row]);
        std::swap(ops[p], ops[row]);
        for (int i = 0; i < l; ++i) {
            if (i == row || work[i][col] == 0) continue;
            Rat f = work[i][col] / work[row][col];
            for (int k = 0; k < n; ++k) work[i][k] -= f * work[row][k];
            for (int k = 0; k < l; ++k) ops[i][k] -= f * ops[row][k];
        }
        pivot_col.push_back(col);
        ++row;
    }
    QVec rem = target;
    for (int i = 0; i < row; ++i) {
        int col = pivot_col[i];
        Rat f = rem[col] / work[i][col];
        for (int k = 0; k < n; ++k) rem[k] -= f * work[i][k];
        for (int k = 0; k < l; ++k) coeff[k] += f * ops[i][k];
    }
    for (int k = 0; k < n; ++k)
        if (rem[k] != 0) return std::nullopt;
    return coeff;
}

std::vector<std::pair<Vec, Vec>> RootDatum::positive_pairs() const {
    auto all = all_pairs();
    std::vector<std::pair<Vec, Vec>> pos;
    for (auto& p : all) {
        QVec x(rank);
        for (int k = 0; k < rank; ++k) x[k] = Rat(p.first[k]);
        auto c = root_coordinates(*this, x);
        if (!c) throw compute_error("positive_pairs: root outside root span");
        bool nonneg = true;
        for (auto& v : *c)
            if (v < 0) nonneg = false;
        if (nonneg) pos.push_back(p);
    }
    // deterministic: sort by root height then lexicographically
    auto height = [&](const Vec& r) {
        QVec x(rank);
        for (int k = 0; k < rank; ++k) x[k] = Rat(r[k]);
        auto c = root_coordinates(*this, x);
        Rat h = 0;
        for (auto& v : *c) h += v;
        return h;
    };
    std::sort(pos.begin(), pos.end(), [&](const auto& a, const auto& b) {
        Rat ha = height(a.first), hb = height(b.first);
        if (ha != hb) return ha < hb;
        return a.first < b.first;
    });
    return pos;
}

QVec RootDatum::rho() const {
    QVec r(rank, Rat(0));
    for (auto& p : positive_pairs())
        for (int k = 0; k < rank; ++k) r[k] += Rat(p.second[k]) / 2;
    return r;
}

LatticeBasis RootDatum::coroot_span() const { return LatticeBasis(rank, simple_coroots); }

LatticeBasis RootDatum::root_span() const { return LatticeBasis(rank, simple_roots); }

LatticeBasis RootDatum::derived_cochar() const {
    if (nsimple() == 0) return LatticeBasis::zero(rank);
    return saturation(coroot_span(), LatticeBasis::full(rank));
}

bool RootDatum::center_connected() const {
    if (nsimple() == 0) return true;
    return saturation(root_span(), LatticeBasis::full(rank)) == root_span();
}

LatticeBasis RootDatum::center_cochar() const {
    if (!center_connected()) throw compute_error("center_cochar: disconnected center");
    if (nsimple() == 0) return LatticeBasis::full(rank);
    // annihilator of the simple roots
    IntMat roots_cols(rank, nsimple());
    for (int j = 0; j < nsimple(); ++j)
        for (int k = 0; k < rank; ++k) roots_cols.at(k, j) = simple_roots[j][k];
    IntMat ann = left_kernel(roots_cols);
    std::vector<Vec> rows;
    for (int i = 0; i < ann.rows(); ++i) rows.push_back(ann.row(i));
    return LatticeBasis(rank, rows);
}

void RootDatum::validate() const {
    if (int(simple_roots.size()) != int(simple_coroots.size())) throw compute_error("datum: root/coroot count");
    for (auto& v : simple_coroots)
        if (int(v.size()) != rank) throw compute_error("datum: coroot rank");
    for (auto& v : simple_roots)
        if (int(v.size()) != rank) throw compute_error("datum: root rank");
    IntMat c = cartan_matrix();
    for (int i = 0; i < nsimple(); ++i) {
        if (c.at(i, i) != 2) throw compute_error("datum: <alpha_i, alpha_i^vee> != 2");
        for (int j = 0; j < nsimple(); ++j) {
            if (i == j) continue;
            if (c.at(i, j) > 0) throw compute_error("datum: positive off-diagonal Cartan entry");
            if ((c.at(i, j) == 0) != (c.at(j, i) == 0)) throw compute_error("datum: Cartan zero pattern");
        }
    }
}

std::vector<WeylElement> weyl_group(const RootDatum& d, const Int& cap) {
    std::vector<WeylElement> out;
    std::map<std::string, bool> seen;
    WeylElement id{IntMat::identity(d.rank), {}, 0, 1};
    std::vector<IntMat> gens;
    for (int i = 0; i < d.nsimple(); ++i) gens.push_back(d.reflection_matrix(i));
    std::vector<WeylElement> frontier{id};
    seen[id.matrix.str()] = true;
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (auto& w : frontier) {
            out.push_back(w);
            if (Int(out.size()) > cap) throw compute_error("weyl_group: cap exceeded");
            for (int i = 0; i < d.nsimple(); ++i) {
                WeylElement nw;
                // word [i1..ik] means s_{i1} ∘ ... ∘ s_{ik}; matrices compose
                // in reverse under the row convention y -> y * M
                nw.matrix = gens[i].mul(w.matrix);
                std::string key = nw.matrix.str();
                if (seen.count(key)) continue;
                seen[key] = true;
                nw.word = w.word;
                nw.word.push_back(i);
                nw.length = w.length + 1;
                nw.sign = -w.sign;
                next.push_back(nw);
            }
        }
        frontier = std::move(next);
    }
    return out;
}

namespace {

Vec unit(int n, int i) {
    Vec v = vec_zero(n);
    v[i] = 1;
    return v;
}

}  // namespace

RootDatum standard_datum(Family f, int r) {
    RootDatum d;
    d.family = f;
    d.family_rank = r;
    switch (f) {
        case Family::GL: {
            if (r < 1) throw compute_error("GL: rank >= 1");
            d.rank = r;
            for (int i = 0; i + 1 < r; ++i) {
                Vec c = vec_zero(r);
                c[i] = 1;
                c[i + 1] = -1;
                d.simple_coroots.push_back(c);
                d.simple_roots.push_back(c);
            }
            break;
        }
        case Family::SL: {
            if (r < 2) throw compute_error("SL: rank >= 2");
            d.rank = r - 1;
            for (int i = 0; i < r - 1; ++i) {
                d.simple_coroots.push_back(unit(r - 1, i));
                Vec root = vec_zero(r - 1);
                root[i] = 2;
                if (i > 0) root[i - 1] = -1;
                if (i + 1 < r - 1) root[i + 1] = -1;
                d.simple_roots.push_back(root);
            }
            break;
        }
        case Family::Sp: {
            if (r < 1) throw compute_error("Sp: rank >= 1");
            d.rank = r;
            for (int i = 0; i + 1 < r; ++i) {
                Vec c = vec_zero(r);
                c[i] = 1;
                c[i + 1] = -1;
                d.simple_coroots.push_back(c);
                d.simple_roots.push_back(c);
            }
            Vec clast = vec_zero(r);
            clast[r - 1] = 1;
            Vec rlast = vec_zero(r);
            rlast[r - 1] = 2;
            d.simple_coroots.push_back(clast);
            d.simple_roots.push_back(rlast);
            break;
        }
        case Family::GSpI:
        case Family::GSpII: {
            if (r < 1) throw compute_error("GSp: rank >= 1");
            d.rank = r + 1;  // coordinates e_1..e_r, e_0 (last)
            for (int i = 0; i + 1 < r; ++i) {
                Vec c = vec_zero(r + 1);
                c[i] = 1;
                c[i + 1] = -1;
                d.simple_coroots.push_back(c);
                d.simple_roots.push_back(c);
            }
            Vec clast = vec_zero(r + 1);
            clast[r - 1] = 1;
            Vec rlast = vec_zero(r + 1);
            rlast[r - 1] = 2;
            rlast[r] = -1;  // 2 e_r^* - e_0^*
            d.simple_coroots.push_back(clast);
            d.simple_roots.push_back(rlast);
            break;
        }
        case Family::SO3: {
            d.rank = 1;
            d.family_rank = 1;
            d.simple_coroots.push_back(Vec{Int(2)});
            d.simple_roots.push_back(Vec{Int(1)});
            break;
        }
        case Family::SpinOdd: {
            if (r < 1) throw compute_error("Spin: rank >= 1");
            d.rank = r;  // coroot basis
            for (int i = 0; i < r; ++i) {
                d.simple_coroots.push_back(unit(r, i));
                Vec root = vec_zero(r);
                root[i] = 2;
                if (i > 0) root[i - 1] = -1;
                if (i + 1 < r) root[i + 1] = -1;
                d.simple_roots.push_back(root);
            }
            // B_r: <alpha_{r-1}, alpha_r^vee> = -2, <alpha_r, alpha_{r-1}^vee> = -1
            if (r >= 2) d.simple_roots[r - 2][r - 1] = -2;
            break;
        }
        case Family::GSpinOdd: {
            if (r < 1) throw compute_error("GSpin: rank >= 1");
            d.rank = r + 1;  // e_1..e_r, e_0 (last)
            for (int i = 0; i + 1 < r; ++i) {
                Vec c = vec_zero(r + 1);
                c[i] = 1;
                c[i + 1] = -1;
                d.simple_coroots.push_back(c);
                d.simple_roots.push_back(c);
            }
            Vec clast = vec_zero(r + 1);
            clast[r - 1] = 2;
            clast[r] = -1;  // 2 e_r - e_0
            Vec rlast = vec_zero(r + 1);
            rlast[r - 1] = 1;  // e_r^*
            d.simple_coroots.push_back(clast);
            d.simple_roots.push_back(rlast);
            break;
        }
        case Family::Custom:
            throw compute_error("standard_datum: custom family has no preset");
    }
    d.validate();
    return d;
}

LeviDatum levi(const RootDatum& d, const std::vector<int>& subset) {
    LeviDatum m;
    m.parent = d;
    m.subset = subset;
    m.datum.rank = d.rank;
    m.datum.family = Family::Custom;
    std::set<int> idx(subset.begin(), subset.end());
    for (int i : subset) {
        if (i < 0 || i >= d.nsimple()) throw compute_error("levi: bad subset index");
        m.datum.simple_coroots.push_back(d.simple_coroots[i]);
        m.datum.simple_roots.push_back(d.simple_roots[i]);
    }
    if (int(idx.size()) != int(subset.size())) throw compute_error("levi: duplicate subset index");
    m.datum.validate();
    return m;
}

LatticeBasis levi_center_cochar(const RootDatum& d, const std::vector<int>& subset) {
    if (subset.empty()) return LatticeBasis::full(d.rank);
    IntMat cols(d.rank, int(subset.size()));
    for (size_t j = 0; j < subset.size(); ++j)
        for (int k = 0; k < d.rank; ++k) cols.at(k, int(j)) = d.simple_roots[subset[j]][k];
    IntMat ann = left_kernel(cols);
    std::vector<Vec> rows;
    for (int i = 0; i < ann.rows(); ++i) rows.push_back(ann.row(i));
    return LatticeBasis(d.rank, rows);
}

LatticeBasis coweight_dual(const RootDatum& d, const QLattice& l_in_x) {
    // express generators of l in the simple root basis
    int l = d.nsimple();
    std::vector<QVec> coords;
    for (int i = 0; i < l_in_x.num.rank(); ++i) {
        Vec g = l_in_x.num.basis_vector(i);
        QVec x(d.rank);
        for (int k = 0; k < d.rank; ++k) x[k] = Rat(g[k]) / Rat(l_in_x.den);
        auto c = root_coordinates(d, x);
        if (!c) throw compute_error("coweight_dual: generator outside root span");
        coords.push_back(*c);
    }
    // x = sum x_i omega_i dual to L: conditions sum_i x_i c_i(beta) in Z
    Int den = 1;
    for (auto& row : coords)
        for (auto& v : row) den = lcm(den, v.get_den());
    IntMat g(l, int(coords.size()));
    for (size_t j = 0; j < coords.size(); ++j)
        for (int i = 0; i < l; ++i) {
            Rat scaled = coords[j][i] * Rat(den);
            g.at(i, int(j)) = scaled.get_num();
        }
    IntMat nid(int(coords.size()), int(coords.size()));
    for (int j = 0; j < int(coords.size()); ++j) nid.at(j, j) = den;
    IntMat ker = coords.empty() ? IntMat::identity(l) : left_kernel(g.stack(nid));
    std::vector<Vec> gens;
    for (int i = 0; i < ker.rows(); ++i) {
        Vec x(l);
        for (int j = 0; j < l; ++j) x[j] = ker.at(i, j);
        gens.push_back(x);
    }
    return LatticeBasis(l, gens);
}

}  // namespace covlat
