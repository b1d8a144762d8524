#include "covlat/intlat.hpp"

#include <algorithm>
#include <sstream>

namespace covlat {

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int floor_mod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Int& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw compute_error("dot: size mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec vec_zero(int n) { return Vec(size_t(n), Int(0)); }

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<Vec>& rows, int cols) {
    IntMat m(int(rows.size()), cols);
    for (int i = 0; i < int(rows.size()); ++i) {
        if (int(rows[i].size()) != cols) throw compute_error("from_rows: ragged input");
        m.set_row(i, rows[i]);
    }
    return m;
}

Vec IntMat::row(int i) const {
    Vec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

void IntMat::set_row(int i, const Vec& v) {
    for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

IntMat IntMat::transpose() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMat IntMat::mul(const IntMat& o) const {
    if (cols_ != o.rows_) throw compute_error("mul: shape mismatch");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

Vec IntMat::mul_vec_left(const Vec& x) const {
    if (int(x.size()) != rows_) throw compute_error("mul_vec_left: shape mismatch");
    Vec r(cols_, Int(0));
    for (int i = 0; i < rows_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < cols_; ++j) r[j] += x[i] * at(i, j);
    }
    return r;
}

IntMat IntMat::stack(const IntMat& below) const {
    if (cols_ != below.cols_) throw compute_error("stack: column mismatch");
    IntMat r(rows_ + below.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < below.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = below.at(i, j);
    return r;
}

bool IntMat::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

std::string IntMat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j);
        }
    }
    os << "]";
    return os.str();
}

namespace {

void row_swap(IntMat& m, int i, int j) {
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}

void row_axpy(IntMat& m, int dst, int src, const Int& c) {
    if (c == 0) return;
    for (int k = 0; k < m.cols(); ++k) m.at(dst, k) += c * m.at(src, k);
}

void row_negate(IntMat& m, int i) {
    for (int k = 0; k < m.cols(); ++k) m.at(i, k) = -m.at(i, k);
}

void col_swap(IntMat& m, int i, int j) {
    for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
}

void col_axpy(IntMat& m, int dst, int src, const Int& c) {
    if (c == 0) return;
    for (int r = 0; r < m.rows(); ++r) m.at(r, dst) += c * m.at(r, src);
}

void col_negate(IntMat& m, int i) {
    for (int r = 0; r < m.rows(); ++r) m.at(r, i) = -m.at(r, i);
}

}  // namespace

HnfResult hnf(const IntMat& m) {
    HnfResult res{m, IntMat::identity(m.rows()), 0};
    IntMat& h = res.h;
    IntMat& u = res.u;
    int pr = 0;
    for (int col = 0; col < h.cols() && pr < h.rows(); ++col) {
        // collapse column entries at rows >= pr to a single gcd at row pr
        for (;;) {
            int best = -1;
            for (int i = pr; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                if (best < 0 || cmp(abs(h.at(i, col)), abs(h.at(best, col))) < 0) best = i;
            }
            if (best < 0) break;
            if (best != pr) {
                row_swap(h, pr, best);
                row_swap(u, pr, best);
            }
            bool again = false;
            for (int i = pr + 1; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                Int q = floor_div(h.at(i, col), h.at(pr, col));
                row_axpy(h, i, pr, -q);
                row_axpy(u, i, pr, -q);
                if (h.at(i, col) != 0) again = true;
            }
            if (!again) break;
        }
        if (h.at(pr, col) == 0) continue;
        if (h.at(pr, col) < 0) {
            row_negate(h, pr);
            row_negate(u, pr);
        }
        for (int i = 0; i < pr; ++i) {
            Int q = floor_div(h.at(i, col), h.at(pr, col));
            row_axpy(h, i, pr, -q);
            row_axpy(u, i, pr, -q);
        }
        ++pr;
    }
    res.rank = pr;
    return res;
}

std::vector<Int> SnfResult::diagonal() const {
    std::vector<Int> out;
    int n = std::min(d.rows(), d.cols());
    for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
}

namespace {

bool is_diagonal(const IntMat& d) {
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            if (i != j && d.at(i, j) != 0) return false;
    return true;
}

// inverse of a unimodular matrix: the canonical HNF is the identity, so the
// transform is the inverse
IntMat unimodular_inverse(const IntMat& a) {
    HnfResult r = hnf(a);
    if (!(r.h == IntMat::identity(a.rows()))) throw compute_error("unimodular_inverse: not unimodular");
    return r.u;
}

}  // namespace

SnfResult snf(const IntMat& m) {
    SnfResult res;
    res.d = m;
    res.u = IntMat::identity(m.rows());
    res.v = IntMat::identity(m.cols());
    IntMat& d = res.d;

    // alternate row and column HNF passes; entries stay reduced throughout
    for (int pass = 0;; ++pass) {
        if (pass > 1000) throw compute_error("snf: no convergence");
        HnfResult hr = hnf(d);
        d = hr.h;
        res.u = hr.u.mul(res.u);
        HnfResult hc = hnf(d.transpose());
        d = hc.h.transpose();
        res.v = res.v.mul(hc.u.transpose());
        if (is_diagonal(d)) break;
    }

    int n = std::min(d.rows(), d.cols());
    auto dswap = [&](int i, int j) {
        row_swap(d, i, j);
        row_swap(res.u, i, j);
        col_swap(d, i, j);
        col_swap(res.v, i, j);
    };
    // push zero diagonal entries to the end, then enforce the divisor chain
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i + 1 < n; ++i) {
            Int a = d.at(i, i), b = d.at(i + 1, i + 1);
            if (a == 0 && b != 0) {
                dswap(i, i + 1);
                changed = true;
                continue;
            }
            if (a == 0 || b == 0) continue;
            if (floor_mod(b, a) == 0) continue;
            // [[a,0],[0,b]] -> [[g,0],[0, ab/g]] by the standard 2x2 move
            Int g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            // row_i += row_{i+1}
            row_axpy(d, i, i + 1, Int(1));
            row_axpy(res.u, i, i + 1, Int(1));
            // columns (i, i+1) *= [[x, -b/g],[y, a/g]]
            IntMat cmix(2, 2);
            cmix.at(0, 0) = x;
            cmix.at(0, 1) = -(b / g);
            cmix.at(1, 0) = y;
            cmix.at(1, 1) = a / g;
            for (IntMat* target : {&d, &res.v}) {
                for (int r2 = 0; r2 < target->rows(); ++r2) {
                    Int c0 = target->at(r2, i), c1 = target->at(r2, i + 1);
                    target->at(r2, i) = c0 * cmix.at(0, 0) + c1 * cmix.at(1, 0);
                    target->at(r2, i + 1) = c0 * cmix.at(0, 1) + c1 * cmix.at(1, 1);
                }
            }
            // clear the leftover below-diagonal entry
            Int lever = d.at(i + 1, i);
            Int q = lever / g;
            row_axpy(d, i + 1, i, -q);
            row_axpy(res.u, i + 1, i, -q);
            if (d.at(i + 1, i) != 0) throw compute_error("snf: chain fix failed");
            if (d.at(i, i) < 0) {
                row_negate(d, i);
                row_negate(res.u, i);
            }
            if (d.at(i + 1, i + 1) < 0) {
                row_negate(d, i + 1);
                row_negate(res.u, i + 1);
            }
            changed = true;
        }
    }
    res.rank = 0;
    for (int i = 0; i < n; ++i)
        if (d.at(i, i) != 0) ++res.rank;
    res.uinv = unimodular_inverse(res.u);
    res.vinv = unimodular_inverse(res.v);
    return res;
}

IntMat left_kernel(const IntMat& m) {
    HnfResult r = hnf(m);
    std::vector<Vec> rows;
    for (int i = r.rank; i < r.h.rows(); ++i) rows.push_back(r.u.row(i));
    return IntMat::from_rows(rows, m.rows());
}

Int det(const IntMat& m) {
    if (m.rows() != m.cols()) throw compute_error("det: not square");
    SnfResult s = snf(m);
    Int p = 1;
    for (int i = 0; i < m.rows(); ++i) p *= s.d.at(i, i);
    // snf normalizes signs, so this is |det|; recover the sign from u, v
    // determinants only when needed. Lattice indices only use |det|.
    return p;
}

LatticeBasis::LatticeBasis(int ambient_rank, const std::vector<Vec>& generators) : ambient_(ambient_rank) {
    IntMat g = IntMat::from_rows(generators, ambient_rank);
    HnfResult r = hnf(g);
    std::vector<Vec> rows;
    for (int i = 0; i < r.rank; ++i) rows.push_back(r.h.row(i));
    basis_ = IntMat::from_rows(rows, ambient_rank);
}

LatticeBasis LatticeBasis::full(int ambient_rank) {
    LatticeBasis l(ambient_rank);
    l.basis_ = IntMat::identity(ambient_rank);
    return l;
}

std::optional<Vec> LatticeBasis::coordinates(const Vec& v) const {
    if (int(v.size()) != ambient_) throw compute_error("coordinates: rank mismatch");
    // back substitution against the HNF rows
    Vec rem = v;
    Vec x(rank(), Int(0));
    for (int i = 0; i < rank(); ++i) {
        int p = 0;
        while (p < ambient_ && basis_.at(i, p) == 0) ++p;
        if (p == ambient_) continue;
        Int q = rem[p] / basis_.at(i, p);
        if (rem[p] % basis_.at(i, p) != 0) return std::nullopt;
        x[i] = q;
        for (int j = 0; j < ambient_; ++j) rem[j] -= q * basis_.at(i, j);
    }
    for (int j = 0; j < ambient_; ++j)
        if (rem[j] != 0) return std::nullopt;
    return x;
}

bool LatticeBasis::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool LatticeBasis::contains(const LatticeBasis& other) const {
    for (int i = 0; i < other.rank(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

Int LatticeBasis::index_of(const LatticeBasis& sub) const {
    if (sub.rank() != rank()) throw compute_error("index_of: rank mismatch");
    std::vector<Vec> coords;
    for (int i = 0; i < sub.rank(); ++i) {
        auto c = coordinates(sub.basis_vector(i));
        if (!c) throw compute_error("index_of: not a sublattice");
        coords.push_back(*c);
    }
    return abs(det(IntMat::from_rows(coords, rank())));
}

std::string LatticeBasis::str() const {
    std::ostringstream os;
    os << "lattice(rank " << rank() << " in Z^" << ambient_ << ": " << basis_.str() << ")";
    return os.str();
}

LatticeBasis lattice_sum(const LatticeBasis& a, const LatticeBasis& b) {
    if (a.ambient_rank() != b.ambient_rank()) throw compute_error("lattice_sum: ambient mismatch");
    std::vector<Vec> gens;
    for (int i = 0; i < a.rank(); ++i) gens.push_back(a.basis_vector(i));
    for (int i = 0; i < b.rank(); ++i) gens.push_back(b.basis_vector(i));
    return LatticeBasis(a.ambient_rank(), gens);
}

LatticeBasis lattice_intersect(const LatticeBasis& a, const LatticeBasis& b) {
    if (a.ambient_rank() != b.ambient_rank()) throw compute_error("lattice_intersect: ambient mismatch");
    if (a.rank() == 0 || b.rank() == 0) return LatticeBasis::zero(a.ambient_rank());
    // kernel of (x, y) -> x*A - y*B; the x parts span the intersection
    IntMat negb(b.rank(), b.ambient_rank());
    for (int i = 0; i < b.rank(); ++i)
        for (int j = 0; j < b.ambient_rank(); ++j) negb.at(i, j) = -b.basis().at(i, j);
    IntMat stacked = a.basis().stack(negb);
    IntMat ker = left_kernel(stacked);
    std::vector<Vec> gens;
    for (int i = 0; i < ker.rows(); ++i) {
        Vec x(a.rank());
        for (int j = 0; j < a.rank(); ++j) x[j] = ker.at(i, j);
        gens.push_back(a.basis().mul_vec_left(x));
    }
    return LatticeBasis(a.ambient_rank(), gens);
}

LatticeBasis lattice_scale(const Int& c, const LatticeBasis& a) {
    std::vector<Vec> gens;
    for (int i = 0; i < a.rank(); ++i) gens.push_back(vec_scale(c, a.basis_vector(i)));
    return LatticeBasis(a.ambient_rank(), gens);
}

LatticeBasis saturation(const LatticeBasis& l, const LatticeBasis& ambient) {
    if (!ambient.contains(l)) throw compute_error("saturation: not a sublattice of ambient");
    if (l.rank() == 0) return LatticeBasis::zero(l.ambient_rank());
    // right kernel of the basis, then the annihilator of that kernel
    IntMat kt = left_kernel(l.basis().transpose());  // rows w with A w^T = 0
    LatticeBasis sat_full = LatticeBasis::full(l.ambient_rank());
    if (kt.rows() > 0) {
        IntMat ker_cols = kt.transpose();  // ambient x s
        IntMat ann = left_kernel(ker_cols);
        std::vector<Vec> rows;
        for (int i = 0; i < ann.rows(); ++i) rows.push_back(ann.row(i));
        sat_full = LatticeBasis(l.ambient_rank(), rows);
    }
    return lattice_intersect(sat_full, ambient);
}

LatticeBasis orthogonal_sublattice(const LatticeBasis& l, const IntMat& b, const Int& n,
                                   const LatticeBasis& target) {
    if (b.rows() != l.ambient_rank() || b.cols() != l.ambient_rank())
        throw compute_error("orthogonal_sublattice: form shape mismatch");
    if (!(b == b.transpose())) throw compute_error("orthogonal_sublattice: form is not symmetric");
    if (target.ambient_rank() != l.ambient_rank())
        throw compute_error("orthogonal_sublattice: ambient mismatch");
    if (n <= 0) throw compute_error("orthogonal_sublattice: n must be positive");
    if (l.rank() == 0 || target.rank() == 0) return l;
    // conditions on coefficient vectors x: x * (A b C^T) == 0 mod n
    IntMat g = l.basis().mul(b).mul(target.basis().transpose());  // k x j
    IntMat nid(g.cols(), g.cols());
    for (int j = 0; j < g.cols(); ++j) nid.at(j, j) = n;
    IntMat ker = left_kernel(g.stack(nid));
    std::vector<Vec> gens;
    for (int i = 0; i < ker.rows(); ++i) {
        Vec x(l.rank());
        bool nonzero = false;
        for (int j = 0; j < l.rank(); ++j) {
            x[j] = ker.at(i, j);
            if (x[j] != 0) nonzero = true;
        }
        if (nonzero) gens.push_back(l.basis().mul_vec_left(x));
    }
    if (gens.empty()) return LatticeBasis::zero(l.ambient_rank());
    return LatticeBasis(l.ambient_rank(), gens);
}

FinAbGroup quotient(const LatticeBasis& big, const LatticeBasis& small) {
    if (!big.contains(small)) throw compute_error("quotient: not a sublattice");
    FinAbGroup g;
    g.big_ = big;
    g.small_ = small;
    g.k_ = big.rank();
    std::vector<Vec> coords;
    for (int i = 0; i < small.rank(); ++i) coords.push_back(*big.coordinates(small.basis_vector(i)));
    IntMat a = small.rank() ? IntMat::from_rows(coords, big.rank()) : IntMat(0, big.rank());
    SnfResult s = snf(a);
    g.v_ = s.v;
    g.vinv_ = s.vinv;
    g.free_rank_ = big.rank() - s.rank;
    g.full_diag_.assign(size_t(big.rank()), Int(0));
    for (int i = 0; i < s.rank; ++i) g.full_diag_[i] = s.d.at(i, i);
    for (int i = 0; i < s.rank; ++i) {
        if (g.full_diag_[i] > 1) {
            g.factors_.push_back(g.full_diag_[i]);
            g.factor_pos_.push_back(i);
        }
    }
    return g;
}

Int FinAbGroup::order() const {
    if (free_rank_ > 0) return 0;
    Int p = 1;
    for (const auto& d : factors_) p *= d;
    return p;
}

FinAbElt FinAbGroup::project(const Vec& ambient_vector) const {
    auto y = big_.coordinates(ambient_vector);
    if (!y) throw compute_error("project: vector outside the big lattice");
    // transformed coordinates y' = y * V diagonalize the sublattice
    Vec yp = v_.rows() ? IntMat(v_).mul_vec_left(*y) : *y;
    FinAbElt e;
    for (size_t f = 0; f < factors_.size(); ++f) e.coords.push_back(floor_mod(yp[factor_pos_[f]], factors_[f]));
    for (int i = k_ - free_rank_; i < k_; ++i) e.coords.push_back(yp[i]);
    return e;
}

Vec FinAbGroup::lift(const FinAbElt& e) const {
    if (int(e.coords.size()) != int(factors_.size()) + free_rank_) throw compute_error("lift: arity mismatch");
    Vec yp(size_t(k_), Int(0));
    for (size_t f = 0; f < factors_.size(); ++f) yp[factor_pos_[f]] = e.coords[f];
    for (int i = 0; i < free_rank_; ++i) yp[k_ - free_rank_ + i] = e.coords[factors_.size() + i];
    Vec y = vinv_.rows() ? IntMat(vinv_).mul_vec_left(yp) : yp;
    return big_.basis().mul_vec_left(y);
}

FinAbElt FinAbGroup::zero() const {
    FinAbElt e;
    e.coords.assign(factors_.size() + size_t(free_rank_), Int(0));
    return e;
}

FinAbElt FinAbGroup::add(const FinAbElt& a, const FinAbElt& b) const {
    FinAbElt e = zero();
    for (size_t f = 0; f < factors_.size(); ++f) e.coords[f] = floor_mod(a.coords[f] + b.coords[f], factors_[f]);
    for (size_t i = factors_.size(); i < e.coords.size(); ++i) e.coords[i] = a.coords[i] + b.coords[i];
    return e;
}

FinAbElt FinAbGroup::neg(const FinAbElt& a) const {
    FinAbElt e = zero();
    for (size_t f = 0; f < factors_.size(); ++f) e.coords[f] = floor_mod(-a.coords[f], factors_[f]);
    for (size_t i = factors_.size(); i < e.coords.size(); ++i) e.coords[i] = -a.coords[i];
    return e;
}

FinAbElt FinAbGroup::scale(const Int& c, const FinAbElt& a) const {
    FinAbElt e = zero();
    for (size_t f = 0; f < factors_.size(); ++f) e.coords[f] = floor_mod(c * a.coords[f], factors_[f]);
    for (size_t i = factors_.size(); i < e.coords.size(); ++i) e.coords[i] = c * a.coords[i];
    return e;
}

Int FinAbGroup::element_order(const FinAbElt& a) const {
    for (size_t i = factors_.size(); i < a.coords.size(); ++i)
        if (a.coords[i] != 0) return 0;
    Int o = 1;
    for (size_t f = 0; f < factors_.size(); ++f) {
        if (a.coords[f] == 0) continue;
        Int d = factors_[f];
        o = lcm(o, d / gcd(d, a.coords[f]));
    }
    return o;
}

std::vector<FinAbElt> FinAbGroup::elements(const Int& cap) const {
    if (free_rank_ > 0) throw compute_error("elements: group is infinite");
    if (order() > cap) throw compute_error("elements: cap exceeded");
    std::vector<FinAbElt> out;
    FinAbElt cur = zero();
    for (;;) {
        out.push_back(cur);
        size_t f = factors_.size();
        while (f > 0) {
            --f;
            cur.coords[f] += 1;
            if (cur.coords[f] < factors_[f]) break;
            cur.coords[f] = 0;
            if (f == 0) return out;
        }
        if (factors_.empty()) return out;
    }
}

std::vector<Vec> FinAbGroup::adapted_basis() const {
    std::vector<Vec> rows;
    for (int i = 0; i < k_; ++i) rows.push_back(big_.basis().mul_vec_left(vinv_.row(i)));
    return rows;
}

std::string FinAbGroup::factors_str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << ",";
        os << factors_[i];
    }
    os << ")";
    if (free_rank_ > 0) os << " + Z^" << free_rank_;
    return os.str();
}

void QLattice::normalize() {
    if (den < 0) {
        den = -den;
        num = lattice_scale(Int(-1), num);  // no-op on HNF, kept for clarity
    }
    if (den == 0) throw compute_error("QLattice: zero denominator");
    Int g = den;
    for (int i = 0; i < num.rank() && g > 1; ++i)
        for (int j = 0; j < num.ambient_rank() && g > 1; ++j) g = gcd(g, num.basis().at(i, j));
    if (g > 1) {
        std::vector<Vec> rows;
        for (int i = 0; i < num.rank(); ++i) {
            Vec r = num.basis_vector(i);
            for (auto& x : r) x /= g;
            rows.push_back(r);
        }
        num = LatticeBasis(num.ambient_rank(), rows);
        den /= g;
    }
}

bool QLattice::contains(const QLattice& other) const {
    // (1/d1) L1 contains (1/d2) L2 iff d1 L2' ... scale both by d1*d2
    return lattice_scale(den, other.num).rank() == 0 ||
           lattice_scale(other.den, num).contains(lattice_scale(den, other.num));
}

std::string QLattice::str() const {
    std::ostringstream os;
    os << "(1/" << den << ")*" << num.str();
    return os.str();
}

QLattice qlattice_sum(const QLattice& a, const QLattice& b) {
    Int s = lcm(a.den, b.den);
    return QLattice(s, lattice_sum(lattice_scale(s / a.den, a.num), lattice_scale(s / b.den, b.num)));
}

QLattice qlattice_intersect(const QLattice& a, const QLattice& b) {
    Int s = lcm(a.den, b.den);
    return QLattice(s, lattice_intersect(lattice_scale(s / a.den, a.num), lattice_scale(s / b.den, b.num)));
}

QLattice qlattice_span_intersect(const QLattice& a, const QLattice& s) {
    // the span is scale independent; its primitive lattice contains every
    // integer vector of the span, so intersecting the numerators suffices
    if (s.num.rank() == 0) return QLattice(Int(1), LatticeBasis::zero(a.ambient_rank()));
    IntMat kt = left_kernel(s.num.basis().transpose());
    if (kt.rows() == 0) return a;
    IntMat ann = left_kernel(kt.transpose());
    std::vector<Vec> rows;
    for (int i = 0; i < ann.rows(); ++i) rows.push_back(ann.row(i));
    LatticeBasis span_lat(a.ambient_rank(), rows);  // primitive lattice of the span
    return QLattice(a.den, lattice_intersect(a.num, span_lat));
}

QLattice qlattice_dual(const QLattice& l) {
    int n = l.ambient_rank();
    if (l.num.rank() != n) throw compute_error("qlattice_dual: full rank required");
    // dual of (1/d) L is d * dual(L); dual(L) rows = (L^-1)^T = adj(L)^T / det
    IntMat b = l.num.basis();
    SnfResult s = snf(b);
    // b = uinv d vinv ; b^-1 = v dinv u ; dual rows = columns of b^-1 scaled
    Int dd = 1;
    for (int i = 0; i < n; ++i) dd *= s.d.at(i, i);
    // rows of dual basis: (b^{-1})^T = (v d^{-1} u)^T; use exact: dd * b^{-1} = v * (dd * d^{-1}) * u
    IntMat mid(n, n);
    for (int i = 0; i < n; ++i) mid.at(i, i) = dd / s.d.at(i, i);
    IntMat inv_scaled = s.v.mul(mid).mul(s.u);  // dd * b^{-1}
    IntMat dualrows = inv_scaled.transpose();
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i) rows.push_back(dualrows.row(i));
    return QLattice(dd / l.den, LatticeBasis(n, rows));
}

FinAbGroup qlattice_quotient(const QLattice& big, const QLattice& small) {
    Int s = lcm(big.den, small.den);
    return quotient(lattice_scale(s / big.den, big.num), lattice_scale(s / small.den, small.num));
}

}  // namespace covlat
