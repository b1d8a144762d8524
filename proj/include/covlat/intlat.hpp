#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace covlat {

using Int = mpz_class;
using Rat = mpq_class;

using Vec = std::vector<Int>;
using QVec = std::vector<Rat>;

struct compute_error : std::runtime_error {
    explicit compute_error(const std::string& what) : std::runtime_error(what) {}
};

Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Int& c, const Vec& a);
Int dot(const Vec& a, const Vec& b);
Vec vec_zero(int n);
std::string vec_str(const Vec& v);

/// Dense matrix of arbitrary-precision integers, row major.
class IntMat {
  public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
    static IntMat identity(int n);
    static IntMat from_rows(const std::vector<Vec>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    Vec row(int i) const;
    void set_row(int i, const Vec& v);

    IntMat transpose() const;
    IntMat mul(const IntMat& other) const;
    Vec mul_vec_left(const Vec& x) const;  // x * M
    IntMat stack(const IntMat& below) const;
    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool is_zero() const;
    std::string str() const;

  private:
    int rows_, cols_;
    std::vector<Int> e_;
};

struct HnfResult {
    IntMat h;  // row Hermite normal form of the input
    IntMat u;  // unimodular, u * m == h
    int rank = 0;
};

// Canonical row HNF: positive pivots, entries above a pivot reduced into
// [0, pivot), pivot columns strictly increasing, zero rows at the bottom.
HnfResult hnf(const IntMat& m);

struct SnfResult {
    IntMat d;     // diagonal, d1 | d2 | ..., nonnegative
    IntMat u, v;  // unimodular, u * m * v == d
    IntMat uinv, vinv;
    int rank = 0;
    std::vector<Int> diagonal() const;
};

SnfResult snf(const IntMat& m);

// Rows x with x * m == 0.
IntMat left_kernel(const IntMat& m);

Int det(const IntMat& m);  // square only

/// A sublattice of a fixed ambient Z^rank, stored by its canonical HNF basis.
/// Two values represent the same lattice iff they compare equal.
class LatticeBasis {
  public:
    LatticeBasis() : ambient_(0) {}
    explicit LatticeBasis(int ambient_rank) : ambient_(ambient_rank), basis_(0, ambient_rank) {}
    LatticeBasis(int ambient_rank, const std::vector<Vec>& generators);
    static LatticeBasis full(int ambient_rank);
    static LatticeBasis zero(int ambient_rank) { return LatticeBasis(ambient_rank); }

    int ambient_rank() const { return ambient_; }
    int rank() const { return basis_.rows(); }
    const IntMat& basis() const { return basis_; }
    Vec basis_vector(int i) const { return basis_.row(i); }

    bool operator==(const LatticeBasis& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool operator!=(const LatticeBasis& o) const { return !(*this == o); }

    bool contains(const Vec& v) const;
    bool contains(const LatticeBasis& other) const;
    // Coordinates of v in the canonical basis; nullopt when v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;

    // [this : sub] for a finite-index sublattice (equal ranks required).
    Int index_of(const LatticeBasis& sub) const;

    std::string str() const;

  private:
    int ambient_;
    IntMat basis_;
};

LatticeBasis lattice_sum(const LatticeBasis& a, const LatticeBasis& b);
LatticeBasis lattice_intersect(const LatticeBasis& a, const LatticeBasis& b);
LatticeBasis lattice_scale(const Int& c, const LatticeBasis& a);

// ambient ∩ (rational span of l); requires l ⊆ ambient.
LatticeBasis saturation(const LatticeBasis& l, const LatticeBasis& ambient);

// { y in l : b(y, m) in n Z for every m in target }, b a symmetric form on the
// common ambient lattice.
LatticeBasis orthogonal_sublattice(const LatticeBasis& l, const IntMat& b, const Int& n,
                                   const LatticeBasis& target);

/// Element of a finite abelian group presented by a FinAbGroup: residues per
/// invariant factor followed by free coordinates.
struct FinAbElt {
    std::vector<Int> coords;
    bool operator==(const FinAbElt& o) const { return coords == o.coords; }
    bool operator<(const FinAbElt& o) const { return coords < o.coords; }
};

/// big/small lattice quotient with invariant factors d1 | d2 | ... (each >= 2)
/// plus a free rank, and exact project/lift maps from/to ambient vectors.
class FinAbGroup {
  public:
    FinAbGroup() = default;

    const std::vector<Int>& invariant_factors() const { return factors_; }
    int free_rank() const { return free_rank_; }
    Int order() const;  // 0 when free_rank > 0
    bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }

    FinAbElt project(const Vec& ambient_vector) const;
    Vec lift(const FinAbElt& e) const;

    FinAbElt zero() const;
    FinAbElt add(const FinAbElt& a, const FinAbElt& b) const;
    FinAbElt neg(const FinAbElt& a) const;
    FinAbElt scale(const Int& c, const FinAbElt& a) const;
    Int element_order(const FinAbElt& a) const;

    // All elements in deterministic (lexicographic) order; finite groups only,
    // guarded by cap.
    std::vector<FinAbElt> elements(const Int& cap = Int(1000000)) const;

    const LatticeBasis& big() const { return big_; }
    const LatticeBasis& small() const { return small_; }

    // Basis of the big lattice adapted to the sublattice: row i scaled by the
    // i-th SNF diagonal entry lands in the small lattice.
    std::vector<Vec> adapted_basis() const;
    const std::vector<Int>& full_diagonal() const { return full_diag_; }

    std::string factors_str() const;

    friend FinAbGroup quotient(const LatticeBasis& big, const LatticeBasis& small);

  private:
    LatticeBasis big_, small_;
    std::vector<Int> factors_;      // invariant factors >= 2
    std::vector<int> factor_pos_;   // positions of those factors in the SNF diagonal
    std::vector<Int> full_diag_;    // entire SNF diagonal (including 1s)
    int free_rank_ = 0;
    int k_ = 0;  // rank of big lattice
    IntMat v_, vinv_;
};

FinAbGroup quotient(const LatticeBasis& big, const LatticeBasis& small);

/// Lattice with a denominator: represents (1/den) * num inside Q^rank.
struct QLattice {
    Int den = 1;
    LatticeBasis num;

    QLattice() = default;
    QLattice(Int d, LatticeBasis l) : den(std::move(d)), num(std::move(l)) { normalize(); }
    static QLattice integral(const LatticeBasis& l) { return QLattice(Int(1), l); }

    int ambient_rank() const { return num.ambient_rank(); }
    void normalize();
    bool operator==(const QLattice& o) const { return den == o.den && num == o.num; }
    bool contains(const QLattice& other) const;
    std::string str() const;
};

QLattice qlattice_sum(const QLattice& a, const QLattice& b);
QLattice qlattice_intersect(const QLattice& a, const QLattice& b);
// Intersection with the rational span of s.
QLattice qlattice_span_intersect(const QLattice& a, const QLattice& s);
// Z-dual { x : <x, l> in Z } of a full-rank lattice, coordinates in the
// standard dual basis.
QLattice qlattice_dual(const QLattice& l);
FinAbGroup qlattice_quotient(const QLattice& big, const QLattice& small);

}  // namespace covlat
