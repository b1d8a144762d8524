#pragma once

#include "covlat/whittaker.hpp"

#include <map>

namespace covlat {

/// ExactScalar-linear combination of products of formal Gauss symbols g(k),
/// k in Z/n nonzero. Normal form rewrites every pair g(k) g(-k) to
/// eps^k q^{-1}; g(k) with n | k is the number -q^{-1}, never a symbol.
class GaussScalar {
  public:
    GaussScalar() = default;
    GaussScalar(long n, long modulus, int epsilon);
    static GaussScalar from_exact(long n, int epsilon, const ExactScalar& s);
    // g_psi(k); collapses to -q^{-1} when n | k
    static GaussScalar symbol(long n, long modulus, int epsilon, const Int& k);
    // g_{psi^{-1}}(k) = eps^k g_psi(k); -q^{-1} when n | k
    static GaussScalar symbol_psi_inv(long n, long modulus, int epsilon, const Int& k);

    long degree() const { return n_; }
    bool is_zero() const;

    GaussScalar operator+(const GaussScalar& o) const;
    GaussScalar operator-(const GaussScalar& o) const;
    GaussScalar operator*(const GaussScalar& o) const;
    GaussScalar operator-() const;
    GaussScalar scale(const ExactScalar& s) const;
    bool operator==(const GaussScalar& o) const;

    GaussScalar conj() const;  // bar g(k) = eps^k g(-k), coefficients conjugated

    // the value as an ExactScalar when no symbols remain
    std::optional<ExactScalar> as_exact() const;
    bool symbol_free() const { return as_exact().has_value(); }

    std::string str() const;

  private:
    long n_ = 1;
    long modulus_ = 4;
    int epsilon_ = 1;
    std::map<std::vector<long>, ExactScalar> terms_;  // sorted symbol args in [1, n-1]
    void add_term(std::vector<long> key, const ExactScalar& coeff);
    void prune();
};

// The conductor-p Gauss sum table G_psi(a, b).
GaussScalar gauss(long n, long modulus, int epsilon, const Int& a, const Int& b);

// tau(w_alpha, chi, s_{y1}, s_y) against the congruence lattice of chi:
// tau^1 supported on y1 ≡ y, tau^2 on y1 ≡ w_alpha(y); both on a fixed point.
GaussScalar tau_entry(const GenuineCharacter& chi, int simple_index, const Vec& y1, const Vec& y);

struct ScatteringMatrix {
    GenuineCharacter chi;
    std::vector<int> word;  // Weyl word (usually a single simple reflection)
    std::vector<Vec> reps;  // fixed representatives of carrier / lattice
    std::vector<std::vector<GaussScalar>> entries;
    std::vector<std::vector<int>> blocks;  // indices of {y, w(y)} classes

    int size() const { return int(reps.size()); }
    GaussScalar trace() const;
};

// Matrix of tau(w_alpha, chi) over canonical representatives of
// carrier / lattice(chi); carrier is Y for the full quotient or Y_0.
ScatteringMatrix scattering_matrix(const CoverDatum& c, const GenuineCharacter& chi,
                                   int simple_index, WhichQuotient which);

// Cocycle contraction: entries of tau(w2 w1) from tau(w2, {}^{w1}chi) and
// tau(w1, chi). Checks length additivity.
ScatteringMatrix compose(const RootDatum& d, const ScatteringMatrix& m2, const ScatteringMatrix& m1);

// Matrix for a reduced word, built by the cocycle relation.
ScatteringMatrix scattering_matrix_word(const CoverDatum& c, const GenuineCharacter& chi,
                                        const std::vector<int>& word, WhichQuotient which);

// (dim + rho_sign * gamma * trace)/2; must reduce to a nonnegative integer.
Int sigma_wh_multiplicity(const ScatteringMatrix& m, const ExactScalar& gamma, int rho_sign);

struct BlockDetRank {
    GaussScalar det;
    int rank = 0;        // -1 when undecided
    bool decided = true;
};

BlockDetRank block_det_rank(const ScatteringMatrix& m, const std::vector<int>& block);

// product of two scattering matrices with the same representatives
std::vector<std::vector<GaussScalar>> matrix_product(const ScatteringMatrix& a,
                                                     const ScatteringMatrix& b);

}  // namespace covlat
