#pragma once

#include "covlat/intlat.hpp"

namespace covlat {

// Coefficients of the N-th cyclotomic polynomial (monic, degree phi(N)).
const std::vector<Int>& cyclotomic_poly(long n);
long euler_phi(long n);

/// Element of Q(zeta_N): polynomial in zeta of degree < phi(N), reduced mod
/// the N-th cyclotomic polynomial.
class CycRat {
  public:
    CycRat() : n_(1) { c_.assign(1, Rat(0)); }
    CycRat(long n, Rat constant);
    static CycRat zeta_pow(long n, long j);

    long modulus() const { return n_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_part() const;  // requires is_rational

    CycRat operator+(const CycRat& o) const;
    CycRat operator-(const CycRat& o) const;
    CycRat operator*(const CycRat& o) const;
    CycRat operator-() const;
    CycRat inverse() const;
    bool operator==(const CycRat& o) const;

    CycRat conj() const;  // zeta -> zeta^{-1}

    // j with *this == zeta^j, if the value is a root of unity of that shape
    std::optional<long> as_zeta_power() const;

    std::string str() const;

    const std::vector<Rat>& coeffs() const { return c_; }

  private:
    long n_;
    std::vector<Rat> c_;  // size phi(n_)
    void reduce(std::vector<Rat>& poly) const;
    static void check_same(const CycRat& a, const CycRat& b);
};

/// Element of the fraction field Q(zeta_N)(v), with q := v^2. Values are kept
/// in normal form: reduced fraction, monic denominator. Negative powers of v
/// live in the denominator.
class ExactScalar {
  public:
    ExactScalar() : n_(1) {}
    static ExactScalar from_rat(long n, Rat r);
    static ExactScalar from_int(long n, long k) { return from_rat(n, Rat(k)); }
    static ExactScalar zeta_pow(long n, long j);
    static ExactScalar v_pow(long n, long c);
    static ExactScalar q_pow(long n, long k) { return v_pow(n, 2 * k); }
    static ExactScalar monomial(long n, long j, long c);  // zeta^j v^c

    long modulus() const { return n_; }
    bool is_zero() const;
    bool is_one() const;

    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar operator/(const ExactScalar& o) const;
    ExactScalar operator-() const;
    ExactScalar inverse() const;
    ExactScalar pow(const Int& e) const;
    bool operator==(const ExactScalar& o) const;
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    // zeta -> zeta^{-1}, v fixed (v stands for a positive real q^{1/2})
    ExactScalar conj() const;

    // (j, c) with *this == zeta^j v^c
    std::optional<std::pair<long, long>> as_monomial() const;
    std::optional<Rat> as_rational() const;

    std::string str() const;

  private:
    long n_ = 1;
    std::vector<CycRat> num_, den_;  // polynomials in v; den_ monic, normal form
    void normalize();
    static void check_same(const ExactScalar& a, const ExactScalar& b);
};

}  // namespace covlat
