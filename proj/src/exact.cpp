#include "covlat/exact.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace covlat {

namespace {

// exact division of integer polynomials, used for x^n - 1 over the product of
// lower cyclotomics
std::vector<Int> poly_div_exact(std::vector<Int> a, const std::vector<Int>& b) {
    std::vector<Int> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
    while (a.size() >= b.size()) {
        Int lead = a.back() / b.back();
        if (a.back() % b.back() != 0) throw compute_error("poly_div_exact: not divisible");
        size_t shift = a.size() - b.size();
        q[shift] = lead;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
        if (a.size() < b.size() && !a.empty()) throw compute_error("poly_div_exact: remainder");
    }
    if (!a.empty()) throw compute_error("poly_div_exact: remainder");
    return q;
}

std::vector<Int> poly_mul_int(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace

long euler_phi(long n) {
    long r = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        r -= r / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) r -= r / m;
    return r;
}

const std::vector<Int>& cyclotomic_poly(long n) {
    static std::map<long, std::vector<Int>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Int> num(size_t(n) + 1, Int(0));
    num[0] = -1;
    num[size_t(n)] = 1;  // x^n - 1
    std::vector<Int> denom{Int(1)};
    for (long d = 1; d < n; ++d) {
        if (n % d) continue;
        // recursion is shallow; compute lower ones first without the lock
        // being re-entered: unlocked helper below
        std::vector<Int> low;
        auto jt = cache.find(d);
        if (jt != cache.end()) {
            low = jt->second;
        } else {
            // inline computation for divisors (n <= a few hundred here)
            std::vector<Int> nd(size_t(d) + 1, Int(0));
            nd[0] = -1;
            nd[size_t(d)] = 1;
            std::vector<Int> dd{Int(1)};
            for (long e = 1; e < d; ++e) {
                if (d % e) continue;
                dd = poly_mul_int(dd, cache.at(e));  // divisors are computed in order
            }
            low = poly_div_exact(nd, dd);
            cache[d] = low;
        }
        denom = poly_mul_int(denom, low);
    }
    cache[n] = poly_div_exact(num, denom);
    return cache.at(n);
}

CycRat::CycRat(long n, Rat constant) : n_(n) {
    c_.assign(size_t(euler_phi(n)) == 0 ? 1 : size_t(euler_phi(n)), Rat(0));
    c_[0] = constant;
}

void CycRat::reduce(std::vector<Rat>& poly) const {
    const std::vector<Int>& phi = cyclotomic_poly(n_);
    size_t deg = phi.size() - 1;
    while (poly.size() > deg) {
        Rat lead = poly.back();
        size_t shift = poly.size() - 1 - deg;
        if (lead != 0)
            for (size_t i = 0; i < phi.size(); ++i) poly[shift + i] -= lead * Rat(phi[i]);
        poly.pop_back();
    }
    poly.resize(deg == 0 ? 1 : deg, Rat(0));
}

CycRat CycRat::zeta_pow(long n, long j) {
    CycRat z(n, Rat(0));
    long deg = euler_phi(n);
    j = ((j % n) + n) % n;
    std::vector<Rat> poly(size_t(j) + 1, Rat(0));
    poly[size_t(j)] = 1;
    z.reduce(poly);
    poly.resize(deg == 0 ? 1 : size_t(deg), Rat(0));
    z.c_ = poly;
    return z;
}

bool CycRat::is_zero() const {
    for (auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycRat::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat CycRat::rational_part() const {
    if (!is_rational()) throw compute_error("CycRat: not rational");
    return c_[0];
}

void CycRat::check_same(const CycRat& a, const CycRat& b) {
    if (a.n_ != b.n_) throw compute_error("CycRat: mixed cyclotomic moduli");
}

CycRat CycRat::operator+(const CycRat& o) const {
    check_same(*this, o);
    CycRat r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CycRat CycRat::operator-(const CycRat& o) const {
    check_same(*this, o);
    CycRat r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

CycRat CycRat::operator-() const {
    CycRat r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycRat CycRat::operator*(const CycRat& o) const {
    check_same(*this, o);
    std::vector<Rat> prod(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    CycRat r(n_, Rat(0));
    r.reduce(prod);
    r.c_ = prod;
    return r;
}

CycRat CycRat::inverse() const {
    if (is_zero()) throw compute_error("CycRat: division by zero");
    // extended euclid with the cyclotomic polynomial over Q
    const std::vector<Int>& phiz = cyclotomic_poly(n_);
    std::vector<Rat> r0(phiz.begin(), phiz.end());
    std::vector<Rat> r1 = c_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients applied to c_
    auto trim = [](std::vector<Rat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(r0);
    while (true) {
        trim(r1);
        if (r1.empty()) throw compute_error("CycRat: non-invertible (unexpected)");
        if (r1.size() == 1) break;
        // r0 = q r1 + r2
        std::vector<Rat> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
        std::vector<Rat> rem = r0;
        while (rem.size() >= r1.size()) {
            trim(rem);
            if (rem.size() < r1.size()) break;
            Rat f = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] = f;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= f * r1[i];
            trim(rem);
            if (rem.empty()) break;
        }
        // s2 = s0 - q s1
        std::vector<Rat> qs1(q.size() + s1.size() - 1, Rat(0));
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) qs1[i + j] += q[i] * s1[j];
        std::vector<Rat> s2(std::max(s0.size(), qs1.size()), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    Rat g = r1[0];
    CycRat inv(n_, Rat(0));
    std::vector<Rat> s = s1;
    for (auto& x : s) x /= g;
    reduce(s);
    inv.c_ = s;
    return inv;
}

bool CycRat::operator==(const CycRat& o) const { return n_ == o.n_ && c_ == o.c_; }

CycRat CycRat::conj() const {
    CycRat r(n_, Rat(0));
    std::vector<Rat> acc(c_.size(), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        CycRat term = zeta_pow(n_, -long(i));
        for (size_t j = 0; j < acc.size(); ++j) acc[j] += c_[i] * term.c_[j];
    }
    r.c_ = acc;
    return r;
}

std::optional<long> CycRat::as_zeta_power() const {
    for (long j = 0; j < n_; ++j)
        if (*this == zeta_pow(n_, j)) return j;
    return std::nullopt;
}

std::string CycRat::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? "+" : "");
        first = false;
        if (i == 0) {
            os << c_[i];
        } else {
            if (c_[i] == -1)
                os << "-";
            else if (c_[i] != 1)
                os << c_[i] << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

// --- ExactScalar ------------------------------------------------------------

namespace {

using VPoly = std::vector<CycRat>;

void vtrim(VPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

VPoly vadd(const VPoly& a, const VPoly& b) {
    VPoly r(std::max(a.size(), b.size()), CycRat());
    for (auto& x : r) x = CycRat(a.empty() ? b[0].modulus() : a[0].modulus(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    vtrim(r);
    return r;
}

VPoly vneg(const VPoly& a) {
    VPoly r = a;
    for (auto& x : r) x = -x;
    return r;
}

VPoly vmul(const VPoly& a, const VPoly& b, long n) {
    if (a.empty() || b.empty()) return {};
    VPoly r(a.size() + b.size() - 1, CycRat(n, Rat(0)));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    vtrim(r);
    return r;
}

// division with remainder over the field Q(zeta)
void vdivmod(const VPoly& a, const VPoly& b, VPoly& q, VPoly& rem, long n) {
    if (b.empty()) throw compute_error("ExactScalar: polynomial division by zero");
    rem = a;
    vtrim(rem);
    q.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, CycRat(n, Rat(0)));
    CycRat lead_inv = b.back().inverse();
    while (rem.size() >= b.size()) {
        CycRat f = rem.back() * lead_inv;
        size_t shift = rem.size() - b.size();
        q[shift] = q[shift] + f;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] = rem[shift + i] - f * b[i];
        vtrim(rem);
        if (rem.empty()) break;
    }
}

VPoly vgcd(VPoly a, VPoly b, long n) {
    vtrim(a);
    vtrim(b);
    while (!b.empty()) {
        VPoly q, r;
        vdivmod(a, b, q, r, n);
        a = b;
        b = r;
    }
    if (!a.empty()) {
        CycRat inv = a.back().inverse();
        for (auto& x : a) x = x * inv;  // monic gcd
    }
    return a;
}

}  // namespace

void ExactScalar::normalize() {
    vtrim(num_);
    vtrim(den_);
    if (den_.empty()) throw compute_error("ExactScalar: zero denominator");
    if (num_.empty()) {
        den_.assign(1, CycRat(n_, Rat(1)));
        return;
    }
    VPoly g = vgcd(num_, den_, n_);
    if (g.size() > 1 || !(g.size() == 1 && g[0] == CycRat(n_, Rat(1)))) {
        VPoly q, r;
        vdivmod(num_, g, q, r, n_);
        num_ = q;
        vdivmod(den_, g, q, r, n_);
        den_ = q;
    }
    CycRat inv = den_.back().inverse();
    for (auto& x : den_) x = x * inv;
    for (auto& x : num_) x = x * inv;
}

ExactScalar ExactScalar::from_rat(long n, Rat r) {
    ExactScalar s;
    s.n_ = n;
    s.num_.assign(1, CycRat(n, r));
    s.den_.assign(1, CycRat(n, Rat(1)));
    s.normalize();
    return s;
}

ExactScalar ExactScalar::zeta_pow(long n, long j) {
    ExactScalar s;
    s.n_ = n;
    s.num_.assign(1, CycRat::zeta_pow(n, j));
    s.den_.assign(1, CycRat(n, Rat(1)));
    return s;
}

ExactScalar ExactScalar::v_pow(long n, long c) {
    ExactScalar s;
    s.n_ = n;
    if (c >= 0) {
        s.num_.assign(size_t(c) + 1, CycRat(n, Rat(0)));
        s.num_.back() = CycRat(n, Rat(1));
        s.den_.assign(1, CycRat(n, Rat(1)));
    } else {
        s.num_.assign(1, CycRat(n, Rat(1)));
        s.den_.assign(size_t(-c) + 1, CycRat(n, Rat(0)));
        s.den_.back() = CycRat(n, Rat(1));
    }
    return s;
}

ExactScalar ExactScalar::monomial(long n, long j, long c) { return zeta_pow(n, j) * v_pow(n, c); }

bool ExactScalar::is_zero() const { return num_.empty(); }

bool ExactScalar::is_one() const {
    return num_.size() == 1 && den_.size() == 1 && num_[0] == CycRat(n_, Rat(1)) &&
           den_[0] == CycRat(n_, Rat(1));
}

void ExactScalar::check_same(const ExactScalar& a, const ExactScalar& b) {
    if (a.n_ != b.n_) throw compute_error("ExactScalar: mixed cyclotomic moduli");
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    check_same(*this, o);
    ExactScalar r;
    r.n_ = n_;
    r.num_ = vadd(vmul(num_, o.den_, n_), vmul(o.num_, den_, n_));
    r.den_ = vmul(den_, o.den_, n_);
    r.normalize();
    return r;
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const { return *this + (-o); }

ExactScalar ExactScalar::operator-() const {
    ExactScalar r = *this;
    r.num_ = vneg(r.num_);
    return r;
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    check_same(*this, o);
    ExactScalar r;
    r.n_ = n_;
    r.num_ = vmul(num_, o.num_, n_);
    r.den_ = vmul(den_, o.den_, n_);
    r.normalize();
    return r;
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) throw compute_error("ExactScalar: division by zero");
    ExactScalar r;
    r.n_ = n_;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const { return *this * o.inverse(); }

ExactScalar ExactScalar::pow(const Int& e) const {
    ExactScalar base = e < 0 ? inverse() : *this;
    Int k = abs(e);
    ExactScalar acc = from_rat(n_, Rat(1));
    while (k > 0) {
        if (floor_mod(k, Int(2)) == 1) acc = acc * base;
        base = base * base;
        k = floor_div(k, Int(2));
    }
    return acc;
}

bool ExactScalar::operator==(const ExactScalar& o) const {
    return n_ == o.n_ && num_ == o.num_ && den_ == o.den_;
}

ExactScalar ExactScalar::conj() const {
    ExactScalar r;
    r.n_ = n_;
    for (auto& c : num_) r.num_.push_back(c.conj());
    for (auto& c : den_) r.den_.push_back(c.conj());
    r.normalize();
    return r;
}

std::optional<std::pair<long, long>> ExactScalar::as_monomial() const {
    if (is_zero()) return std::nullopt;
    size_t nt = 0, dt = 0;
    size_t ni = 0, di = 0;
    for (size_t i = 0; i < num_.size(); ++i)
        if (!num_[i].is_zero()) {
            ++nt;
            ni = i;
        }
    for (size_t i = 0; i < den_.size(); ++i)
        if (!den_[i].is_zero()) {
            ++dt;
            di = i;
        }
    if (nt != 1 || dt != 1) return std::nullopt;
    if (!(den_[di] == CycRat(n_, Rat(1)))) return std::nullopt;
    auto j = num_[ni].as_zeta_power();
    if (!j) return std::nullopt;
    return std::make_pair(*j, long(ni) - long(di));
}

std::optional<Rat> ExactScalar::as_rational() const {
    if (is_zero()) return Rat(0);
    if (num_.size() == 1 && den_.size() == 1 && num_[0].is_rational() && den_[0] == CycRat(n_, Rat(1)))
        return num_[0].rational_part();
    return std::nullopt;
}

std::string ExactScalar::str() const {
    if (is_zero()) return "0";
    auto poly_str = [&](const VPoly& p) {
        std::ostringstream os;
        bool first = true;
        for (size_t i = p.size(); i-- > 0;) {
            if (p[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            std::string c = p[i].str();
            bool simple = p[i].is_rational() || p[i].as_zeta_power().has_value();
            if (i == 0) {
                os << c;
            } else {
                if (c == "1") {
                    // coefficient omitted
                } else if (simple) {
                    os << c << "*";
                } else {
                    os << "(" << c << ")*";
                }
                os << "v";
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    };
    bool den_one = den_.size() == 1 && den_[0] == CycRat(n_, Rat(1));
    if (den_one) return poly_str(num_);
    return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

}  // namespace covlat
