// Exact integer polynomials: the workhorse value type of the search.
//
// Coefficients are arbitrary-precision (GMP) so that products with
// cyclotomics and intermediate quotients stay exact at every degree we
// touch (up to ~420 after power composition). The zero polynomial is
// representable (empty coefficient vector) but rejected by the structural
// predicates.

#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hh {

class IntPoly {
public:
    IntPoly() = default;

    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    // a0 first, like the internal storage
    IntPoly(std::initializer_list<long> a0_first) {
        c_.reserve(a0_first.size());
        for (long v : a0_first) c_.emplace_back(v);
        trim();
    }

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly one() { return monomial(0); }

    static IntPoly monomial(long exp, mpz_class coeff = 1) {
        if (coeff == 0) return IntPoly{};
        std::vector<mpz_class> c(static_cast<size_t>(exp) + 1);
        c.back() = std::move(coeff);
        return IntPoly(std::move(c));
    }

    // x^n - 1
    static IntPoly power_minus_one(long n) {
        std::vector<mpz_class> c(static_cast<size_t>(n) + 1);
        c[0] = -1;
        c.back() = 1;
        return IntPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<mpz_class>& coeffs() const { return c_; }

    const mpz_class& coeff(long k) const {
        static const mpz_class kZero = 0;
        if (k < 0 || k >= static_cast<long>(c_.size())) return kZero;
        return c_[static_cast<size_t>(k)];
    }

    const mpz_class& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    long term_count() const {
        long n = 0;
        for (const auto& a : c_)
            if (a != 0) ++n;
        return n;
    }

    mpz_class height() const {
        mpz_class h = 0;
        for (const auto& a : c_) {
            mpz_class v = abs(a);
            if (v > h) h = v;
        }
        return h;
    }

    mpz_class content() const {
        mpz_class g = 0;
        for (const auto& a : c_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] += a.c_[i];
            if (i < b.c_.size()) c[i] += b.c_[i];
        }
        return IntPoly(std::move(c));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] += a.c_[i];
            if (i < b.c_.size()) c[i] -= b.c_[i];
        }
        return IntPoly(std::move(c));
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly{};
        std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                c[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return IntPoly(std::move(c));
    }

    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }

    IntPoly times_scalar(const mpz_class& s) const {
        if (s == 0) return IntPoly{};
        IntPoly r = *this;
        for (auto& a : r.c_) a *= s;
        return r;
    }

    // p(x) * x^k
    IntPoly times_power(long k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<mpz_class> c(c_.size() + static_cast<size_t>(k));
        std::copy(c_.begin(), c_.end(), c.begin() + k);
        return IntPoly(std::move(c));
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly{};
        std::vector<mpz_class> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
        return IntPoly(std::move(c));
    }

    // x^d p(1/x)
    IntPoly reversed() const {
        std::vector<mpz_class> c(c_.rbegin(), c_.rend());
        return IntPoly(std::move(c));
    }

    // p(x^k): exponent e -> k*e
    IntPoly compose_power(long k) const {
        if (k < 1) throw std::domain_error("compose_power: k must be positive");
        if (is_zero() || k == 1) return *this;
        std::vector<mpz_class> c(static_cast<size_t>(degree()) * k + 1);
        for (size_t i = 0; i < c_.size(); ++i) c[i * k] = c_[i];
        return IntPoly(std::move(c));
    }

    mpz_class eval(const mpz_class& x) const {
        mpz_class r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    mpq_class eval(const mpq_class& x) const {
        mpq_class r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    double eval(double x) const {
        double r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
        return r;
    }

    // ---- structural predicates ----

    // X^d P(1/X) = P(X)
    bool is_reciprocal() const {
        require_nonzero("is_reciprocal");
        const long d = degree();
        for (long k = 0; 2 * k <= d; ++k)
            if (coeff(k) != coeff(d - k)) return false;
        return true;
    }

    // P(x) = -x^d P(1/x); forces a zero middle coefficient for even degree
    bool is_antireciprocal() const {
        require_nonzero("is_antireciprocal");
        const long d = degree();
        for (long k = 0; 2 * k <= d; ++k)
            if (coeff(k) != -coeff(d - k)) return false;
        return true;
    }

    // not expressible as Q(x^k) for any k >= 2, i.e. the gcd of the
    // exponents carrying nonzero coefficients is 1
    bool is_primitive() const {
        require_nonzero("is_primitive");
        if (degree() < 1) throw std::domain_error("is_primitive: constant polynomial");
        long g = 0;
        for (long k = 0; k <= degree(); ++k)
            if (coeff(k) != 0) {
                g = std::gcd(g, k);
                if (g == 1) return true;
            }
        return g == 1;
    }

    // Largest k such that p(x) = q(x^k); 0 for constants.
    long primitive_step() const {
        long g = 0;
        for (long k = 0; k <= degree(); ++k)
            if (coeff(k) != 0) g = std::gcd(g, k);
        return g;
    }

    // Exact division: returns q' with q*q' == *this, or nullopt if q does
    // not divide. No side effects on failure.
    std::optional<IntPoly> divided_exactly_by(const IntPoly& q) const {
        if (q.is_zero()) throw std::domain_error("division by zero polynomial");
        if (is_zero()) return IntPoly{};
        const long dp = degree(), dq = q.degree();
        if (dp < dq) return std::nullopt;
        std::vector<mpz_class> rem = c_;
        std::vector<mpz_class> quot(static_cast<size_t>(dp - dq) + 1);
        const mpz_class& qlead = q.c_.back();
        for (long i = dp; i >= dq; --i) {
            if (rem[i] == 0) continue;
            if (!mpz_divisible_p(rem[i].get_mpz_t(), qlead.get_mpz_t())) return std::nullopt;
            mpz_class t = rem[i] / qlead;
            for (long j = 0; j <= dq; ++j) rem[i - dq + j] -= t * q.c_[j];
            quot[i - dq] = std::move(t);
        }
        for (const auto& r : rem)
            if (r != 0) return std::nullopt;
        return IntPoly(std::move(quot));
    }

private:
    void require_nonzero(const char* op) const {
        if (is_zero()) throw std::domain_error(std::string(op) + ": zero polynomial");
    }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<mpz_class> c_;  // a0 first; empty = zero polynomial
};

inline IntPoly mul(const IntPoly& a, const IntPoly& b) { return a * b; }

inline std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& q) {
    return p.divided_exactly_by(q);
}

inline IntPoly compose_power(const IntPoly& p, long k) { return p.compose_power(k); }

// ---- sparse form: exponent/coefficient pairs, strictly increasing exponents ----

struct SparseTerm {
    long exp;
    mpz_class coeff;
    friend bool operator==(const SparseTerm& a, const SparseTerm& b) {
        return a.exp == b.exp && a.coeff == b.coeff;
    }
};

class SparsePoly {
public:
    SparsePoly() = default;

    explicit SparsePoly(std::vector<SparseTerm> terms) : t_(std::move(terms)) {
        for (size_t i = 0; i < t_.size(); ++i) {
            if (t_[i].coeff == 0) throw std::domain_error("SparsePoly: zero coefficient");
            if (i > 0 && t_[i - 1].exp >= t_[i].exp)
                throw std::domain_error("SparsePoly: exponents not strictly increasing");
        }
    }

    static SparsePoly from_poly(const IntPoly& p) {
        std::vector<SparseTerm> t;
        for (long k = 0; k <= p.degree(); ++k)
            if (p.coeff(k) != 0) t.push_back({k, p.coeff(k)});
        return SparsePoly(std::move(t));
    }

    IntPoly to_poly() const {
        if (t_.empty()) return IntPoly{};
        std::vector<mpz_class> c(static_cast<size_t>(t_.back().exp) + 1);
        for (const auto& t : t_) c[static_cast<size_t>(t.exp)] = t.coeff;
        return IntPoly(std::move(c));
    }

    const std::vector<SparseTerm>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    long degree() const { return t_.empty() ? -1 : t_.back().exp; }
    size_t term_count() const { return t_.size(); }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

private:
    std::vector<SparseTerm> t_;
};

// ---- half-coefficient encoding of reciprocal polynomials ----
//
// The coefficients of x^d .. x^{ceil(d/2)}, highest exponent first; the
// mirror rule a_k = a_{d-k} recovers the rest.

struct HalfCoeffs {
    std::vector<mpz_class> half;

    friend bool operator==(const HalfCoeffs& a, const HalfCoeffs& b) { return a.half == b.half; }
};

inline HalfCoeffs encode_half(const IntPoly& p) {
    if (!p.is_reciprocal()) throw std::domain_error("encode_half: polynomial is not reciprocal");
    const long d = p.degree();
    HalfCoeffs h;
    for (long k = d; 2 * k >= d; --k) h.half.push_back(p.coeff(k));
    return h;
}

inline IntPoly decode_half(const HalfCoeffs& h, long d) {
    if (h.half.empty()) throw std::domain_error("decode_half: empty coefficients");
    const long expect = d - (d + 1) / 2 + 1;  // exponents d .. ceil(d/2)
    if (static_cast<long>(h.half.size()) != expect)
        throw std::domain_error("decode_half: coefficient count does not match degree");
    std::vector<mpz_class> c(static_cast<size_t>(d) + 1);
    for (size_t i = 0; i < h.half.size(); ++i) {
        const long k = d - static_cast<long>(i);
        c[static_cast<size_t>(k)] = h.half[i];
        c[static_cast<size_t>(d - k)] = h.half[i];
    }
    return IntPoly(std::move(c));
}

}  // namespace hh
