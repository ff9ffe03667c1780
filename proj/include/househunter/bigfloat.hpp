// Arbitrary-precision floating point (GMP mpf) behind a value type with
// explicit per-value precision, plus a minimal complex template usable
// with double, long double and BigFloat alike. Precision is carried by
// the values themselves; no global GMP default precision is touched, so
// concurrent solves at different precisions do not interfere.

#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include <gmpxx.h>

namespace hh {

class BigFloat {
public:
    BigFloat() : v_(0, 128) {}
    explicit BigFloat(mp_bitcnt_t prec) : v_(0, prec) {}
    BigFloat(double d, mp_bitcnt_t prec) : v_(d, prec) {}
    BigFloat(const mpz_class& z, mp_bitcnt_t prec) : v_(0, prec) { v_ = z; }

    mp_bitcnt_t prec() const { return v_.get_prec(); }
    double to_double() const { return v_.get_d(); }
    const mpf_class& raw() const { return v_; }

    static BigFloat from_raw(mpf_class f) {
        BigFloat b(f.get_prec());
        b.v_ = std::move(f);
        return b;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        r.v_ = a.v_ + b.v_;
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        r.v_ = a.v_ - b.v_;
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        r.v_ = a.v_ * b.v_;
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        r.v_ = a.v_ / b.v_;
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(prec());
        r.v_ = -v_;
        return r;
    }
    BigFloat& operator+=(const BigFloat& o) { v_ += o.v_; return *this; }
    BigFloat& operator-=(const BigFloat& o) { v_ -= o.v_; return *this; }
    BigFloat& operator*=(const BigFloat& o) { v_ *= o.v_; return *this; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.v_ < b.v_; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.v_ > b.v_; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return a.v_ == b.v_; }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(a.prec());
        r.v_ = abs(a.v_);
        return r;
    }
    friend BigFloat sqrt(const BigFloat& a) {
        BigFloat r(a.prec());
        r.v_ = sqrt(a.v_);
        return r;
    }

    // log|a| computed from mantissa/exponent, safe far outside double range
    friend double log_abs(const BigFloat& a) {
        if (a.v_ == 0) return -std::numeric_limits<double>::infinity();
        long exp2 = 0;
        double m = mpf_get_d_2exp(&exp2, a.v_.get_mpf_t());
        return std::log(std::fabs(m)) + static_cast<double>(exp2) * 0.6931471805599453;
    }

private:
    mpf_class v_;
};

inline double log_abs(double a) { return std::log(std::fabs(a)); }
inline double log_abs(long double a) {
    return static_cast<double>(std::log(std::fabs(a)));
}

// Minimal complex type; std::complex is only specified for the builtin
// floating types, and we also need it over BigFloat.
template <class R>
struct Cx {
    R re{}, im{};

    friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cx operator/(const Cx& a, const Cx& b) {
        R d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Cx operator-() const { return {-re, -im}; }
};

template <class R>
R cx_abs(const Cx<R>& z) {
    return sqrt(z.re * z.re + z.im * z.im);
}

template <class R>
double cx_log_abs(const Cx<R>& z) {
    // log sqrt(re^2+im^2) without overflow: use the larger part as scale
    double lr = log_abs(z.re), li = log_abs(z.im);
    double hi = std::max(lr, li), lo = std::min(lr, li);
    if (hi == -std::numeric_limits<double>::infinity()) return hi;
    return hi + 0.5 * std::log1p(std::exp(2 * (lo - hi)));
}

using std::abs;
using std::sqrt;

}  // namespace hh
