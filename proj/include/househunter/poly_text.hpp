// Text forms used throughout: signed monomial lists like
// "x^15 + x^13 - x^12 - x^3 + x^2 + 1" and half-coefficient rows like
// "1 0 0 -1 1" (highest exponent first).

#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>

#include "househunter/poly.hpp"

namespace hh {

namespace detail {
// Unicode minus (U+2212) shows up in table transcriptions; normalize it.
inline std::string normalize_minus(const std::string& s) {
    std::string r;
    r.reserve(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
            static_cast<unsigned char>(s[i + 1]) == 0x88 &&
            static_cast<unsigned char>(s[i + 2]) == 0x92) {
            r.push_back('-');
            i += 2;
        } else {
            r.push_back(s[i]);
        }
    }
    return r;
}
}  // namespace detail

inline std::string to_monomial_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = p.degree(); k >= 0; --k) {
        const mpz_class& a = p.coeff(k);
        if (a == 0) continue;
        const bool neg = a < 0;
        mpz_class mag = abs(a);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k >= 1) {
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

inline std::string to_monomial_string(const SparsePoly& p) { return to_monomial_string(p.to_poly()); }

inline IntPoly parse_monomial_string(const std::string& text) {
    const std::string s = detail::normalize_minus(text);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    IntPoly result;
    skip_ws();
    if (i == s.size()) throw std::domain_error("parse_monomial_string: empty input");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == s.size()) break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::domain_error("parse_monomial_string: expected '+' or '-' near \"" + s.substr(i) + "\"");
        }
        first = false;
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
        mpz_class coeff = digits.empty() ? mpz_class(1) : mpz_class(digits);
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip_ws();
        }
        long exp = 0;
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            ++i;
            exp = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip_ws();
                std::string ed;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ed.push_back(s[i++]);
                if (ed.empty()) throw std::domain_error("parse_monomial_string: missing exponent");
                exp = std::stol(ed);
            }
        } else if (digits.empty()) {
            throw std::domain_error("parse_monomial_string: expected term near \"" + s.substr(i) + "\"");
        }
        if (sign < 0) coeff = -coeff;
        result += IntPoly::monomial(exp, coeff);
    }
    if (result.is_zero() && first) throw std::domain_error("parse_monomial_string: no terms");
    return result;
}

inline std::string to_string(const HalfCoeffs& h) {
    std::ostringstream os;
    for (size_t i = 0; i < h.half.size(); ++i) {
        if (i) os << " ";
        os << h.half[i].get_str();
    }
    return os.str();
}

inline HalfCoeffs parse_half_string(const std::string& text) {
    std::istringstream is(detail::normalize_minus(text));
    HalfCoeffs h;
    std::string tok;
    while (is >> tok) h.half.emplace_back(tok);
    if (h.half.empty()) throw std::domain_error("parse_half_string: empty input");
    return h;
}

}  // namespace hh
