// Test-only oracles, independent of the implementation paths they check.
//
// For a reciprocal polynomial p of even degree d, p(x) = x^{d/2} q(x+1/x)
// for an integer "trace" polynomial q of degree d/2. Under w = z + 1/z a
// root pair (z, 1/z) maps to one w-root: real w in (-2, 2) exactly when
// |z| = 1, so counting q-roots in (-2, 2) with exact Sturm chains counts
// unimodular roots of p without any floating point.

#pragma once

#include <stdexcept>
#include <vector>

#include "househunter/poly.hpp"
#include "househunter/poly_gcd.hpp"

namespace hh::oracle {

inline IntPoly trace_polynomial(const IntPoly& p) {
    if (p.degree() < 2 || p.degree() % 2 != 0 || !p.is_reciprocal())
        throw std::domain_error("trace_polynomial: need reciprocal of even degree");
    const long h = p.degree() / 2;
    // v_j(w) = x^j + x^-j under w = x + 1/x:  v_0 = 2, v_1 = w, v_{j+1} = w v_j - v_{j-1}
    IntPoly w = IntPoly::monomial(1);
    IntPoly vprev{{2}}, v = w;
    IntPoly q{{p.coeff(h)}};
    for (long j = 1; j <= h; ++j) {
        q += v.times_scalar(p.coeff(h + j));
        IntPoly vnext = w * v - vprev;
        vprev = std::move(v);
        v = std::move(vnext);
    }
    return q;
}

// Sturm chain with primitive pseudo-remainders (even-power multipliers keep
// every scaling positive, so signs are those of the rational chain).
inline std::vector<IntPoly> sturm_chain(const IntPoly& f) {
    std::vector<IntPoly> chain;
    chain.push_back(primitive_part(f));
    IntPoly d = f.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(primitive_part(d));
    while (chain.back().degree() > 0) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        const long delta = a.degree() - b.degree();
        mpz_class mult;
        mpz_pow_ui(mult.get_mpz_t(), b.leading().get_mpz_t(),
                   static_cast<unsigned long>(delta % 2 == 0 ? delta + 2 : delta + 1));
        IntPoly r = a.times_scalar(mult);
        // plain remainder; divisions are exact by choice of multiplier
        while (r.degree() >= b.degree()) {
            mpz_class t = r.leading() / b.leading();
            r -= b.times_scalar(t).times_power(r.degree() - b.degree());
        }
        if (r.is_zero()) break;
        mpz_class c = r.content();
        std::vector<mpz_class> v(r.coeffs());
        for (auto& x : v) x = -x / c;
        chain.emplace_back(std::move(v));
    }
    return chain;
}

inline int sign_changes(const std::vector<IntPoly>& chain, const mpq_class& t) {
    int changes = 0, prev = 0;
    for (const IntPoly& f : chain) {
        mpq_class v = f.eval(t);
        int s = sgn(v);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// number of distinct real roots of f in (a, b], f(a) != 0 required
inline int sturm_count(const IntPoly& f, const mpq_class& a, const mpq_class& b) {
    auto chain = sturm_chain(f);
    return sign_changes(chain, a) - sign_changes(chain, b);
}

// Exact count of roots strictly outside the unit circle for a squarefree
// reciprocal polynomial of even degree with q(2), q(-2) nonzero.
inline int nu_exact_reciprocal(const IntPoly& p) {
    IntPoly q = trace_polynomial(p);
    if (q.eval(mpq_class(2)) == 0 || q.eval(mpq_class(-2)) == 0)
        throw std::domain_error("nu_exact_reciprocal: root at z = +-1 (cyclotomic factor)");
    const int on_circle_pairs = sturm_count(q, mpq_class(-2), mpq_class(2));
    return static_cast<int>(p.degree() / 2) - on_circle_pairs;
}

}  // namespace hh::oracle
