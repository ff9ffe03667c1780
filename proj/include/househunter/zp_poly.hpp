// Dense polynomial arithmetic over Z/pZ for word-size odd primes
// (p < 2^31 so products fit in unsigned 64-bit via __int128 free paths).
// Used for squarefree certificates, gcd degree probes, distinct-degree
// factorization patterns and the Cantor-Zassenhaus split feeding Hensel
// lifting.

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "househunter/poly.hpp"

namespace hh::zp {

using Poly = std::vector<uint64_t>;  // a0 first, no trailing zeros; empty = 0

struct Ctx {
    uint64_t p;

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint64_t inv(uint64_t a) const { return pow(a % p, p - 2); }
};

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly reduce(const IntPoly& f, const Ctx& c) {
    Poly r(static_cast<size_t>(f.degree() + 1));
    mpz_class t;
    for (long i = 0; i <= f.degree(); ++i) {
        t = f.coeff(i) % static_cast<long>(c.p);
        if (t < 0) t += static_cast<long>(c.p);
        r[static_cast<size_t>(i)] = t.get_ui();
    }
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b, const Ctx& c) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = c.add(r[i + j], c.mul(a[i], b[j]));
    }
    return r;
}

inline Poly make_monic(Poly f, const Ctx& c) {
    trim(f);
    if (f.empty() || f.back() == 1) return f;
    uint64_t s = c.inv(f.back());
    for (auto& x : f) x = c.mul(x, s);
    return f;
}

// remainder of a modulo monic m
inline Poly rem(Poly a, const Poly& m, const Ctx& c) {
    trim(a);
    const int dm = degree(m);
    while (degree(a) >= dm) {
        uint64_t t = a.back();
        const size_t off = a.size() - m.size();
        if (t != 0)
            for (size_t j = 0; j + 1 < m.size(); ++j)
                a[off + j] = c.sub(a[off + j], c.mul(t, m[j]));
        a.pop_back();
        trim(a);
    }
    return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, const Ctx& c) {
    return rem(mul(a, b, c), m, c);
}

inline Poly derivative(const Poly& f, const Ctx& c) {
    if (f.size() <= 1) return {};
    Poly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = c.mul(f[i], i % c.p);
    trim(r);
    return r;
}

inline Poly gcd(Poly a, Poly b, const Ctx& c) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        b = make_monic(std::move(b), c);
        Poly r = rem(std::move(a), b, c);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a), c);
}

inline Poly powmod_u64(Poly base, uint64_t e, const Poly& m, const Ctx& c) {
    Poly r{1};
    base = rem(std::move(base), m, c);
    while (e) {
        if (e & 1) r = mulmod(r, base, m, c);
        base = mulmod(base, base, m, c);
        e >>= 1;
    }
    return r;
}

inline Poly powmod_mpz(Poly base, const mpz_class& e, const Poly& m, const Ctx& c) {
    Poly r{1};
    base = rem(std::move(base), m, c);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = mulmod(r, r, m, c);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, base, m, c);
    }
    return r;
}

// f is squarefree mod p iff gcd(f, f') = 1 (requires p not dividing lc f,
// which reduce() guarantees when degree is preserved)
inline bool squarefree(const Poly& f, const Ctx& c) {
    Poly g = gcd(f, derivative(f, c), c);
    return degree(g) == 0;
}

// Distinct-degree factorization of monic squarefree f: returns pairs
// (product of irreducible factors of degree e, e).
inline std::vector<std::pair<Poly, int>> distinct_degree(Poly f, const Ctx& c) {
    std::vector<std::pair<Poly, int>> out;
    f = make_monic(std::move(f), c);
    Poly h{0, 1};  // x
    h = rem(std::move(h), f, c);
    for (int e = 1; 2 * e <= degree(f); ++e) {
        h = powmod_u64(std::move(h), c.p, f, c);
        Poly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = c.sub(hx[1], 1);
        trim(hx);
        Poly g = gcd(f, hx, c);
        if (degree(g) > 0) {
            out.emplace_back(g, e);
            auto q = [&] {
                // exact division f/g via repeated rem-free synthetic division
                Poly quo(f.size() - g.size() + 1, 0);
                Poly r = f;
                for (int i = degree(r); i >= degree(g); --i) {
                    uint64_t t = r[static_cast<size_t>(i)];
                    if (t) {
                        quo[static_cast<size_t>(i - degree(g))] = t;
                        for (size_t j = 0; j < g.size(); ++j)
                            r[i - degree(g) + j] = c.sub(r[i - degree(g) + j], c.mul(t, g[j]));
                    }
                }
                return quo;
            }();
            f = make_monic(std::move(q), c);
            h = rem(std::move(h), f, c);
        }
    }
    if (degree(f) > 0) out.emplace_back(f, degree(f));
    return out;
}

// Cantor-Zassenhaus equal-degree splitting (odd p), deterministic via the
// caller-provided rng seed.
inline void equal_degree_split(const Poly& f, int e, const Ctx& c, std::mt19937_64& rng,
                               std::vector<Poly>& out) {
    if (degree(f) == e) {
        out.push_back(make_monic(f, c));
        return;
    }
    mpz_class pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(c.p), static_cast<unsigned long>(e));
    mpz_class half = (pe - 1) / 2;
    std::uniform_int_distribution<uint64_t> dist(0, c.p - 1);
    while (true) {
        Poly a(static_cast<size_t>(degree(f)), 0);
        for (auto& x : a) x = dist(rng);
        trim(a);
        if (a.empty()) continue;
        Poly b = powmod_mpz(a, half, f, c);
        if (b.empty()) continue;
        b[0] = c.sub(b[0], 1);
        trim(b);
        Poly g = gcd(f, b, c);
        if (degree(g) > 0 && degree(g) < degree(f)) {
            equal_degree_split(g, e, c, rng, out);
            // f/g
            Poly r = f, quo(f.size() - g.size() + 1, 0);
            for (int i = degree(r); i >= degree(g); --i) {
                uint64_t t = r[static_cast<size_t>(i)];
                if (t) {
                    quo[static_cast<size_t>(i - degree(g))] = t;
                    for (size_t j = 0; j < g.size(); ++j)
                        r[i - degree(g) + j] = c.sub(r[i - degree(g) + j], c.mul(t, g[j]));
                }
            }
            equal_degree_split(make_monic(std::move(quo), c), e, c, rng, out);
            return;
        }
    }
}

// Full factorization of monic squarefree f mod p into monic irreducibles.
inline std::vector<Poly> factor_squarefree(const Poly& f, const Ctx& c, uint64_t seed) {
    std::vector<Poly> out;
    std::mt19937_64 rng(seed);
    for (auto& [g, e] : distinct_degree(f, c)) equal_degree_split(g, e, c, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hh::zp
