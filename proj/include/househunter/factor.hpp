// Cyclotomic stripping and exact factorization over Z.
//
// strip_cyclotomic trial-divides by Phi_n for every n with phi(n) <= deg,
// ascending, each to exhaustion, with the integer filter Phi_n(2) | p(2)
// skipping almost every non-divisor. Irreducibility testing first tries
// degree-pattern certificates (possible factor degrees = subset sums of
// the distinct-degree pattern, intersected across several primes); the
// complete fallback is Zassenhaus: Cantor-Zassenhaus factorization mod a
// word prime, quadratic multi-factor Hensel lifting past the Mignotte
// bound, then subset recombination in increasing cardinality.

#pragma once

#include <bitset>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "househunter/cyclotomic.hpp"
#include "househunter/poly.hpp"
#include "househunter/poly_gcd.hpp"
#include "househunter/roots.hpp"
#include "househunter/zp_poly.hpp"

namespace hh {

struct CyclotomicSignature {
    std::map<long, int> parts;  // n -> multiplicity of Phi_n

    bool empty() const { return parts.empty(); }

    long total_degree() const {
        long d = 0;
        for (auto& [n, m] : parts) d += euler_phi(n) * m;
        return d;
    }

    IntPoly product() const {
        IntPoly r = IntPoly::one();
        for (auto& [n, m] : parts)
            for (int i = 0; i < m; ++i) r *= cyclotomic(n);
        return r;
    }

    // "1^2,2,3,5,7,9,21"; "-" for the empty signature
    std::string to_string() const {
        if (parts.empty()) return "-";
        std::ostringstream os;
        bool first = true;
        for (auto& [n, m] : parts) {
            if (!first) os << ",";
            first = false;
            os << n;
            if (m > 1) os << "^" << m;
        }
        return os.str();
    }

    static CyclotomicSignature parse(const std::string& s) {
        CyclotomicSignature sig;
        if (s == "-" || s.empty()) return sig;
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            auto caret = tok.find('^');
            long n = std::stol(tok.substr(0, caret));
            int m = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
            if (n < 1 || m < 1) throw std::domain_error("bad cyclotomic signature: " + s);
            sig.parts[n] += m;
        }
        return sig;
    }

    friend bool operator==(const CyclotomicSignature& a, const CyclotomicSignature& b) {
        return a.parts == b.parts;
    }
};

struct StripResult {
    IntPoly cofactor;
    CyclotomicSignature signature;
};

inline StripResult strip_cyclotomic(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("strip_cyclotomic: zero polynomial");
    StripResult r{p, {}};
    if (p.degree() < 1) return r;
    auto& table = CyclotomicTable::instance();
    const auto ns = CyclotomicTable::indices_with_phi_at_most(p.degree());
    mpz_class v2 = p.eval(mpz_class(2));
    for (long n : ns) {
        if (euler_phi(n) > r.cofactor.degree()) continue;
        const mpz_class& phi2 = table.phi_at_two(n);
        while (r.cofactor.degree() >= euler_phi(n)) {
            if (v2 != 0 && !mpz_divisible_p(v2.get_mpz_t(), phi2.get_mpz_t())) break;
            auto q = r.cofactor.divided_exactly_by(table.phi(n));
            if (!q) break;
            r.cofactor = std::move(*q);
            ++r.signature.parts[n];
            if (v2 != 0) v2 /= phi2;
        }
    }
    return r;
}

namespace factordetail {

using ZmPoly = std::vector<mpz_class>;  // a0 first, coefficients in [0, m)

inline void trim_zm(ZmPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline ZmPoly reduce_zm(const IntPoly& f, const mpz_class& m) {
    ZmPoly r(static_cast<size_t>(f.degree() + 1));
    for (long i = 0; i <= f.degree(); ++i) {
        r[i] = f.coeff(i) % m;
        if (r[i] < 0) r[i] += m;
    }
    trim_zm(r);
    return r;
}

inline ZmPoly mul_zm(const ZmPoly& a, const ZmPoly& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    ZmPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& x : r) x %= m;
    trim_zm(r);
    return r;
}

inline ZmPoly add_zm(ZmPoly a, const ZmPoly& b, const mpz_class& m) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) {
        a[i] += b[i];
        if (a[i] >= m) a[i] -= m;
    }
    trim_zm(a);
    return a;
}

inline ZmPoly sub_zm(ZmPoly a, const ZmPoly& b, const mpz_class& m) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
        if (a[i] < 0) a[i] += m;
    }
    trim_zm(a);
    return a;
}

// division by monic h: returns {quotient, remainder}
inline std::pair<ZmPoly, ZmPoly> divrem_zm(ZmPoly a, const ZmPoly& h, const mpz_class& m) {
    const int dh = static_cast<int>(h.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < dh) return {{}, std::move(a)};
    ZmPoly q(a.size() - h.size() + 1);
    for (int i = static_cast<int>(a.size()) - 1; i >= dh; --i) {
        mpz_class t = a[i];
        if (t == 0) continue;
        q[i - dh] = t;
        for (int j = 0; j <= dh; ++j) {
            a[i - dh + j] -= t * h[j];
            a[i - dh + j] %= m;
            if (a[i - dh + j] < 0) a[i - dh + j] += m;
        }
    }
    trim_zm(a);
    trim_zm(q);
    return {std::move(q), std::move(a)};
}

inline IntPoly symmetric_lift(const ZmPoly& f, const mpz_class& m) {
    std::vector<mpz_class> c(f.size());
    mpz_class half = m / 2;
    for (size_t i = 0; i < f.size(); ++i) c[i] = f[i] > half ? f[i] - m : f[i];
    return IntPoly(std::move(c));
}

// One quadratic Hensel step: f = g h (mod m), s g + t h = 1 (mod m), h and
// the product monic; returns the same data mod m^2.
struct HenselPair {
    ZmPoly g, h, s, t;
};

inline HenselPair hensel_step(const IntPoly& f, const HenselPair& in, const mpz_class& m) {
    const mpz_class m2 = m * m;
    ZmPoly fz = reduce_zm(f, m2);
    ZmPoly e = sub_zm(fz, mul_zm(in.g, in.h, m2), m2);
    auto [q, r] = divrem_zm(mul_zm(in.s, e, m2), in.h, m2);
    ZmPoly g2 = add_zm(add_zm(in.g, mul_zm(in.t, e, m2), m2), mul_zm(q, in.g, m2), m2);
    ZmPoly h2 = add_zm(in.h, r, m2);
    ZmPoly one{mpz_class(1)};
    ZmPoly b = sub_zm(add_zm(mul_zm(in.s, g2, m2), mul_zm(in.t, h2, m2), m2), one, m2);
    auto [c, d] = divrem_zm(mul_zm(in.s, b, m2), h2, m2);
    ZmPoly s2 = sub_zm(in.s, d, m2);
    ZmPoly t2 = sub_zm(sub_zm(in.t, mul_zm(in.t, b, m2), m2), mul_zm(c, g2, m2), m2);
    return {std::move(g2), std::move(h2), std::move(s2), std::move(t2)};
}

inline ZmPoly from_zp(const zp::Poly& f) {
    ZmPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = static_cast<unsigned long>(f[i]);
    return r;
}

// Bezout coefficients s a + t b = 1 mod p for coprime a, b
inline std::pair<zp::Poly, zp::Poly> bezout_zp(const zp::Poly& a, const zp::Poly& b,
                                               const zp::Ctx& c) {
    zp::Poly r0 = a, r1 = b;
    zp::Poly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // r0 = q r1 + r2 with r1 made monic on the fly
        uint64_t lead_inv = c.inv(r1.back());
        zp::Poly q;
        zp::Poly r = r0;
        const int d1 = zp::degree(r1);
        while (zp::degree(r) >= d1) {
            uint64_t t = c.mul(r.back(), lead_inv);
            const size_t off = r.size() - r1.size();
            if (q.size() < off + 1) q.resize(off + 1, 0);
            q[off] = c.add(q[off], t);
            for (size_t j = 0; j < r1.size(); ++j)
                r[off + j] = c.sub(r[off + j], c.mul(t, r1[j]));
            zp::trim(r);
        }
        zp::Poly s2 = zp::Poly(s0), t2 = zp::Poly(t0);
        // s2 = s0 - q s1, t2 = t0 - q t1
        zp::Poly qs = zp::mul(q, s1, c), qt = zp::mul(q, t1, c);
        if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
        for (size_t i = 0; i < qs.size(); ++i) s2[i] = c.sub(s2[i], qs[i]);
        if (t2.size() < qt.size()) t2.resize(qt.size(), 0);
        for (size_t i = 0; i < qt.size(); ++i) t2[i] = c.sub(t2[i], qt[i]);
        zp::trim(s2);
        zp::trim(t2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd (a unit for coprime inputs); scale to make it 1
    uint64_t scale = c.inv(r0[0]);
    for (auto& x : s0) x = c.mul(x, scale);
    for (auto& x : t0) x = c.mul(x, scale);
    return {s0, t0};
}

// Lift the factorization f = prod gs (mod p) to mod p^(2^k) >= bound,
// recursively splitting the factor list in halves.
inline void hensel_lift_tree(const IntPoly& f, const std::vector<zp::Poly>& gs, const zp::Ctx& c,
                             const mpz_class& target, std::vector<IntPoly>& out) {
    if (gs.size() == 1) {
        // f is the lift: normalize to the symmetric range mod target
        out.push_back(symmetric_lift(reduce_zm(f, target), target));
        return;
    }
    const size_t half = gs.size() / 2;
    zp::Poly gp{1}, hp{1};
    for (size_t i = 0; i < half; ++i) gp = zp::mul(gp, gs[i], c);
    for (size_t i = half; i < gs.size(); ++i) hp = zp::mul(hp, gs[i], c);
    auto [sp, tp] = bezout_zp(gp, hp, c);

    HenselPair pair{from_zp(gp), from_zp(hp), from_zp(sp), from_zp(tp)};
    mpz_class m(static_cast<unsigned long>(c.p));
    while (m < target) {
        pair = hensel_step(f, pair, m);
        m *= m;
    }
    IntPoly gf = symmetric_lift(pair.g, m);
    IntPoly hf = symmetric_lift(pair.h, m);
    hensel_lift_tree(gf, std::vector<zp::Poly>(gs.begin(), gs.begin() + half), c, target, out);
    hensel_lift_tree(hf, std::vector<zp::Poly>(gs.begin() + half, gs.end()), c, target, out);
}

constexpr int kMaxFactorDegree = 512;
using DegreeSet = std::bitset<kMaxFactorDegree + 1>;

inline DegreeSet subset_sums(const std::vector<int>& degs, int n) {
    DegreeSet s;
    s.set(0);
    for (int d : degs) s |= s << d;
    DegreeSet mask;
    for (int i = 0; i <= n; ++i) mask.set(i);
    return s & mask;
}

struct ModularProbe {
    uint64_t prime = 0;
    std::vector<int> pattern;  // irreducible factor degrees mod prime (with repetition)
};

}  // namespace factordetail

struct Factorization {
    std::vector<std::pair<IntPoly, int>> irreducible_factors;
    mpz_class content = 1;  // content * product of factors^mult == input
};

// Zassenhaus factorization of a monic squarefree polynomial.
inline std::vector<IntPoly> factor_monic_squarefree(const IntPoly& f) {
    using namespace factordetail;
    if (!f.is_monic()) throw std::logic_error("factor_monic_squarefree: input must be monic");
    const int n = f.degree();
    if (n <= 1) return {f};
    if (n > kMaxFactorDegree) throw std::domain_error("factor_monic_squarefree: degree too large");
    if (f.coeff(0) == 0) {  // squarefree, so x divides exactly once
        auto rest = factor_monic_squarefree(
            IntPoly(std::vector<mpz_class>(f.coeffs().begin() + 1, f.coeffs().end())));
        rest.push_back(IntPoly::monomial(1));
        return rest;
    }

    // probe primes one at a time; stop as soon as the degree sets certify
    // irreducibility, or after enough witnesses to recombine cheaply
    std::vector<ModularProbe> probes;
    DegreeSet possible;
    possible.set();
    {
        const auto& primes = detail::modular_primes(64);
        auto no_proper = [&] {
            for (int d = 1; d < n; ++d)
                if (possible.test(d)) return false;
            return true;
        };
        for (uint64_t p : primes) {
            if (probes.size() >= 7) break;
            zp::Ctx c{p};
            zp::Poly fp = zp::reduce(f, c);
            if (zp::degree(fp) != n || !zp::squarefree(fp, c)) continue;
            ModularProbe pr;
            pr.prime = p;
            for (auto& [g, e] : zp::distinct_degree(zp::make_monic(fp, c), c))
                for (int i = 0; i < zp::degree(g) / e; ++i) pr.pattern.push_back(e);
            possible &= subset_sums(pr.pattern, n);
            probes.push_back(std::move(pr));
            if (no_proper()) return {f};  // certified irreducible
            if (probes.size() >= 3 && probes.back().pattern.size() <= 6) break;
        }
    }
    if (probes.empty()) throw std::runtime_error("factor_monic_squarefree: no good prime found");

    // pick the probe with the fewest modular factors
    const ModularProbe* best = &probes[0];
    for (auto& pr : probes)
        if (pr.pattern.size() < best->pattern.size()) best = &pr;
    zp::Ctx c{best->prime};

    std::vector<zp::Poly> gs = zp::factor_squarefree(zp::make_monic(zp::reduce(f, c), c), c,
                                                     /*seed=*/0x5eed5eedULL ^ best->prime);
    if (gs.size() == 1) return {f};

    // Mignotte bound: factor coefficients bounded by 2^n * ||f||_2
    mpz_class norm2 = 0;
    for (const auto& a : f.coeffs()) norm2 += a * a;
    mpz_class bound = sqrt(norm2) + 1;
    bound <<= static_cast<unsigned>(n + 1);
    mpz_class target(static_cast<unsigned long>(c.p));
    while (target <= 2 * bound) target *= target;

    std::vector<IntPoly> lifted;
    hensel_lift_tree(f, gs, c, target, lifted);

    // recombination, subsets in increasing cardinality
    std::vector<IntPoly> out;
    IntPoly rem_poly = f;
    std::vector<int> alive(lifted.size());
    std::iota(alive.begin(), alive.end(), 0);
    const mpz_class modulus = target;

    auto subset_product = [&](const std::vector<int>& subset) {
        ZmPoly prod{mpz_class(1)};
        for (int idx : subset) prod = mul_zm(prod, reduce_zm(lifted[idx], modulus), modulus);
        return symmetric_lift(prod, modulus);
    };

    for (size_t card = 1; alive.size() > 0 && card <= alive.size() / 2; ++card) {
        std::vector<int> pick(card);
        std::iota(pick.begin(), pick.end(), 0);
        bool advanced = true;
        while (advanced) {
            std::vector<int> subset(card);
            for (size_t i = 0; i < card; ++i) subset[i] = alive[pick[i]];
            int deg = 0;
            for (int idx : subset) deg += lifted[idx].degree();
            if (possible.test(deg)) {
                IntPoly cand = subset_product(subset);
                if (!cand.is_zero() && rem_poly.coeff(0) != 0 &&
                    mpz_divisible_p(rem_poly.coeff(0).get_mpz_t(), cand.coeff(0).get_mpz_t())) {
                    if (auto q = rem_poly.divided_exactly_by(cand)) {
                        out.push_back(cand);
                        rem_poly = std::move(*q);
                        std::vector<int> next_alive;
                        for (int a : alive)
                            if (std::find(subset.begin(), subset.end(), a) == subset.end())
                                next_alive.push_back(a);
                        alive = std::move(next_alive);
                        pick.assign(card, 0);
                        std::iota(pick.begin(), pick.end(), 0);
                        if (card > alive.size() / 2 || alive.empty()) {
                            advanced = false;
                        }
                        continue;
                    }
                }
            }
            // next combination
            int i = static_cast<int>(card) - 1;
            while (i >= 0 && pick[i] == static_cast<int>(alive.size() - card + i)) --i;
            if (i < 0) {
                advanced = false;
            } else {
                ++pick[i];
                for (size_t j = i + 1; j < card; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
    }
    if (rem_poly.degree() > 0) out.push_back(rem_poly);
    return out;
}

inline Factorization factor_poly(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("factor_poly: zero polynomial");
    Factorization fz;
    fz.content = p.content();
    if (!p.is_zero() && p.leading() < 0) fz.content = -fz.content;
    IntPoly prim = primitive_part(p);
    if (prim.degree() < 1) return fz;
    for (auto& [part, mult] : squarefree_decomposition(prim)) {
        if (part.degree() < 1) continue;
        if (!part.is_monic())
            throw std::logic_error("factor_poly: non-monic squarefree part unsupported");
        for (IntPoly& f : factor_monic_squarefree(part))
            fz.irreducible_factors.emplace_back(std::move(f), mult);
    }
    return fz;
}

inline bool is_irreducible(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 1) throw std::domain_error("is_irreducible: need degree >= 1");
    IntPoly f = primitive_part(p);
    if (f.degree() == 1) return true;
    if (f.coeff(0) == 0) return false;  // x divides
    if (!squarefree_certificate(f)) {
        if (gcd_exact(f, f.derivative()).degree() > 0) return false;
    }
    if (!f.is_monic()) {
        // all inputs in this project are monic by construction
        throw std::logic_error("is_irreducible: non-monic input unsupported");
    }
    return factor_monic_squarefree(f).size() == 1;
}

struct MinPolyResult {
    IntPoly r;  // irreducible factor carrying the maximum-modulus root
    long d = 0;
    HouseValue hv;
    CyclotomicSignature signature;
};

// Strip cyclotomics, then locate the irreducible factor containing the
// max-modulus root (by certified disc membership, escalating precision on
// ambiguity).
inline MinPolyResult min_poly_of_house(const IntPoly& p, double tol = kDefaultRootTol) {
    StripResult sr = strip_cyclotomic(p);
    if (sr.cofactor.degree() < 1)
        throw std::domain_error("min_poly_of_house: input is a product of cyclotomics");
    MinPolyResult res;
    res.signature = std::move(sr.signature);
    IntPoly cofactor = primitive_part(sr.cofactor);

    if (is_irreducible(cofactor)) {
        res.r = std::move(cofactor);
        res.d = res.r.degree();
        res.hv = house(res.r, tol);
        return res;
    }

    Factorization fz = factor_poly(cofactor);
    for (double t = tol;; t *= 1e-2) {
        if (t < 1e-14 * 0.99) {
            // final attempt below failed to separate
            throw RootSolveError("min_poly_of_house: ambiguous maximum-modulus factor", p);
        }
        RootSet all = find_roots(cofactor, t);
        const Root* rmax = nullptr;
        for (const Root& r : all.roots)
            if (!rmax || r.modulus() > rmax->modulus()) rmax = &r;
        int claims = 0;
        const IntPoly* owner = nullptr;
        for (auto& [f, mult] : fz.irreducible_factors) {
            RootSet rs = find_roots(f, t);
            for (const Root& r : rs.roots)
                if (std::hypot(r.re - rmax->re, r.im - rmax->im) <= r.err + rmax->err) {
                    ++claims;
                    owner = &f;
                    break;
                }
        }
        if (claims == 1) {
            res.r = *owner;
            res.d = res.r.degree();
            res.hv = house(res.r, tol);
            return res;
        }
    }
}

}  // namespace hh
