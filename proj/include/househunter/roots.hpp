// Simultaneous root approximation with certified inclusion radii, plus the
// house, Mahler measure and unit-disc classification built on top of it.
//
// Aberth-Ehrlich iteration from Newton-polygon starting points, run at
// escalating precision (double -> long double -> GMP floats at 128..1024
// bits) until every root carries a certified radius below the requested
// tolerance. Certification is a posteriori: with Weierstrass corrections
// W_i = p(z_i) / (lc * prod_{j!=i} (z_i - z_j)) over pairwise distinct
// approximations, the discs D(z_i, n|W_i|) jointly contain all roots of p,
// and a connected component made of m discs contains exactly m roots. The
// numerator |p(z_i)| is inflated by a running evaluation error bound
// (which also absorbs the rounding of the exact integer coefficients into
// stage precision), and every disc of a multi-disc component is widened to
// cover its whole component, so each reported disc contains at least one
// true root and the discs jointly account for all roots. Repeated roots
// are split off beforehand by exact squarefree decomposition, so the
// iteration only ever sees simple roots.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "househunter/bigfloat.hpp"
#include "househunter/poly.hpp"
#include "househunter/poly_gcd.hpp"

namespace hh {

struct Root {
    double re = 0, im = 0;
    double err = 0;  // radius of a disc certified to contain a true root

    double modulus() const { return std::hypot(re, im); }
    double argument() const { return std::atan2(im, re); }
};

struct RootSet {
    std::vector<Root> roots;  // multiplicity-counted; size == degree
    double max_err = 0;
};

struct HouseValue {
    double value = 0;
    double err = 0;

    double low() const { return value - err; }
    double high() const { return value + err; }
};

struct DiscClassification {
    int outside = 0;     // |z| - err > 1 + margin  (nu counts these)
    int inside = 0;      // |z| + err < 1 - margin
    int unimodular = 0;  // ||z| - 1| + err <= margin
    int ambiguous = 0;   // certified neither way at this margin

    int total() const { return outside + inside + unimodular + ambiguous; }
};

class RootSolveError : public std::runtime_error {
public:
    RootSolveError(const std::string& msg, IntPoly p)
        : std::runtime_error(msg + " [" + std::to_string(p.degree()) + "-degree input]"),
          poly(std::move(p)) {}
    IntPoly poly;
};

// cheap instrumentation for performance sanity checks
struct SolveStats {
    long sweeps_double = 0, sweeps_long = 0, sweeps_mpf = 0;
    long solves = 0;
    void reset() { *this = SolveStats{}; }
};
inline SolveStats& solve_stats() {
    thread_local SolveStats s;
    return s;
}

namespace rootdetail {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

inline double log_abs_mpz(const mpz_class& z) {
    if (z == 0) return kNegInf;
    long e = 0;
    double m = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(e) * kLn2;
}

// Newton-polygon starting points: each upper-hull edge of (i, log|a_i|)
// contributes edge-length points on a circle of the edge's radius.
inline std::vector<Cx<double>> initial_points(const std::vector<double>& logc) {
    const int n = static_cast<int>(logc.size()) - 1;
    std::vector<int> hull;
    for (int i = 0; i <= n; ++i) {
        if (logc[i] == kNegInf) continue;
        while (hull.size() >= 2) {
            int a = hull[hull.size() - 2], b = hull.back();
            if ((logc[b] - logc[a]) * (i - a) <= (logc[i] - logc[a]) * (b - a))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(i);
    }
    std::vector<Cx<double>> z;
    z.reserve(static_cast<size_t>(n));
    for (size_t e = 0; e + 1 < hull.size(); ++e) {
        int a = hull[e], b = hull[e + 1];
        double r = std::exp((logc[a] - logc[b]) / (b - a));
        r = std::clamp(r, 1e-6, 1e6);
        for (int j = 0; j < b - a; ++j) {
            double th = 2 * M_PI * (j + 0.5) / (b - a) + 0.7 + 0.4 * static_cast<double>(e);
            z.push_back({r * std::cos(th), r * std::sin(th)});
        }
    }
    while (static_cast<int>(z.size()) < n) {
        double th = 0.9 * static_cast<double>(z.size()) + 0.5;
        z.push_back({std::cos(th), std::sin(th)});
    }
    z.resize(static_cast<size_t>(n));
    return z;
}

struct StagePlan {
    int kind;          // 0 = double, 1 = long double, 2 = BigFloat
    mp_bitcnt_t prec;  // bits, BigFloat stages only
    double log_u;      // log of the stage unit roundoff
};

inline const std::vector<StagePlan>& stage_ladder() {
    static const std::vector<StagePlan> s = [] {
        std::vector<StagePlan> v;
        v.push_back({0, 0, -52 * kLn2});
        v.push_back({1, 0, -63 * kLn2});
        for (mp_bitcnt_t b : {128, 192, 256, 384, 512, 768, 1024})
            v.push_back({2, b, -static_cast<double>(b - 1) * kLn2});
        return v;
    }();
    return s;
}

template <class R>
R make_real(double v, mp_bitcnt_t);
template <>
inline double make_real<double>(double v, mp_bitcnt_t) {
    return v;
}
template <>
inline long double make_real<long double>(double v, mp_bitcnt_t) {
    return v;
}
template <>
inline BigFloat make_real<BigFloat>(double v, mp_bitcnt_t prec) {
    return BigFloat(v, prec);
}

template <class R>
R real_from_mpz(const mpz_class& z, mp_bitcnt_t);
template <>
inline double real_from_mpz<double>(const mpz_class& z, mp_bitcnt_t) {
    return z.get_d();
}
template <>
inline long double real_from_mpz<long double>(const mpz_class& z, mp_bitcnt_t) {
    double hi = z.get_d();
    if (!std::isfinite(hi)) return hi;
    mpz_class rem = z - mpz_class(hi);
    return static_cast<long double>(hi) + static_cast<long double>(rem.get_d());
}
template <>
inline BigFloat real_from_mpz<BigFloat>(const mpz_class& z, mp_bitcnt_t prec) {
    return BigFloat(z, prec);
}

template <class R>
double to_double(const R& v) {
    if constexpr (std::is_same_v<R, BigFloat>)
        return v.to_double();
    else
        return static_cast<double>(v);
}

template <class R>
Cx<R> horner(const std::vector<Cx<R>>& c, const Cx<R>& z) {
    Cx<R> r = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) r = r * z + c[i];
    return r;
}

// log(e^a + e^b) without overflow
inline double log_add(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

// One precision stage. zs holds the current approximations (updated in
// place); radii receives certified inclusion radii (+inf if this stage
// could not certify a root). Returns max radius. Certification is cheap
// (one extra O(n^2) pass), so it is interleaved with the iteration and the
// stage exits as soon as the tolerance is met or progress stalls.
template <class R>
double aberth_stage(const IntPoly& p, const std::vector<double>& logc, const StagePlan& plan,
                    int max_iters, int certify_every, std::vector<Cx<double>>& zs,
                    std::vector<double>& radii, double tol) {
    const int n = p.degree();
    const mp_bitcnt_t prec = plan.prec;
    const IntPoly dp = p.derivative();

    std::vector<Cx<R>> c(static_cast<size_t>(n) + 1), cd(static_cast<size_t>(n));
    for (long i = 0; i <= n; ++i) c[i] = {real_from_mpz<R>(p.coeff(i), prec), make_real<R>(0, prec)};
    for (long i = 0; i < n; ++i) cd[i] = {real_from_mpz<R>(dp.coeff(i), prec), make_real<R>(0, prec)};

    // sanitize starts: mpf cannot represent non-finite values
    for (size_t i = 0; i < zs.size(); ++i)
        if (!std::isfinite(zs[i].re) || !std::isfinite(zs[i].im)) {
            const double th = 0.9 * static_cast<double>(i) + 0.25;
            zs[i] = {1.2 * std::cos(th), 1.2 * std::sin(th)};
        }
    std::vector<Cx<R>> z(zs.size());
    for (size_t i = 0; i < zs.size(); ++i)
        z[i] = {make_real<R>(zs[i].re, prec), make_real<R>(zs[i].im, prec)};

    // nudge exact collisions apart; Aberth needs pairwise distinct points
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (to_double(z[i].re) == to_double(z[j].re) && to_double(z[i].im) == to_double(z[j].im))
                z[i].re = z[i].re + make_real<R>(1e-6 * (1.0 + static_cast<double>(i)), prec);

    const double llc = log_abs_mpz(p.leading());
    const double lslack = 1e-9 + 2e-12 * n;  // double rounding in this very computation
    const double lgamma = std::log(4.0 * n + 8.0) + plan.log_u;

    auto certify = [&]() -> double {
        radii.assign(z.size(), std::numeric_limits<double>::infinity());
        for (size_t i = 0; i < z.size(); ++i) {
            Cx<R> pv = horner(c, z[i]);
            const double lv = cx_log_abs(pv);
            const double lz = cx_log_abs(z[i]);
            // log sum_k |a_k| |z|^k over the nonzero terms
            double ls = kNegInf;
            for (int k = 0; k <= n; ++k) {
                if (logc[k] == kNegInf) continue;
                ls = log_add(ls, (k == 0 || lz == kNegInf) ? logc[k] : logc[k] + k * lz);
            }
            const double lnum = log_add(lv, ls + lgamma);
            double lprod = 0;
            bool ok = true;
            for (size_t j = 0; j < z.size(); ++j) {
                if (j == i) continue;
                double ld = cx_log_abs(z[i] - z[j]);
                if (!std::isfinite(ld)) {
                    ok = false;
                    break;
                }
                lprod += ld;
            }
            if (!ok || !std::isfinite(lnum)) continue;
            double lr = std::log(static_cast<double>(n)) + lnum - llc - lprod + lslack;
            if (lr < 700.0) radii[i] = std::exp(lr);
        }
        double mx = 0;
        for (double r : radii) mx = std::max(mx, r);
        return mx;
    };

    const double stop_log = plan.log_u + std::log(8.0);
    double best_worst = std::numeric_limits<double>::infinity();
    int stall = 0;
    double mx = std::numeric_limits<double>::infinity();
    for (int it = 0; it < max_iters; ++it) {
        if (plan.kind == 0)
            ++solve_stats().sweeps_double;
        else if (plan.kind == 1)
            ++solve_stats().sweeps_long;
        else
            ++solve_stats().sweeps_mpf;
        double worst = kNegInf;
        for (size_t i = 0; i < z.size(); ++i) {
            Cx<R> pv = horner(c, z[i]);
            const double lv_it = cx_log_abs(pv);
            if (lv_it == kNegInf) continue;  // landed on an exact root
            if (!std::isfinite(lv_it)) {     // overflowed far out: pull inward
                const R half = make_real<R>(0.5, prec);
                z[i] = {z[i].re * half, z[i].im * half};
                continue;
            }
            Cx<R> pd = horner(cd, z[i]);
            double lpd = cx_log_abs(pd);
            if (lpd == kNegInf || !std::isfinite(lpd)) continue;
            Cx<R> newton = pv / pd;
            Cx<R> s{make_real<R>(0, prec), make_real<R>(0, prec)};
            const R zero = make_real<R>(0, prec);
            for (size_t j = 0; j < z.size(); ++j) {
                if (j == i) continue;
                Cx<R> d = z[i] - z[j];
                R nrm = d.re * d.re + d.im * d.im;
                if (!(nrm > zero)) continue;  // coincident points; certification catches this
                s = s + Cx<R>{d.re / nrm, -(d.im / nrm)};
            }
            Cx<R> one{make_real<R>(1, prec), make_real<R>(0, prec)};
            Cx<R> denom = one - newton * s;
            const double ldenom = cx_log_abs(denom);
            Cx<R> w = (std::isfinite(ldenom) && ldenom > -600) ? newton / denom : newton;
            const double lw = cx_log_abs(w);
            if (std::isnan(lw) || lw > 600.0) continue;  // invalid step: keep the old point
            z[i] = z[i] - w;
            worst = std::max(worst, lw - cx_log_abs(z[i]));
        }
        const bool converged = worst < stop_log;
        bool stalled = false;
        if (worst < best_worst - 0.25) {
            best_worst = worst;
            stall = 0;
        } else if (++stall >= 12) {
            stalled = true;
        }
        if (converged || stalled || (it + 1) % certify_every == 0) {
            mx = certify();
            if (mx <= tol || converged || stalled) break;
        }
    }
    if (!std::isfinite(mx)) mx = certify();

    for (size_t i = 0; i < z.size(); ++i) zs[i] = {to_double(z[i].re), to_double(z[i].im)};
    return mx;
}

// widen discs so every one covers its whole overlap-component (union-find)
inline void widen_to_components(const std::vector<Cx<double>>& zs, std::vector<double>& radii) {
    const size_t n = zs.size();
    std::vector<size_t> parent(n);
    for (size_t i = 0; i < n; ++i) parent[i] = i;
    std::function<size_t(size_t)> find = [&](size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto dist = [&](size_t i, size_t j) {
        return std::hypot(zs[i].re - zs[j].re, zs[i].im - zs[j].im);
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < i; ++j)
            if (dist(i, j) <= radii[i] + radii[j]) parent[find(i)] = find(j);
    std::vector<std::vector<size_t>> comps(n);
    for (size_t i = 0; i < n; ++i) comps[find(i)].push_back(i);
    std::vector<double> out = radii;
    for (const auto& comp : comps) {
        if (comp.size() <= 1) continue;
        for (size_t i : comp) {
            double r = radii[i];
            for (size_t j : comp) r = std::max(r, dist(i, j) + radii[j]);
            out[i] = r;
        }
    }
    radii = std::move(out);
}

// Solve a squarefree primitive polynomial; returns one Root per degree.
inline std::vector<Root> solve_squarefree(const IntPoly& g, double tol, const IntPoly& original) {
    const int n = g.degree();
    std::vector<double> logc(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) logc[i] = log_abs_mpz(g.coeff(i));

    std::vector<Cx<double>> zs = initial_points(logc);
    std::vector<double> radii;
    bool first = true;
    for (const StagePlan& plan : stage_ladder()) {
        // skip stages whose range the coefficients already exceed
        if (plan.kind <= 1 && *std::max_element(logc.begin(), logc.end()) > 600.0) continue;
        const int iters = first ? 400 : 64;
        const int certify_every = first ? 1 << 20 : 3;  // later stages start near-converged
        double mx;
        if (plan.kind == 0)
            mx = aberth_stage<double>(g, logc, plan, iters, certify_every, zs, radii, tol);
        else if (plan.kind == 1)
            mx = aberth_stage<long double>(g, logc, plan, iters, certify_every, zs, radii, tol);
        else
            mx = aberth_stage<BigFloat>(g, logc, plan, iters, certify_every, zs, radii, tol);
        first = false;
        if (mx <= tol) {
            widen_to_components(zs, radii);
            double worst = *std::max_element(radii.begin(), radii.end());
            if (worst <= tol) {
                std::vector<Root> out(static_cast<size_t>(n));
                for (int i = 0; i < n; ++i) {
                    // absorb the final double rounding of the stored point
                    double round_slack = std::hypot(zs[i].re, zs[i].im) * 4.9e-16;
                    out[i] = {zs[i].re, zs[i].im, radii[i] + round_slack};
                }
                return out;
            }
        }
    }
    throw RootSolveError("root certification did not reach tolerance at maximum precision",
                         original);
}

}  // namespace rootdetail

constexpr double kDefaultRootTol = 1e-12;
constexpr double kDefaultMargin = 1e-9;

inline RootSet find_roots(const IntPoly& p, double tol = kDefaultRootTol) {
    if (p.degree() < 1) throw std::domain_error("find_roots: degree must be >= 1");
    if (!(tol > 0)) throw std::domain_error("find_roots: tol must be positive");
    tol = std::max(tol, 1e-14);  // roots are reported in double precision

    RootSet rs;
    // zero roots split off exactly
    long low = 0;
    while (p.coeff(low) == 0) ++low;
    for (long i = 0; i < low; ++i) rs.roots.push_back({0.0, 0.0, 0.0});
    IntPoly q = low ? IntPoly(std::vector<mpz_class>(p.coeffs().begin() + low, p.coeffs().end()))
                    : p;
    if (q.degree() >= 1) {
        for (const auto& [part, mult] : squarefree_decomposition(q)) {
            if (part.degree() < 1) continue;
            auto roots = rootdetail::solve_squarefree(part, tol, p);
            for (int m = 0; m < mult; ++m) rs.roots.insert(rs.roots.end(), roots.begin(), roots.end());
        }
    }
    std::sort(rs.roots.begin(), rs.roots.end(), [](const Root& a, const Root& b) {
        if (a.re != b.re) return a.re < b.re;
        if (a.im != b.im) return a.im < b.im;
        return a.err < b.err;
    });
    if (static_cast<int>(rs.roots.size()) != p.degree())
        throw RootSolveError("internal: root count does not match degree", p);
    for (const Root& r : rs.roots) rs.max_err = std::max(rs.max_err, r.err);
    return rs;
}

inline HouseValue house_of(const RootSet& rs) {
    double value = 0, upper = 0, lower = 0;
    for (const Root& r : rs.roots) {
        const double m = r.modulus();
        value = std::max(value, m);
        upper = std::max(upper, m + r.err);
        lower = std::max(lower, m - r.err);
    }
    return {value, std::max(upper - value, value - lower)};
}

inline HouseValue house(const IntPoly& p, double tol = kDefaultRootTol) {
    return house_of(find_roots(p, tol));
}

inline double mahler_measure(const IntPoly& p, double tol = kDefaultRootTol) {
    RootSet rs = find_roots(p, tol);
    long double m = std::fabs(p.leading().get_d());
    for (const Root& r : rs.roots) {
        const double mod = r.modulus();
        if (mod > 1) m *= mod;
    }
    return static_cast<double>(m);
}

inline DiscClassification classify_roots(const RootSet& rs, double margin) {
    DiscClassification c;
    for (const Root& r : rs.roots) {
        const double m = r.modulus();
        if (m - r.err > 1 + margin)
            ++c.outside;
        else if (m + r.err < 1 - margin)
            ++c.inside;
        else if (std::fabs(m - 1) + r.err <= margin)
            ++c.unimodular;
        else
            ++c.ambiguous;
    }
    return c;
}

inline DiscClassification classify_unit_disc(const IntPoly& p, double margin = kDefaultMargin) {
    if (!(margin > 0)) throw std::domain_error("classify_unit_disc: margin must be positive");
    RootSet rs = find_roots(p, std::min(kDefaultRootTol, margin / 64));
    return classify_roots(rs, margin);
}

// For a reciprocal polynomial whose roots were all certified off or on the
// circle, the off-circle roots pair z <-> 1/z, so the counts must balance.
inline bool classification_consistent(const IntPoly& p, const DiscClassification& c) {
    if (c.ambiguous > 0) return true;  // nothing to cross-check yet
    if (p.degree() >= 1 && p.is_reciprocal()) return c.outside == c.inside;
    return true;
}

// |house(p(x^k)) - house(p)^{1/k}| within combined error bounds
inline bool house_of_power_compose_check(const IntPoly& p, long k, double tol = kDefaultRootTol) {
    if (p.degree() < 1) throw std::domain_error("house_of_power_compose_check: degree >= 1");
    if (k == 1) return true;
    HouseValue direct = house(p.compose_power(k), tol);
    HouseValue base = house(p, tol);
    const double root = std::pow(base.value, 1.0 / static_cast<double>(k));
    // error of the k-th root, first order, plus slack for pow itself
    const double rerr = base.err / static_cast<double>(k) / std::max(base.value, 1e-300) * root +
                        4e-16 * root;
    return std::fabs(direct.value - root) <= direct.err + rerr + 1e-15;
}

}  // namespace hh
