#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coefficients.hpp"
#include "detail/elliptic.hpp"
#include "detail/parallel.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "primes.hpp"
#include "satake.hpp"

namespace lfkit {

/// Work bound for point counts over F_p.
inline constexpr std::uint64_t kMaxCountPrime = 1'000'000;
/// Work bound for point counts over F_{p^2}; p^4 must clear 64 bits with slack.
inline constexpr std::uint64_t kMaxExtPrime = 3163;

namespace detail {

using int128 = __int128;

inline int128 mul_checked(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw consistency_error("curve setup: 128-bit overflow in resultant computation");
    return r;
}

/// Resultant Res(f, f') of an integer polynomial (ascending coefficients,
/// leading coefficient nonzero) via fraction-free Gaussian elimination of
/// the Sylvester matrix. Vanishes exactly when f has a repeated root.
inline int128 resultant_with_derivative(const std::vector<std::int64_t>& f) {
    const int m = static_cast<int>(f.size()) - 1;
    std::vector<std::int64_t> df(m);
    for (int i = 1; i <= m; ++i) df[i - 1] = static_cast<std::int64_t>(i) * f[i];

    const int n = 2 * m - 1;
    std::vector<std::vector<int128>> M(n, std::vector<int128>(n, 0));
    // rows of f (descending coefficients), m-1 shifts
    for (int r = 0; r < m - 1; ++r)
        for (int j = 0; j <= m; ++j) M[r][r + j] = f[m - j];
    // rows of f', m shifts
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= m - 1; ++j) M[m - 1 + r][r + j] = df[m - 1 - j];

    int128 prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (M[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(M[k], M[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                M[i][j] = (mul_checked(M[i][j], M[k][k]) - mul_checked(M[i][k], M[k][j])) / prev;
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

/// Distinct prime factors by trial division; certified complete for
/// |n| < 1e12, which covers every desk-scale curve.
inline std::vector<std::uint64_t> distinct_prime_factors(int128 value) {
    unsigned __int128 n = value < 0 ? static_cast<unsigned __int128>(-value)
                                    : static_cast<unsigned __int128>(value);
    std::vector<std::uint64_t> out;
    if (n <= 1) return out;
    for (std::uint64_t d = 2; d <= 1'000'000 && static_cast<unsigned __int128>(d) * d <= n;
         d = (d == 2 ? 3 : d + 2)) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) {
        if (n >= static_cast<unsigned __int128>(1'000'000) * 1'000'000)
            throw domain_error("curve setup: discriminant too large to factor");
        out.push_back(static_cast<std::uint64_t>(n));
    }
    return out;
}

/// chi[v] = +1 for nonzero squares mod p, -1 for non-squares, 0 at v = 0.
/// Built additively: y^2 steps by 2y - 1, no multiplication in the loop.
inline std::vector<std::int8_t> legendre_table(std::uint32_t p) {
    std::vector<std::int8_t> chi(p, -1);
    chi[0] = 0;
    std::uint32_t s = 0;
    std::uint32_t d = 1;
    for (std::uint32_t y = 1; y <= (p - 1) / 2; ++y) {
        s += d;
        if (s >= p) s -= p;
        chi[s] = 1;
        d += 2;
    }
    return chi;
}

/// Forward-difference evaluator: after init at x0, d[0] walks through
/// f(x0), f(x0+1), ... mod p using only additions.
struct poly_stepper {
    std::array<std::uint32_t, 8> d{};
    int m = 0;
    std::uint32_t p = 0;

    void init(const std::vector<std::uint32_t>& coeffs, std::uint32_t p_, std::uint64_t x0) {
        p = p_;
        m = static_cast<int>(coeffs.size()) - 1;
        std::array<std::uint64_t, 8> v{};
        for (int i = 0; i <= m; ++i) {
            std::uint64_t x = (x0 + static_cast<std::uint64_t>(i)) % p;
            std::uint64_t acc = 0;
            for (int k = m; k >= 0; --k) acc = (acc * x + coeffs[k]) % p;
            v[i] = acc;
        }
        for (int level = 1; level <= m; ++level)
            for (int i = m; i >= level; --i)
                v[i] = (v[i] + p - v[i - 1]) % p;
        for (int i = 0; i <= m; ++i) d[i] = static_cast<std::uint32_t>(v[i]);
    }

    std::uint32_t value() const { return d[0]; }

    void step() {
        for (int j = 0; j < m; ++j) {
            std::uint32_t t = d[j] + d[j + 1];
            if (t >= p) t -= p;
            d[j] = t;
        }
    }
};

} // namespace detail

/// Hyperelliptic model y^2 = f(x) with integer coefficients, deg f in 3..6.
///
/// genus_g = floor((deg f - 1) / 2). disc_primes collects 2 together with
/// every prime dividing the leading coefficient or Res(f, f'); away from
/// those the reduction mod p is a smooth genus-g curve.
struct HyperCurve {
    std::vector<std::int64_t> f_coeffs;
    int genus_g = 0;
    std::vector<std::uint64_t> disc_primes;

    explicit HyperCurve(std::vector<std::int64_t> coeffs) : f_coeffs(std::move(coeffs)) {
        while (!f_coeffs.empty() && f_coeffs.back() == 0) f_coeffs.pop_back();
        const int deg = static_cast<int>(f_coeffs.size()) - 1;
        if (deg < 3 || deg > 6)
            throw domain_error("HyperCurve: deg f must be 3..6, got " + std::to_string(deg));
        genus_g = (deg - 1) / 2;

        const detail::int128 res = detail::resultant_with_derivative(f_coeffs);
        if (res == 0)
            throw domain_error("HyperCurve: f has a repeated root, the model is singular");

        disc_primes = {2};
        for (std::uint64_t q : detail::distinct_prime_factors(res))
            if (q != 2) disc_primes.push_back(q);
        for (std::uint64_t q : detail::distinct_prime_factors(f_coeffs.back()))
            if (q != 2 &&
                std::find(disc_primes.begin(), disc_primes.end(), q) == disc_primes.end())
                disc_primes.push_back(q);
        std::sort(disc_primes.begin(), disc_primes.end());
    }

    int degree() const { return static_cast<int>(f_coeffs.size()) - 1; }

    bool is_good(std::uint64_t p) const {
        return !std::binary_search(disc_primes.begin(), disc_primes.end(), p);
    }

    /// True when f has only odd-degree terms, so f(-x) = -f(x) over Z.
    bool is_odd_function() const {
        for (std::size_t i = 0; i < f_coeffs.size(); i += 2)
            if (f_coeffs[i] != 0) return false;
        return true;
    }
};

/// Point counts of the smooth model at a good prime.
struct CountRecord {
    std::uint64_t p = 0;
    std::uint64_t N1 = 0;
    std::optional<std::uint64_t> N2;
    std::int64_t a_p = 0;
    std::optional<std::vector<std::int64_t>> local_poly;
};

namespace detail {

inline std::vector<std::uint32_t> coeffs_mod_p(const std::vector<std::int64_t>& f,
                                               std::uint64_t p) {
    std::vector<std::uint32_t> c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::int64_t v = f[i] % static_cast<std::int64_t>(p);
        if (v < 0) v += static_cast<std::int64_t>(p);
        c[i] = static_cast<std::uint32_t>(v);
    }
    return c;
}

inline void check_hasse(const HyperCurve& c, std::uint64_t p, std::int64_t a_p) {
    const int128 lhs = static_cast<int128>(a_p) * a_p;
    const int128 rhs = static_cast<int128>(4) * c.genus_g * c.genus_g * static_cast<int128>(p);
    if (lhs > rhs)
        throw consistency_error("count_points: |a_p| exceeds the Weil bound at p=" +
                                std::to_string(p));
}

} // namespace detail

namespace detail {

/// Above this, cubic models switch from the character scan to group-order
/// computation. Kept well clear of the small primes where the twist
/// argument inside ec_group_order is not guaranteed to settle.
inline constexpr std::uint64_t kBsgsCrossover = 3000;

/// Character-table scan: N1 = p + sum_x chi(f(x)) + (points at infinity),
/// with f evaluated by forward differences (no multiplications in the
/// scan). The reference kernel for any degree. When f is odd and
/// p = 1 mod 4, chi(f(-x)) = chi(f(x)) halves the range.
inline CountRecord count_points_scan(const HyperCurve& c, std::uint64_t p) {
    const bool odd_degree = c.degree() % 2 == 1;
    std::int64_t chi_sum = 0;
    std::int64_t inf_points = 1;

    const auto chi = legendre_table(static_cast<std::uint32_t>(p));
    const std::int8_t* ch = chi.data();
    const auto coeffs = coeffs_mod_p(c.f_coeffs, p);
    poly_stepper fd;
    if (c.is_odd_function() && p % 4 == 1) {
        // f(0) = 0 contributes nothing to the character sum
        fd.init(coeffs, static_cast<std::uint32_t>(p), 1);
        const std::uint64_t half = (p - 1) / 2;
        for (std::uint64_t x = 0; x < half; ++x) {
            chi_sum += ch[fd.value()];
            fd.step();
        }
        chi_sum *= 2;
    } else {
        fd.init(coeffs, static_cast<std::uint32_t>(p), 0);
        for (std::uint64_t x = 0; x < p; ++x) {
            chi_sum += ch[fd.value()];
            fd.step();
        }
    }
    if (!odd_degree) inf_points = 1 + ch[coeffs.back()];

    CountRecord rec;
    rec.p = p;
    rec.N1 = static_cast<std::uint64_t>(static_cast<std::int64_t>(p) + chi_sum + inf_points);
    rec.a_p = static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(rec.N1);
    return rec;
}

/// Cubic-model count via the group order: y^2 = f(x) is taken to a
/// depressed Weierstrass model (an F_p-isomorphism, so the count carries
/// over) and ec_group_order does the rest. Falls back to the scan in the
/// never-observed case where order sampling stays ambiguous.
inline CountRecord count_points_bsgs(const HyperCurve& c, std::uint64_t p) {
    const auto cf = coeffs_mod_p(c.f_coeffs, p);
    // (x, y) -> (c3 x, c3 y) makes the cubic monic without changing counts
    const std::uint64_t c3 = cf[3];
    const std::uint64_t a2 = cf[2];
    const std::uint64_t a1 = cf[1] * c3 % p;
    const std::uint64_t a0 = cf[0] * c3 % p * c3 % p;
    // x -> x - a2/3 removes the quadratic term
    const std::uint64_t inv3 = mod_inv(3, p);
    const std::uint64_t t = a2 * a2 % p;
    const std::uint64_t A = (a1 + p - t * inv3 % p) % p;
    std::uint64_t Bv = (a0 + p - a1 * a2 % p * inv3 % p) % p;
    Bv = (Bv + 2 * (t * a2 % p) % p * (inv3 * inv3 % p * inv3 % p) % p) % p;

    const std::uint64_t N = ec_group_order(p, A, Bv);
    if (N == 0) return count_points_scan(c, p);

    CountRecord rec;
    rec.p = p;
    rec.N1 = N;
    rec.a_p = static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(N);
    return rec;
}

} // namespace detail

/// Number of points of y^2 = f(x) over F_p (projective smooth model),
/// good odd p <= 1e6.
///
/// Points at infinity: 1 for odd deg f, 1 + chi(lc f) for even deg f.
/// Three kernels, picked by shape: an odd f at p = 3 mod 4 has a_p = 0
/// outright (chi(-1) = -1 cancels the character sum in x <-> -x pairs);
/// cubic models at large p use baby-step giant-step group orders; all
/// else runs the character scan.
inline CountRecord count_points(const HyperCurve& c, std::uint64_t p) {
    if (!c.is_good(p))
        throw bad_reduction_error("count_points: p=" + std::to_string(p) +
                                  " is a prime of bad reduction");
    if (p > kMaxCountPrime)
        throw bounds_error("count_points: p=" + std::to_string(p) + " exceeds work bound " +
                           std::to_string(kMaxCountPrime));

    CountRecord rec;
    if (c.is_odd_function() && p % 4 == 3) {
        rec.p = p;
        rec.N1 = p + 1;
        rec.a_p = 0;
    } else if (c.degree() == 3 && p > detail::kBsgsCrossover) {
        rec = detail::count_points_bsgs(c, p);
    } else {
        rec = detail::count_points_scan(c, p);
    }
    detail::check_hasse(c, p, rec.a_p);
    return rec;
}

namespace detail {

/// Element of F_{p^2} = F_p[t]/(t^2 - r) as (a, b) for a + b t.
struct fp2 {
    std::uint64_t a = 0, b = 0;
};

struct fp2_ctx {
    std::uint64_t p, r;

    fp2 mul(fp2 x, fp2 y) const {
        return {(x.a * y.a + r * ((x.b * y.b) % p)) % p, (x.a * y.b + x.b * y.a) % p};
    }
    fp2 add(fp2 x, fp2 y) const {
        std::uint64_t a = x.a + y.a, b = x.b + y.b;
        return {a >= p ? a - p : a, b >= p ? b - p : b};
    }
    fp2 scale(std::uint64_t s, fp2 x) const { return {(s * x.a) % p, (s * x.b) % p}; }
};

} // namespace detail

/// Number of points over F_{p^2}, realized as F_p[t]/(t^2 - r) for the
/// smallest non-residue r. Good odd p <= 3163 (so indices p^2 and the
/// products involved stay comfortably inside 64 bits).
///
/// For each x1 the polynomial g(x0) = f(x0 + x1 t) is expanded once and
/// scanned over x0 by componentwise forward differences against a squares
/// table of F_{p^2}. The returned record also carries N1 and a_p.
inline CountRecord count_points_ext(const HyperCurve& c, std::uint64_t p) {
    if (!c.is_good(p))
        throw bad_reduction_error("count_points_ext: p=" + std::to_string(p) +
                                  " is a prime of bad reduction");
    if (p > kMaxExtPrime)
        throw bounds_error("count_points_ext: p=" + std::to_string(p) + " exceeds work bound " +
                           std::to_string(kMaxExtPrime));

    CountRecord rec = count_points(c, p);

    const auto chi = detail::legendre_table(static_cast<std::uint32_t>(p));
    std::uint64_t r = 0;
    for (std::uint64_t v = 2; v < p; ++v)
        if (chi[v] < 0) {
            r = v;
            break;
        }
    const detail::fp2_ctx F{p, r};
    const std::uint64_t q = p * p;

    // squares table over F_q, index a*p + b for a + b t
    std::vector<std::int8_t> chi2(q, -1);
    chi2[0] = 0;
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b) {
            if (a == 0 && b == 0) continue;
            detail::fp2 sq = F.mul({a, b}, {a, b});
            chi2[sq.a * p + sq.b] = 1;
        }

    const auto coeffs = detail::coeffs_mod_p(c.f_coeffs, p);
    const int m = c.degree();

    // binomial coefficients C(k, i) for k <= 6
    std::uint64_t binom[7][7] = {};
    for (int k = 0; k <= 6; ++k) {
        binom[k][0] = 1;
        for (int i = 1; i <= k; ++i)
            binom[k][i] = binom[k - 1][i - 1] + (i <= k - 1 ? binom[k - 1][i] : 0);
    }

    std::int64_t chi_sum = 0;
    std::vector<detail::fp2> g(m + 1), val(m + 1), diff(m + 1);
    for (std::uint64_t x1 = 0; x1 < p; ++x1) {
        // powers of w = x1 t
        std::vector<detail::fp2> wpow(m + 1);
        wpow[0] = {1, 0};
        for (int j = 1; j <= m; ++j) wpow[j] = F.mul(wpow[j - 1], {0, x1});
        // g_i = sum_{k >= i} C(k, i) c_k w^{k-i}
        for (int i = 0; i <= m; ++i) {
            detail::fp2 acc{0, 0};
            for (int k = i; k <= m; ++k)
                acc = F.add(acc, F.scale((binom[k][i] * coeffs[k]) % p, wpow[k - i]));
            g[i] = acc;
        }
        // forward differences of g over x0 = 0..m
        for (int i = 0; i <= m; ++i) {
            detail::fp2 acc{0, 0};
            for (int k = m; k >= 0; --k) {
                acc = F.scale(static_cast<std::uint64_t>(i), acc);
                acc = F.add(acc, g[k]);
            }
            val[i] = acc;
        }
        for (int level = 1; level <= m; ++level)
            for (int i = m; i >= level; --i)
                val[i] = {(val[i].a + p - val[i - 1].a) % p, (val[i].b + p - val[i - 1].b) % p};
        diff = val;
        for (std::uint64_t x0 = 0; x0 < p; ++x0) {
            chi_sum += chi2[diff[0].a * p + diff[0].b];
            for (int j = 0; j < m; ++j) {
                std::uint64_t a = diff[j].a + diff[j + 1].a, b = diff[j].b + diff[j + 1].b;
                diff[j] = {a >= p ? a - p : a, b >= p ? b - p : b};
            }
        }
    }

    std::int64_t inf_points = 1;
    if (m % 2 == 0) inf_points = 1 + chi2[static_cast<std::uint64_t>(coeffs.back()) * p];
    rec.N2 = static_cast<std::uint64_t>(static_cast<std::int64_t>(q) + chi_sum + inf_points);
    return rec;
}

/// Local Euler factor reconstructed from point counts, plus its inverse
/// roots (checked against the Riemann hypothesis for curves: |alpha| must
/// equal sqrt(p) to 1e-6 relative).
struct CurveLocalFactor {
    std::vector<std::int64_t> coeffs;
    std::vector<cplx> inverse_roots;
};

inline CurveLocalFactor local_factor_from_counts(const HyperCurve& c, const CountRecord& rec) {
    const std::uint64_t p = rec.p;
    const double sp = std::sqrt(static_cast<double>(p));
    CurveLocalFactor out;

    if (c.genus_g == 1) {
        const std::int64_t a = rec.a_p;
        out.coeffs = {1, -a, static_cast<std::int64_t>(p)};
        const cplx disc(static_cast<double>(a) * a - 4.0 * p, 0.0);
        const cplx root = std::sqrt(disc);
        out.inverse_roots = {(cplx(a, 0) + root) / 2.0, (cplx(a, 0) - root) / 2.0};
    } else {
        if (!rec.N2)
            throw incomplete_input_error(
                "local_factor_from_counts: genus 2 needs N2 (count over F_{p^2}) at p=" +
                std::to_string(p));
        const std::int64_t s1 = rec.a_p;
        const std::int64_t s2 =
            static_cast<std::int64_t>(p * p + 1) - static_cast<std::int64_t>(*rec.N2);
        if ((s1 * s1 - s2) % 2 != 0)
            throw consistency_error("local_factor_from_counts: s1^2 - s2 odd at p=" +
                                    std::to_string(p) + ", counts are inconsistent");
        const std::int64_t e1 = s1;
        const std::int64_t e2 = (s1 * s1 - s2) / 2;
        out.coeffs = {1, -e1, e2, -static_cast<std::int64_t>(p) * e1,
                      static_cast<std::int64_t>(p * p)};
        // inverse roots pair up as (alpha, p/alpha): factor the quartic into
        // two quadratics z^2 - beta z + p with beta1 + beta2 = e1,
        // beta1 beta2 = e2 - 2p
        const cplx disc_b(static_cast<double>(e1) * e1 - 4.0 * (static_cast<double>(e2) - 2.0 * p),
                          0.0);
        const cplx sq = std::sqrt(disc_b);
        for (const cplx& beta : {(cplx(e1, 0) + sq) / 2.0, (cplx(e1, 0) - sq) / 2.0}) {
            const cplx inner = std::sqrt(beta * beta - cplx(4.0 * p, 0.0));
            out.inverse_roots.push_back((beta + inner) / 2.0);
            out.inverse_roots.push_back((beta - inner) / 2.0);
        }
    }

    for (const cplx& alpha : out.inverse_roots)
        if (std::abs(std::abs(alpha) - sp) > 1e-6 * sp)
            throw consistency_error("local_factor_from_counts: |alpha| != sqrt(p) at p=" +
                                    std::to_string(p));
    return out;
}

/// Analytically normalized Dirichlet coefficients b(n) = a(n) / sqrt(n) of
/// the curve's L-series, n <= limit.
///
/// Good primes get the full local factor (genus 2 needs F_{p^2} counts only
/// when p^2 <= limit; otherwise N1 alone already determines a(p)). Bad
/// primes contribute the trivial factor 1, a deliberate simplification:
/// conductor-level local factors are out of scope here.
inline CoefficientTable hasse_weil_table(const HyperCurve& c, std::uint64_t limit) {
    if (limit < 1) throw bounds_error("hasse_weil_table: limit must be >= 1");
    if (limit > kAssembleMaxLimit)
        throw bounds_error("hasse_weil_table: limit " + std::to_string(limit) +
                           " exceeds supported maximum " + std::to_string(kAssembleMaxLimit));

    const auto primes = sieve(std::max<std::uint64_t>(limit, 2)).primes;
    std::vector<std::optional<LocalSeries>> slots(primes.size());

    detail::parallel_for(primes.size(), [&](std::size_t i) {
        const std::uint64_t p = primes[i];
        if (p > limit) return;
        const int J = prime_power_cap(p, limit);
        if (!c.is_good(p)) {
            std::vector<cplx> trivial(static_cast<std::size_t>(J) + 1, cplx(0.0, 0.0));
            trivial[0] = cplx(1.0, 0.0);
            slots[i].emplace(p, std::move(trivial));
            return;
        }
        if (c.genus_g == 2 && J == 1) {
            // only a(p) = s1 is needed; skip the F_{p^2} count entirely
            const auto rec = count_points(c, p);
            slots[i].emplace(p, std::vector<cplx>{cplx(1.0, 0.0),
                                                  cplx(static_cast<double>(rec.a_p), 0.0)});
            return;
        }
        const auto rec = c.genus_g == 2 ? count_points_ext(c, p) : count_points(c, p);
        const auto lf = local_factor_from_counts(c, rec);
        std::vector<cplx> fpoly(lf.coeffs.size());
        for (std::size_t k = 0; k < lf.coeffs.size(); ++k)
            fpoly[k] = cplx(static_cast<double>(lf.coeffs[k]), 0.0);
        std::vector<cplx> unit(static_cast<std::size_t>(J) + 1, cplx(0.0, 0.0));
        unit[0] = cplx(1.0, 0.0);
        slots[i].emplace(p, detail::series_div_unit(unit, fpoly));
    });

    std::map<std::uint64_t, LocalSeries> locals;
    for (std::size_t i = 0; i < primes.size(); ++i)
        if (slots[i]) locals.emplace(primes[i], std::move(*slots[i]));

    auto table = assemble_global(locals, limit, 2 * c.genus_g);
    table.theta_claim = 0.5;
    table.provenance = "hasse_weil";
    return analytic_normalize(table, 0.5);
}

} // namespace lfkit
