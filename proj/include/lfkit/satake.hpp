#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace lfkit {

namespace detail {

/// Truncated product of two power series, out_len output coefficients.
inline std::vector<cplx> series_mul(const std::vector<cplx>& a, const std::vector<cplx>& b,
                                    std::size_t out_len) {
    std::vector<cplx> r(out_len, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < a.size() && i < out_len; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < out_len; ++j) r[i + j] += a[i] * b[j];
    return r;
}

/// Exact triangular division of a power series by a polynomial with unit
/// constant term: returns q with q * d = s (truncated to s.size() terms).
inline std::vector<cplx> series_div_unit(const std::vector<cplx>& s, const std::vector<cplx>& d) {
    std::vector<cplx> q(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
        cplx acc = s[j];
        for (std::size_t k = 1; k < d.size() && k <= j; ++k) acc -= d[k] * q[j - k];
        q[j] = acc;
    }
    return q;
}

} // namespace detail

/// Inverse roots alpha_j of a local Euler factor prod_j (1 - alpha_j z).
///
/// A good prime carries exactly degree_d nonzero roots. A bad prime has a
/// shorter factor; the convention is to drop zero roots, so the list length
/// m < degree_d marks bad reduction.
struct SatakeLocal {
    std::uint64_t p = 0;
    std::vector<cplx> alphas;
    int degree_d = 0;
    bool is_good = false;

    /// p is assumed prime; zero roots in `roots` are dropped per the
    /// convention above.
    SatakeLocal(std::uint64_t p_, std::vector<cplx> roots, int degree)
        : p(p_), alphas(std::move(roots)), degree_d(degree) {
        if (p < 2) throw domain_error("SatakeLocal: p must be a prime, got " + std::to_string(p));
        if (degree_d < 1)
            throw domain_error("SatakeLocal: degree must be >= 1, got " + std::to_string(degree));
        for (const cplx& a : alphas)
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
                throw domain_error("SatakeLocal: non-finite root at p=" + std::to_string(p));
        alphas.erase(std::remove(alphas.begin(), alphas.end(), cplx(0.0, 0.0)), alphas.end());
        if (static_cast<int>(alphas.size()) > degree_d)
            throw arity_error("SatakeLocal: " + std::to_string(alphas.size()) +
                              " roots exceed degree " + std::to_string(degree_d));
        is_good = static_cast<int>(alphas.size()) == degree_d;
    }
};

/// Truncated local L-series: coeffs[j] = a(p^j), coeffs[0] = 1.
struct LocalSeries {
    std::uint64_t p = 0;
    std::vector<cplx> coeffs;

    LocalSeries(std::uint64_t p_, std::vector<cplx> c) : p(p_), coeffs(std::move(c)) {
        if (p < 2) throw domain_error("LocalSeries: p must be a prime, got " + std::to_string(p));
        if (coeffs.empty() || coeffs[0] != cplx(1.0, 0.0))
            throw domain_error("LocalSeries: constant term must be exactly 1 at p=" +
                               std::to_string(p));
        for (const cplx& a : coeffs)
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
                throw domain_error("LocalSeries: non-finite coefficient at p=" + std::to_string(p));
    }

    int truncation_J() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Coefficients of F_p(z) = prod_j (1 - alpha_j z), ascending in z.
/// Length is m+1 where m is the number of listed roots.
inline std::vector<cplx> local_factor_poly(const SatakeLocal& s) {
    std::vector<cplx> poly{cplx(1.0, 0.0)};
    for (const cplx& a : s.alphas) {
        poly.push_back(cplx(0.0, 0.0));
        for (std::size_t k = poly.size() - 1; k >= 1; --k) poly[k] -= a * poly[k - 1];
    }
    return poly;
}

/// Local L-series a(p^j) for j = 0..J, the power series inverse of the
/// local factor. a(p^j) equals the complete homogeneous symmetric function
/// h_j of the inverse roots.
inline LocalSeries expand_local(const SatakeLocal& s, int J) {
    if (J < 0) throw domain_error("expand_local: J must be >= 0");
    const auto f = local_factor_poly(s);
    std::vector<cplx> a(static_cast<std::size_t>(J) + 1, cplx(0.0, 0.0));
    a[0] = cplx(1.0, 0.0);
    const int m = static_cast<int>(f.size()) - 1;
    for (int l = 1; l <= J; ++l) {
        cplx acc(0.0, 0.0);
        for (int k = 1; k <= std::min(l, m); ++k) acc += f[k] * a[l - k];
        a[l] = -acc;
    }
    return LocalSeries(s.p, std::move(a));
}

struct RamanujanCheck {
    bool ok = false;
    /// max over roots of log|alpha| / log p; -inf when no roots are listed.
    double max_exponent = 0.0;
};

/// Does every root satisfy |alpha| <= p^theta? The comparison allows a
/// 1e-9 multiplicative tolerance so unit-circle roots computed in floating
/// point pass theta = 0 cleanly.
inline RamanujanCheck check_partial_ramanujan(const SatakeLocal& s, double theta) {
    const double logp = std::log(static_cast<double>(s.p));
    const double cap = std::pow(static_cast<double>(s.p), theta) * (1.0 + 1e-9);
    RamanujanCheck r;
    r.ok = true;
    r.max_exponent = -std::numeric_limits<double>::infinity();
    for (const cplx& a : s.alphas) {
        const double mod = std::abs(a);
        r.max_exponent = std::max(r.max_exponent, std::log(mod) / logp);
        if (mod > cap) r.ok = false;
    }
    return r;
}

} // namespace lfkit
