#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "coefficients.hpp"
#include "errors.hpp"
#include "numeric.hpp"

namespace lfkit {

/// Functional equation data (d, N, (mu : nu), epsilon): degree, conductor,
/// the shifts of the R-type and C-type gamma factors, and the root number.
/// The gamma factors themselves stay symbolic; nothing here evaluates gamma
/// functions numerically.
struct FeData {
    int degree_d = 0;
    std::uint64_t conductor_N = 1;
    std::vector<cplx> mu;
    std::vector<cplx> nu;
    cplx epsilon{1.0, 0.0};

    FeData(int degree, std::uint64_t conductor, std::vector<cplx> mu_, std::vector<cplx> nu_,
           cplx eps)
        : degree_d(degree), conductor_N(conductor), mu(std::move(mu_)), nu(std::move(nu_)),
          epsilon(eps) {
        if (conductor_N < 1)
            throw domain_error("FeData: conductor must be >= 1");
        if (degree_d != static_cast<int>(mu.size() + 2 * nu.size()))
            throw domain_error("FeData: degree " + std::to_string(degree_d) +
                               " != J + 2K = " + std::to_string(mu.size() + 2 * nu.size()));
        if (std::abs(std::abs(epsilon) - 1.0) > 1e-9)
            throw domain_error("FeData: |epsilon| must be 1, got " +
                               std::to_string(std::abs(epsilon)));
    }
};

struct FeValidation {
    bool ok = true;
    std::vector<std::string> violations;

    explicit operator bool() const { return ok; }
};

namespace detail {
inline std::string fmt_re(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}
} // namespace detail

/// Temperedness at infinity: every Re(mu) in {0, 1} and every Re(nu) a
/// positive half-integer (1/2, 1, 3/2, ...), all within 1e-9.
inline FeValidation validate_tempered(const FeData& fe) {
    FeValidation r;
    for (std::size_t j = 0; j < fe.mu.size(); ++j) {
        const double re = fe.mu[j].real();
        if (std::abs(re) > 1e-9 && std::abs(re - 1.0) > 1e-9) {
            r.ok = false;
            r.violations.push_back("Re(mu[" + std::to_string(j) + "]) = " + detail::fmt_re(re) +
                                   " not in {0, 1}");
        }
    }
    for (std::size_t k = 0; k < fe.nu.size(); ++k) {
        const double re = fe.nu[k].real();
        const double doubled = 2.0 * re;
        const double nearest = std::round(doubled);
        if (std::abs(doubled - nearest) > 2e-9 || nearest < 0.5) {
            r.ok = false;
            r.violations.push_back("Re(nu[" + std::to_string(k) + "]) = " + detail::fmt_re(re) +
                                   " not a positive half-integer");
        }
    }
    return r;
}

/// The weak analytic-normalization requirement: all gamma shifts strictly
/// to the right of -1/2.
inline FeValidation validate_partial_selberg(const FeData& fe) {
    FeValidation r;
    for (std::size_t j = 0; j < fe.mu.size(); ++j)
        if (fe.mu[j].real() <= -0.5) {
            r.ok = false;
            r.violations.push_back("Re(mu[" + std::to_string(j) + "]) = " +
                                   detail::fmt_re(fe.mu[j].real()) + " <= -1/2");
        }
    for (std::size_t k = 0; k < fe.nu.size(); ++k)
        if (fe.nu[k].real() <= -0.5) {
            r.ok = false;
            r.violations.push_back("Re(nu[" + std::to_string(k) + "]) = " +
                                   detail::fmt_re(fe.nu[k].real()) + " <= -1/2");
        }
    return r;
}

/// Functional equation data of the spin L-function of a weight-k Siegel
/// eigenform (genus 2, full level): degree 4, conductor 1, C-type shifts
/// 1/2 and k - 3/2, sign (-1)^k.
inline FeData spin_fe(int k) {
    if (k < 2) throw domain_error("spin_fe: weight must be >= 2, got " + std::to_string(k));
    std::vector<cplx> nu{cplx(0.5, 0.0), cplx(k - 1.5, 0.0)};
    cplx eps(k % 2 == 0 ? 1.0 : -1.0, 0.0);
    return FeData(4, 1, {}, std::move(nu), eps);
}

/// Functional equation data of a genus-g curve L-function in analytic
/// normalization: degree 2g, C-type shift 1/2 with multiplicity g, caller
/// supplied conductor and sign.
inline FeData hasse_weil_fe(int g, std::uint64_t N, int sign) {
    if (g < 1) throw domain_error("hasse_weil_fe: genus must be >= 1, got " + std::to_string(g));
    if (N < 1) throw domain_error("hasse_weil_fe: conductor must be >= 1");
    if (sign != 1 && sign != -1)
        throw domain_error("hasse_weil_fe: sign must be +1 or -1, got " + std::to_string(sign));
    std::vector<cplx> nu(static_cast<std::size_t>(g), cplx(0.5, 0.0));
    return FeData(2 * g, N, {}, std::move(nu), cplx(static_cast<double>(sign), 0.0));
}

/// Componentwise equality within 1e-9; mu and nu are compared as multisets
/// (sorted by real then imaginary part).
inline bool equivalent(const FeData& a, const FeData& b, double tol = 1e-9) {
    if (a.degree_d != b.degree_d || a.conductor_N != b.conductor_N) return false;
    if (a.mu.size() != b.mu.size() || a.nu.size() != b.nu.size()) return false;
    if (std::abs(a.epsilon - b.epsilon) > tol) return false;
    auto sorted = [](std::vector<cplx> v) {
        std::sort(v.begin(), v.end(), [](const cplx& x, const cplx& y) {
            if (x.real() != y.real()) return x.real() < y.real();
            return x.imag() < y.imag();
        });
        return v;
    };
    auto am = sorted(a.mu), bm = sorted(b.mu), an = sorted(a.nu), bn = sorted(b.nu);
    for (std::size_t i = 0; i < am.size(); ++i)
        if (std::abs(am[i] - bm[i]) > tol) return false;
    for (std::size_t i = 0; i < an.size(); ++i)
        if (std::abs(an[i] - bn[i]) > tol) return false;
    return true;
}

} // namespace lfkit
