#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>

#include "errors.hpp"

namespace lfkit {

using cplx = std::complex<double>;

/// Compensated accumulator (Neumaier's variant of Kahan summation).
///
/// Long sums over primes run to 10^7-ish terms; plain doubles lose up to
/// ~log2(n) bits to cancellation, compensation keeps the result stable to
/// a few ulps regardless of term order.
class kahan_sum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// |a - b| <= tol, with tol understood as an absolute tolerance.
inline bool near_abs(const cplx& a, const cplx& b, double tol) {
    return std::abs(a - b) <= tol;
}

/// Relative closeness with graceful handling of tiny reference values.
inline bool near_rel(double a, double b, double rel_tol) {
    double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= rel_tol * std::max(scale, 1e-300);
}

inline bool near_rel(const cplx& a, const cplx& b, double rel_tol) {
    double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= rel_tol * std::max(scale, 1e-300);
}

/// Binomial coefficient in 64 bits; throws bounds_error on overflow.
inline std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max())
            throw bounds_error("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                               ") exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

/// Floor of sqrt for 64-bit integers, exact (corrects the double rounding).
inline std::uint64_t isqrt64(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace lfkit
