#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "errors.hpp"
#include "numeric.hpp"
#include "satake.hpp"

namespace lfkit {

/// Normalized Satake pair (alpha_p, beta_p) of a genus 2, full level
/// eigenform of weight k at a good prime p.
struct SiegelLocal {
    std::uint64_t p = 0;
    int weight_k = 0;
    cplx alpha;
    cplx beta;

    SiegelLocal(std::uint64_t p_, int k, cplx a, cplx b)
        : p(p_), weight_k(k), alpha(a), beta(b) {
        if (p < 2)
            throw domain_error("SiegelLocal: p must be a prime, got " + std::to_string(p));
        if (weight_k < 2)
            throw domain_error("SiegelLocal: weight must be >= 2, got " + std::to_string(k));
        for (const cplx& v : {alpha, beta}) {
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw domain_error("SiegelLocal: non-finite parameter at p=" + std::to_string(p));
            if (v == cplx(0.0, 0.0))
                throw domain_error("SiegelLocal: parameters must be nonzero at p=" +
                                   std::to_string(p));
        }
    }
};

struct SiegelEigenvalues {
    cplx mu_p;
    cplx mu_p2;
};

/// alpha + 1/alpha + beta + 1/beta, which equals p^{3/2-k} mu(p): the
/// weight-independent quantity that coefficient comparisons run on.
inline cplx normalized_trace(const SiegelLocal& sl) {
    return sl.alpha + 1.0 / sl.alpha + sl.beta + 1.0 / sl.beta;
}

/// Hecke eigenvalues at p and p^2:
///
///   mu(p)   = p^{k-3/2} (alpha + 1/alpha + beta + 1/beta)
///   mu(p^2) = p^{2k-3} (alpha^2 + alpha^-2 + (alpha + 1/alpha)(beta + 1/beta)
///             + beta^2 + beta^-2 + 2 - 1/p)
///
/// The second line is p^{2k-3} (a(p^2) - 1/p) for the spin local series a:
/// the parenthesized sum is the complete homogeneous h_2 of the spin roots
/// {alpha, 1/alpha, beta, 1/beta} shifted by -1/p.
inline SiegelEigenvalues eigenvalues(const SiegelLocal& sl) {
    const double pd = static_cast<double>(sl.p);
    const cplx ta = sl.alpha + 1.0 / sl.alpha;
    const cplx tb = sl.beta + 1.0 / sl.beta;
    SiegelEigenvalues ev;
    ev.mu_p = std::pow(pd, sl.weight_k - 1.5) * (ta + tb);
    const cplx a2 = sl.alpha * sl.alpha;
    const cplx b2 = sl.beta * sl.beta;
    ev.mu_p2 = std::pow(pd, 2.0 * sl.weight_k - 3.0) *
               (a2 + 1.0 / a2 + ta * tb + b2 + 1.0 / b2 + 2.0 - 1.0 / pd);
    return ev;
}

/// Degree 4 spin Euler data: inverse roots {alpha, 1/alpha, beta, 1/beta}.
inline SatakeLocal spin_local(const SiegelLocal& sl) {
    return SatakeLocal(sl.p, {sl.alpha, 1.0 / sl.alpha, sl.beta, 1.0 / sl.beta}, 4);
}

struct ClassicalSatake {
    cplx alpha0;
    cplx alpha1;
    cplx alpha2;
};

/// Classical parameters alpha0 = p^{k-3/2} alpha, alpha1 = beta/alpha,
/// alpha2 = 1/(alpha beta); they satisfy alpha0^2 alpha1 alpha2 = p^{2k-3}
/// identically.
inline ClassicalSatake classical_satake(const SiegelLocal& sl) {
    const double pd = static_cast<double>(sl.p);
    ClassicalSatake cs;
    cs.alpha0 = std::pow(pd, sl.weight_k - 1.5) * sl.alpha;
    cs.alpha1 = sl.beta / sl.alpha;
    cs.alpha2 = 1.0 / (sl.alpha * sl.beta);
    return cs;
}

namespace detail {

inline void require_unit_beta(std::uint64_t p, const cplx& beta, const char* who) {
    if (p < 2) throw domain_error(std::string(who) + ": p must be a prime, got " +
                                  std::to_string(p));
    if (!std::isfinite(beta.real()) || !std::isfinite(beta.imag()) ||
        std::abs(std::abs(beta) - 1.0) > 1e-9)
        throw domain_error(std::string(who) + ": beta must have modulus 1");
}

} // namespace detail

/// Prime coefficient of a Saito-Kurokawa type lift:
/// a(p) = sqrt(p) + 1/sqrt(p) + beta + 1/beta, so a(p) = sqrt(p) + O(1).
inline cplx saito_kurokawa_ap(std::uint64_t p, const cplx& beta) {
    detail::require_unit_beta(p, beta, "saito_kurokawa_ap");
    const double sp = std::sqrt(static_cast<double>(p));
    return cplx(sp + 1.0 / sp, 0.0) + beta + 1.0 / beta;
}

/// The degree 4 local data behind saito_kurokawa_ap: inverse roots
/// {sqrt(p), 1/sqrt(p), beta, 1/beta}, whose first series coefficient is
/// a(p). The sqrt(p) root breaks every Ramanujan bound below theta = 1/2.
inline SatakeLocal saito_kurokawa_local(std::uint64_t p, const cplx& beta) {
    detail::require_unit_beta(p, beta, "saito_kurokawa_local");
    const double sp = std::sqrt(static_cast<double>(p));
    return SatakeLocal(p, {cplx(sp, 0.0), cplx(1.0 / sp, 0.0), beta, 1.0 / beta}, 4);
}

} // namespace lfkit
