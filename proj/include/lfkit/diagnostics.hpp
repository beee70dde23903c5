#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coefficients.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "primes.hpp"

namespace lfkit {

/// Advisory only: finite-X sums cannot prove an asymptotic bound.
enum class Verdict { consistent_with_equal, inconsistent, indeterminate };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::consistent_with_equal: return "consistent-with-equal";
        case Verdict::inconsistent: return "inconsistent";
        default: return "indeterminate";
    }
}

struct DiagnosticsOptions {
    /// Threshold on S1(X)/X for the verdict rule.
    double tau = 0.05;
    /// Disable the a(p^2) comparison for trace-only streams.
    bool use_s2 = true;
};

/// Closeness sums between two coefficient streams on a grid of cutoffs:
///   S1(X)      = sum_{p <= X} p log(p) |a1(p) - a2(p)|^2
///   S2(X)      = sum_{p <= X} log(p) |a1(p^2) - a2(p^2)|^2
///   selberg(X) = sum_{p <= X} |a1(p) - a2(p)|^2 / p
/// together with S1/X, S2/X, selberg/loglog ratios and an advisory verdict.
/// S2 vectors stay empty when disabled; notes explain anything unusual.
struct DiscrepancyReport {
    std::vector<std::uint64_t> X_grid;
    std::vector<double> S1;
    std::vector<double> S2;
    std::vector<double> S1_over_X;
    std::vector<double> S2_over_X;
    std::vector<double> selberg;
    std::vector<double> selberg_over_loglog;
    Verdict verdict = Verdict::indeterminate;
    std::vector<std::string> notes;
};

/// Verdict rule, a pure function of the S1(X)/X sequence: everything below
/// tau reads as consistent-with-equal; a nondecreasing sequence ending
/// above 10 tau reads as inconsistent; anything else is indeterminate.
inline Verdict verdict_from_ratios(const std::vector<double>& s1_over_x, double tau) {
    if (s1_over_x.empty()) return Verdict::indeterminate;
    bool all_small = true, nondecreasing = true;
    for (std::size_t i = 0; i < s1_over_x.size(); ++i) {
        if (s1_over_x[i] >= tau) all_small = false;
        if (i > 0 && s1_over_x[i] < s1_over_x[i - 1]) nondecreasing = false;
    }
    if (all_small) return Verdict::consistent_with_equal;
    if (nondecreasing && s1_over_x.back() > 10.0 * tau) return Verdict::inconsistent;
    return Verdict::indeterminate;
}

namespace detail {

inline double loglog(std::uint64_t X) {
    return std::log(std::log(static_cast<double>(X)));
}

inline std::vector<std::uint64_t> checked_grid(std::vector<std::uint64_t> grid,
                                               const char* who) {
    if (grid.empty()) throw domain_error(std::string(who) + ": grid must be nonempty");
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    if (grid.front() < 16)
        throw domain_error(std::string(who) + ": grid cutoffs must be >= 16, got " +
                           std::to_string(grid.front()));
    return grid;
}

} // namespace detail

inline DiscrepancyReport ssmo_sums(const CoefficientTable& a, const CoefficientTable& b,
                                   std::vector<std::uint64_t> grid,
                                   const DiagnosticsOptions& opt = {}) {
    grid = detail::checked_grid(std::move(grid), "ssmo_sums");
    const std::uint64_t max_x = grid.back();
    if (a.limit < max_x || b.limit < max_x)
        throw incomplete_input_error("ssmo_sums: tables cover n <= " +
                                     std::to_string(std::min(a.limit, b.limit)) +
                                     ", grid needs " + std::to_string(max_x));

    const std::uint64_t sq_cap = std::min(a.limit, b.limit);
    const auto table = sieve(max_x);

    DiscrepancyReport rep;
    rep.X_grid = grid;
    kahan_sum s1, s2, sel;
    bool s2_truncated = false;
    std::size_t gi = 0;
    auto flush = [&](std::uint64_t X) {
        rep.S1.push_back(s1.value());
        rep.S1_over_X.push_back(s1.value() / static_cast<double>(X));
        rep.selberg.push_back(sel.value());
        rep.selberg_over_loglog.push_back(sel.value() / detail::loglog(X));
        if (opt.use_s2) {
            rep.S2.push_back(s2.value());
            rep.S2_over_X.push_back(s2.value() / static_cast<double>(X));
        }
    };

    for (std::uint32_t p : table.primes) {
        while (gi < grid.size() && p > grid[gi]) flush(grid[gi++]);
        const double n2 = std::norm(a.at(p) - b.at(p));
        const double lp = std::log(static_cast<double>(p));
        s1.add(static_cast<double>(p) * lp * n2);
        sel.add(n2 / static_cast<double>(p));
        if (opt.use_s2) {
            const std::uint64_t psq = static_cast<std::uint64_t>(p) * p;
            if (psq <= sq_cap)
                s2.add(lp * std::norm(a.at(psq) - b.at(psq)));
            else
                s2_truncated = true;
        }
    }
    while (gi < grid.size()) flush(grid[gi++]);

    if (!opt.use_s2)
        rep.notes.push_back("a(p^2) comparison disabled: the squares condition is untested");
    else if (s2_truncated)
        rep.notes.push_back("S2 covers only primes with p^2 <= " + std::to_string(sq_cap));
    rep.verdict = verdict_from_ratios(rep.S1_over_X, opt.tau);
    return rep;
}

/// Selberg-style closeness sum_{p <= X} |a(p) - b(p)|^2 / p and its ratio
/// to loglog X. Equal streams give 0; independent unitary streams drift
/// toward ratio 2.
inline std::pair<double, double> selberg_sum(const CoefficientTable& a,
                                             const CoefficientTable& b, std::uint64_t X) {
    if (X < 16) throw domain_error("selberg_sum: X must be >= 16, got " + std::to_string(X));
    if (a.limit < X || b.limit < X)
        throw incomplete_input_error("selberg_sum: tables cover n <= " +
                                     std::to_string(std::min(a.limit, b.limit)) +
                                     ", need " + std::to_string(X));
    const auto table = sieve(X);
    kahan_sum sel;
    for (std::uint32_t p : table.primes)
        sel.add(std::norm(a.at(p) - b.at(p)) / static_cast<double>(p));
    return {sel.value(), sel.value() / detail::loglog(X)};
}

/// Finite-X estimates feeding the zero/pole counting bound.
struct MBoundEstimate {
    double M1_sq = 0.0;
    double M2_sq = 0.0;
    double zero_pole_bound = 0.0;
};

/// M1^2 = (1/X) sum_{p <= X} |a(p)|^2 log p,
/// M2^2 = (1/X) sum_{p <= X} p^{-2} |a(p^2)|^2 log p,
/// bound = (M1 + 2 M2)^2. Primes whose square exceeds the table limit
/// contribute nothing to M2^2; pass a table covering X^2 for the full
/// estimate.
inline MBoundEstimate m_bounds(const CoefficientTable& a, std::uint64_t X) {
    if (X < 2) throw domain_error("m_bounds: X must be >= 2");
    if (a.limit < X)
        throw incomplete_input_error("m_bounds: table covers n <= " + std::to_string(a.limit) +
                                     ", need " + std::to_string(X));
    const auto table = sieve(X);
    kahan_sum m1, m2;
    for (std::uint32_t p : table.primes) {
        const double lp = std::log(static_cast<double>(p));
        m1.add(std::norm(a.at(p)) * lp);
        const std::uint64_t psq = static_cast<std::uint64_t>(p) * p;
        if (psq <= a.limit)
            m2.add(std::norm(a.at(psq)) * lp / (static_cast<double>(p) * p));
    }
    MBoundEstimate est;
    est.M1_sq = m1.value() / static_cast<double>(X);
    est.M2_sq = m2.value() / static_cast<double>(X);
    const double root = std::sqrt(est.M1_sq) + 2.0 * std::sqrt(est.M2_sq);
    est.zero_pole_bound = root * root;
    return est;
}

/// Partial sum of sum_p |a(p^k)|^2 log^2(p) / p^k over p <= X. Convergence
/// of the full series is the hypothesis being probed; a bounded stream has
/// per-prime increments falling like log^2(p)/p^k. Primes with p^k beyond
/// the table limit are skipped and reported through *truncated.
inline double hypothesis_h_partial(const CoefficientTable& a, int k, std::uint64_t X,
                                   bool* truncated = nullptr) {
    if (k < 2) throw domain_error("hypothesis_h_partial: k must be >= 2, got " +
                                  std::to_string(k));
    if (X < 2) throw domain_error("hypothesis_h_partial: X must be >= 2");
    const auto table = sieve(X);
    kahan_sum acc;
    bool trunc = false;
    for (std::uint32_t p : table.primes) {
        unsigned __int128 pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        if (pk > a.limit) {
            trunc = true;
            continue;
        }
        const std::uint64_t n = static_cast<std::uint64_t>(pk);
        const double lp = std::log(static_cast<double>(p));
        acc.add(std::norm(a.at(n)) * lp * lp / static_cast<double>(n));
    }
    if (truncated) *truncated = trunc;
    return acc.value();
}

/// Weight-normalized comparison of two eigenvalue streams (p, mu(p)):
/// each stream is scaled to p^{3/2-k} mu(p) and run through the S1 and
/// Selberg machinery. No a(p^2) data exists here, so S2 is disabled; a
/// weight mismatch is noted since equal normalized traces alone cannot
/// distinguish forms of different weight.
inline DiscrepancyReport siegel_compare(const std::vector<std::pair<std::uint64_t, cplx>>& mu1,
                                        int k1,
                                        const std::vector<std::pair<std::uint64_t, cplx>>& mu2,
                                        int k2, std::vector<std::uint64_t> grid,
                                        DiagnosticsOptions opt = {}) {
    grid = detail::checked_grid(std::move(grid), "siegel_compare");
    const std::uint64_t max_x = grid.back();

    std::vector<std::uint64_t> seen1, seen2;
    auto normalize = [max_x](const std::vector<std::pair<std::uint64_t, cplx>>& mu, int k,
                             std::vector<std::uint64_t>& seen) {
        std::vector<std::pair<std::uint64_t, cplx>> entries;
        entries.reserve(mu.size());
        for (const auto& [p, v] : mu)
            if (p <= max_x)
                entries.emplace_back(p, v * std::pow(static_cast<double>(p), 1.5 - k));
        std::sort(entries.begin(), entries.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        seen.resize(entries.size());
        std::transform(entries.begin(), entries.end(), seen.begin(),
                       [](const auto& e) { return e.first; });
        return CoefficientTable::from_entries(max_x, 4, std::move(entries), "siegel stream");
    };
    const auto a = normalize(mu1, k1, seen1);
    const auto b = normalize(mu2, k2, seen2);

    for (std::uint32_t p : sieve(max_x).primes)
        if (!std::binary_search(seen1.begin(), seen1.end(), p) ||
            !std::binary_search(seen2.begin(), seen2.end(), p))
            throw incomplete_input_error("siegel_compare: no eigenvalue at prime " +
                                         std::to_string(p));

    opt.use_s2 = false;
    auto rep = ssmo_sums(a, b, grid, opt);
    if (k1 != k2)
        rep.notes.push_back("weights differ (k1=" + std::to_string(k1) +
                            ", k2=" + std::to_string(k2) +
                            "): matching normalized traces do not identify the forms");
    return rep;
}

} // namespace lfkit
