#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "satake.hpp"

namespace lfkit {

/// Global Dirichlet coefficients a(n) for 1 <= n <= limit, stored sparsely
/// as an ascending (n, value) list. An absent n means a(n) = 0; a(1) = 1
/// always. Sparse storage matters because prime-power streams reach indices
/// like p^2 ~ 1e8 where a dense array would be absurd.
class CoefficientTable {
public:
    std::uint64_t limit = 0;
    int degree_d = 0;
    std::optional<double> theta_claim;
    std::string provenance;

    explicit CoefficientTable(std::uint64_t limit_, int degree = 0, std::string prov = "")
        : limit(limit_), degree_d(degree), provenance(std::move(prov)) {
        if (limit < 1) throw bounds_error("CoefficientTable: limit must be >= 1");
        entries_.emplace_back(1, cplx(1.0, 0.0));
    }

    /// Bulk constructor; entries must be ascending in n, within [1, limit],
    /// and include a(1) = 1 (or omit n=1, which inserts it).
    static CoefficientTable from_entries(std::uint64_t limit, int degree,
                                         std::vector<std::pair<std::uint64_t, cplx>> entries,
                                         std::string prov = "") {
        CoefficientTable t(limit, degree, std::move(prov));
        if (entries.empty() || entries.front().first != 1)
            entries.insert(entries.begin(), {1, cplx(1.0, 0.0)});
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i > 0 && entries[i].first <= entries[i - 1].first)
                throw domain_error("CoefficientTable: entries not strictly ascending at n=" +
                                   std::to_string(entries[i].first));
            if (entries[i].first < 1 || entries[i].first > limit)
                throw bounds_error("CoefficientTable: entry n=" + std::to_string(entries[i].first) +
                                   " outside [1, " + std::to_string(limit) + "]");
        }
        if (std::abs(entries.front().second - cplx(1.0, 0.0)) > 1e-9)
            throw domain_error("CoefficientTable: a(1) must be 1");
        entries.front().second = cplx(1.0, 0.0);
        t.entries_ = std::move(entries);
        return t;
    }

    /// a(n); zero when n has no stored entry.
    cplx at(std::uint64_t n) const {
        if (n < 1 || n > limit)
            throw bounds_error("CoefficientTable: n=" + std::to_string(n) +
                               " outside [1, " + std::to_string(limit) + "]");
        auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                                   [](const auto& e, std::uint64_t v) { return e.first < v; });
        if (it == entries_.end() || it->first != n) return cplx(0.0, 0.0);
        return it->second;
    }

    /// Insert or overwrite a(n). Appending in ascending order is O(1).
    void set(std::uint64_t n, cplx v) {
        if (n < 1 || n > limit)
            throw bounds_error("CoefficientTable: n=" + std::to_string(n) +
                               " outside [1, " + std::to_string(limit) + "]");
        if (n == 1 && std::abs(v - cplx(1.0, 0.0)) > 1e-9)
            throw domain_error("CoefficientTable: a(1) must stay 1");
        if (n > entries_.back().first) {
            entries_.emplace_back(n, v);
            return;
        }
        auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                                   [](const auto& e, std::uint64_t v_) { return e.first < v_; });
        if (it != entries_.end() && it->first == n)
            it->second = v;
        else
            entries_.insert(it, {n, v});
    }

    const std::vector<std::pair<std::uint64_t, cplx>>& entries() const { return entries_; }

private:
    std::vector<std::pair<std::uint64_t, cplx>> entries_;
};

inline constexpr std::uint64_t kAssembleMaxLimit = 10'000'000;

/// Largest j with p^j <= limit.
inline int prime_power_cap(std::uint64_t p, std::uint64_t limit) {
    int j = 0;
    std::uint64_t pw = 1;
    while (pw <= limit / p) {
        pw *= p;
        ++j;
    }
    return j;
}

/// Multiplicative assembly a(n) = prod_p a(p^{v_p(n)}) from local series.
///
/// Requires a local series at every prime <= limit, each truncated at least
/// to the largest power of p below limit. The optional degree argument is
/// metadata carried into the resulting table (LocalSeries itself does not
/// know the underlying degree).
inline CoefficientTable assemble_global(const std::map<std::uint64_t, LocalSeries>& locals,
                                        std::uint64_t limit, int degree = 0) {
    if (limit < 1) throw bounds_error("assemble_global: limit must be >= 1");
    if (limit > kAssembleMaxLimit)
        throw bounds_error("assemble_global: limit " + std::to_string(limit) +
                           " exceeds supported maximum " + std::to_string(kAssembleMaxLimit));

    // smallest prime factor sieve doubles as the prime list
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= limit; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }

    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (spf[p] != p) continue;
        auto it = locals.find(p);
        if (it == locals.end())
            throw incomplete_input_error("assemble_global: no local series at prime " +
                                         std::to_string(p));
        int need = prime_power_cap(p, limit);
        if (it->second.truncation_J() < need)
            throw incomplete_input_error("assemble_global: local series at prime " +
                                         std::to_string(p) + " truncated at J=" +
                                         std::to_string(it->second.truncation_J()) +
                                         ", need J=" + std::to_string(need));
        if (it->second.p != p)
            throw incomplete_input_error("assemble_global: local series keyed at " +
                                         std::to_string(p) + " claims p=" +
                                         std::to_string(it->second.p));
    }

    std::vector<cplx> a(limit + 1, cplx(0.0, 0.0));
    a[1] = cplx(1.0, 0.0);
    for (std::uint64_t n = 2; n <= limit; ++n) {
        const std::uint64_t p = spf[n];
        std::uint64_t m = n;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        a[n] = locals.at(p).coeffs[e] * a[m];
    }

    std::vector<std::pair<std::uint64_t, cplx>> entries;
    entries.reserve(limit);
    for (std::uint64_t n = 1; n <= limit; ++n) entries.emplace_back(n, a[n]);
    return CoefficientTable::from_entries(limit, degree, std::move(entries), "assemble_global");
}

/// Analytic normalization b(n) = a(n) / n^w. A theta claim, if present,
/// shifts down by w (roots scale by p^-w).
inline CoefficientTable analytic_normalize(const CoefficientTable& t, double w) {
    std::vector<std::pair<std::uint64_t, cplx>> entries;
    entries.reserve(t.entries().size());
    for (const auto& [n, v] : t.entries())
        entries.emplace_back(n, v * std::pow(static_cast<double>(n), -w));
    auto out = CoefficientTable::from_entries(t.limit, t.degree_d, std::move(entries),
                                              t.provenance.empty() ? "normalized"
                                                                   : t.provenance + ", normalized");
    if (t.theta_claim) out.theta_claim = *t.theta_claim - w;
    return out;
}

} // namespace lfkit
