#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "satake.hpp"

namespace lfkit {

enum class PowerOp { sym, ext };

/// Which power object to build: sym^n or ext^n, n >= 1.
struct PowerKind {
    PowerOp kind = PowerOp::sym;
    int n = 1;
};

/// Satake parameters of the n-th symmetric or exterior power of a good
/// local factor.
///
/// sym^n: all monomials alpha_1^{i_1} ... alpha_d^{i_d} with i_1+...+i_d = n,
/// compositions enumerated in lexicographic order, duplicate values kept.
/// Degree C(n+d-1, d-1).
///
/// ext^n: products over strictly increasing index tuples i_1 < ... < i_n.
/// Degree C(d, n), so n <= d is required.
///
/// Power objects are only defined away from bad reduction; a bad local
/// throws, since the partial power L-function simply omits those primes.
inline SatakeLocal power_satake(const SatakeLocal& s, PowerKind k) {
    if (k.n < 1)
        throw domain_error("power_satake: n must be >= 1, got " + std::to_string(k.n));
    if (!s.is_good)
        throw bad_reduction_error("power_satake: p=" + std::to_string(s.p) +
                                  " is a bad prime; partial power L-functions exclude it");
    const int d = s.degree_d;
    std::vector<cplx> out;

    if (k.kind == PowerOp::ext) {
        if (k.n > d)
            throw arity_error("power_satake: ext^" + std::to_string(k.n) +
                              " undefined for degree " + std::to_string(d));
        out.reserve(binomial(static_cast<unsigned>(d), static_cast<unsigned>(k.n)));
        std::vector<int> idx(k.n);
        auto rec = [&](auto&& self, int pos, int start) -> void {
            if (pos == k.n) {
                cplx prod(1.0, 0.0);
                for (int i : idx) prod *= s.alphas[i];
                out.push_back(prod);
                return;
            }
            for (int i = start; i <= d - (k.n - pos); ++i) {
                idx[pos] = i;
                self(self, pos + 1, i + 1);
            }
        };
        rec(rec, 0, 0);
    } else {
        out.reserve(binomial(static_cast<unsigned>(k.n + d - 1), static_cast<unsigned>(d - 1)));
        std::vector<int> expo(d, 0);
        auto rec = [&](auto&& self, int pos, int left) -> void {
            if (pos == d - 1) {
                expo[pos] = left;
                cplx prod(1.0, 0.0);
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < expo[i]; ++j) prod *= s.alphas[i];
                out.push_back(prod);
                return;
            }
            for (int v = 0; v <= left; ++v) {
                expo[pos] = v;
                self(self, pos + 1, left - v);
            }
        };
        rec(rec, 0, k.n);
    }
    return SatakeLocal(s.p, std::move(out), static_cast<int>(out.size()));
}

/// Right-hand sides of the first-coefficient identities that express power
/// object coefficients through the base local series:
///
///   a(p, sym^n)   = a(p^n)                                (sym_first[n])
///   a(p, ext^2)   = a(p)^2 - a(p^2)
///   a(p, ext^3)   = a(p^3) + a(p)^3 - 2 a(p) a(p^2)
///   a(p^2, sym^2) = a(p^4) - a(p) a(p^3) + a(p^2)^2
///
/// These are universal symmetric-function identities, valid in any degree.
struct CoeffIdentities {
    std::vector<cplx> sym_first;
    cplx ext2_p;
    cplx ext3_p;
    cplx sym2_p2;
};

inline CoeffIdentities coeff_identities(const LocalSeries& series, int d) {
    if (d < 1)
        throw domain_error("coeff_identities: degree must be >= 1, got " + std::to_string(d));
    if (series.truncation_J() < 4)
        throw arity_error("coeff_identities: needs coefficients through a(p^4), have J=" +
                          std::to_string(series.truncation_J()));
    const auto& a = series.coeffs;
    CoeffIdentities out;
    out.sym_first = a;
    out.ext2_p = a[1] * a[1] - a[2];
    out.ext3_p = a[3] + a[1] * a[1] * a[1] - 2.0 * a[1] * a[2];
    out.sym2_p2 = a[4] - a[1] * a[3] + a[2] * a[2];
    return out;
}

enum class PeelMode { p1_p2_tail, p1_sym2_style, p1_squared_ext2_style };

/// One peeled layer of a local series: explicit head factors plus the tail
/// series that remains after exact division.
struct PeelResult {
    std::vector<LocalSeries> head_factors;
    LocalSeries tail;
};

/// Splits a local series so that (product of head factors) * tail
/// reproduces the input through X^J.
///
///   p1_p2_tail:            heads (1 + a(p) X) and (1 + a(p^2) X^2).
///                          The tail starts at X^3: c(p) and c(p^2) vanish
///                          identically (exact zeros, the triangular
///                          recursion cancels them term by term) and
///                          c(p^3) = a(p^3) - a(p) a(p^2).
///   p1_sym2_style:         head (1 + a(p) X) only.
///   p1_squared_ext2_style: head (1 + a(p) X + a(p)^2 X^2) only.
inline PeelResult peel(const LocalSeries& series, PeelMode mode) {
    if (series.truncation_J() < 3)
        throw arity_error("peel: needs J >= 3, have J=" +
                          std::to_string(series.truncation_J()));
    const auto& a = series.coeffs;
    const cplx one(1.0, 0.0);

    std::vector<std::vector<cplx>> heads;
    switch (mode) {
        case PeelMode::p1_p2_tail:
            heads.push_back({one, a[1]});
            heads.push_back({one, cplx(0.0, 0.0), a[2]});
            break;
        case PeelMode::p1_sym2_style:
            heads.push_back({one, a[1]});
            break;
        case PeelMode::p1_squared_ext2_style:
            heads.push_back({one, a[1], a[1] * a[1]});
            break;
    }

    std::vector<cplx> tail = a;
    for (const auto& h : heads) tail = detail::series_div_unit(tail, h);

    PeelResult out{{}, LocalSeries(series.p, std::move(tail))};
    out.head_factors.reserve(heads.size());
    for (auto& h : heads) out.head_factors.emplace_back(series.p, std::move(h));
    return out;
}

} // namespace lfkit
