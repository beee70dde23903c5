// Acceptance suite: one PASS/FAIL line per numbered criterion, with the
// tolerance and runtime budget pinned next to each check. Exits nonzero
// when any criterion fails. Randomized criteria honor --seed (default 1).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lfkit/lfkit.hpp"
#include "oracles.hpp"

namespace {

using lfkit::cplx;

struct Outcome {
    bool ok = true;
    std::string detail;
};

std::string sci(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

std::string fixed(double v, int places = 4) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*f", places, v);
    return buf;
}

cplx random_unit(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    return std::polar(1.0, angle(rng));
}

// 1. Coefficient identities: 200 seeded good locals, d in {2..5}, unit
//    roots; first-coefficient identities for sym^n (n <= 4), ext^2, ext^3,
//    and the p^2 coefficient of sym^2 all match brute-force expansion of
//    the corresponding power object within 1e-9 absolute. For d = 2 the
//    ext^3 object vanishes, so its identity is checked against zero.
Outcome crit1(std::uint64_t seed) {
    constexpr double kTol = 1e-9;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_d(2, 5);
    const std::uint64_t primes[] = {2, 3, 5, 7, 11, 101, 9973};
    double max_err = 0.0;

    for (int trial = 0; trial < 200; ++trial) {
        const int d = pick_d(rng);
        const std::uint64_t p = primes[rng() % std::size(primes)];
        std::vector<cplx> roots;
        roots.reserve(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) roots.push_back(random_unit(rng));
        const lfkit::SatakeLocal s(p, roots, d);

        const auto ids = lfkit::coeff_identities(lfkit::expand_local(s, 4), d);
        auto track = [&](cplx got, cplx want) {
            max_err = std::max(max_err, std::abs(got - want));
        };
        auto first_coeff = [&](lfkit::PowerOp op, int n) {
            return lfkit::expand_local(lfkit::power_satake(s, {op, n}), 1).coeffs[1];
        };

        for (int n = 1; n <= 4; ++n)
            track(first_coeff(lfkit::PowerOp::sym, n), ids.sym_first[static_cast<std::size_t>(n)]);
        track(first_coeff(lfkit::PowerOp::ext, 2), ids.ext2_p);
        if (d >= 3)
            track(first_coeff(lfkit::PowerOp::ext, 3), ids.ext3_p);
        else
            track(cplx(0.0, 0.0), ids.ext3_p);
        track(lfkit::expand_local(lfkit::power_satake(s, {lfkit::PowerOp::sym, 2}), 2).coeffs[2],
              ids.sym2_p2);
    }

    Outcome out;
    out.ok = max_err <= kTol;
    out.detail = "max |err| = " + sci(max_err) + " over 200 draws (tol 1e-9)";
    return out;
}

// 2. Peel round trips: 200 random series with J = 12; for every mode the
//    head factors times the tail reproduce the input within 1e-9 (schoolbook
//    multiplication, no shared code path); for the two-head mode the tail's
//    c(p) and c(p^2) vanish exactly and c(p^3) = a(p^3) - a(p) a(p^2)
//    bit-for-bit, since the division recursion cancels term by term.
Outcome crit2(std::uint64_t seed) {
    constexpr double kTol = 1e-9;
    constexpr int J = 12;
    std::mt19937_64 rng(seed + 2);
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    double max_err = 0.0;
    bool exact_ok = true;

    for (int trial = 0; trial < 200; ++trial) {
        std::vector<cplx> a(J + 1);
        a[0] = cplx(1.0, 0.0);
        for (int j = 1; j <= J; ++j) a[j] = cplx(box(rng), box(rng));
        const lfkit::LocalSeries series(2, a);

        for (lfkit::PeelMode mode : {lfkit::PeelMode::p1_p2_tail, lfkit::PeelMode::p1_sym2_style,
                                     lfkit::PeelMode::p1_squared_ext2_style}) {
            const auto parts = lfkit::peel(series, mode);
            std::vector<cplx> prod = parts.tail.coeffs;
            for (const auto& head : parts.head_factors)
                prod = oracle::series_mul(prod, head.coeffs, J + 1);
            for (int j = 0; j <= J; ++j)
                max_err = std::max(max_err, std::abs(prod[static_cast<std::size_t>(j)] -
                                                     a[static_cast<std::size_t>(j)]));
            if (mode == lfkit::PeelMode::p1_p2_tail) {
                const auto& t = parts.tail.coeffs;
                if (t[1] != cplx(0.0, 0.0) || t[2] != cplx(0.0, 0.0) ||
                    t[3] != a[3] - a[1] * a[2])
                    exact_ok = false;
            }
        }
    }

    Outcome out;
    out.ok = max_err <= kTol && exact_ok;
    out.detail = "max |err| = " + sci(max_err) + " over 200x3 peels (tol 1e-9); tail head"
                 " coefficients exact: " + (exact_ok ? "yes" : "NO");
    return out;
}

// 3. Curve counts vs naive enumeration for good p <= 200 (including F_{p^2}
//    counts on the quintics), then the Hasse bound a_p^2 <= 4 g^2 p for all
//    good p <= 1e4, checked in exact integers.
Outcome crit3(std::uint64_t) {
    const std::vector<std::vector<std::int64_t>> polys = {
        {0, -1, 0, 1},
        {1, 1, 0, 1},
        {1, 0, 0, 0, 0, 1},
        {1, -1, 0, 0, 0, 1},
    };
    const auto table = lfkit::sieve(10'000);
    std::uint64_t naive_checked = 0, hasse_checked = 0;

    for (const auto& f : polys) {
        const lfkit::HyperCurve c(f);
        const std::int64_t g = c.genus_g;
        for (std::uint32_t p : table.primes) {
            if (!c.is_good(p)) continue;
            const auto rec = lfkit::count_points(c, p);
            if (p <= 200) {
                if (rec.N1 != oracle::curve_points_naive(f, p) + 1)
                    return {false, "N1 mismatch vs naive count at p=" + std::to_string(p)};
                if (c.degree() == 5) {
                    const auto ext = lfkit::count_points_ext(c, p);
                    if (!ext.N2 || *ext.N2 != oracle::curve_points_naive_ext(f, p) + 1)
                        return {false, "N2 mismatch vs naive count at p=" + std::to_string(p)};
                }
                ++naive_checked;
            }
            if (rec.a_p * rec.a_p > 4 * g * g * static_cast<std::int64_t>(p))
                return {false, "Hasse bound violated at p=" + std::to_string(p)};
            ++hasse_checked;
        }
    }

    return {true, std::to_string(naive_checked) + " counts equal naive enumeration; Hasse bound"
                  " holds at " + std::to_string(hasse_checked) + " (curve, p) pairs"};
}

// 4. Local factor roots: reconstructed inverse roots satisfy
//    ||alpha| - sqrt(p)| <= 1e-6 sqrt(p) at every good p (genus 1 to 500,
//    genus 2 to 100), and the sqrt(p)-normalized roots pass the Ramanujan
//    check at theta = 0.
Outcome crit4(std::uint64_t) {
    constexpr double kRelTol = 1e-6;
    double max_rel = 0.0;
    std::uint64_t roots_checked = 0;

    auto check_curve = [&](const lfkit::HyperCurve& c, std::uint64_t pmax,
                           bool need_ext) -> Outcome {
        for (std::uint32_t p : lfkit::sieve(pmax).primes) {
            if (!c.is_good(p)) continue;
            const auto rec = need_ext ? lfkit::count_points_ext(c, p) : lfkit::count_points(c, p);
            const auto lf = lfkit::local_factor_from_counts(c, rec);
            const double sp = std::sqrt(static_cast<double>(p));
            std::vector<cplx> normalized;
            for (const cplx& alpha : lf.inverse_roots) {
                const double rel = std::abs(std::abs(alpha) - sp) / sp;
                max_rel = std::max(max_rel, rel);
                if (rel > kRelTol)
                    return {false, "||alpha| - sqrt(p)| too large at p=" + std::to_string(p)};
                normalized.push_back(alpha / sp);
                ++roots_checked;
            }
            const lfkit::SatakeLocal s(p, normalized, 2 * c.genus_g);
            if (!lfkit::check_partial_ramanujan(s, 0.0).ok)
                return {false, "normalized roots fail theta=0 at p=" + std::to_string(p)};
        }
        return {true, ""};
    };

    if (auto r = check_curve(lfkit::HyperCurve({0, -1, 0, 1}), 500, false); !r.ok) return r;
    if (auto r = check_curve(lfkit::HyperCurve({1, 0, 0, 0, 0, 1}), 100, true); !r.ok) return r;

    return {true, std::to_string(roots_checked) + " roots, max ||alpha|/sqrt(p) - 1| = " +
                  sci(max_rel) + " (tol 1e-6); theta=0 passes everywhere"};
}

// 5. Discrepancy asymptotics with a sieve to 1e6:
//    (a) identical streams give exactly zero sums and the equal verdict;
//    (b) a difference of 1/sqrt(p) makes S1(X) track theta(X) within 0.1%;
//    (c) a constant difference 1.4 gives a Selberg ratio of 1.96 after
//        removing the Mertens-constant bias 1.96 M / loglog(X) that a
//        finite X imposes on sum 1/p (the raw ratio is printed alongside).
Outcome crit5(std::uint64_t) {
    constexpr std::uint64_t X = 1'000'000;
    constexpr double kMertens = 0.26149721284764278;
    const auto table = lfkit::sieve(X);
    const std::vector<std::uint64_t> grid = {62'500, 125'000, 250'000, 500'000, X};

    auto build = [&](auto&& value_at) {
        std::vector<std::pair<std::uint64_t, cplx>> entries;
        entries.reserve(table.primes.size());
        for (std::uint32_t p : table.primes) entries.emplace_back(p, value_at(p));
        return lfkit::CoefficientTable::from_entries(X, 2, std::move(entries));
    };

    const auto wobble = build([](std::uint32_t p) {
        const double t = std::log(static_cast<double>(p));
        return cplx(std::cos(0.37 * t), std::sin(0.11 * t));
    });
    const auto rep_a = lfkit::ssmo_sums(wobble, wobble, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (rep_a.S1[i] != 0.0 || rep_a.S2[i] != 0.0 || rep_a.selberg[i] != 0.0)
            return {false, "identical streams give a nonzero sum"};
    if (rep_a.verdict != lfkit::Verdict::consistent_with_equal)
        return {false, "identical streams do not read consistent-with-equal"};

    const auto inv_sqrt = build([](std::uint32_t p) {
        return cplx(1.0 / std::sqrt(static_cast<double>(p)), 0.0);
    });
    const lfkit::CoefficientTable zero(X);
    const auto rep_b = lfkit::ssmo_sums(inv_sqrt, zero, grid);
    double lo = 2.0, hi = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double ratio = rep_b.S1[i] / lfkit::chebyshev_theta(table, grid[i]);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    if (lo < 0.999 || hi > 1.001)
        return {false, "S1/theta drifted to [" + fixed(lo, 6) + ", " + fixed(hi, 6) + "]"};

    const auto const_diff = build([](std::uint32_t) { return cplx(1.4, 0.0); });
    const auto rep_c = lfkit::ssmo_sums(const_diff, zero, grid);
    const double loglog_x = lfkit::detail::loglog(X);
    const double raw = rep_c.selberg_over_loglog.back();
    const double corrected = (rep_c.selberg.back() - 1.96 * kMertens) / loglog_x;
    if (corrected < 1.7 || corrected > 2.1)
        return {false, "bias-corrected Selberg ratio " + fixed(corrected) + " outside [1.7, 2.1]"};

    return {true, "zero/equal exact; S1/theta in [" + fixed(lo, 6) + ", " + fixed(hi, 6) +
                  "]; Selberg ratio " + fixed(corrected) + " in [1.7, 2.1] after Mertens"
                  " correction (raw " + fixed(raw) + ")"};
}

// 6. Selberg self-sum of the normalized y^2 = x^3 - x coefficients:
//    sum_{p <= 1e6} b(p)^2 / p over loglog(1e6) lands in the loose band
//    [0.3, 3.0] expected of an orthonormality constant at loglog speed.
Outcome crit6(std::uint64_t) {
    constexpr std::uint64_t X = 1'000'000;
    const auto b = lfkit::hasse_weil_table(lfkit::HyperCurve({0, -1, 0, 1}), X);
    const auto [sum, ratio] = lfkit::selberg_sum(b, lfkit::CoefficientTable(X), X);
    Outcome out;
    out.ok = ratio >= 0.3 && ratio <= 3.0;
    out.detail = "sum = " + fixed(sum, 6) + ", over loglog = " + fixed(ratio) +
                 " (band [0.3, 3.0])";
    return out;
}

// 7. Eigenvalue bridge: 100 random (alpha, beta, k); the degree 4 expansion
//    reproduces mu(p) and mu(p^2) to 1e-6 relative, and the classical
//    parameters satisfy alpha0^2 alpha1 alpha2 = p^{2k-3} to 1e-9 relative.
Outcome crit7(std::uint64_t seed) {
    constexpr double kTolMu = 1e-6;
    constexpr double kTolProd = 1e-9;
    std::mt19937_64 rng(seed + 7);
    const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
    double max_mu = 0.0, max_prod = 0.0;

    for (int trial = 0; trial < 100; ++trial) {
        const std::uint64_t p = primes[rng() % std::size(primes)];
        const int k = 2 + static_cast<int>(rng() % 19);
        const lfkit::SiegelLocal sl(p, k, random_unit(rng), random_unit(rng));
        const double pd = static_cast<double>(p);

        const auto ev = lfkit::eigenvalues(sl);
        const auto ls = lfkit::expand_local(lfkit::spin_local(sl), 2);
        const cplx mu_p = std::pow(pd, k - 1.5) * ls.coeffs[1];
        const cplx mu_p2 = std::pow(pd, 2.0 * k - 3.0) * (ls.coeffs[2] - 1.0 / pd);
        max_mu = std::max(max_mu, std::abs(mu_p - ev.mu_p) / std::abs(ev.mu_p));
        max_mu = std::max(max_mu, std::abs(mu_p2 - ev.mu_p2) / std::abs(ev.mu_p2));

        const auto cs = lfkit::classical_satake(sl);
        const double want = std::pow(pd, 2.0 * k - 3.0);
        const cplx prod = cs.alpha0 * cs.alpha0 * cs.alpha1 * cs.alpha2;
        max_prod = std::max(max_prod, std::abs(prod - want) / want);
    }

    Outcome out;
    out.ok = max_mu <= kTolMu && max_prod <= kTolProd;
    out.detail = "max rel err: mu " + sci(max_mu) + " (tol 1e-6), parameter product " +
                 sci(max_prod) + " (tol 1e-9)";
    return out;
}

// 8. Lift detection: a stream built from {sqrt(p), 1/sqrt(p), beta, 1/beta}
//    with seeded unit beta_p fails the theta = 1/6 Ramanujan check at every
//    p in [3, 1e4], and its k = 2 convergence-hypothesis partial sum grows
//    superlinearly on the loglog scale (pinned: the X = 1e4 slope exceeds
//    5x the X = 1e3 slope). The curve stream from y^2 = x^3 - x stabilizes
//    instead: every per-prime increment past X = 1e5 stays below 1e-6.
Outcome crit8(std::uint64_t seed) {
    std::mt19937_64 rng(seed + 8);

    std::vector<std::pair<std::uint64_t, cplx>> sk_entries;
    std::uint64_t rejected = 0, wanted = 0;
    for (std::uint32_t p : lfkit::sieve(10'000).primes) {
        const auto local = lfkit::saito_kurokawa_local(p, random_unit(rng));
        if (p >= 3) {
            ++wanted;
            if (!lfkit::check_partial_ramanujan(local, 1.0 / 6.0).ok) ++rejected;
        }
        const auto ls = lfkit::expand_local(local, 2);
        sk_entries.emplace_back(p, ls.coeffs[1]);
        sk_entries.emplace_back(static_cast<std::uint64_t>(p) * p, ls.coeffs[2]);
    }
    if (rejected != wanted)
        return {false, "theta=1/6 accepted " + std::to_string(wanted - rejected) + " lift primes"};

    std::sort(sk_entries.begin(), sk_entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    const auto sk = lfkit::CoefficientTable::from_entries(100'000'000, 4, std::move(sk_entries));
    bool trunc = false;
    const double slope3 = lfkit::hypothesis_h_partial(sk, 2, 1'000, &trunc) /
                          lfkit::detail::loglog(1'000);
    const double slope4 = lfkit::hypothesis_h_partial(sk, 2, 10'000, &trunc) /
                          lfkit::detail::loglog(10'000);
    const double growth = slope4 / slope3;
    if (!(growth > 5.0))
        return {false, "lift stream slope grew only " + fixed(growth, 2) + "x"};

    const lfkit::HyperCurve e({0, -1, 0, 1});
    std::vector<std::pair<std::uint64_t, cplx>> cv_entries;
    double tail_max = 0.0;
    lfkit::kahan_sum tail_sum;
    for (std::uint32_t p : lfkit::sieve(1'000'000).primes) {
        if (!e.is_good(p)) continue;
        const auto rec = lfkit::count_points(e, p);
        const double pd = static_cast<double>(p);
        const double bp2 = (static_cast<double>(rec.a_p * rec.a_p) - pd) / pd;
        cv_entries.emplace_back(p, cplx(rec.a_p / std::sqrt(pd), 0.0));
        cv_entries.emplace_back(static_cast<std::uint64_t>(p) * p, cplx(bp2, 0.0));
        if (p > 100'000) {
            const double lp = std::log(pd);
            const double inc = bp2 * bp2 * lp * lp / (pd * pd);
            tail_max = std::max(tail_max, inc);
            tail_sum.add(inc);
        }
    }
    std::sort(cv_entries.begin(), cv_entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    const auto curve =
        lfkit::CoefficientTable::from_entries(1'000'000'000'000ull, 2, std::move(cv_entries));
    bool tr5 = false, tr6 = false;
    const double h5 = lfkit::hypothesis_h_partial(curve, 2, 100'000, &tr5);
    const double h6 = lfkit::hypothesis_h_partial(curve, 2, 1'000'000, &tr6);
    if (tr5 || tr6) return {false, "curve stream unexpectedly truncated"};
    if (tail_max >= 1e-6)
        return {false, "curve increment " + sci(tail_max) + " past X=1e5 (bound 1e-6)"};
    if (std::abs((h6 - h5) - tail_sum.value()) > 1e-12 * std::max(1.0, h6))
        return {false, "tail increments do not add up to the partial-sum step"};

    return {true, "theta=1/6 rejected at all " + std::to_string(wanted) + " primes; lift slope"
                  " grew " + fixed(growth, 1) + "x (> 5x); curve sum " + fixed(h5) + " -> " +
                  fixed(h6) + ", max increment " + sci(tail_max) + " (< 1e-6)"};
}

// 9. Functional equation matrix: generated data passes both validators for
//    k in [2, 40] and g in {1, 2} with either sign; crafted Re mu = 0.3 and
//    Re nu = -0.5 are rejected with violations naming the offending shift.
Outcome crit9(std::uint64_t) {
    auto both_ok = [](const lfkit::FeData& fe) {
        return lfkit::validate_tempered(fe).ok && lfkit::validate_partial_selberg(fe).ok;
    };
    for (int k = 2; k <= 40; ++k)
        if (!both_ok(lfkit::spin_fe(k)))
            return {false, "spin data rejected at k=" + std::to_string(k)};
    for (int g : {1, 2})
        for (int sign : {1, -1})
            if (!both_ok(lfkit::hasse_weil_fe(g, g == 1 ? 37 : 389, sign)))
                return {false, "curve data rejected at g=" + std::to_string(g)};

    auto names = [](const lfkit::FeValidation& v) {
        std::string all;
        for (const auto& s : v.violations) all += s + "; ";
        return all;
    };
    const lfkit::FeData bad_mu(1, 1, {cplx(0.3, 0.0)}, {}, cplx(1.0, 0.0));
    const auto vt = lfkit::validate_tempered(bad_mu);
    if (vt.ok || names(vt).find("mu[0]") == std::string::npos)
        return {false, "Re mu = 0.3 not rejected by name"};

    const lfkit::FeData bad_nu(2, 1, {}, {cplx(-0.5, 0.0)}, cplx(1.0, 0.0));
    const auto vt2 = lfkit::validate_tempered(bad_nu);
    const auto vs2 = lfkit::validate_partial_selberg(bad_nu);
    if (vt2.ok || vs2.ok || names(vt2).find("nu[0]") == std::string::npos ||
        names(vs2).find("nu[0]") == std::string::npos)
        return {false, "Re nu = -0.5 not rejected by name"};

    return {true, "39 spin + 4 curve data sets pass; mu[0]=0.3 and nu[0]=-0.5 rejected by name"};
}

// 10. Prime sums sanity at X = 1e6: theta(X)/X within [0.97, 1.01] and
//     sum 1/p minus loglog(X) within [0.20, 0.33] of the Mertens constant.
Outcome crit10(std::uint64_t) {
    constexpr std::uint64_t X = 1'000'000;
    const auto table = lfkit::sieve(X);
    const double theta_ratio = lfkit::chebyshev_theta(table, X) / static_cast<double>(X);
    const double mertens = lfkit::mertens_recip(table, X) - lfkit::detail::loglog(X);
    Outcome out;
    out.ok = theta_ratio >= 0.97 && theta_ratio <= 1.01 && mertens >= 0.20 && mertens <= 0.33;
    out.detail = "theta/X = " + fixed(theta_ratio, 6) + " (band [0.97, 1.01]); Mertens"
                 " constant = " + fixed(mertens, 6) + " (band [0.20, 0.33])";
    return out;
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = 1;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            std::fprintf(stderr, "usage: acceptance [--seed N]\n");
            return 2;
        }
    }

    struct Criterion {
        int id;
        const char* label;
        double budget_s;
        Outcome (*run)(std::uint64_t);
    };
    const Criterion criteria[] = {
        {1, "coefficient identities", 5.0, crit1},
        {2, "peel round trips", 2.0, crit2},
        {3, "curve counts vs naive", 30.0, crit3},
        {4, "local factor roots", 60.0, crit4},
        {5, "discrepancy asymptotics", 10.0, crit5},
        {6, "selberg self-sum", 10.0, crit6},
        {7, "eigenvalue bridge", 1.0, crit7},
        {8, "lift detection", 0.0, crit8},
        {9, "functional equation matrix", 0.0, crit9},
        {10, "prime sums sanity", 2.0, crit10},
    };

    int passed = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run(seed);
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(
            std::chrono::steady_clock::now() - t0).count();

        char timing[48];
        if (c.budget_s > 0.0) {
            std::snprintf(timing, sizeof(timing), "%5.2fs < %2.0fs", secs, c.budget_s);
            if (secs >= c.budget_s) {
                out.ok = false;
                out.detail += " [over budget]";
            }
        } else {
            std::snprintf(timing, sizeof(timing), "%5.2fs      ", secs);
        }
        if (out.ok) ++passed;
        std::printf("%s %2d  %-26s %s  %s\n", out.ok ? "PASS" : "FAIL", c.id, c.label, timing,
                    out.detail.c_str());
    }

    std::printf("acceptance: %d/10 criteria passed (seed %llu)\n", passed,
                static_cast<unsigned long long>(seed));
    return passed == 10 ? 0 : 1;
}
