// lfkit command line tool: prime tables, Euler factor expansion, power
// objects, functional equation checks, curve point counts, Siegel helpers
// and coefficient discrepancy reports.
//
// Exit codes: 0 success, 2 usage, 3 data error, 4 numeric consistency error.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "lfkit/lfkit.hpp"

namespace {

using lfkit::cplx;

void print_value(double v) { std::printf("%.17g\n", v); }

std::string fmt(double v) { return lfkit::detail::fmt17(v); }

int usage_error(const std::string& msg) {
    std::fprintf(stderr, "error: %s\n", msg.c_str());
    return 2;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lfkit::error("cannot open input file: " + path);
    return in;
}

/// Routes output to --out when given, stdout otherwise.
struct sink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit sink(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw lfkit::error("cannot open output file: " + path);
        os = &file;
    }
    std::ostream& stream() { return *os; }
};

bool parse_i64(std::string_view s, std::int64_t& out) {
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), last, out);
    return ec == std::errc() && ptr == last;
}

/// Comma-separated integer coefficients, ascending degree.
bool parse_poly(const std::string& s, std::vector<std::int64_t>& out) {
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto comma = s.find(',', pos);
        const auto end = comma == std::string::npos ? s.size() : comma;
        std::int64_t v = 0;
        if (!parse_i64(std::string_view(s).substr(pos, end - pos), v)) return false;
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return !out.empty();
}

/// Comma-separated cutoffs; scientific notation like 1e6 is accepted as
/// long as the value is a whole number. Sorted and deduplicated.
bool parse_grid(const std::string& s, std::vector<std::uint64_t>& out) {
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto comma = s.find(',', pos);
        const auto end = comma == std::string::npos ? s.size() : comma;
        double v = 0.0;
        if (!lfkit::detail::parse_double(std::string_view(s).substr(pos, end - pos), v))
            return false;
        if (!(v >= 1.0) || v != std::floor(v) || v > 9e15) return false;
        out.push_back(static_cast<std::uint64_t>(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return !out.empty();
}

void emit_verdict(const lfkit::DiscrepancyReport& rep) {
    std::fprintf(stderr, "verdict: %s\n", lfkit::to_string(rep.verdict));
    for (const auto& n : rep.notes) std::fprintf(stderr, "note: %s\n", n.c_str());
}

int cmd_primes(std::uint64_t limit, std::optional<std::uint64_t> theta_at,
               std::optional<std::uint64_t> recip_at) {
    auto table = lfkit::sieve(limit);
    if (!theta_at && !recip_at) {
        std::printf("%zu\n", table.count());
        return 0;
    }
    if (theta_at) print_value(lfkit::chebyshev_theta(table, *theta_at));
    if (recip_at) print_value(lfkit::mertens_recip(table, *recip_at));
    return 0;
}

int cmd_expand(const std::string& in_path, std::uint64_t limit, const std::string& out_path) {
    auto in = open_input(in_path);
    const auto f = lfkit::read_satake(in, in_path);
    std::map<std::uint64_t, lfkit::LocalSeries> locals;
    for (const auto& s : f.locals)
        locals.emplace(s.p, lfkit::expand_local(s, lfkit::prime_power_cap(s.p, limit)));
    const auto table = lfkit::assemble_global(locals, limit, f.degree_d);
    sink out(out_path);
    lfkit::write_lcoef(out.stream(), table);
    return 0;
}

int cmd_power(const std::string& kind, int n, const std::string& in_path,
              const std::string& out_path) {
    auto in = open_input(in_path);
    const auto f = lfkit::read_satake(in, in_path);
    const lfkit::PowerKind k{kind == "sym" ? lfkit::PowerOp::sym : lfkit::PowerOp::ext, n};
    if (n < 1) throw lfkit::domain_error("power: --n must be >= 1");

    const auto d = static_cast<unsigned>(f.degree_d);
    const std::uint64_t out_degree =
        k.kind == lfkit::PowerOp::sym
            ? lfkit::binomial(static_cast<unsigned>(n) + d - 1, d - 1)
            : lfkit::binomial(d, static_cast<unsigned>(n));
    if (out_degree == 0)
        throw lfkit::arity_error("power: ext^" + std::to_string(n) +
                                 " undefined for degree " + std::to_string(f.degree_d));

    lfkit::SatakeFile out_f;
    out_f.degree_d = static_cast<int>(out_degree);
    for (const auto& s : f.locals) {
        if (!s.is_good) {
            std::fprintf(stderr, "note: dropping bad prime %llu (power objects exclude it)\n",
                         static_cast<unsigned long long>(s.p));
            continue;
        }
        out_f.locals.push_back(lfkit::power_satake(s, k));
    }
    sink out(out_path);
    lfkit::write_satake(out.stream(), out_f);
    return 0;
}

int cmd_fe_validate(const std::string& path) {
    auto in = open_input(path);
    const auto fe = lfkit::read_fe_json(in, path);
    const auto tempered = lfkit::validate_tempered(fe);
    const auto selberg = lfkit::validate_partial_selberg(fe);

    std::printf("degree\t%d\n", fe.degree_d);
    std::printf("conductor\t%llu\n", static_cast<unsigned long long>(fe.conductor_N));
    std::printf("tempered\t%s\n", tempered.ok ? "ok" : "fail");
    for (const auto& v : tempered.violations) std::printf("violation\ttempered: %s\n", v.c_str());
    std::printf("selberg\t%s\n", selberg.ok ? "ok" : "fail");
    for (const auto& v : selberg.violations) std::printf("violation\tselberg: %s\n", v.c_str());
    return tempered.ok && selberg.ok ? 0 : 3;
}

int cmd_fe_emit(const lfkit::FeData& fe, const std::string& out_path) {
    sink out(out_path);
    lfkit::write_fe_json(out.stream(), fe);
    return 0;
}

int cmd_curve_count(const std::string& poly, std::uint64_t pmax, bool ext) {
    std::vector<std::int64_t> coeffs;
    if (!parse_poly(poly, coeffs)) return usage_error("--poly expects integers like \"0,-1,0,1\"");
    const lfkit::HyperCurve curve(std::move(coeffs));
    if (pmax > lfkit::kMaxCountPrime)
        throw lfkit::bounds_error("curve count: --pmax exceeds work bound " +
                                  std::to_string(lfkit::kMaxCountPrime));
    if (ext && pmax > lfkit::kMaxExtPrime)
        throw lfkit::bounds_error("curve count: --ext supports p <= " +
                                  std::to_string(lfkit::kMaxExtPrime));

    std::printf("p,N1,N2,a_p,poly_coeffs\n");
    for (std::uint32_t p : lfkit::sieve(pmax).primes) {
        if (!curve.is_good(p)) continue;
        const auto rec = ext ? lfkit::count_points_ext(curve, p) : lfkit::count_points(curve, p);

        std::string n2;
        if (rec.N2) n2 = std::to_string(*rec.N2);
        std::string poly_out;
        if (curve.genus_g == 1 || rec.N2) {
            const auto lf = lfkit::local_factor_from_counts(curve, rec);
            for (std::size_t i = 0; i < lf.coeffs.size(); ++i) {
                if (i) poly_out += ';';
                poly_out += std::to_string(lf.coeffs[i]);
            }
        }
        std::printf("%llu,%llu,%s,%lld,%s\n", static_cast<unsigned long long>(rec.p),
                    static_cast<unsigned long long>(rec.N1), n2.c_str(),
                    static_cast<long long>(rec.a_p), poly_out.c_str());
    }
    return 0;
}

int cmd_siegel_eigen(int weight, std::uint64_t p, const std::string& alpha_s,
                     const std::string& beta_s) {
    cplx alpha, beta;
    if (!lfkit::detail::parse_cplx(alpha_s, alpha)) return usage_error("--alpha expects re,im");
    if (!lfkit::detail::parse_cplx(beta_s, beta)) return usage_error("--beta expects re,im");
    const lfkit::SiegelLocal sl(p, weight, alpha, beta);
    const auto ev = lfkit::eigenvalues(sl);
    std::printf("mu_p\t%s\n", lfkit::detail::fmt_pair(ev.mu_p).c_str());
    std::printf("mu_p2\t%s\n", lfkit::detail::fmt_pair(ev.mu_p2).c_str());
    std::printf("trace\t%s\n", lfkit::detail::fmt_pair(lfkit::normalized_trace(sl)).c_str());
    return 0;
}

int cmd_siegel_sk(std::uint64_t pmax, const std::string& beta_path, const std::string& out_path) {
    auto in = open_input(beta_path);
    const auto f = lfkit::read_satake(in, beta_path);
    if (f.degree_d != 1)
        throw lfkit::domain_error("sk: --beta-file must be `# satake v1 degree=1`, got degree=" +
                                  std::to_string(f.degree_d));

    std::vector<std::pair<std::uint64_t, cplx>> entries;
    std::size_t i = 0;
    for (std::uint32_t p : lfkit::sieve(pmax).primes) {
        while (i < f.locals.size() && f.locals[i].p < p) ++i;
        if (i == f.locals.size() || f.locals[i].p != p || f.locals[i].alphas.empty())
            throw lfkit::incomplete_input_error("sk: no unit parameter at prime " +
                                                std::to_string(p));
        entries.emplace_back(p, lfkit::saito_kurokawa_ap(p, f.locals[i].alphas[0]));
    }
    const auto table =
        lfkit::CoefficientTable::from_entries(pmax, 4, std::move(entries), "sk stream");
    sink out(out_path);
    lfkit::write_lcoef(out.stream(), table);
    return 0;
}

int cmd_compare(const std::string& a_path, const std::string& b_path, const std::string& grid_s,
                const std::string& mode, double tau) {
    std::vector<std::uint64_t> grid;
    if (!parse_grid(grid_s, grid))
        return usage_error("--grid expects comma-separated whole numbers like 1e3,1e4");
    lfkit::DiagnosticsOptions opt;
    opt.tau = tau;

    if (mode == "siegel") {
        auto ia = open_input(a_path);
        auto ib = open_input(b_path);
        const auto fa = lfkit::read_eigen(ia, a_path);
        const auto fb = lfkit::read_eigen(ib, b_path);
        const auto rep =
            lfkit::siegel_compare(fa.mu, fa.weight_k, fb.mu, fb.weight_k, grid, opt);
        std::printf("X,S1,S1_over_X,selberg,selberg_over_loglog\n");
        for (std::size_t i = 0; i < rep.X_grid.size(); ++i)
            std::printf("%llu,%s,%s,%s,%s\n", static_cast<unsigned long long>(rep.X_grid[i]),
                        fmt(rep.S1[i]).c_str(), fmt(rep.S1_over_X[i]).c_str(),
                        fmt(rep.selberg[i]).c_str(), fmt(rep.selberg_over_loglog[i]).c_str());
        emit_verdict(rep);
        return 0;
    }

    auto ia = open_input(a_path);
    auto ib = open_input(b_path);
    const auto a = lfkit::read_lcoef(ia, a_path);
    const auto b = lfkit::read_lcoef(ib, b_path);

    if (mode == "selberg") {
        std::printf("X,selberg,selberg_over_loglog\n");
        double last_ratio = 0.0;
        for (std::uint64_t X : grid) {
            const auto [value, ratio] = lfkit::selberg_sum(a, b, X);
            std::printf("%llu,%s,%s\n", static_cast<unsigned long long>(X), fmt(value).c_str(),
                        fmt(ratio).c_str());
            last_ratio = ratio;
        }
        std::fprintf(stderr, "verdict: %s\n",
                     last_ratio < 2.0 ? "consistent-with-equal" : "inconsistent");
        std::fprintf(stderr, "note: selberg mode is advisory, final ratio %s vs threshold 2\n",
                     fmt(last_ratio).c_str());
        return 0;
    }

    const auto rep = lfkit::ssmo_sums(a, b, grid, opt);
    std::printf("X,S1,S1_over_X,S2,S2_over_X,selberg,selberg_over_loglog\n");
    for (std::size_t i = 0; i < rep.X_grid.size(); ++i)
        std::printf("%llu,%s,%s,%s,%s,%s,%s\n", static_cast<unsigned long long>(rep.X_grid[i]),
                    fmt(rep.S1[i]).c_str(), fmt(rep.S1_over_X[i]).c_str(), fmt(rep.S2[i]).c_str(),
                    fmt(rep.S2_over_X[i]).c_str(), fmt(rep.selberg[i]).c_str(),
                    fmt(rep.selberg_over_loglog[i]).c_str());
    emit_verdict(rep);
    return 0;
}

} // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"number theory toolkit for Euler products and coefficient diagnostics"};
    app.require_subcommand(1);

    // primes
    std::uint64_t primes_limit = 0;
    std::optional<std::uint64_t> theta_at, recip_at;
    auto* primes = app.add_subcommand("primes", "sieve primes and prime sums");
    primes->add_option("--limit", primes_limit, "sieve limit (2..1e8)")->required();
    primes->add_option("--theta", theta_at, "print sum of log p over p <= X");
    primes->add_option("--recip", recip_at, "print sum of 1/p over p <= X");

    // expand
    std::string expand_in, expand_out;
    std::uint64_t expand_limit = 0;
    auto* expand = app.add_subcommand("expand", "expand a satake file into coefficients a(n)");
    expand->add_option("--in", expand_in, "satake TSV input")->required();
    expand->add_option("--limit", expand_limit, "expand a(n) for n <= limit")->required();
    expand->add_option("--out", expand_out, "lcoef TSV output (default stdout)");

    // power
    std::string power_kind, power_in, power_out;
    int power_n = 0;
    auto* power = app.add_subcommand("power", "symmetric or exterior power of a satake file");
    power->add_option("--kind", power_kind, "sym or ext")
        ->required()
        ->check(CLI::IsMember({"sym", "ext"}));
    power->add_option("--n", power_n, "power order, >= 1")->required();
    power->add_option("--in", power_in, "satake TSV input")->required();
    power->add_option("--out", power_out, "satake TSV output (default stdout)");

    // fe
    auto* fe = app.add_subcommand("fe", "functional equation data");
    fe->require_subcommand(1);
    std::string fe_file;
    auto* fe_validate = fe->add_subcommand("validate", "check tempered/selberg conditions");
    fe_validate->add_option("--file", fe_file, "FE JSON document")->required();
    int fe_weight = 0;
    std::string fe_spin_out;
    auto* fe_spin = fe->add_subcommand("spin", "FE data of a weight-k spin L-function");
    fe_spin->add_option("--weight", fe_weight, "Siegel form weight, >= 2")->required();
    fe_spin->add_option("--out", fe_spin_out, "JSON output (default stdout)");
    int fe_genus = 0, fe_sign = 1;
    std::uint64_t fe_conductor = 1;
    std::string fe_hw_out;
    auto* fe_hw = fe->add_subcommand("hasse-weil", "FE data of a genus-g curve L-function");
    fe_hw->add_option("--genus", fe_genus, "curve genus, >= 1")->required();
    fe_hw->add_option("--conductor", fe_conductor, "conductor, >= 1")->required();
    fe_hw->add_option("--sign", fe_sign, "functional equation sign, +1 or -1")->required();
    fe_hw->add_option("--out", fe_hw_out, "JSON output (default stdout)");

    // curve
    auto* curve = app.add_subcommand("curve", "point counts on y^2 = f(x)");
    curve->require_subcommand(1);
    std::string curve_poly;
    std::uint64_t curve_pmax = 0;
    bool curve_ext = false;
    auto* curve_count = curve->add_subcommand("count", "CSV of counts at good primes <= pmax");
    curve_count->add_option("--poly", curve_poly, "coefficients c0,c1,... of f, ascending")
        ->required();
    curve_count->add_option("--pmax", curve_pmax, "largest prime")->required();
    curve_count->add_flag("--ext", curve_ext, "also count over F_{p^2} (p <= 3163)");

    // siegel
    auto* siegel = app.add_subcommand("siegel", "genus 2 eigenvalue helpers");
    siegel->require_subcommand(1);
    int sg_weight = 0;
    std::uint64_t sg_p = 0;
    std::string sg_alpha, sg_beta;
    auto* sg_eigen = siegel->add_subcommand("eigen", "mu(p), mu(p^2), normalized trace");
    sg_eigen->add_option("--weight", sg_weight, "form weight, >= 2")->required();
    sg_eigen->add_option("--p", sg_p, "prime")->required();
    sg_eigen->add_option("--alpha", sg_alpha, "Satake alpha as re,im")->required();
    sg_eigen->add_option("--beta", sg_beta, "Satake beta as re,im")->required();
    std::uint64_t sk_pmax = 0;
    std::string sk_beta_file, sk_out;
    auto* sg_sk = siegel->add_subcommand("sk", "Saito-Kurokawa style a(p) stream");
    sg_sk->add_option("--pmax", sk_pmax, "largest prime")->required();
    sg_sk->add_option("--beta-file", sk_beta_file, "unit parameters, satake TSV degree=1")
        ->required();
    sg_sk->add_option("--out", sk_out, "lcoef TSV output (default stdout)");

    // compare
    std::string cmp_a, cmp_b, cmp_grid, cmp_mode;
    double cmp_tau = 0.05;
    auto* compare = app.add_subcommand("compare", "discrepancy report between two streams");
    compare->add_option("--a", cmp_a, "first input file")->required();
    compare->add_option("--b", cmp_b, "second input file")->required();
    compare->add_option("--grid", cmp_grid, "cutoffs, e.g. 1e3,1e4,1e5")->required();
    compare->add_option("--mode", cmp_mode, "ssmo, selberg or siegel")
        ->required()
        ->check(CLI::IsMember({"ssmo", "selberg", "siegel"}));
    compare->add_option("--tau", cmp_tau, "verdict threshold on S1/X (default 0.05)");

    try {
        app.parse(argc, argv);
        if (primes->parsed()) return cmd_primes(primes_limit, theta_at, recip_at);
        if (expand->parsed()) return cmd_expand(expand_in, expand_limit, expand_out);
        if (power->parsed()) return cmd_power(power_kind, power_n, power_in, power_out);
        if (fe_validate->parsed()) return cmd_fe_validate(fe_file);
        if (fe_spin->parsed()) return cmd_fe_emit(lfkit::spin_fe(fe_weight), fe_spin_out);
        if (fe_hw->parsed())
            return cmd_fe_emit(lfkit::hasse_weil_fe(fe_genus, fe_conductor, fe_sign), fe_hw_out);
        if (curve_count->parsed()) return cmd_curve_count(curve_poly, curve_pmax, curve_ext);
        if (sg_eigen->parsed()) return cmd_siegel_eigen(sg_weight, sg_p, sg_alpha, sg_beta);
        if (sg_sk->parsed()) return cmd_siegel_sk(sk_pmax, sk_beta_file, sk_out);
        if (compare->parsed()) return cmd_compare(cmp_a, cmp_b, cmp_grid, cmp_mode, cmp_tau);
        return 2;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const lfkit::consistency_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const lfkit::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}

int main(int argc, char** argv) { return run_cli(argc, argv); }
