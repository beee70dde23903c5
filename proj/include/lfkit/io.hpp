#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coefficients.hpp"
#include "errors.hpp"
#include "fe_data.hpp"
#include "numeric.hpp"
#include "satake.hpp"

namespace lfkit {

/// Contents of a `# satake v1` TSV: one row of inverse roots per prime,
/// `p<TAB>re,im;re,im;...`, rows strictly increasing in p. Keys are taken
/// on trust as primes, matching the SatakeLocal convention.
struct SatakeFile {
    int degree_d = 0;
    std::vector<SatakeLocal> locals;
};

/// Contents of an `# eigen v1` TSV: eigenvalues mu(p) of a weight-k form,
/// `p<TAB>re<TAB>im`, rows strictly increasing in p.
struct EigenFile {
    int weight_k = 0;
    std::vector<std::pair<std::uint64_t, cplx>> mu;
};

namespace detail {

/// 17 significant digits round-trip any double exactly.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt_pair(const cplx& v) {
    return fmt17(v.real()) + "," + fmt17(v.imag());
}

[[noreturn]] inline void fail_at(const std::string& source, std::size_t line,
                                 const std::string& msg) {
    throw parse_error(source + ":" + std::to_string(line) + ": " + msg);
}

inline bool parse_double(std::string_view s, double& out) {
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), last, out);
    return ec == std::errc() && ptr == last;
}

inline bool parse_u64(std::string_view s, std::uint64_t& out) {
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), last, out);
    return ec == std::errc() && ptr == last;
}

inline bool parse_cplx(std::string_view s, cplx& out) {
    const auto comma = s.find(',');
    if (comma == std::string_view::npos) return false;
    double re = 0.0, im = 0.0;
    if (!parse_double(s.substr(0, comma), re) || !parse_double(s.substr(comma + 1), im))
        return false;
    out = cplx(re, im);
    return true;
}

/// getline with line counting; trailing CR stripped so CRLF files parse.
struct line_reader {
    std::istream& in;
    std::size_t line_no = 0;

    bool next(std::string& line) {
        if (!std::getline(in, line)) return false;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    }
};

/// First line must be `# <tag> v1 <field>=<int>`; returns the int.
inline int parse_header(line_reader& r, const std::string& source, const char* tag,
                        const char* field) {
    std::string line;
    const std::string prefix = std::string("# ") + tag + " v1 " + field + "=";
    if (!r.next(line)) fail_at(source, 1, "missing header `" + prefix + "<int>`");
    if (line.rfind(prefix, 0) != 0)
        fail_at(source, r.line_no, "expected header `" + prefix + "<int>`, got \"" + line + "\"");
    std::uint64_t v = 0;
    if (!parse_u64(std::string_view(line).substr(prefix.size()), v) || v == 0 || v > 1000)
        fail_at(source, r.line_no, std::string(field) + " must be a positive integer, got \"" +
                                       line.substr(prefix.size()) + "\"");
    return static_cast<int>(v);
}

/// Splits a row into exactly three tab-separated fields.
inline bool split3(std::string_view line, std::string_view out[3]) {
    const auto t1 = line.find('\t');
    if (t1 == std::string_view::npos) return false;
    const auto t2 = line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos || line.find('\t', t2 + 1) != std::string_view::npos)
        return false;
    out[0] = line.substr(0, t1);
    out[1] = line.substr(t1 + 1, t2 - t1 - 1);
    out[2] = line.substr(t2 + 1);
    return true;
}

inline void check_increasing(std::uint64_t key, std::uint64_t& prev, const std::string& source,
                             std::size_t line_no) {
    if (key <= prev)
        fail_at(source, line_no,
                "keys must be strictly increasing, " + std::to_string(key) + " after " +
                    std::to_string(prev));
    prev = key;
}

} // namespace detail

inline SatakeFile read_satake(std::istream& in, const std::string& source = "<satake>") {
    detail::line_reader r{in};
    SatakeFile f;
    f.degree_d = detail::parse_header(r, source, "satake", "degree");
    std::string line;
    std::uint64_t prev = 0;
    while (r.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        const std::string_view row(line);
        const auto tab = row.find('\t');
        if (tab == std::string_view::npos)
            detail::fail_at(source, r.line_no, "expected `p<TAB>re,im;...`, got \"" + line + "\"");
        std::uint64_t p = 0;
        if (!detail::parse_u64(row.substr(0, tab), p) || p < 2)
            detail::fail_at(source, r.line_no,
                            "bad prime key \"" + std::string(row.substr(0, tab)) + "\"");
        detail::check_increasing(p, prev, source, r.line_no);

        std::vector<cplx> roots;
        std::string_view rest = row.substr(tab + 1);
        while (true) {
            const auto semi = rest.find(';');
            const std::string_view tok = rest.substr(0, semi);
            cplx v;
            if (!detail::parse_cplx(tok, v))
                detail::fail_at(source, r.line_no,
                                "bad complex token \"" + std::string(tok) + "\"");
            roots.push_back(v);
            if (semi == std::string_view::npos) break;
            rest.remove_prefix(semi + 1);
        }
        try {
            f.locals.emplace_back(p, std::move(roots), f.degree_d);
        } catch (const error& e) {
            detail::fail_at(source, r.line_no, e.what());
        }
    }
    return f;
}

/// Bad primes with no surviving roots serialize as the single dropped
/// root `0,0`, so every row stays parseable.
inline void write_satake(std::ostream& out, const SatakeFile& f) {
    out << "# satake v1 degree=" << f.degree_d << "\n";
    for (const auto& s : f.locals) {
        if (s.degree_d != f.degree_d)
            throw domain_error("write_satake: local at p=" + std::to_string(s.p) + " has degree " +
                               std::to_string(s.degree_d) + ", file says " +
                               std::to_string(f.degree_d));
        out << s.p << '\t';
        if (s.alphas.empty()) out << "0,0";
        for (std::size_t i = 0; i < s.alphas.size(); ++i) {
            if (i) out << ';';
            out << detail::fmt_pair(s.alphas[i]);
        }
        out << '\n';
    }
}

/// Raw n-keyed coefficient table. The table limit comes from an optional
/// `# limit=<N>` comment; without one it defaults to the largest key, so
/// downstream coverage checks stay honest.
inline CoefficientTable read_lcoef(std::istream& in, const std::string& source = "<lcoef>") {
    detail::line_reader r{in};
    const int degree = detail::parse_header(r, source, "lcoef", "degree");
    std::optional<std::uint64_t> limit;
    std::vector<std::pair<std::uint64_t, cplx>> entries;
    std::string line;
    std::uint64_t prev = 0;
    while (r.next(line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string_view row(line);
            if (row.rfind("# limit=", 0) == 0) {
                std::uint64_t v = 0;
                if (!detail::parse_u64(row.substr(8), v) || v == 0)
                    detail::fail_at(source, r.line_no, "bad limit comment \"" + line + "\"");
                limit = v;
            }
            continue;
        }
        std::string_view field[3];
        if (!detail::split3(line, field))
            detail::fail_at(source, r.line_no,
                            "expected `n<TAB>re<TAB>im`, got \"" + line + "\"");
        std::uint64_t n = 0;
        double re = 0.0, im = 0.0;
        if (!detail::parse_u64(field[0], n) || n == 0)
            detail::fail_at(source, r.line_no, "bad index \"" + std::string(field[0]) + "\"");
        if (!detail::parse_double(field[1], re) || !detail::parse_double(field[2], im))
            detail::fail_at(source, r.line_no, "bad value in \"" + line + "\"");
        detail::check_increasing(n, prev, source, r.line_no);
        entries.emplace_back(n, cplx(re, im));
    }
    const std::uint64_t lim = limit ? *limit : (entries.empty() ? 1 : entries.back().first);
    return CoefficientTable::from_entries(lim, degree, std::move(entries),
                                          source + " (raw n-keyed, multiplicativity not assumed)");
}

inline void write_lcoef(std::ostream& out, const CoefficientTable& t) {
    out << "# lcoef v1 degree=" << t.degree_d << "\n# limit=" << t.limit << "\n";
    for (const auto& [n, v] : t.entries())
        out << n << '\t' << detail::fmt17(v.real()) << '\t' << detail::fmt17(v.imag()) << '\n';
}

inline EigenFile read_eigen(std::istream& in, const std::string& source = "<eigen>") {
    detail::line_reader r{in};
    EigenFile f;
    f.weight_k = detail::parse_header(r, source, "eigen", "weight");
    if (f.weight_k < 2)
        detail::fail_at(source, r.line_no, "weight must be >= 2, got " +
                                               std::to_string(f.weight_k));
    std::string line;
    std::uint64_t prev = 0;
    while (r.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        std::string_view field[3];
        if (!detail::split3(line, field))
            detail::fail_at(source, r.line_no,
                            "expected `p<TAB>re<TAB>im`, got \"" + line + "\"");
        std::uint64_t p = 0;
        double re = 0.0, im = 0.0;
        if (!detail::parse_u64(field[0], p) || p < 2)
            detail::fail_at(source, r.line_no, "bad prime key \"" + std::string(field[0]) + "\"");
        if (!detail::parse_double(field[1], re) || !detail::parse_double(field[2], im))
            detail::fail_at(source, r.line_no, "bad value in \"" + line + "\"");
        detail::check_increasing(p, prev, source, r.line_no);
        f.mu.emplace_back(p, cplx(re, im));
    }
    return f;
}

inline void write_eigen(std::ostream& out, const EigenFile& f) {
    out << "# eigen v1 weight=" << f.weight_k << "\n";
    for (const auto& [p, v] : f.mu)
        out << p << '\t' << detail::fmt17(v.real()) << '\t' << detail::fmt17(v.imag()) << '\n';
}

/// {"degree": d, "conductor": N, "mu": [[re,im],...], "nu": [[re,im],...],
///  "epsilon": [re,im]}. Structural problems throw parse_error; the FeData
/// constructor still enforces the semantic invariants.
inline FeData read_fe_json(std::istream& in, const std::string& source = "<fe>") {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(source + ": " + e.what());
    }
    try {
        auto pair_of = [&](const nlohmann::json& x, const char* what) {
            if (!x.is_array() || x.size() != 2)
                throw parse_error(source + ": " + what + " must be [re, im]");
            return cplx(x.at(0).get<double>(), x.at(1).get<double>());
        };
        auto shifts = [&](const char* key) {
            std::vector<cplx> v;
            for (const auto& x : j.at(key)) v.push_back(pair_of(x, key));
            return v;
        };
        const int d = j.at("degree").get<int>();
        const std::int64_t N = j.at("conductor").get<std::int64_t>();
        if (N < 1) throw parse_error(source + ": conductor must be >= 1");
        return FeData(d, static_cast<std::uint64_t>(N), shifts("mu"), shifts("nu"),
                      pair_of(j.at("epsilon"), "epsilon"));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(source + ": " + e.what());
    }
}

inline void write_fe_json(std::ostream& out, const FeData& fe) {
    auto arr = [](const std::vector<cplx>& v) {
        auto a = nlohmann::json::array();
        for (const cplx& z : v) a.push_back({z.real(), z.imag()});
        return a;
    };
    nlohmann::json j;
    j["degree"] = fe.degree_d;
    j["conductor"] = fe.conductor_N;
    j["mu"] = arr(fe.mu);
    j["nu"] = arr(fe.nu);
    j["epsilon"] = {fe.epsilon.real(), fe.epsilon.imag()};
    out << j.dump(2) << "\n";
}

} // namespace lfkit
