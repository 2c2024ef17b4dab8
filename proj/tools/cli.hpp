// Command-line front end. Kept in a header so tests can drive run() with
// string streams.
//
// Exit codes: 0 success, 1 internal error or failed oracle check,
// 2 input error, 3 resource guard exceeded.
#pragma once

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "elimpoly/elimpoly.hpp"
#include "json.hpp"

namespace elimpoly::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kInput = 2, kResource = 3 };

/// Largest n accepted by `family` and `series`.
inline constexpr unsigned kMaxFamilyOrder = 4096;

class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GlobalFlags {
    bool json = false;
    unsigned max_vertices = 16;
    bool no_memo = false;
    bool stats = false;
};

inline std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    std::string s(buf, end);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

inline std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Accepts an integer, p/q, or a finite decimal such as -1.25.
inline Rational parse_rational(const std::string& text) {
    auto digits_only = [](const std::string& s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
    };
    auto decimal = [](const std::string& s) { return *detail::parse_decimal(s); };
    std::string body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        negative = body[0] == '-';
        body.erase(0, 1);
    }
    Rational value;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        std::string num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!digits_only(num) || !digits_only(den)) throw input_error("not a rational number: '" + text + "'");
        const Integer d = decimal(den);
        if (d == 0) throw input_error("zero denominator in '" + text + "'");
        value = Rational(decimal(num), d);
    } else if (auto dot = body.find('.'); dot != std::string::npos) {
        std::string whole = body.substr(0, dot), frac = body.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!digits_only(whole) || !(frac.empty() || digits_only(frac)))
            throw input_error("not a decimal number: '" + text + "'");
        Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
        value = Rational(decimal(whole + frac), scale);
    } else {
        if (!digits_only(body)) throw input_error("not a number: '" + text + "'");
        value = Rational(decimal(body));
    }
    return negative ? Rational(-value) : value;
}

inline std::vector<std::string> split_point(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) parts.push_back(item);
    if (parts.size() != 3 || text.back() == ',') throw input_error("--eval expects x,y,z; got '" + text + "'");
    return parts;
}

inline Multigraph load_graph(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file '" + path + "'");
    return read_graph(in);
}

inline XiOptions engine_options(const GlobalFlags& flags) {
    XiOptions opts;
    opts.max_vertices = flags.max_vertices;
    opts.memoize = !flags.no_memo;
    return opts;
}

inline void report_stats(const GlobalFlags& flags, const XiStats& stats, std::ostream& err) {
    if (!flags.stats) return;
    err << "stats: recursion_nodes=" << stats.recursion_nodes << " cache_hits=" << stats.cache_hits
        << " peak_cache_size=" << stats.peak_cache_size << '\n';
}

inline void print_poly(const GlobalFlags& flags, const Poly& p, std::ostream& out) {
    out << (flags.json ? to_json(p) : to_string(p)) << '\n';
}

inline int cmd_compute(const GlobalFlags& flags, const std::string& file, std::ostream& out, std::ostream& err) {
    const Multigraph g = load_graph(file);
    const XiResult r = xi_with_stats(g, engine_options(flags));
    print_poly(flags, r.value, out);
    report_stats(flags, r.stats, err);
    return kOk;
}

inline int cmd_family(const GlobalFlags& flags, const std::string& kind, unsigned n,
                      const std::optional<std::string>& eval, bool closed_form, std::ostream& out,
                      std::ostream& err) {
    if (n > kMaxFamilyOrder)
        throw resource_limit_error("n = " + std::to_string(n) + " exceeds the family limit " +
                                   std::to_string(kMaxFamilyOrder));
    const bool cycle = kind == "cycle";
    if (cycle && n == 0) err << "note: C_0 is the empty graph, so xi(C_0) = 1\n";

    if (closed_form) {
        if (!eval) throw input_error("--closed-form requires --eval x,y,z");
        const auto parts = split_point(*eval);
        const RationalPoint exact{parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
        const FloatPoint pt{exact.x.convert_to<double>(), exact.y.convert_to<double>(), exact.z.convert_to<double>()};
        const double v = cycle ? xi_cycle_closed(n, pt) : xi_path_closed(n, pt);
        if (flags.json) {
            out << nlohmann::json{{"value", v}}.dump() << '\n';
        } else {
            out << format_double(v) << '\n';
        }
        return kOk;
    }

    const Poly p = cycle ? xi_cycle_poly(n) : xi_path_poly(n);
    if (eval) {
        const auto parts = split_point(*eval);
        const RationalPoint pt{parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
        const std::string value = format_rational(eval_exact(p, pt));
        if (flags.json) {
            out << nlohmann::json{{"value", value}}.dump() << '\n';
        } else {
            out << value << '\n';
        }
        return kOk;
    }
    print_poly(flags, p, out);
    return kOk;
}

inline int cmd_series(const GlobalFlags& flags, const std::string& kind, unsigned order, std::ostream& out) {
    if (order > kMaxFamilyOrder)
        throw resource_limit_error("N = " + std::to_string(order) + " exceeds the series limit " +
                                   std::to_string(kMaxFamilyOrder));
    const Series s = kind == "cycle" ? cycle_series(order) : path_series(order);
    if (flags.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Poly& c : s.coefficients()) arr.push_back(to_json_value(c));
        out << arr.dump() << '\n';
    } else {
        for (const Poly& c : s.coefficients()) out << to_string(c) << '\n';
    }
    return kOk;
}

inline int cmd_specialize(const GlobalFlags& flags, const std::string& file, const std::string& which,
                          bool oracle_check, std::ostream& out, std::ostream& err) {
    const Multigraph g = load_graph(file);
    const XiOptions opts = engine_options(flags);
    if ((which == "matching" || which == "chromatic2") && g.has_loops())
        throw loops_not_allowed(which + ": loops not allowed (the graph must be loop-free)");

    Poly p;
    std::optional<bool> pass;
    if (which == "matching") {
        err << "# M(G; x, y): x marks uncovered vertices, y marks matching edges\n";
        p = matching_poly(g, opts);
        if (oracle_check) pass = p == oracle_matching(g);
    } else if (which == "chromatic2") {
        err << "# P(G; x, y): x colours in total, y of them proper\n";
        p = bivariate_chromatic(g, opts);
        if (oracle_check) {
            pass = true;
            for (std::uint64_t xv = 0; xv <= 4; ++xv)
                for (std::uint64_t yv = 0; yv <= xv; ++yv)
                    if (eval_exact(p, RationalPoint{Rational(xv), Rational(yv), Rational(0)}) != Rational(oracle_chromatic2(g, xv, yv))) pass = false;
        }
    } else {
        err << "# C(G; x, y, z): x marks components, y edges, z covered components\n";
        p = covered_components(g, opts);
        if (oracle_check) pass = p == oracle_covered(g);
    }

    if (flags.json) {
        nlohmann::json obj{{"polynomial", to_json_value(p)}};
        if (pass) obj["oracle_check"] = *pass ? "PASS" : "FAIL";
        out << obj.dump() << '\n';
    } else {
        out << to_string(p) << '\n';
        if (pass) out << "oracle-check: " << (*pass ? "PASS" : "FAIL") << '\n';
    }
    return pass.value_or(true) ? kOk : kInternal;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact edge elimination polynomial xi(G; x, y, z) of multigraphs", "elimpoly"};
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_flag("--json", flags.json, "Print polynomials in JSON form (default: canonical text)");
    app.add_option("--max-vertices", flags.max_vertices, "Vertex limit for the recursion engine")
        ->capture_default_str();
    app.add_flag("--no-memo", flags.no_memo, "Disable memoization of isomorphic subproblems (default: on)");
    app.add_flag("--stats", flags.stats, "Report recursion statistics on standard error");

    std::string compute_file;
    auto* compute = app.add_subcommand("compute", "Compute xi of the graph in FILE ('-' for stdin)");
    compute->add_option("file", compute_file, "Graph file")->required();

    std::string family_kind;
    unsigned family_n = 0;
    std::optional<std::string> family_eval;
    bool family_closed = false;
    auto* family = app.add_subcommand("family", "xi of the path or cycle on n vertices");
    family->add_option("kind", family_kind, "path or cycle")->required()->check(CLI::IsMember({"path", "cycle"}));
    family->add_option("n", family_n, "Number of vertices")->required();
    family->add_option("--eval", family_eval, "Evaluate at x,y,z (integers, p/q or decimals)");
    family->add_flag("--closed-form", family_closed, "Use the double-precision closed form (needs --eval)");

    std::string series_kind;
    unsigned series_order = 0;
    auto* series = app.add_subcommand("series", "Generating-function coefficients t^0..t^N, one per line");
    series->add_option("kind", series_kind, "path or cycle")->required()->check(CLI::IsMember({"path", "cycle"}));
    series->add_option("N", series_order, "Truncation order")->required();

    std::string spec_file, spec_which;
    bool spec_oracle = false;
    auto* specialize = app.add_subcommand("specialize", "Matching, bivariate chromatic or covered components polynomial");
    specialize->add_option("file", spec_file, "Graph file")->required();
    specialize->add_option("which", spec_which, "matching, chromatic2 or covered")
        ->required()
        ->check(CLI::IsMember({"matching", "chromatic2", "covered"}));
    specialize->add_flag("--oracle-check", spec_oracle, "Compare against brute-force enumeration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInput;
    }

    try {
        if (*compute) return cmd_compute(flags, compute_file, out, err);
        if (*family) return cmd_family(flags, family_kind, family_n, family_eval, family_closed, out, err);
        if (*series) return cmd_series(flags, series_kind, series_order, out);
        if (*specialize) return cmd_specialize(flags, spec_file, spec_which, spec_oracle, out, err);
    } catch (const graph_parse_error& e) {
        err << "error: " << e.what() << '\n';
        return kInput;
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return kInput;
    } catch (const loops_not_allowed& e) {
        err << "error: " << e.what() << '\n';
        return kInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInput;
    } catch (const resource_limit_error& e) {
        err << "error: resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kInternal;
}

}  // namespace elimpoly::cli
