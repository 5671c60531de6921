#include "lmlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>

#include "lmlab/bounds.hpp"
#include "lmlab/core.hpp"
#include "lmlab/error.hpp"
#include "lmlab/lattice.hpp"
#include "lmlab/metric.hpp"
#include "lmlab/parallel.hpp"
#include "lmlab/qp.hpp"
#include "lmlab/report.hpp"
#include "lmlab/search.hpp"
#include "lmlab/text_format.hpp"

namespace lmlab::cli {

using nlohmann::json;

namespace {

enum class Format { text, json, csv };

struct BallFlags {
    int n = 0;
    int e = 0;
    std::optional<int> s;
    std::optional<int> kplus;
    std::optional<int> kminus;

    void attach(CLI::App* sub) {
        sub->add_option("--n", n, "dimension")->required();
        sub->add_option("--e", e, "number of errors")->required();
        auto* s_opt = sub->add_option("--s", s, "symmetric magnitude");
        sub->add_option("--kplus", kplus, "positive magnitude")->excludes(s_opt);
        sub->add_option("--kminus", kminus, "negative magnitude")->excludes(s_opt);
    }

    BallParams params() const {
        if (s) return BallParams::symmetric(n, e, *s);
        if (!kplus || !kminus) throw CLI::ValidationError("give --s, or both --kplus and --kminus");
        return BallParams::make(n, e, *kplus, *kminus);
    }
};

std::string quote_csv(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + '"';
}

void write_single(std::ostream& out, Format format, const std::string& key, const std::string& value) {
    switch (format) {
        case Format::text: out << value << '\n'; break;
        case Format::json: out << json{{key, value}}.dump() << '\n'; break;
        case Format::csv: out << key << '\n' << quote_csv(value) << '\n'; break;
    }
}

void write_object(std::ostream& out, Format format, const std::vector<std::pair<std::string, std::string>>& fields) {
    switch (format) {
        case Format::text:
            for (const auto& [k, v] : fields) out << k << ' ' << v << '\n';
            break;
        case Format::json: {
            json j = json::object();
            for (const auto& [k, v] : fields) j[k] = v;
            out << j.dump() << '\n';
            break;
        }
        case Format::csv: {
            for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << quote_csv(fields[i].first);
            out << '\n';
            for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << quote_csv(fields[i].second);
            out << '\n';
            break;
        }
    }
}

void write_list(std::ostream& out, Format format, const std::string& key, const std::vector<std::string>& items) {
    switch (format) {
        case Format::text:
            for (const auto& item : items) out << item << '\n';
            break;
        case Format::json: out << json(items).dump() << '\n'; break;
        case Format::csv:
            out << key << '\n';
            for (const auto& item : items) out << quote_csv(item) << '\n';
            break;
    }
}

void write_verification(std::ostream& out, Format format, const VerificationResult& r) {
    if (format == Format::json) {
        out << to_json(r).dump() << '\n';
        return;
    }
    std::vector<std::pair<std::string, std::string>> fields{
        {"verdict", to_string(r.verdict)}, {"volume", to_string(r.volume)}, {"index", to_string(r.index)}};
    if (r.witness) fields.emplace_back("witness", format_vector(r.witness->first) + " " + format_vector(r.witness->second));
    write_object(out, format, fields);
}

void write_report_text(std::ostream& out, const ClassificationReport& r) {
    out << "n=" << r.n << " e=" << r.e << " s=" << r.s << ": " << to_string(r.verdict);
    if (r.lattice_excluded) out << " (lattice tilings excluded)";
    out << '\n';
    for (const auto& c : r.criteria)
        out << "  " << c.name << " [" << to_string(c.scope) << "] " << to_string(c.status) << ": " << c.detail << '\n';
}

std::vector<Rational> parse_epsilons(const std::vector<std::string>& texts) {
    std::vector<Rational> out;
    for (const auto& t : texts) out.push_back(parse_rational(t));
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"lmlab: limited-magnitude error balls, lattice tilings and non-existence bounds", "lmlab"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string format_name = "text";
    unsigned threads = thread_count();
    Limits limits = kDefaultLimits;
    app.add_option("--format", format_name, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--threads", threads, "worker threads (default LMLAB_THREADS or hardware)")
        ->check(CLI::PositiveNumber);
    app.add_option("--cap-enumeration", limits.enumeration, "ball enumeration cap")->check(CLI::PositiveNumber);
    app.add_option("--cap-cells", limits.disjointness_cells, "disjointness cell cap")->check(CLI::PositiveNumber);
    app.add_option("--cap-pairs", limits.equivalence_pairs, "equivalence pair cap")->check(CLI::PositiveNumber);
    app.add_option("--cap-index", limits.sublattice_index, "sublattice index cap")->check(CLI::PositiveNumber);

    BallFlags ball;
    std::string gen, expect, x_text, y_text, code_text, mode = "tiling", regime, a_text, epsilon_text;
    std::vector<std::string> epsilon_texts;
    std::optional<int> e_opt;
    std::optional<std::int64_t> window;
    int s_only = 1, t = 1, resolution = 0;
    std::int64_t K = 0, a_int = 0, window_value = 12;
    bool strict = false;
    int n_min = 1, n_max = 1, e_min = 0, e_max = 0, s_min = 1, s_max = 1;

    auto* ball_cmd = app.add_subcommand("ball", "volume of the error ball");
    ball.attach(ball_cmd);
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list the error ball in lexicographic order");
    ball.attach(enumerate_cmd);

    auto* dist_cmd = app.add_subcommand("dist", "d_s distance of two words, or minimum distance of a code");
    dist_cmd->add_option("--s", s_only, "magnitude")->required();
    auto* x_opt = dist_cmd->add_option("--x", x_text, "first word, e.g. 1,0,-1");
    dist_cmd->add_option("--y", y_text, "second word")->needs(x_opt);
    dist_cmd->add_option("--code", code_text, "codewords separated by ';'")->excludes(x_opt);
    dist_cmd->add_option("--e", e_opt, "also test e-error correction with both methods");

    auto* verify_cmd = app.add_subcommand("verify-lattice", "exact packing or tiling verdict for a lattice");
    ball.attach(verify_cmd);
    verify_cmd->add_option("--gen", gen, "generator rows, e.g. 1,2;2,-1")->required();
    verify_cmd->add_option("--mode", mode, "packing or tiling")->check(CLI::IsMember({"packing", "tiling"}));
    verify_cmd->add_option("--expect", expect, "exit 1 unless the verdict matches")
        ->check(CLI::IsMember({"packs", "tiles", "fails"}));

    auto* window_cmd = app.add_subcommand("verify-window", "check packing and covering inside a finite window");
    ball.attach(window_cmd);
    window_cmd->add_option("--gen", gen, "generator rows")->required();
    window_cmd->add_option("--window", window_value, "window half-width L")->check(CLI::NonNegativeNumber);
    window_cmd->add_option("--expect", expect, "exit 1 unless the outcome matches")
        ->check(CLI::IsMember({"tiles", "packs", "fails"}));

    auto* density_cmd = app.add_subcommand("density", "lattice packing density, exact and windowed");
    ball.attach(density_cmd);
    density_cmd->add_option("--gen", gen, "generator rows")->required();
    density_cmd->add_option("--window", window, "also estimate over [-L, L]^n")->check(CLI::NonNegativeNumber);

    auto* search_cmd = app.add_subcommand("search", "all lattice tilings of index |ball| in HNF");
    ball.attach(search_cmd);

    auto* classify_cmd = app.add_subcommand("classify", "run every exclusion criterion on (n, e, s)");
    int cn = 0, ce = 0, cs = 1;
    classify_cmd->add_option("--n", cn, "dimension")->required();
    classify_cmd->add_option("--e", ce, "number of errors")->required();
    classify_cmd->add_option("--s", cs, "magnitude")->required();
    classify_cmd->add_option("--epsilon", epsilon_texts, "epsilons for the asymptotic criterion, e.g. 1/15");
    classify_cmd->add_flag("--strict", strict, "use the unrounded large-s constant");
    classify_cmd->add_option("--expect", expect, "exit 1 unless the verdict matches")
        ->check(CLI::IsMember({"exists", "excluded", "open"}));

    auto* range_cmd = app.add_subcommand("classify-range", "classify every triple of a grid (e <= n)");
    range_cmd->add_option("--n-min", n_min)->required();
    range_cmd->add_option("--n-max", n_max)->required();
    range_cmd->add_option("--e-min", e_min)->required();
    range_cmd->add_option("--e-max", e_max)->required();
    range_cmd->add_option("--s-min", s_min)->required();
    range_cmd->add_option("--s-max", s_max)->required();
    range_cmd->add_option("--epsilon", epsilon_texts, "epsilons for the asymptotic criterion");
    range_cmd->add_flag("--strict", strict, "use the unrounded large-s constant");

    auto* bound_cmd = app.add_subcommand("density-bound", "upper bound on packing density");
    int bn = 0, be = 0, bs = 1;
    bound_cmd->add_option("--s", bs, "magnitude")->required();
    auto* bn_opt = bound_cmd->add_option("--n", bn, "dimension");
    bound_cmd->add_option("--e", be, "number of errors")->needs(bn_opt);
    auto* regime_opt = bound_cmd->add_option("--regime", regime, "asymptotic regime")
                           ->check(CLI::IsMember({"sqrt", "linear"}))
                           ->excludes(bn_opt);
    bound_cmd->add_option("--a", a_text, "regime constant, e.g. 1/2")->needs(regime_opt);

    auto* qp_cmd = app.add_subcommand("qp-check", "closed-form maximum of f_s against the grid oracle");
    qp_cmd->add_option("--s", s_only, "magnitude")->required();
    qp_cmd->add_option("--K", K, "codeword count")->required();
    qp_cmd->add_option("--a", a_text, "nonzero mass, e.g. 4 or 7/2")->required();
    qp_cmd->add_option("--resolution", resolution, "grid steps per unit of mass split")->check(CLI::PositiveNumber);

    auto* table_cmd = app.add_subcommand("table", "minimum n and coefficient for the asymptotic bound");
    table_cmd->add_option("--s", s_only, "1 or 2")->required();
    table_cmd->add_option("--epsilon", epsilon_text, "e.g. 1/15")->required();

    auto* equiv_cmd = app.add_subcommand("equivalence-check", "difference set of V(n,t,s) against the d_s ball");
    equiv_cmd->add_option("--n", bn, "dimension")->required();
    equiv_cmd->add_option("--t", t, "number of errors")->required();
    equiv_cmd->add_option("--s", s_only, "magnitude")->required();
    (void)a_int;

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    const Format format = format_name == "json" ? Format::json : format_name == "csv" ? Format::csv : Format::text;
    try {
        if (ball_cmd->parsed()) {
            write_single(out, format, "volume", to_string(ball_volume(ball.params())));
        } else if (enumerate_cmd->parsed()) {
            std::vector<std::string> items;
            for (const auto& v : enumerate_ball(ball.params(), limits.enumeration)) items.push_back(format_vector(v));
            write_list(out, format, "vector", items);
        } else if (dist_cmd->parsed()) {
            if (!code_text.empty()) {
                auto words = parse_vector_list(code_text);
                const int n = words.empty() ? 0 : static_cast<int>(words.front().size());
                Code code(n, std::move(words));
                std::vector<std::pair<std::string, std::string>> fields{
                    {"min_distance", std::to_string(min_distance(code, s_only))}};
                if (e_opt) {
                    const bool by_distance = is_e_correcting(code, *e_opt, s_only, CorrectionMethod::distance, limits);
                    const bool by_balls = is_e_correcting(code, *e_opt, s_only, CorrectionMethod::disjointness, limits);
                    fields.emplace_back("correcting_distance", by_distance ? "true" : "false");
                    fields.emplace_back("correcting_disjointness", by_balls ? "true" : "false");
                }
                write_object(out, format, fields);
            } else {
                if (x_text.empty() || y_text.empty()) throw CLI::ValidationError("give --x and --y, or --code");
                write_single(out, format, "distance",
                             std::to_string(ds_distance(parse_vector(x_text), parse_vector(y_text), s_only)));
            }
        } else if (verify_cmd->parsed()) {
            const Lattice lattice = parse_lattice(gen);
            const auto result = mode == "packing" ? verify_lattice_packing(lattice, ball.params(), limits)
                                                  : verify_lattice_tiling(lattice, ball.params(), limits);
            write_verification(out, format, result);
            if (!expect.empty() && to_string(result.verdict) != expect) return 1;
        } else if (window_cmd->parsed()) {
            const auto params = ball.params();
            const Lattice lattice = parse_lattice(gen);
            const auto translates = window_translates(lattice, params, window_value, limits);
            const auto packing = verify_window_packing(translates, params, window_value, limits);
            const auto covering = verify_window_covering(translates, params, window_value, limits);
            std::string outcome = !packing.ok ? "fails" : covering.ok ? "tiles" : "packs";
            std::vector<std::pair<std::string, std::string>> fields{
                {"outcome", outcome},
                {"packing", packing.ok ? "true" : "false"},
                {"covering", covering.ok ? "true" : "false"}};
            if (!packing.ok && packing.witness) fields.emplace_back("overlap", format_vector(*packing.witness));
            if (!covering.ok && covering.witness) fields.emplace_back("uncovered", format_vector(*covering.witness));
            write_object(out, format, fields);
            if (!expect.empty() && outcome != expect) return 1;
        } else if (density_cmd->parsed()) {
            const auto params = ball.params();
            const Lattice lattice = parse_lattice(gen);
            std::vector<std::pair<std::string, std::string>> fields{
                {"density", to_string(lattice_density(lattice, params))}};
            if (window) {
                fields.emplace_back("window_estimate", to_string(estimate_density(lattice, params, *window, limits)));
                const auto sandwich = tiling_density_sandwich(params, *window);
                fields.emplace_back("tiling_lower", to_string(sandwich.lower));
                fields.emplace_back("tiling_upper", to_string(sandwich.upper));
            }
            write_object(out, format, fields);
        } else if (search_cmd->parsed()) {
            std::vector<std::string> items;
            for (const auto& l : search_perfect_lattices(ball.params(), threads, limits)) items.push_back(format_lattice(l));
            write_list(out, format, "generator", items);
        } else if (classify_cmd->parsed()) {
            ClassifyOptions options;
            if (!epsilon_texts.empty()) options.epsilons = parse_epsilons(epsilon_texts);
            if (strict) options.large_s_mode = LargeSMode::strict;
            const auto report = classify(cn, ce, cs, options);
            switch (format) {
                case Format::text: write_report_text(out, report); break;
                case Format::json: out << to_json(report).dump() << '\n'; break;
                case Format::csv: out << csv_header() << '\n' << csv_row(report) << '\n'; break;
            }
            if (!expect.empty() && to_string(report.verdict) != expect) return 1;
        } else if (range_cmd->parsed()) {
            if (n_min < 1 || n_min > n_max || e_min < 0 || e_min > e_max || s_min < 1 || s_min > s_max)
                throw CLI::ValidationError("empty or invalid grid");
            ClassifyOptions options;
            if (!epsilon_texts.empty()) options.epsilons = parse_epsilons(epsilon_texts);
            if (strict) options.large_s_mode = LargeSMode::strict;
            struct Triple { int n, e, s; };
            std::vector<Triple> grid;
            for (int n = n_min; n <= n_max; ++n)
                for (int e = e_min; e <= std::min(e_max, n); ++e)
                    for (int s = s_min; s <= s_max; ++s) grid.push_back({n, e, s});
            std::vector<ClassificationReport> reports(grid.size());
            parallel_for(grid.size(), threads, [&](std::size_t i) {
                reports[i] = classify(grid[i].n, grid[i].e, grid[i].s, options);
            });
            switch (format) {
                case Format::json: {
                    json all = json::array();
                    for (const auto& r : reports) all.push_back(to_json(r));
                    out << all.dump() << '\n';
                    break;
                }
                case Format::text:
                    for (const auto& r : reports) write_report_text(out, r);
                    break;
                case Format::csv:
                    out << csv_header() << '\n';
                    for (const auto& r : reports) out << csv_row(r) << '\n';
                    break;
            }
        } else if (bound_cmd->parsed()) {
            if (!regime.empty()) {
                if (a_text.empty()) throw CLI::ValidationError("--regime needs --a");
                const auto value = density_bound_asymptotic(regime == "sqrt" ? DensityRegime::sqrt : DensityRegime::linear,
                                                            parse_rational(a_text), bs);
                write_object(out, format, {{"bound", to_string(value)}, {"decimal", to_decimal(value, 6)}});
            } else {
                if (bn_opt->count() == 0) throw CLI::ValidationError("give --n and --e, or --regime and --a");
                const auto b = packing_density_bound(bn, be, bs);
                if (!b.applicable)
                    write_object(out, format, {{"applicable", "false"}});
                else
                    write_object(out, format,
                                 {{"applicable", "true"},
                                  {"bound", to_string(b.value)},
                                  {"decimal", to_decimal(b.value, 6)},
                                  {"vacuous", b.vacuous ? "true" : "false"}});
            }
        } else if (qp_cmd->parsed()) {
            const Rational a = parse_rational(a_text);
            const auto closed = f_max_closed(s_only, Rational(Integer(std::to_string(K))), a);
            const int res = resolution > 0 ? resolution : default_resolution(s_only);
            const auto oracle = f_max_oracle_continuous(s_only, static_cast<double>(K), a.get_d(), res, threads);
            const double exact = closed.value.get_d();
            const bool dominated = oracle.value <= exact + 1e-6;
            const bool attained = exact == 0.0 ? oracle.value >= -1e-9 : (exact - oracle.value) / exact <= 1e-3;
            std::string argmax;
            for (const auto& c : closed.argmax.counts) argmax += (argmax.empty() ? "" : ",") + to_string(c);
            write_object(out, format,
                         {{"closed_form", to_string(closed.value)},
                          {"argmax", argmax},
                          {"oracle", to_decimal(Rational(oracle.value), 9)},
                          {"ok", dominated && attained ? "true" : "false"}});
            if (!(dominated && attained)) return 1;
        } else if (table_cmd->parsed()) {
            const auto row = table_row(s_only, parse_rational(epsilon_text));
            const std::string coef = to_decimal(row.coefficient, 2);
            if (format == Format::text)
                out << row.min_n << ", " << coef << '\n';
            else
                write_object(out, format, {{"min_n", std::to_string(row.min_n)}, {"coefficient", coef}});
        } else if (equiv_cmd->parsed()) {
            const auto check = difference_set_equivalence(bn, t, s_only, limits);
            std::vector<std::pair<std::string, std::string>> fields{
                {"equal", check.equal ? "true" : "false"},
                {"difference_count", std::to_string(check.difference_count)},
                {"distance_ball_count", std::to_string(check.distance_ball_count)}};
            if (check.witness) fields.emplace_back("witness", format_vector(*check.witness));
            write_object(out, format, fields);
            if (!check.equal) return 1;
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace lmlab::cli
