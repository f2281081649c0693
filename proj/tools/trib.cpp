#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trib/discovery.hpp"
#include "trib/errors.hpp"
#include "trib/genfunc.hpp"
#include "trib/identities.hpp"
#include "trib/polynomial.hpp"
#include "trib/sums.hpp"
#include "trib/util.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct global_opts {
    bool json = false;
    std::uint64_t rng_seed = 0x5eed;
};

void emit(const nlohmann::json& record) { std::cout << record.dump() << "\n"; }

nlohmann::json record_for(const std::string& command, nlohmann::json params,
                          nlohmann::json results, bool pass) {
    return {{"command", command},
            {"params", std::move(params)},
            {"results", std::move(results)},
            {"pass", pass}};
}

int run_term(const global_opts& g, const std::string& seed, long n,
             const std::string& method) {
    const trib::sequence_spec spec = trib::parse_spec(seed);
    trib::exact_int value;
    if (method == "iter")
        value = trib::term(spec, n);
    else if (method == "alt")
        value = trib::term_alt(spec, n);
    else
        value = trib::term_fast(spec, n);

    if (g.json) {
        emit(record_for("term",
                        {{"seed", seed}, {"n", n}, {"method", method}},
                        {{"value", trib::to_string(value)}}, true));
    } else {
        std::cout << trib::to_string(value) << "\n";
    }
    return exit_ok;
}

std::vector<trib::identity_template> load_templates(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open templates file: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    std::vector<trib::identity_template> out;
    if (j.is_array())
        for (const auto& item : j) out.push_back(trib::template_from_json(item));
    else
        out.push_back(trib::template_from_json(j));
    return out;
}

int run_verify(const global_opts& g, std::vector<std::string> ids,
               const std::string& seed, long random_count, const std::string& range_s,
               const std::string& templates_path) {
    const trib::index_range range = trib::parse_range(range_s);

    std::vector<trib::identity_template> catalog;
    if (templates_path.empty())
        catalog = trib::builtin_identities();
    else
        catalog = load_templates(templates_path);

    if (ids.empty()) ids.push_back("all");
    std::vector<const trib::identity_template*> selected;
    if (ids.size() == 1 && ids[0] == "all") {
        for (const auto& t : catalog) selected.push_back(&t);
    } else {
        for (const auto& id : ids) {
            const trib::identity_template* found = nullptr;
            for (const auto& t : catalog)
                if (t.id == id) found = &t;
            if (!found) throw std::invalid_argument("unknown identity id: " + id);
            selected.push_back(found);
        }
    }
    std::sort(selected.begin(), selected.end(),
              [](const auto* a, const auto* b) { return a->id < b->id; });

    std::vector<trib::sequence_spec> specs;
    if (random_count > 0) {
        trib::rng64 rng(g.rng_seed);
        specs = trib::random_specs(static_cast<size_t>(random_count), rng);
    } else {
        specs.push_back(trib::parse_spec(seed));
    }

    bool all_pass = true;
    nlohmann::json reports = nlohmann::json::array();
    for (const auto* t : selected) {
        for (const auto& spec : specs) {
            trib::term_cache cache(spec);
            const auto report = trib::verify_range(*t, cache, range.lo, range.hi);
            all_pass = all_pass && report.pass;
            if (g.json) {
                reports.push_back(trib::to_json(report));
            } else {
                std::cout << report.id << " seed=" << trib::to_string(spec)
                          << " range=" << range.lo << ".." << range.hi << " "
                          << (report.pass ? "PASS" : "FAIL") << "\n";
                for (const auto& f : report.failures)
                    std::cout << "  r=" << f.r
                              << " residual=" << trib::to_string(f.residual) << "\n";
            }
        }
    }
    if (g.json) {
        nlohmann::json params = {{"ids", ids},
                                 {"range", range_s},
                                 {"random", random_count},
                                 {"seed", seed}};
        if (!templates_path.empty()) params["templates"] = templates_path;
        emit(record_for("verify", std::move(params), {{"reports", std::move(reports)}},
                        all_pass));
    }
    return all_pass ? exit_ok : exit_fail;
}

int run_sum(const global_opts& g, const std::string& variant_name,
            const std::string& x_str, const std::string& seed, long k, bool csv) {
    const trib::sequence_spec spec = trib::parse_spec(seed);
    if (variant_name.empty() == x_str.empty())
        throw std::invalid_argument("pass exactly one of VARIANT or --x");

    std::string label;
    trib::exact_rat closed, oracle;
    std::optional<trib::sum_report> report;
    if (!x_str.empty()) {
        const trib::exact_rat x = trib::parse_rat(x_str);
        closed = trib::weighted_square_sum(spec, x, k);
        oracle = trib::direct_weighted_square_sum(spec, x, k);
        label = "x=" + x_str;
    } else {
        const auto variant = trib::sum_variant_from_string(variant_name);
        if (!variant)
            throw std::invalid_argument("unknown sum variant: " + variant_name);
        report = trib::compare(spec, *variant, k);
        closed = report->closed;
        oracle = report->oracle;
        label = "variant=" + std::string(trib::to_string(*variant));
    }
    const bool equal = closed == oracle;

    if (g.json) {
        nlohmann::json results =
            report ? trib::to_json(*report)
                   : nlohmann::json{{"x", x_str},
                                    {"k", k},
                                    {"closed", trib::to_string(closed)},
                                    {"oracle", trib::to_string(oracle)},
                                    {"equal", equal}};
        emit(record_for("sum",
                        {{"variant", variant_name}, {"x", x_str}, {"seed", seed}, {"k", k}},
                        std::move(results), equal));
    } else if (csv && report) {
        std::cout << trib::sum_report_csv_header << "\n"
                  << trib::to_csv_row(*report) << "\n";
    } else {
        std::cout << label << " k=" << k << " closed=" << trib::to_string(closed)
                  << " oracle=" << trib::to_string(oracle)
                  << " equal=" << (equal ? "true" : "false") << "\n";
    }
    return equal ? exit_ok : exit_fail;
}

int run_genfunc(const global_opts& g, const std::string& seed, long count) {
    const trib::sequence_spec spec = trib::parse_spec(seed);
    const trib::rational_function rf = trib::squares_generating_function(spec);
    const auto coeffs = trib::series_coefficients(rf, static_cast<size_t>(count));

    trib::term_cache cache(spec);
    bool all_match = true;
    nlohmann::json rows = nlohmann::json::array();
    std::vector<std::string> lines;
    for (long j = 0; j < count; ++j) {
        const trib::exact_int t = cache.term(j);
        const trib::exact_rat expected = trib::exact_rat(t * t);
        const trib::exact_rat& got = coeffs[static_cast<size_t>(j)];
        const bool match = got == expected;
        all_match = all_match && match;
        if (g.json)
            rows.push_back({{"j", j},
                            {"coeff", trib::to_string(got)},
                            {"expected", trib::to_string(expected)},
                            {"match", match}});
        else
            lines.push_back("j=" + std::to_string(j) + " coeff=" + trib::to_string(got) +
                            " expected=" + trib::to_string(expected) +
                            " match=" + (match ? "true" : "false"));
    }

    if (g.json) {
        emit(record_for("genfunc", {{"seed", seed}, {"count", count}},
                        {{"rational_function", trib::to_json(rf)},
                         {"coefficients", std::move(rows)}},
                        all_match));
    } else {
        const nlohmann::json rf_json = trib::to_json(rf);
        std::cout << "num=" << rf_json["num"].dump() << "\n"
                  << "den=" << rf_json["den"].dump() << "\n";
        for (const auto& line : lines) std::cout << line << "\n";
    }
    return all_match ? exit_ok : exit_fail;
}

std::string vector_text(const std::vector<trib::exact_int>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += trib::to_string(v[i]);
    }
    return out + ")";
}

int run_discover(const global_opts& g, long power, const std::string& window_s,
                 bool all, const std::string& emit_path) {
    if (power < 1) throw std::invalid_argument("power must be >= 1");
    const trib::index_range window = trib::parse_range(window_s);
    std::vector<long> offsets;
    for (long o = window.lo; o <= window.hi; ++o) offsets.push_back(o);

    trib::discovery_options opts;
    opts.rng_seed = g.rng_seed;
    const auto result =
        trib::discover_identity(static_cast<unsigned>(power), offsets, opts);

    const bool ambiguous = result.status == trib::discovery_status::ambiguous;
    const bool pass = !ambiguous || all;

    if (!emit_path.empty() && result.identity) {
        nlohmann::json arr = nlohmann::json::array();
        arr.push_back(trib::to_json(*result.identity));
        std::ofstream out(emit_path);
        if (!out) throw std::invalid_argument("cannot write file: " + emit_path);
        out << arr.dump(2) << "\n";
    }

    if (g.json) {
        nlohmann::json kernel = nlohmann::json::array();
        for (const auto& v : result.kernel) {
            nlohmann::json vec = nlohmann::json::array();
            for (const auto& c : v) vec.push_back(trib::to_string(c));
            kernel.push_back(std::move(vec));
        }
        nlohmann::json results = {{"status", result.status == trib::discovery_status::found
                                                 ? "found"
                                                 : (ambiguous ? "ambiguous" : "not_found")},
                                  {"kernel", std::move(kernel)}};
        if (result.identity) results["identity"] = trib::to_json(*result.identity);
        emit(record_for("discover",
                        {{"power", power}, {"window", window_s}, {"all", all}},
                        std::move(results), pass));
    } else {
        switch (result.status) {
            case trib::discovery_status::not_found:
                std::cout << "NOT_FOUND\n";
                break;
            case trib::discovery_status::found:
                std::cout << "kernel dimension 1\n"
                          << "vector: " << vector_text(result.kernel[0]) << "\n";
                break;
            case trib::discovery_status::ambiguous:
                std::cout << "kernel dimension " << result.kernel.size() << "\n";
                for (const auto& v : result.kernel)
                    std::cout << "vector: " << vector_text(v) << "\n";
                break;
        }
    }
    return pass ? exit_ok : exit_fail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for generalized Tribonacci sequences"};
    app.require_subcommand(1);

    global_opts g;
    app.add_flag("--json", g.json, "machine-readable JSON output");
    app.add_option("--rng-seed", g.rng_seed, "seed for generated random specs");

    auto* term_cmd = app.add_subcommand("term", "compute T_n for any integer n");
    term_cmd->fallthrough();
    std::string term_seed = "0,1,1";
    long term_n = 0;
    std::string term_method = "iter";
    term_cmd->add_option("--seed", term_seed, "initial values T_0,T_1,T_2");
    term_cmd->add_option("-n,--index", term_n, "term index")->required();
    term_cmd->add_option("--method", term_method, "iter, alt or matrix")
        ->check(CLI::IsMember({"iter", "alt", "matrix"}));

    auto* verify_cmd =
        app.add_subcommand("verify", "check identity residuals over an index range");
    verify_cmd->fallthrough();
    std::vector<std::string> verify_ids;
    std::string verify_seed = "0,1,1";
    long verify_random = 0;
    std::string verify_range_s = "-20..50";
    std::string verify_templates;
    verify_cmd->add_option("ids", verify_ids, "identity ids, or 'all'");
    verify_cmd->add_option("--seed", verify_seed, "initial values T_0,T_1,T_2");
    verify_cmd->add_option("--random", verify_random,
                           "verify over N random specs instead of --seed");
    verify_cmd->add_option("--range", verify_range_s, "inclusive index range lo..hi");
    verify_cmd->add_option("--templates", verify_templates,
                           "JSON file with identity templates (default: builtins)");

    auto* sum_cmd =
        app.add_subcommand("sum", "evaluate a closed-form sum against its oracle");
    sum_cmd->fallthrough();
    std::string sum_variant_name;
    std::string sum_x;
    std::string sum_seed = "0,1,1";
    long sum_k = 0;
    bool sum_csv = false;
    sum_cmd->add_option("variant", sum_variant_name, "sum variant, e.g. TRIB_ALL");
    sum_cmd->add_option("--x", sum_x, "weight base for sum of x^j T_j^2 (rational)");
    sum_cmd->add_option("--seed", sum_seed, "initial values T_0,T_1,T_2");
    sum_cmd->add_option("--k", sum_k, "upper summation index")->required();
    sum_cmd->add_flag("--csv", sum_csv, "CSV output");

    auto* genfunc_cmd = app.add_subcommand(
        "genfunc", "generating function of squared terms and its series");
    genfunc_cmd->fallthrough();
    std::string genfunc_seed = "0,1,1";
    long genfunc_count = 8;
    genfunc_cmd->add_option("--seed", genfunc_seed, "initial values T_0,T_1,T_2");
    genfunc_cmd->add_option("--count", genfunc_count, "number of series coefficients")
        ->check(CLI::PositiveNumber);

    auto* discover_cmd =
        app.add_subcommand("discover", "search for identity coefficient vectors");
    discover_cmd->fallthrough();
    long discover_power = 0;
    std::string discover_window;
    bool discover_all = false;
    std::string discover_emit;
    discover_cmd->add_option("--power", discover_power, "term power")->required();
    discover_cmd->add_option("--window", discover_window, "offset window lo..hi")
        ->required();
    discover_cmd->add_flag("--all", discover_all,
                           "report a multi-dimensional kernel as success");
    discover_cmd->add_option("--emit-json", discover_emit,
                             "write the discovered template to a JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (term_cmd->parsed()) return run_term(g, term_seed, term_n, term_method);
        if (verify_cmd->parsed())
            return run_verify(g, verify_ids, verify_seed, verify_random, verify_range_s,
                              verify_templates);
        if (sum_cmd->parsed())
            return run_sum(g, sum_variant_name, sum_x, sum_seed, sum_k, sum_csv);
        if (genfunc_cmd->parsed()) return run_genfunc(g, genfunc_seed, genfunc_count);
        if (discover_cmd->parsed())
            return run_discover(g, discover_power, discover_window, discover_all,
                                discover_emit);
    } catch (const trib::variant_spec_mismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_fail;
    }
    return exit_usage;
}
