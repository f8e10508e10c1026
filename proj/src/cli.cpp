#include "chains/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "chains/counting.hpp"
#include "chains/io.hpp"

namespace chains::cli {

namespace {

std::string trimmed(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<double> parse_delta_list(const std::string& text) {
    std::vector<double> out;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trimmed(item);
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw UsageError("'" + item + "' is not a number in the distance list");
        }
        if (pos != item.size()) throw UsageError("'" + item + "' is not a number in the distance list");
        if (!(v > 0.0) || !std::isfinite(v)) throw UsageError("distances must be positive, got '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("the distance list is empty");
    return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
    std::vector<std::int64_t> out;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trimmed(item);
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw UsageError("'" + item + "' is not an integer in the " + what + " list");
        }
        if (pos != item.size())
            throw UsageError("'" + item + "' is not an integer in the " + what + " list");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError(std::string("the ") + what + " list is empty");
    return out;
}

void check_tol_flag(double tol) {
    if (!(tol > 0.0) || !(tol < 1e-3)) throw UsageError("--tol must lie in (0, 1e-3)");
}

void require_family_args(const std::string& family, int k, bool has_delta2) {
    if (family == "hinge") {
        if (!has_delta2) throw UsageError(family + " needs --delta2");
        return;  // k optional, defaults to 2
    }
    if (k < 0) throw UsageError(family + " needs --k");
    if (family == "lenz-r4") {
        if (has_delta2) throw UsageError("lenz-r4 uses a single distance; drop --delta2");
    } else if (!has_delta2) {
        throw UsageError(family + " needs --delta2");
    }
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int run_count(const CountCmd& cmd, std::ostream& out) {
    const TolerancePolicy tol{cmd.tol};
    const PointSet ps = load_point_set(cmd.points_file, tol);
    const DistanceSequence ds{cmd.deltas};

    ChainCount count;
    if (cmd.method == "brute")
        count = count_chains_brute(ps, ds, tol);
    else if (cmd.method == "walk")
        count = count_walks(ps, ds, tol);
    else
        count = count_chains(ps, ds, tol, cmd.threads);

    if (cmd.format == "csv") {
        out << "count,k,method,n,tol\n"
            << count.str() << ',' << ds.k() << ',' << cmd.method << ',' << ps.size() << ','
            << cmd.tol << '\n';
    } else {
        const nlohmann::json doc{{"count", count.str()}, {"deltas", cmd.deltas}, {"k", ds.k()},
                                 {"method", cmd.method}, {"n", ps.size()},      {"tol", cmd.tol}};
        out << doc.dump() << '\n';
    }
    return 0;
}

int run_construct(const ConstructCmd& cmd, std::ostream& out) {
    const ConstructionOutput built =
        make_construction(family_from_name(cmd.family), cmd.n, cmd.k, cmd.delta1, cmd.delta2);
    const nlohmann::json full = construction_to_json(built);

    nlohmann::json echo{{"deltas", built.deltas.deltas},
                        {"family", cmd.family},
                        {"k", built.deltas.k()},
                        {"n", built.points.size()},
                        {"predicted_exponent", built.predicted_exponent.str()},
                        {"predicted_lb", built.predicted_lb.str()},
                        {"tol", TolerancePolicy{}.rel_tol}};
    if (!cmd.out.empty()) {
        write_text_file(cmd.out, full.dump(2) + "\n");
        echo["out"] = cmd.out;
        out << echo.dump() << '\n';
    } else {
        nlohmann::json doc = full;
        doc["family"] = cmd.family;
        out << doc.dump() << '\n';
    }
    return 0;
}

int run_bounds(const BoundsCmd& cmd, std::ostream& out) {
    const Rational u = Rational::parse(cmd.u_exp);  // shape pre-checked at parse time
    const int kmax = cmd.kmax.value_or(cmd.k);
    const auto rows = bounds_table(cmd.k, kmax, cmd.dim, u);
    if (cmd.format == "csv") {
        out << bounds_rows_to_csv(rows);
    } else {
        nlohmann::json doc = bounds_rows_to_json(rows, cmd.dim);
        doc["u_exp"] = u.str();
        out << doc.dump() << '\n';
    }
    return 0;
}

int run_experiment(const ExperimentCmd& cmd, std::ostream& out) {
    const GrowthReport report = growth_experiment(family_from_name(cmd.family), cmd.k, cmd.sizes,
                                                  cmd.delta1, cmd.delta2);
    nlohmann::json doc = growth_report_to_json(report);
    doc["tol"] = TolerancePolicy{}.rel_tol;
    out << doc.dump() << '\n';
    if (!cmd.out.empty()) {
        if (ends_with(cmd.out, ".csv"))
            write_text_file(cmd.out, growth_report_to_csv(report));
        else
            write_text_file(cmd.out, doc.dump(2) + "\n");
    }
    return 0;
}

int run_rich(const RichCmd& cmd, std::ostream& out) {
    const TolerancePolicy tol{cmd.tol};
    const PointSet ps = load_point_set(cmd.points_file, tol);
    const RichReport report = rich_report(ps, cmd.delta, cmd.r_values, tol);
    if (cmd.format == "csv") {
        out << rich_report_to_csv(report);
    } else {
        nlohmann::json doc = rich_report_to_json(report);
        doc["tol"] = cmd.tol;
        out << doc.dump() << '\n';
    }
    return 0;
}

}  // namespace

CommandSpec parse_args(const std::vector<std::string>& args) {
    CLI::App app{"exact k-chain counting, extremal constructions, exponent bounds and growth experiments",
                 "chains"};
    app.require_subcommand(1);

    const std::vector<std::string> families{"hinge", "childs-r2", "purwin-r3", "lenz-r4"};

    std::string c_points, c_deltas, c_method = "dfs", c_format = "json";
    double c_tol = 1e-9;
    int c_threads = 1;
    auto* count = app.add_subcommand("count", "count chains in a point-set file");
    count->add_option("--points", c_points, "point-set file, JSON or CSV")->required();
    count->add_option("--deltas", c_deltas, "comma-separated distance sequence")->required();
    count->add_option("--method", c_method, "dfs, brute or walk")
        ->check(CLI::IsMember({"dfs", "brute", "walk"}));
    count->add_option("--tol", c_tol, "relative tolerance (default 1e-9)");
    count->add_option("--threads", c_threads, "worker count for the dfs method")
        ->check(CLI::Range(1, 4096));
    count->add_option("--format", c_format)->check(CLI::IsMember({"json", "csv"}));

    std::string t_family, t_out;
    std::int64_t t_n = 0;
    int t_k = -1;
    double t_d1 = 0.0, t_d2 = 0.0;
    auto* construct = app.add_subcommand("construct", "generate an extremal configuration");
    construct->add_option("--family", t_family)->required()->check(CLI::IsMember(families));
    construct->add_option("--n", t_n, "point budget")->required()->check(CLI::PositiveNumber);
    construct->add_option("--k", t_k, "chain length")->check(CLI::NonNegativeNumber);
    construct->add_option("--delta1", t_d1)->required();
    auto* t_d2_opt = construct->add_option("--delta2", t_d2);
    construct->add_option("--out", t_out, "write the construction JSON here");

    int b_k = 0, b_kmax = -1, b_dim = 2;
    std::string b_u = "4/3", b_format = "json";
    auto* bounds = app.add_subcommand("bounds", "tabulate exponent bounds");
    bounds->add_option("--k", b_k)->required()->check(CLI::NonNegativeNumber);
    auto* b_kmax_opt = bounds->add_option("--kmax", b_kmax, "emit rows k..kmax");
    bounds->add_option("--dim", b_dim)->required()->check(CLI::IsMember({2, 3}));
    bounds->add_option("--u-exp", b_u, "unit-distance exponent as p/q (default 4/3)");
    bounds->add_option("--format", b_format)->check(CLI::IsMember({"json", "csv"}));

    std::string e_family, e_sizes, e_out;
    int e_k = -1;
    double e_d1 = 0.0, e_d2 = 0.0;
    auto* experiment = app.add_subcommand("experiment", "run an experiment");
    experiment->require_subcommand(1);
    auto* growth = experiment->add_subcommand("growth", "growth of counts over a size ladder");
    growth->add_option("--family", e_family)->required()->check(CLI::IsMember(families));
    growth->add_option("--k", e_k)->check(CLI::NonNegativeNumber);
    growth->add_option("--sizes", e_sizes, "comma-separated sizes, strictly increasing")->required();
    growth->add_option("--delta1", e_d1)->required();
    auto* e_d2_opt = growth->add_option("--delta2", e_d2);
    growth->add_option("--out", e_out, "write the report here (.csv for CSV)");

    std::string r_points, r_list, r_format = "json";
    double r_delta = 0.0, r_tol = 1e-9;
    auto* rich = app.add_subcommand("rich", "rich-point histogram against the dual bound");
    rich->add_option("--points", r_points)->required();
    rich->add_option("--delta", r_delta)->required();
    rich->add_option("--r", r_list, "comma-separated richness thresholds")->required();
    rich->add_option("--tol", r_tol);
    rich->add_option("--format", r_format)->check(CLI::IsMember({"json", "csv"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (app.got_subcommand(count)) {
        CountCmd cmd;
        cmd.points_file = c_points;
        cmd.deltas = parse_delta_list(c_deltas);
        cmd.method = c_method;
        check_tol_flag(c_tol);
        cmd.tol = c_tol;
        cmd.threads = c_threads;
        cmd.format = c_format;
        return cmd;
    }
    if (app.got_subcommand(construct)) {
        ConstructCmd cmd;
        cmd.family = t_family;
        cmd.n = t_n;
        cmd.k = t_k;
        if (!(t_d1 > 0.0) || !std::isfinite(t_d1)) throw UsageError("--delta1 must be positive");
        cmd.delta1 = t_d1;
        if (t_d2_opt->count() > 0) {
            if (!(t_d2 > 0.0) || !std::isfinite(t_d2)) throw UsageError("--delta2 must be positive");
            cmd.delta2 = t_d2;
        }
        require_family_args(cmd.family, cmd.k, cmd.delta2.has_value());
        cmd.out = t_out;
        return cmd;
    }
    if (app.got_subcommand(bounds)) {
        BoundsCmd cmd;
        cmd.k = b_k;
        if (b_kmax_opt->count() > 0) {
            if (b_kmax < b_k) throw UsageError("--kmax must be >= --k");
            cmd.kmax = b_kmax;
        }
        cmd.dim = b_dim;
        try {
            Rational::parse(b_u);
        } catch (const ValidationError& e) {
            throw UsageError(std::string("--u-exp: ") + e.what());
        }
        cmd.u_exp = b_u;
        cmd.format = b_format;
        return cmd;
    }
    if (app.got_subcommand(experiment)) {
        ExperimentCmd cmd;
        cmd.family = e_family;
        cmd.k = e_k;
        cmd.sizes = parse_int_list(e_sizes, "sizes");
        for (const std::int64_t n : cmd.sizes)
            if (n < 1) throw UsageError("sizes must be >= 1");
        if (!(e_d1 > 0.0) || !std::isfinite(e_d1)) throw UsageError("--delta1 must be positive");
        cmd.delta1 = e_d1;
        if (e_d2_opt->count() > 0) {
            if (!(e_d2 > 0.0) || !std::isfinite(e_d2)) throw UsageError("--delta2 must be positive");
            cmd.delta2 = e_d2;
        }
        require_family_args(cmd.family, cmd.k, cmd.delta2.has_value());
        cmd.out = e_out;
        return cmd;
    }
    RichCmd cmd;
    cmd.points_file = r_points;
    if (!(r_delta > 0.0) || !std::isfinite(r_delta)) throw UsageError("--delta must be positive");
    cmd.delta = r_delta;
    cmd.r_values = parse_int_list(r_list, "r");
    check_tol_flag(r_tol);
    cmd.tol = r_tol;
    cmd.format = r_format;
    return cmd;
}

int run(const CommandSpec& spec, std::ostream& out, std::ostream& err) {
    (void)err;
    return std::visit(
        [&](const auto& cmd) -> int {
            using T = std::decay_t<decltype(cmd)>;
            if constexpr (std::is_same_v<T, CountCmd>)
                return run_count(cmd, out);
            else if constexpr (std::is_same_v<T, ConstructCmd>)
                return run_construct(cmd, out);
            else if constexpr (std::is_same_v<T, BoundsCmd>)
                return run_bounds(cmd, out);
            else if constexpr (std::is_same_v<T, ExperimentCmd>)
                return run_experiment(cmd, out);
            else
                return run_rich(cmd, out);
        },
        spec);
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);

    CommandSpec spec;
    try {
        spec = parse_args(args);
    } catch (const HelpRequested& help) {
        out << help.text;
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        return run(spec, out, err);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace chains::cli
