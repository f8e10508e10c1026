#include "chains/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace chains {

namespace {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

PointSet from_rows(const std::vector<std::vector<double>>& rows, const TolerancePolicy& tol) {
    if (rows.empty()) throw ValidationError("point set is empty");
    const std::size_t dim = rows.front().size();
    std::vector<double> coords;
    coords.reserve(rows.size() * dim);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != dim)
            throw ValidationError("point " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) + " coordinates, expected " +
                                  std::to_string(dim));
        coords.insert(coords.end(), rows[i].begin(), rows[i].end());
    }
    return PointSet(static_cast<int>(dim), std::move(coords), tol);
}

// Qualifier tags for the CSV flags column; empty when the bound is a plain
// rational exponent.
std::string flags_of(const ExponentBound& b) {
    if (!b.has_epsilon && !b.has_log_factor) return "";
    std::string s = b.side == BoundSide::upper ? "upper" : "lower";
    if (b.has_epsilon) s += "+eps";
    if (b.has_log_factor) s += "+loglog";
    return s;
}

nlohmann::json bound_to_json(const ExponentBound& b) {
    return nlohmann::json{{"exponent", b.exponent.str()},
                          {"side", b.side == BoundSide::upper ? "upper" : "lower"},
                          {"has_epsilon", b.has_epsilon},
                          {"has_log_factor", b.has_log_factor}};
}

}  // namespace

PointSet parse_point_set_json(const std::string& text, const TolerancePolicy& tol) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("invalid point-set JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
        throw ValidationError("point-set JSON needs \"dim\" and \"points\"");
    if (!j["dim"].is_number_integer()) throw ValidationError("\"dim\" must be an integer");
    const int dim = j["dim"].get<int>();
    if (!j["points"].is_array()) throw ValidationError("\"points\" must be an array");

    std::vector<std::vector<double>> rows;
    for (const auto& row : j["points"]) {
        if (!row.is_array()) throw ValidationError("each point must be an array of numbers");
        std::vector<double> p;
        for (const auto& c : row) {
            if (!c.is_number()) throw ValidationError("each coordinate must be a number");
            p.push_back(c.get<double>());
        }
        if (static_cast<int>(p.size()) != dim)
            throw ValidationError("every point must have exactly dim coordinates");
        rows.push_back(std::move(p));
    }
    if (rows.empty()) throw ValidationError("point set is empty");
    return from_rows(rows, tol);
}

PointSet parse_point_set_csv(const std::string& text, const TolerancePolicy& tol) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<double> p;
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            std::size_t pos = 0;
            double v = 0.0;
            try {
                v = std::stod(field, &pos);
            } catch (const std::exception&) {
                throw ValidationError("line " + std::to_string(line_no) + ": '" + field +
                                      "' is not a number");
            }
            while (pos < field.size() && (field[pos] == ' ' || field[pos] == '\t' || field[pos] == '\r'))
                ++pos;
            if (pos != field.size())
                throw ValidationError("line " + std::to_string(line_no) + ": '" + field +
                                      "' is not a number");
            p.push_back(v);
        }
        rows.push_back(std::move(p));
    }
    return from_rows(rows, tol);
}

PointSet load_point_set(const std::string& path, const TolerancePolicy& tol) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ValidationError("'" + path + "' is empty");
    if (text[first] == '{') return parse_point_set_json(text, tol);
    return parse_point_set_csv(text, tol);
}

nlohmann::json construction_to_json(const ConstructionOutput& out) {
    nlohmann::json points = nlohmann::json::array();
    for (std::int64_t i = 0; i < out.points.size(); ++i) {
        auto p = out.points.point(i);
        points.push_back(std::vector<double>(p.begin(), p.end()));
    }
    return nlohmann::json{{"dim", out.points.dim()},
                          {"points", std::move(points)},
                          {"deltas", out.deltas.deltas},
                          {"predicted_lb", out.predicted_lb.str()},
                          {"predicted_exponent", out.predicted_exponent.str()}};
}

nlohmann::json growth_report_to_json(const GrowthReport& report) {
    nlohmann::json counts = nlohmann::json::array();
    for (const auto& c : report.counts) counts.push_back(c.str());
    nlohmann::json lbs = nlohmann::json::array();
    for (const auto& x : report.predicted_lbs) lbs.push_back(x.str());
    return nlohmann::json{{"family", report.family},
                          {"k", report.k},
                          {"sizes", report.sizes},
                          {"counts", std::move(counts)},
                          {"predicted_lbs", std::move(lbs)},
                          {"fitted_slope", report.fitted_slope},
                          {"fit_intercept", report.fit_intercept},
                          {"fit_r2", report.fit_r2},
                          {"predicted_exponent", report.predicted_exponent.str()},
                          {"deltas_used", report.deltas_used.deltas}};
}

std::string growth_report_to_csv(const GrowthReport& report) {
    std::string csv = "n,count,ln_n,ln_count\n";
    for (std::size_t i = 0; i < report.sizes.size(); ++i) {
        const double n = static_cast<double>(report.sizes[i]);
        const double c = report.counts[i].convert_to<double>();
        csv += std::to_string(report.sizes[i]) + "," + report.counts[i].str() + "," +
               format_double(std::log(n)) + "," + format_double(std::log(c)) + "\n";
    }
    return csv;
}

nlohmann::json rich_report_to_json(const RichReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows)
        rows.push_back(nlohmann::json{{"r", row.r}, {"empirical", row.empirical}, {"bound", row.bound}});
    return nlohmann::json{
        {"dim", report.dim}, {"n", report.n}, {"delta", report.delta}, {"rows", std::move(rows)}};
}

std::string rich_report_to_csv(const RichReport& report) {
    std::string csv = "r,empirical,bound\n";
    for (const auto& row : report.rows)
        csv += std::to_string(row.r) + "," + std::to_string(row.empirical) + "," +
               format_double(row.bound) + "\n";
    return csv;
}

nlohmann::json bounds_rows_to_json(const std::vector<BoundsRow>& rows, int dim) {
    nlohmann::json out_rows = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r{{"k", row.k}};
        r["lower"] = row.lower ? bound_to_json(*row.lower) : nlohmann::json(nullptr);
        r["optimistic"] = row.optimistic ? bound_to_json(*row.optimistic) : nlohmann::json(nullptr);
        r["upper"] = row.upper ? bound_to_json(*row.upper) : nlohmann::json(nullptr);
        out_rows.push_back(std::move(r));
    }
    return nlohmann::json{{"dim", dim}, {"rows", std::move(out_rows)}};
}

std::string bounds_rows_to_csv(const std::vector<BoundsRow>& rows) {
    std::string csv = "k,lower,optimistic,upper,flags\n";
    for (const auto& row : rows) {
        std::string flags;
        auto add_flags = [&](const std::optional<ExponentBound>& b) {
            if (!b) return;
            const std::string f = flags_of(*b);
            if (f.empty()) return;
            if (!flags.empty()) flags += ';';
            flags += f;
        };
        add_flags(row.lower);
        add_flags(row.optimistic);
        add_flags(row.upper);
        csv += std::to_string(row.k) + "," + (row.lower ? row.lower->exponent.str() : "") + "," +
               (row.optimistic ? row.optimistic->exponent.str() : "") + "," +
               (row.upper ? row.upper->exponent.str() : "") + "," + flags + "\n";
    }
    return csv;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    out << text;
    if (!out) throw ValidationError("failed writing '" + path + "'");
}

}  // namespace chains
