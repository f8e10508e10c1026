#pragma once

#include <string>

#include <json.hpp>

#include "chains/constructions.hpp"
#include "chains/experiments.hpp"

namespace chains {

/// Loads a point set from JSON ({"dim": 2, "points": [[x, y], ...]}) or
/// headerless CSV (one point per row, dim columns). The format is sniffed
/// from the content; extra JSON keys are ignored, so construction files load
/// as plain point sets.
PointSet load_point_set(const std::string& path, const TolerancePolicy& tol = {});

PointSet parse_point_set_json(const std::string& text, const TolerancePolicy& tol = {});
PointSet parse_point_set_csv(const std::string& text, const TolerancePolicy& tol = {});

/// Construction file format: the point-set JSON extended with "deltas",
/// "predicted_lb" (decimal string) and "predicted_exponent" ("p/q").
nlohmann::json construction_to_json(const ConstructionOutput& out);

nlohmann::json growth_report_to_json(const GrowthReport& report);
std::string growth_report_to_csv(const GrowthReport& report);  // n, count, ln n, ln count

nlohmann::json rich_report_to_json(const RichReport& report);
std::string rich_report_to_csv(const RichReport& report);

nlohmann::json bounds_rows_to_json(const std::vector<BoundsRow>& rows, int dim);
std::string bounds_rows_to_csv(const std::vector<BoundsRow>& rows);  // k, lower, optimistic, upper, flags

void write_text_file(const std::string& path, const std::string& text);

}  // namespace chains
