#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "kyfan/grid.hpp"
#include "kyfan/means.hpp"
#include "kyfan/report.hpp"
#include "kyfan/verify.hpp"

namespace kyfan {

using Json = nlohmann::ordered_json;

/// {relation, means, grid, verdict, worst_margin, worst_point, samples,
///  inconclusive, first_violation, tolerance}; key order is fixed.
Json to_json(const CheckReport& report);
Json to_json(const GridSpec& grid);
Json to_json(const Interval& grid);

/// One line, 15 significant digits.
std::string to_text(const CheckReport& report);

/// Shortest round-trip representation.
std::string shortest(double v);

inline constexpr const char* kReportCsvHeader =
    "relation,means,verdict,worst_margin,worst_point,samples,inconclusive";
std::string to_csv_row(const CheckReport& report);

/// Per-point sides of a Ky Fan inequality as CSV with header
/// `x,y,lhs,rhs,margin`, row-major, margin = rhs - lhs.
void export_ratio_surface(std::ostream& os, Relation relation, const MeanDescriptor& m,
                          const MeanDescriptor& n, const GridSpec& grid);

}  // namespace kyfan
