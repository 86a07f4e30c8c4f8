#include "kyfan/output.hpp"

#include <cctype>
#include <ostream>

#include <fmt/format.h>

namespace kyfan {

namespace {

Json coords_or_null(const std::vector<double>& p) {
  if (p.empty()) return nullptr;
  Json arr = Json::array();
  for (double v : p) arr.push_back(v);
  return arr;
}

std::string join_coords(const std::vector<double>& p, const char* sep, bool round_trip) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += sep;
    out += round_trip ? shortest(p[i]) : fmt::format("{:.15g}", p[i]);
  }
  return out;
}

}  // namespace

std::string shortest(double v) { return fmt::format("{}", v); }

Json to_json(const GridSpec& g) {
  return Json{{"x_min", g.x_min}, {"x_max", g.x_max}, {"y_min", g.y_min}, {"y_max", g.y_max},
              {"nx", g.nx},       {"ny", g.ny},       {"exclude_diagonal", g.exclude_diagonal}};
}

Json to_json(const Interval& g) { return Json{{"lo", g.lo}, {"hi", g.hi}, {"n", g.n}}; }

Json to_json(const CheckReport& r) {
  Json j;
  j["relation"] = r.relation;
  j["means"] = r.subjects;
  if (const auto* g = std::get_if<GridSpec>(&r.grid))
    j["grid"] = to_json(*g);
  else if (const auto* i = std::get_if<Interval>(&r.grid))
    j["grid"] = to_json(*i);
  else
    j["grid"] = nullptr;
  j["verdict"] = std::string(to_string(r.verdict));
  j["worst_margin"] = r.worst_point.empty() ? Json(nullptr) : Json(r.worst_margin);
  j["worst_point"] = coords_or_null(r.worst_point);
  j["samples"] = r.samples;
  j["inconclusive"] = r.inconclusive;
  j["first_violation"] = r.first_violation ? coords_or_null(*r.first_violation) : Json(nullptr);
  j["tolerance"] = r.tolerance;
  return j;
}

std::string to_text(const CheckReport& r) {
  std::string verdict(to_string(r.verdict));
  for (auto& c : verdict) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  std::string line = fmt::format("{:<12} {}", verdict, r.relation);
  if (!r.worst_point.empty())
    line += fmt::format("  worst_margin={:.15g} at ({})", r.worst_margin,
                        join_coords(r.worst_point, ", ", false));
  line += fmt::format("  samples={}", r.samples);
  if (r.inconclusive) line += fmt::format(" inconclusive={}", r.inconclusive);
  if (r.first_violation)
    line += fmt::format("  first_violation=({})", join_coords(*r.first_violation, ", ", false));
  return line;
}

std::string to_csv_row(const CheckReport& r) {
  std::string subjects;
  for (std::size_t i = 0; i < r.subjects.size(); ++i) subjects += (i ? ";" : "") + r.subjects[i];
  return fmt::format("\"{}\",{},{},{},{},{},{}", r.relation, subjects, to_string(r.verdict),
                     r.worst_point.empty() ? std::string() : shortest(r.worst_margin),
                     join_coords(r.worst_point, ";", true), r.samples, r.inconclusive);
}

void export_ratio_surface(std::ostream& os, Relation relation, const MeanDescriptor& m,
                          const MeanDescriptor& n, const GridSpec& grid) {
  grid.validate_kyfan();
  os << "x,y,lhs,rhs,margin\n";
  for (std::size_t ix = 0; ix < grid.nx; ++ix) {
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
      const double x = grid.x(ix), y = grid.y(iy);
      if (grid.exclude_diagonal && x == y) continue;
      const KyFanSample s = kyfan_sample(relation, m, n, x, y);
      os << shortest(x) << ',' << shortest(y) << ',' << shortest(s.lhs) << ',' << shortest(s.rhs)
         << ',' << shortest(s.margin()) << '\n';
    }
  }
}

}  // namespace kyfan
