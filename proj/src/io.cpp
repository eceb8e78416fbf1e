#include "rnc/io.hpp"

#include <sstream>

#include <json.hpp>

namespace rnc {

using nlohmann::json;

PointConfiguration parse_configuration(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("points")) {
    throw std::invalid_argument("expected {\"dimension\": ..., \"points\": ...}");
  }
  if (!doc["dimension"].is_number_integer()) {
    throw std::invalid_argument("dimension must be an integer");
  }
  const int d = doc["dimension"].get<int>();
  if (!doc["points"].is_array()) {
    throw std::invalid_argument("points must be an array");
  }
  std::vector<std::vector<Rat>> cols;
  for (const auto& pt : doc["points"]) {
    if (!pt.is_array()) throw std::invalid_argument("each point must be an array");
    std::vector<Rat> col;
    for (const auto& coord : pt) {
      if (coord.is_number_integer()) {
        col.push_back(Rat(coord.get<long>()));
      } else if (coord.is_string()) {
        col.push_back(rat_from_string(coord.get<std::string>()));
      } else {
        throw std::invalid_argument("coordinates must be integers or strings");
      }
    }
    cols.push_back(std::move(col));
  }
  return PointConfiguration(d, std::move(cols));
}

std::string configuration_to_json(const PointConfiguration& config) {
  json pts = json::array();
  for (int p = 1; p <= config.size(); ++p) {
    json col = json::array();
    for (const Rat& c : config.point(p)) col.push_back(rat_to_string(c));
    pts.push_back(std::move(col));
  }
  json doc{{"dimension", config.dimension()}, {"points", std::move(pts)}};
  return doc.dump(2);
}

namespace {

json report_json(const MembershipReport& report,
                 std::optional<std::uint64_t> seed) {
  json subsets = json::array();
  for (const SubsetResult& r : report.subsets) {
    json entry;
    entry["I"] = std::vector<int>(r.I.i.begin(), r.I.i.end());
    if (r.residue) entry["residue"] = rat_to_string(*r.residue);
    if (r.geometric_determinant) {
      entry["geometric_determinant"] = rat_to_string(*r.geometric_determinant);
    }
    entry["degenerate"] = r.degenerate;
    subsets.push_back(std::move(entry));
  }
  json doc;
  if (seed) doc["seed"] = *seed;
  doc["dimension"] = report.dimension;
  doc["n"] = report.n;
  doc["on_hyperplane"] = report.on_hyperplane;
  doc["general_position"] = report.general_position;
  doc["subsets"] = std::move(subsets);
  doc["verdict"] = to_string(report.verdict);
  if (!report.advisory.empty()) doc["advisory"] = report.advisory;
  return doc;
}

// Decimal rendering for humans; the verdict itself never rounds.
std::string approx(const Rat& r) {
  std::ostringstream out;
  out << r.get_d();
  return out.str();
}

}  // namespace

std::string report_to_json(const MembershipReport& report,
                           std::optional<std::uint64_t> seed) {
  return report_json(report, seed).dump(2);
}

std::string report_to_text(const MembershipReport& report,
                           std::optional<std::uint64_t> seed) {
  std::ostringstream out;
  out << "membership check: d = " << report.dimension << ", n = " << report.n
      << "\n";
  if (seed) out << "seed: " << *seed << "\n";
  out << "on_hyperplane: " << (report.on_hyperplane ? "yes" : "no")
      << ", general_position: " << (report.general_position ? "yes" : "no")
      << "\n";
  for (const SubsetResult& r : report.subsets) {
    out << "  I = " << r.I.str() << ":";
    if (r.residue) {
      out << " residue = " << rat_to_string(*r.residue);
      if (*r.residue != 0) out << " (~" << approx(*r.residue) << ")";
    }
    if (r.degenerate) {
      out << " [degenerate]";
    } else if (r.geometric_determinant) {
      out << ", det = " << rat_to_string(*r.geometric_determinant);
    }
    out << "\n";
  }
  out << "verdict: " << to_string(report.verdict) << "\n";
  if (!report.advisory.empty()) out << "note: " << report.advisory << "\n";
  return out.str();
}

}  // namespace rnc
