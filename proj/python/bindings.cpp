#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rnc/gc.hpp"
#include "rnc/io.hpp"
#include "rnc/rnc.hpp"
#include "rnc/syzygy.hpp"
#include "rnc/white.hpp"

namespace py = pybind11;
using namespace rnc;

namespace {

PointConfiguration config_from_lists(
    int dimension, const std::vector<std::vector<std::string>>& points) {
  std::vector<std::vector<Rat>> cols;
  for (const auto& pt : points) {
    std::vector<Rat> col;
    for (const auto& c : pt) col.push_back(rat_from_string(c));
    cols.push_back(std::move(col));
  }
  return PointConfiguration(dimension, std::move(cols));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact bracket-ring and Grassmann-Cayley engine for the rational "
      "normal curve membership test";

  m.def("straighten_text", [](const std::string& poly) {
    return straighten(parse_bracket_polynomial(poly)).str();
  });
  m.def("expand_text", [](const std::string& expr, int ambient) {
    return expand_to_brackets(parse_gc(expr), ambient).str();
  });
  m.def("phi_text", [](const std::vector<int>& subset, int d) {
    return phi(SubsetI::make(subset, d)).str();
  });
  m.def("psi_text", [](const std::vector<int>& subset, int d) {
    return psi_substitution(SubsetI::make(subset, d), d).str();
  });
  m.def("gc_condition_text", [](const std::vector<int>& subset, int d) {
    return gc_to_string(gc_condition(SubsetI::make(subset, d), d));
  });
  m.def(
      "check_membership_json",
      [](int dimension, const std::vector<std::vector<std::string>>& points,
         const std::string& method) {
        auto parsed = method_from_string(method);
        if (!parsed) throw std::invalid_argument("unknown method: " + method);
        return report_to_json(
            check_membership(config_from_lists(dimension, points), *parsed));
      },
      py::arg("dimension"), py::arg("points"), py::arg("method") = "both");
  m.def("sample_moment_curve",
        [](int d, const std::vector<std::string>& parameters) {
          std::vector<std::optional<Rat>> params;
          for (const auto& p : parameters) {
            if (p == "inf") {
              params.push_back(std::nullopt);
            } else {
              params.push_back(rat_from_string(p));
            }
          }
          auto config = sample_moment_curve(d, params);
          std::vector<std::vector<std::string>> out;
          for (int p = 1; p <= config.size(); ++p) {
            std::vector<std::string> col;
            for (const Rat& c : config.point(p)) col.push_back(rat_to_string(c));
            out.push_back(std::move(col));
          }
          return out;
        });
  m.def("fano_systems", [] {
    std::vector<std::vector<std::vector<int>>> out;
    for (const TripleSystem& s : fano_systems()) {
      std::vector<std::vector<int>> sys;
      for (const Triple& t : s.triples) sys.push_back({t[0], t[1], t[2]});
      out.push_back(std::move(sys));
    }
    return out;
  });
  m.def("verify_white_json",
        [](const std::vector<std::vector<std::string>>& points,
           const std::vector<std::vector<int>>& system) {
          TripleSystem s;
          if (system.size() != 7) throw std::invalid_argument("need 7 triples");
          for (size_t k = 0; k < 7; ++k) {
            if (system[k].size() != 3) throw std::invalid_argument("bad triple");
            s.triples[k] = {system[k][0], system[k][1], system[k][2]};
          }
          return report_to_json(verify_white(config_from_lists(3, points), s));
        });
}
