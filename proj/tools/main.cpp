#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rnc/gc.hpp"
#include "rnc/io.hpp"
#include "rnc/rnc.hpp"
#include "rnc/syzygy.hpp"
#include "rnc/white.hpp"

namespace {

using namespace rnc;

constexpr int kExitInV = 0;
constexpr int kExitNotInV = 1;
constexpr int kExitHyperplane = 2;
constexpr int kExitInputError = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::InV: return kExitInV;
    case Verdict::NotInV: return kExitNotInV;
    case Verdict::HyperplaneCase: return kExitHyperplane;
  }
  return kExitInputError;
}

std::vector<Index> parse_subset(const std::string& text) {
  std::vector<Index> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(static_cast<Index>(std::stoi(item)));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad subset element: '" + item + "'");
    }
  }
  if (out.size() != 6) {
    throw std::invalid_argument("--subset needs exactly 6 comma-separated indices");
  }
  return out;
}

int run_check(const std::string& input, const std::string& method_name,
              const std::string& subset_text, const std::string& format,
              std::optional<std::uint64_t> seed, int trials, int max_dim) {
  auto config = parse_configuration(read_input(input));
  if (config.dimension() > max_dim) {
    throw std::invalid_argument(
        "dimension " + std::to_string(config.dimension()) +
        " exceeds the ceiling " + std::to_string(max_dim) +
        " (raise it with --max-dim)");
  }
  auto method = method_from_string(method_name);
  if (!method) throw std::invalid_argument("unknown method: " + method_name);

  auto report = check_membership(config, *method);

  // Cross-check: the verdict is projectively invariant, so it must survive
  // any invertible transform of the ambient space.
  for (int t = 0; t < trials; ++t) {
    auto M = random_projective_transform(config.dimension(),
                                         seed.value_or(0) + t + 1);
    std::vector<std::vector<Rat>> cols;
    for (int p = 1; p <= config.size(); ++p) {
      std::vector<Rat> col(config.dimension() + 1, Rat(0));
      for (size_t r = 0; r < col.size(); ++r) {
        for (size_t k = 0; k < col.size(); ++k) {
          col[r] += M[r][k] * config.point(p)[k];
        }
      }
      cols.push_back(std::move(col));
    }
    auto moved = check_membership(
        PointConfiguration(config.dimension(), std::move(cols)), *method);
    if (moved.verdict != report.verdict) {
      throw std::runtime_error("projective-invariance cross-check failed");
    }
  }

  if (!subset_text.empty()) {
    auto want = parse_subset(subset_text);
    SubsetI target = SubsetI::make(want, config.dimension());
    std::vector<SubsetResult> kept;
    for (auto& r : report.subsets) {
      if (r.I.i == target.i) kept.push_back(std::move(r));
    }
    if (kept.empty()) throw std::invalid_argument("subset not part of this check");
    report.subsets = std::move(kept);
  }
  std::cout << (format == "json" ? report_to_json(report, seed)
                                 : report_to_text(report, seed));
  if (format != "json") std::cout.flush();
  if (report.verdict == Verdict::NotInV && format == "text") {
    for (const auto& r : report.subsets) {
      if (r.residue && *r.residue != 0) {
        std::cerr << "first failing subset: I = " << r.I.str() << "\n";
        break;
      }
    }
  }
  return exit_code(report.verdict);
}

int run_expand(const std::string& expr_text, int ambient) {
  auto expr = parse_gc(expr_text);
  std::cout << expand_to_brackets(expr, ambient).str() << "\n";
  return 0;
}

int run_straighten(const std::string& poly_text) {
  std::cout << straighten(parse_bracket_polynomial(poly_text)).str() << "\n";
  return 0;
}

int run_white(const std::string& input, const std::string& format) {
  auto config = parse_configuration(read_input(input));
  nlohmann::json systems = nlohmann::json::array();
  bool all_in_v = true;
  for (const auto& system : fano_systems()) {
    nlohmann::json entry;
    nlohmann::json triples = nlohmann::json::array();
    for (const Triple& t : system.triples) triples.push_back({t[0], t[1], t[2]});
    entry["system"] = std::move(triples);
    auto report = verify_white(config, system);
    entry["dual_verdict"] = to_string(report.verdict);
    if (report.verdict != Verdict::InV) all_in_v = false;
    nlohmann::json incidences = nlohmann::json::array();
    for (int j = 1; j <= 7; ++j) {
      std::array<int, 6> I{};
      int k = 0;
      for (int v = 1; v <= 7; ++v) {
        if (v != j) I[k++] = v;
      }
      auto res = verify_dual_incidence(config, system, I, j);
      incidences.push_back({{"I", I},
                            {"j", j},
                            {"is_point", res.is_point},
                            {"on_hj", res.on_hj},
                            {"degenerate", res.degenerate}});
    }
    entry["incidences"] = std::move(incidences);
    systems.push_back(std::move(entry));
  }
  nlohmann::json doc{{"systems", std::move(systems)}};
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& entry : doc["systems"]) {
      std::cout << "system " << entry["system"].dump()
                << ": dual verdict " << entry["dual_verdict"].get<std::string>()
                << "\n";
    }
  }
  return all_in_v ? kExitInV : kExitNotInV;
}

int run_sample(int d, const std::string& params_text, std::uint64_t seed,
               bool transform) {
  std::vector<std::optional<Rat>> params;
  if (!params_text.empty()) {
    std::stringstream ss(params_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item == "inf") {
        params.push_back(std::nullopt);
      } else {
        params.push_back(rat_from_string(item));
      }
    }
  } else {
    // Deterministic distinct parameters from the seed.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    std::set<Rat> seen;
    while (static_cast<int>(seen.size()) < d + 4) {
      Rat r(num(rng), den(rng));
      r.canonicalize();
      seen.insert(r);
    }
    for (const Rat& r : seen) params.push_back(r);
  }
  std::optional<std::vector<std::vector<Rat>>> M;
  if (transform) M = random_projective_transform(d, seed);
  std::cout << configuration_to_json(sample_moment_curve(d, params, M)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact bracket-ring and Grassmann-Cayley toolkit for deciding whether "
      "d+4 points of projective d-space lie on a rational normal curve"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string method = "both";
  std::string subset;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  int max_dim = 8;

  auto* check = app.add_subcommand("check", "Run the membership test");
  check->add_option("--input", input, "configuration JSON file, '-' for stdin");
  check->add_option("--method", method, "algebraic, geometric, or both");
  check->add_option("--subset", subset, "report only this 6-subset, e.g. 1,2,3,4,5,6");
  check->add_option("--format", format, "json or text");
  check->add_option("--seed", seed, "seed echoed in the report");
  int trials = 0;
  check->add_option("--trials", trials,
                    "re-check the verdict under this many seeded random "
                    "projective transforms");
  check->add_option("--max-dim", max_dim, "dimension ceiling (default 8)");

  std::string expr_text;
  int ambient = 3;
  auto* expand = app.add_subcommand(
      "expand", "Expand a Grassmann-Cayley expression into brackets");
  expand->add_option("expression", expr_text, "e.g. \"(1 2 ^ 4 5) v (2 3 ^ 5 6) v (3 4 ^ 6 1)\"")
      ->required();
  expand->add_option("--ambient", ambient, "ambient dimension d+1");

  std::string poly_text;
  auto* straighten_cmd = app.add_subcommand(
      "straighten", "Rewrite a bracket polynomial in standard form");
  straighten_cmd
      ->add_option("polynomial", poly_text, "e.g. \"[136][145]\"")
      ->required();

  auto* white = app.add_subcommand(
      "white", "Seven points and the 30 Fano-plane plane systems");
  white->add_option("--input", input, "7-point P^3 configuration JSON");
  white->add_option("--format", format, "json or text");

  int sample_d = 3;
  std::string params_text;
  std::uint64_t sample_seed = 0;
  bool with_transform = false;
  auto* sample = app.add_subcommand(
      "sample", "Emit a rational-normal-curve configuration");
  sample->add_option("--dimension", sample_d, "ambient projective dimension d");
  sample->add_option("--params", params_text,
                     "comma-separated parameters, 'inf' allowed");
  sample->add_option("--seed", sample_seed, "seed for generated parameters");
  sample->add_flag("--transform", with_transform,
                   "compose with a seeded projective transform");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      return run_check(input, method, subset, format, seed, trials, max_dim);
    }
    if (expand->parsed()) return run_expand(expr_text, ambient);
    if (straighten_cmd->parsed()) return run_straighten(poly_text);
    if (white->parsed()) return run_white(input, format);
    if (sample->parsed()) {
      return run_sample(sample_d, params_text, sample_seed, with_transform);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
