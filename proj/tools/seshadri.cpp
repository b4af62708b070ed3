// Command-line front end. Exit codes: 0 success, 2 malformed input, 3 input
// the requested operation cannot accept (not nef, wrong rho, ...).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "seshadri/elliptic.hpp"
#include "seshadri/engine.hpp"
#include "seshadri/envelope.hpp"
#include "seshadri/errors.hpp"
#include "seshadri/serialize.hpp"
#include "seshadri/survey.hpp"

namespace fs = std::filesystem;
using namespace seshadri;

namespace {

constexpr int kValidation = 2;
constexpr int kPrecondition = 3;

std::string read_matrix_text(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) return arg;
  std::ifstream in(arg);
  if (!in) throw Error(ErrorCode::BadInput, "cannot read matrix file '" + arg + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IntersectionMatrix load_matrix(const std::string& arg) {
  IntersectionMatrix S(parse_matrix(read_matrix_text(arg)));
  if (!S.profile().even_diagonal) std::cerr << "warning: odd diagonal entry; not the form of an abelian surface\n";
  return S;
}

// Commands that take a lattice class as such reject fractional input.
LatticeClass integral_class(const std::vector<Rational>& v, const IntersectionMatrix& S) {
  if (static_cast<int>(v.size()) != S.rho()) throw Error(ErrorCode::DimensionMismatch, "class length");
  BigInt den = 1;
  for (const auto& x : v) den = lcm(den, denominator_of(x));
  if (den != 1) throw Error(ErrorCode::BadInput, "this command needs an integral class");
  LatticeClass out;
  for (const auto& x : v) out.coords.push_back(numerator_of(x).convert_to<Int>());
  return out;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string curve_line(const SeshadriCurve& c, const std::vector<Rational>& L) {
  std::string out = std::string(to_string(c.kind)) + " (" + c.cls.to_string() + ")";
  if (c.pell) out += " ell=" + to_string(c.pell->ell) + " k=" + to_string(c.pell->k);
  out += " value " + to_string(c.evaluate(L));
  if (c.verified) out += std::string(" ") + std::string(to_string(*c.verified));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seshadri constants of abelian surfaces from an intersection matrix"};
  app.require_subcommand(1);

  std::string matrix_arg, class_arg;
  bool as_json = false;
  bool no_verify = false;
  std::uint64_t max_nodes = 20'000'000;

  auto add_common = [&](CLI::App* sub, bool needs_class) {
    sub->add_option("-m,--matrix", matrix_arg, "intersection matrix as JSON, or a file holding it")->required();
    if (needs_class) sub->add_option("-c,--class", class_arg, "class coordinates, e.g. 1,1 or 1/2,3")->required();
    sub->add_flag("--json", as_json, "print JSON");
  };

  auto* epsilon = app.add_subcommand("epsilon", "Seshadri constant of a nef class");
  add_common(epsilon, true);
  epsilon->add_flag("--no-verify", no_verify, "skip the uniqueness check of ample curves");
  epsilon->add_option("--max-nodes", max_nodes, "enumeration budget");

  auto* curves = app.add_subcommand("curves", "submaximal curves computing the constant");
  add_common(curves, true);
  curves->add_option("--max-nodes", max_nodes, "enumeration budget");

  std::string cap_arg;
  auto* elliptic = app.add_subcommand("elliptic", "least degree of an elliptic curve");
  add_common(elliptic, true);
  elliptic->add_option("--cap", cap_arg, "degree cap; default sqrt(L^2), strict");

  std::string delta_arg = "1/100";
  std::string formats_arg = "csv,svg,tikz";
  std::string out_dir = ".";
  int grid = 16;
  auto* plot = app.add_subcommand("plot", "Seshadri function on the unit cross-section (rho = 2)");
  add_common(plot, false);
  plot->add_option("--delta", delta_arg, "resolution of the gap report");
  plot->add_option("--formats", formats_arg, "comma-separated list of csv, svg, tikz");
  plot->add_option("--out", out_dir, "output directory");
  plot->add_option("--grid", grid, "initial uniform grid size")->check(CLI::Range(1, 4096));

  std::string family_arg;
  std::vector<std::string> range_args;
  auto* survey = app.add_subcommand("survey", "piecewise-linearity evidence across a family");
  survey->add_option("--family", family_arg, "template such as [[0,n],[n,0]] or [[2a,b],[b,0]]")->required();
  survey->add_option("--range", range_args, "variable range, e.g. n=1..6 (repeatable)")->required();
  survey->add_option("--delta", delta_arg, "resolution of the gap reports");
  survey->add_option("--grid", grid, "initial uniform grid size")->check(CLI::Range(1, 4096));

  auto* verify = app.add_subcommand("verify", "check that an ample class is the only curve computing its constant");
  add_common(verify, true);
  verify->add_option("--max-nodes", max_nodes, "enumeration budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  try {
    if (*epsilon || *curves) {
      const IntersectionMatrix S = load_matrix(matrix_arg);
      const auto L = parse_class(class_arg);
      EngineOptions options;
      options.verify_curves = epsilon->parsed() && !no_verify;
      options.diagnostics = epsilon->parsed();
      options.max_nodes = max_nodes;
      const SeshadriResult r = seshadri_constant(S, L, options);
      if (as_json) {
        if (*epsilon) {
          print(to_json(r));
        } else {
          Json list = Json::array();
          for (const auto& c : r.curves) list.push_back(to_json(c));
          print(list);
        }
        return 0;
      }
      if (*epsilon) {
        std::cout << "epsilon " << r.value.to_string() << "\nattained_by";
        for (auto a : r.attained_by) std::cout << " " << to_string(a);
        std::cout << "\n";
      }
      for (const auto& c : r.curves) std::cout << curve_line(c, L) << "\n";
      return 0;
    }

    if (*elliptic) {
      const IntersectionMatrix S = load_matrix(matrix_arg);
      const LatticeClass L = integral_class(parse_class(class_arg), S);
      const auto found = cap_arg.empty() ? eps_elliptic_submaximal(S, L) : eps_elliptic_capped(S, L, parse_rational(cap_arg));
      if (as_json) {
        Json out{{"found", found.has_value()}};
        if (found) {
          out["degree"] = to_string(found->value);
          Json classes = Json::array();
          for (const auto& e : found->minimizers) classes.push_back(to_json(e.E));
          out["classes"] = classes;
        }
        print(out);
      } else if (!found) {
        std::cout << "no elliptic curve below the cap\n";
      } else {
        std::cout << "degree " << to_string(found->value) << "\n";
        for (const auto& e : found->minimizers) std::cout << "  (" << e.E.to_string() << ")\n";
      }
      return 0;
    }

    if (*verify) {
      const IntersectionMatrix S = load_matrix(matrix_arg);
      const LatticeClass P = integral_class(parse_class(class_arg), S);
      const Verification v = verify_ample_curve(S, P, max_nodes);
      if (as_json) {
        print(Json{{"class", to_json(P)}, {"verified", to_string(v)}});
      } else {
        std::cout << to_string(v) << "\n";
      }
      return 0;
    }

    if (*plot) {
      const IntersectionMatrix S = load_matrix(matrix_arg);
      EnvelopeOptions options;
      options.delta = parse_rational(delta_arg);
      std::vector<std::string> formats;
      std::stringstream ss(formats_arg);
      for (std::string f; std::getline(ss, f, ',');)
        if (!f.empty()) formats.push_back(f);
      for (const auto& f : formats) emit_plot(Envelope{}, f);  // reject unknown formats before the long part
      const Envelope env = build_envelope(S, uniform_grid(grid), options);
      fs::create_directories(out_dir);
      for (const auto& f : formats) {
        std::ofstream(fs::path(out_dir) / ("envelope." + f), std::ios::binary) << emit_plot(env, f);
      }
      std::ofstream(fs::path(out_dir) / "gaps.json", std::ios::binary) << to_json(env.gaps).dump(2) << "\n";
      if (as_json) {
        print(to_json(env));
      } else {
        std::cout << "segments " << env.segments.size() << "\ngaps " << env.gaps.uncovered.size() << "\n";
        for (const auto& g : env.gaps.uncovered)
          std::cout << "  (" << g.lo.to_double() << ", " << g.hi.to_double() << ")\n";
      }
      return 0;
    }

    if (*survey) {
      const FamilyTemplate family = FamilyTemplate::parse(family_arg);
      std::vector<VariableRange> ranges;
      for (const auto& r : range_args) ranges.push_back(parse_range(r));
      const Rational delta = parse_rational(delta_arg);
      if (delta <= 0) throw Error(ErrorCode::BadInput, "delta must be positive");
      Json table = Json::array();
      for (const auto& row : run_survey(family, ranges, delta, grid)) {
        Json values = Json::object();
        for (const auto& [k, v] : row.values) values[std::string(1, k)] = v;
        Json entry{{"values", values}, {"matrix", row.matrix}};
        if (!row.valid) {
          entry["error"] = row.error;
        } else {
          Json gaps = Json::array();
          for (const auto& g : row.gaps)
            gaps.push_back(Json{{"lo", to_json(g.lo)}, {"hi", to_json(g.hi)}, {"approx", {g.lo.to_double(), g.hi.to_double()}}});
          entry["piecewise_linear"] = row.piecewise_linear;
          entry["gap_loci"] = gaps;
          entry["segment_count"] = row.segment_count;
        }
        table.push_back(entry);
      }
      print(Json{{"family", family.text()}, {"delta", to_json(delta)}, {"rows", table}});
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_validation_error(e.code()) ? kValidation : kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return 0;
}
