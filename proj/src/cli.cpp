#include "stackedcc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "stackedcc/cc_report.hpp"
#include "stackedcc/cocircular.hpp"
#include "stackedcc/collinear.hpp"
#include "stackedcc/error.hpp"
#include "stackedcc/extension.hpp"
#include "stackedcc/special_configs.hpp"

namespace stackedcc::cli {

double default_tolerance() {
  const char* env = std::getenv("STACKEDCC_TOL");
  if (env == nullptr || *env == '\0') return kDefaultCCTolerance;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(tol > 0.0)) {
    throw Error("invalid_argument", std::string("STACKEDCC_TOL is not a positive number: ") + env);
  }
  return tol;
}

namespace {

CommandResult success(Json payload, std::string summary) {
  return {Status::Ok, std::move(payload), std::move(summary)};
}

CommandResult failure(const std::string& code, const std::string& message) {
  return {Status::Failed, Json{{"error", code}, {"message", message}}, code + ": " + message};
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

Apex apex_from_string(const std::string& s) {
  if (s == "plus") return Apex::Plus;
  if (s == "minus") return Apex::Minus;
  throw Error("invalid_argument", "apex must be plus or minus");
}

struct Args {
  std::string file;
  double tol = 0.0;
  std::string way;
  double m0 = 1.0;
  std::string apex = "plus";
  std::vector<double> masses;
  std::vector<double> xs;
  std::size_t grid = 1000;
  std::string seed;
  std::string constraint = "none";
  int from = 2;
  int to = 20;
  std::string csv;
  int n = 0;
  double scale = 1.0;
  std::string kind;
};

CommandResult do_verify(const Args& a) {
  const auto config = configuration_from_json(read_json_file(a.file));
  const auto rep = cc_report(config, a.tol);
  return success(to_json(rep), std::string(rep.is_central ? "central" : "not central") +
                                   ", residual " + fmt(rep.residual_norm));
}

CommandResult do_classify(const Args& a) {
  const auto config = configuration_from_json(read_json_file(a.file));
  const auto plans = classify_extensions(config);
  Json list = Json::array();
  std::string ways;
  for (const auto& p : plans) {
    list.push_back(to_json(p));
    ways += (ways.empty() ? "" : ",") + to_string(p.way);
  }
  return success(Json{{"plans", list}}, "ways: " + (ways.empty() ? std::string("none") : ways));
}

CommandResult do_extend(const Args& a) {
  const auto config = configuration_from_json(read_json_file(a.file));
  const ExtensionWay way = extension_way_from_string(a.way);
  for (const auto& p : classify_extensions(config)) {
    if (p.way != way) continue;
    const auto ext = build_extension(config, p, a.m0, apex_from_string(a.apex));
    const auto rep = cc_report(ext, a.tol);
    return success(Json{{"way", to_string(way)}, {"configuration", to_json(ext)}, {"report", to_json(rep)}},
                   "extended by way " + to_string(way) + ", residual " + fmt(rep.residual_norm));
  }
  throw Error("way_not_applicable", "way " + to_string(way) + " does not apply to this configuration");
}

CommandResult do_euler(const Args& a) {
  if (a.masses.size() != 3) throw Error("invalid_argument", "--m needs three masses m1,m2,m0");
  if (a.xs.size() != 2) throw Error("invalid_argument", "--x needs two positions x1,x2");
  const auto sols = euler_solve(a.masses[0], a.masses[1], a.masses[2], a.xs[0], a.xs[1]);
  Json list = Json::array();
  std::string summary = "x0:";
  for (const auto& s : sols) {
    list.push_back(Json{{"interval", to_string(s.interval)},
                        {"x0", s.x0},
                        {"residual", s.residual},
                        {"configuration", to_json(s.config)}});
    summary += " " + fmt(s.x0);
  }
  return success(Json{{"solutions", list}}, summary);
}

CommandResult do_witness(const Args& a) {
  const auto config = configuration_from_json(read_json_file(a.file));
  const auto w = collinear_nonextension_witness(config, a.m0, a.grid);
  return success(to_json(w), "min residual " + fmt(w.min_max_residual) +
                                 (w.bounded_away ? " (bounded away)" : " (not bounded away)"));
}

CommandResult do_cocircular(const Args& a) {
  const auto cc = cocircular_from_json(read_json_file(a.file));
  const auto rep = side_diagonal_report(cc);
  Json j = to_json(rep);
  j["not_in_semicircle"] = semicircle_check(cc);
  j["r0_minus_r"] = radius_vs_r0(cc);
  return success(j, std::string(rep.holds() ? "side/diagonal property holds" : "side/diagonal property fails"));
}

CommandResult do_solve4(const Args& a) {
  const auto seed = cocircular_from_json(read_json_file(a.seed));
  const auto cons = Cocircular4Constraints::named(a.constraint, seed);
  const auto res = solve_cocircular_4body(seed, cons);
  Json j = to_json(res.cc);
  j["iterations"] = res.iterations;
  j["residual_norm"] = res.residual_norm;
  return success(j, "converged in " + std::to_string(res.iterations) + " iterations");
}

CommandResult do_ngon(const Args& a) {
  const auto rows = ngon_table(a.from, a.to);
  if (!a.csv.empty()) {
    std::ofstream out(a.csv);
    if (!out) throw Error("io_error", "cannot write " + a.csv);
    out << ngon_csv_header() << '\n';
    for (const auto& r : rows) out << ngon_csv_row(r) << '\n';
    if (!out) throw Error("io_error", "write failed for " + a.csv);
  }
  Json list = Json::array();
  for (const auto& r : rows) list.push_back(to_json(r));
  return success(Json{{"rows", list}}, std::to_string(rows.size()) + " rows");
}

CommandResult do_bipyramid(const Args& a) {
  const auto b = build_bipyramid(a.n);
  Json j = to_json(b);
  j["report"] = to_json(cc_report(b.configuration, a.tol));
  return success(j, "polar mass " + fmt(b.polar_mass));
}

CommandResult do_named(const Args& a) {
  NamedParams p;
  p.masses = a.masses;
  p.m0 = a.m0;
  p.n = a.n;
  p.scale = a.scale;
  const auto config = named_config(named_kind_from_string(a.kind), p);
  return success(to_json(config), a.kind + ", " + std::to_string(config.size()) + " bodies");
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Stacked central configurations of the Newtonian n-body problem", "stackedcc"};
  app.require_subcommand(1);
  Args a;

  std::function<CommandResult(const Args&)> handler;
  auto sub = [&](const char* name, const char* desc, CommandResult (*fn)(const Args&)) {
    auto* s = app.add_subcommand(name, desc);
    s->callback([&handler, fn] { handler = fn; });
    return s;
  };
  auto tol_flag = [&](CLI::App* s) { s->add_option("--tol", a.tol, "CC tolerance"); };

  auto* verify = sub("verify", "CC residual report", do_verify);
  verify->add_option("config", a.file, "configuration JSON, or - for stdin")->required();
  tol_flag(verify);

  auto* classify = sub("classify", "list applicable extension ways", do_classify);
  classify->add_option("config", a.file)->required();

  auto* extend = sub("extend", "add one body by a given way", do_extend);
  extend->add_option("config", a.file)->required();
  extend->add_option("--way", a.way, "I, II, III, IV or V")->required();
  extend->add_option("--m0", a.m0, "added mass")->required();
  extend->add_option("--apex", a.apex, "plus or minus (way III)");
  tol_flag(extend);

  auto* euler = sub("euler", "the three collinear 3-body CCs", do_euler);
  euler->add_option("--m", a.masses, "m1,m2,m0")->delimiter(',')->required();
  euler->add_option("--x", a.xs, "x1,x2")->delimiter(',')->required();

  auto* witness = sub("collinear-witness", "numerical non-extension witness", do_witness);
  witness->add_option("config", a.file)->required();
  witness->add_option("--m0", a.m0, "added mass");
  witness->add_option("--grid", a.grid, "grid points");

  auto* cocirc = sub("cocircular-check", "side/diagonal report for a co-circular CC", do_cocircular);
  cocirc->add_option("config", a.file)->required();

  auto* solve4 = sub("solve4", "Newton solve for a 4-body co-circular CC", do_solve4);
  solve4->add_option("--seed", a.seed, "seed JSON")->required();
  solve4->add_option("--constraint", a.constraint, "none, trapezoid or kite");

  auto* ngon = sub("ngon", "regular n-gon threshold table", do_ngon);
  ngon->add_option("--from", a.from);
  ngon->add_option("--to", a.to);
  ngon->add_option("--csv", a.csv, "also write CSV here");

  auto* bip = sub("bipyramid", "build the equal-mass bi-pyramid", do_bipyramid);
  bip->add_option("--n", a.n)->required();
  tol_flag(bip);

  auto* named = sub("named", "fixture configurations", do_named);
  named->add_option("kind", a.kind)->required();
  named->add_option("--m0", a.m0, "center or apex mass");
  named->add_option("--n", a.n, "polygon size");
  named->add_option("--scale", a.scale, "edge length or radius");
  named->add_option("--masses", a.masses, "outer masses")->delimiter(',');

  std::vector<const char*> argv{"stackedcc"};
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    a.tol = default_tolerance();
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    return success(Json::object(), app.help());
  } catch (const CLI::ParseError& e) {
    return {Status::Failed, Json{{"error", "usage"}, {"message", e.what()}},
            std::string(e.what()) + "\n" + app.help()};
  } catch (const Error& e) {
    return failure(e.code(), e.what());
  }

  try {
    return handler(a);
  } catch (const Error& e) {
    return failure(e.code(), e.what());
  } catch (const Json::exception& e) {
    return failure("invalid_json", e.what());
  } catch (const std::exception& e) {
    return failure("internal_error", e.what());
  }
}

CommandResult run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace stackedcc::cli
