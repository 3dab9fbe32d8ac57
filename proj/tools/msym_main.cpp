// msym: Moebius symmetries of finite point sets on the Riemann sphere.
//
// Subcommands: stab, multvec, orbit, verify.  JSON in, JSON out; exit codes
// 2 parse error, 3 infinite stabilizer, 4 tolerance breakdown, 5 trivial
// stabilizer, 6 non-integral multiplicity, 7 invalid recipe.
#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "msym/smallcases.hpp"
#include "msym/verify.hpp"

using json = nlohmann::ordered_json;
using namespace msym;

namespace {

double round12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

json point_json(const SpherePoint& p) {
  if (p.is_infinity()) return json("inf");
  return json::array({round12(p.value().real()), round12(p.value().imag())});
}

json matrix_json(const MobiusMap& f) {
  json out = json::array();
  for (const auto& e : f.entries())
    out.push_back(json::array({round12(e.real()), round12(e.imag())}));
  return out;
}

json vector_json(const std::vector<int>& v) {
  json out = json::array();
  for (int x : v) out.push_back(x);
  return out;
}

SpherePoint parse_point(const json& entry) {
  if (entry.is_string()) {
    if (entry.get<std::string>() == "inf") return SpherePoint::infinity();
    throw Error("unknown point token: " + entry.get<std::string>());
  }
  if (entry.is_number()) return SpherePoint(entry.get<double>());
  if (entry.is_array() && entry.size() == 2)
    return SpherePoint(Complex(entry[0].get<double>(), entry[1].get<double>()));
  throw Error("points must be [re, im], a number, or \"inf\"");
}

struct ConfigFile {
  std::vector<SpherePoint> points;
  double tol = kDefaultTol;
};

ConfigFile read_config(const std::string& path, double tol_flag) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  json doc = json::parse(in);
  if (!doc.contains("points") || !doc["points"].is_array())
    throw Error("input must contain a \"points\" array");
  ConfigFile cfg;
  cfg.tol = doc.value("tol", tol_flag);
  for (const auto& entry : doc["points"]) cfg.points.push_back(parse_point(entry));
  return cfg;
}

// A minimal generating subset found greedily.
std::vector<MobiusMap> greedy_generators(const SymmetryGroup& g) {
  std::vector<MobiusMap> gens;
  if (g.order() <= 1) return gens;
  size_t span = 1;
  for (size_t i = 1; i < g.order() && span < g.order(); ++i) {
    std::vector<MobiusMap> trial = gens;
    trial.push_back(g.elements[i]);
    size_t trial_span = close_generators(trial, g.order(), g.tol).order();
    if (trial_span > span) {
      gens = std::move(trial);
      span = trial_span;
    }
  }
  return gens;
}

void write_svg(const std::string& path, const PointConfig& cfg) {
  double radius = 1.0;
  for (const auto& p : cfg.points())
    if (!p.is_infinity())
      radius = std::max({radius, std::abs(p.value().real()),
                         std::abs(p.value().imag())});
  radius *= 1.15;
  const double size = 480.0, half = size / 2.0;
  auto sx = [&](double x) { return half + x / radius * (half - 20.0); };
  auto sy = [&](double y) { return half - y / radius * (half - 20.0); };

  std::ofstream out(path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
      << "\" height=\"" << size << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"0\" y1=\"" << half << "\" x2=\"" << size << "\" y2=\""
      << half << "\" stroke=\"#ccc\"/>\n";
  out << "<line x1=\"" << half << "\" y1=\"0\" x2=\"" << half << "\" y2=\""
      << size << "\" stroke=\"#ccc\"/>\n";
  out << "<circle cx=\"" << half << "\" cy=\"" << half << "\" r=\""
      << (1.0 / radius * (half - 20.0)) << "\" fill=\"none\" stroke=\"#ddd\"/>\n";
  for (const auto& p : cfg.points()) {
    if (p.is_infinity()) {
      out << "<text x=\"" << size - 36 << "\" y=\"24\" font-size=\"18\">inf"
          << "</text>\n";
      out << "<circle cx=\"" << size - 16 << "\" cy=\"18\" r=\"4\" "
          << "fill=\"crimson\"/>\n";
    } else {
      out << "<circle cx=\"" << sx(p.value().real()) << "\" cy=\""
          << sy(p.value().imag()) << "\" r=\"4\" fill=\"steelblue\"/>\n";
    }
  }
  out << "</svg>\n";
}

int run_stab(const std::string& file, double tol, const std::string& svg) {
  ConfigFile cf = read_config(file, tol);
  PointConfig cfg = PointConfig::canonical(cf.points, cf.tol);
  if (!svg.empty()) write_svg(svg, cfg);
  SymmetryGroup g = compute_stabilizer(cfg, cf.tol);
  GroupType type = group_type(g);

  json out;
  out["order"] = g.order();
  out["type"] = type.str();
  out["points"] = json::array();
  for (const auto& p : cfg.points()) out["points"].push_back(point_json(p));
  out["generators"] = json::array();
  for (const auto& f : greedy_generators(g))
    out["generators"].push_back(matrix_json(f));
  out["elements"] = json::array();
  for (size_t i = 0; i < g.order(); ++i) {
    json e;
    e["matrix"] = matrix_json(g.elements[i]);
    json perm = json::array();
    for (int v : g.perms[i]) perm.push_back(v + 1);  // 1-based for humans
    e["permutation"] = perm;
    e["cycle_type"] = vector_json(cycle_type(g.perms[i]));
    e["order"] = element_order(g.elements[i], cf.tol,
                               std::max(kMaxElementOrder, (int)g.order()));
    out["elements"].push_back(e);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_multvec(const std::string& file, double tol) {
  ConfigFile cf = read_config(file, tol);
  PointConfig cfg = PointConfig::canonical(cf.points, cf.tol);
  LambdaVector lambda = lambda_from_config(cfg, cf.tol);
  MultiplicityResult res = multiplicity_vector(lambda, cf.tol);

  json out;
  out["n"] = cfg.size();
  out["type"] = res.type.str();
  out["group_order"] = res.group_order;
  out["label"] = res.primary.label();
  out["m"] = res.primary.m;
  out["vector"] = vector_json(res.primary.vec.entries);
  out["alternates"] = json::array();
  for (const auto& alt : res.alternates) {
    json a;
    a["label"] = alt.label();
    a["m"] = alt.m;
    a["vector"] = vector_json(alt.vec.entries);
    out["alternates"].push_back(a);
  }

  json cross;
  try {
    MultiplicityResult numeric = multiplicity_from_jacobian(lambda, cf.tol);
    cross["ran"] = true;
    cross["ok"] = numeric.primary.vec == res.primary.vec;
  } catch (const StepTooLarge& e) {
    cross["ran"] = false;
    cross["reason"] = e.what();
  }
  out["crosscheck"] = cross;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_orbit(const std::string& type_str, const std::string& label, int m,
              const std::vector<std::string>& seed_strs, double tol) {
  GroupType type = GroupType::parse(type_str);
  std::vector<SpherePoint> seeds;
  for (const auto& s : seed_strs) {
    double re = 0.0, im = 0.0;
    if (std::sscanf(s.c_str(), "%lf,%lf", &re, &im) < 1)
      throw Error("seed must look like re,im");
    seeds.emplace_back(Complex(re, im));
  }
  PointConfig cfg = build_config(type, label, m, seeds, tol);
  json out;
  out["points"] = json::array();
  for (const auto& p : cfg.points()) out["points"].push_back(point_json(p));
  out["type"] = type.str();
  out["label"] = label_string(label, m);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_verify(const std::string& suite, double tol) {
  auto results = verify::run_suite(suite, tol);
  bool all = true;
  for (const auto& r : results) {
    json line;
    line["suite"] = r.suite;
    line["check"] = r.name;
    line["pass"] = r.pass;
    if (!r.detail.empty()) line["detail"] = r.detail;
    std::cout << line.dump() << "\n";
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moebius symmetries of finite point sets on the Riemann sphere"};
  app.require_subcommand(1);
  double tol = kDefaultTol;
  app.add_option("--tol", tol, "numeric tolerance (default 1e-9)");

  std::string stab_file, svg_path;
  auto* stab = app.add_subcommand("stab", "stabilizer of a configuration");
  stab->add_option("file", stab_file, "JSON configuration file")->required();
  stab->add_option("--svg", svg_path, "write a flat scatter plot");

  std::string mv_file;
  auto* multvec =
      app.add_subcommand("multvec", "multiplicity vector of a configuration");
  multvec->add_option("file", mv_file, "JSON configuration file")->required();

  std::string orbit_type, orbit_label;
  int orbit_m = 0;
  std::vector<std::string> orbit_seeds;
  auto* orbit = app.add_subcommand("orbit", "build a witness configuration");
  orbit->add_option("--type", orbit_type, "group type, e.g. Dihedral(5)")
      ->required();
  orbit->add_option("--label", orbit_label, "orbit type label, e.g. A+2")
      ->required();
  orbit->add_option("--m", orbit_m, "number of generic orbits");
  orbit->add_option("--seed", orbit_seeds, "seed point re,im (repeatable)");

  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "run a reproduction suite");
  verify_cmd
      ->add_option("suite", suite,
                   "one of: n4 n5 n6 orbits characters multvec-tables "
                   "corollaries")
      ->required()
      ->check(CLI::IsMember(msym::verify::suite_names()));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*stab) return run_stab(stab_file, tol, svg_path);
    if (*multvec) return run_multvec(mv_file, tol);
    if (*orbit) return run_orbit(orbit_type, orbit_label, orbit_m,
                                 orbit_seeds, tol);
    if (*verify_cmd) return run_verify(suite, tol);
  } catch (const InfiniteStabilizer& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ToleranceBreakdown& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const TrivialStabilizer& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const NonIntegralMultiplicity& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  } catch (const InvalidRecipe& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 7;
  } catch (const SeedOnExceptionalOrbit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 7;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateInput& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
