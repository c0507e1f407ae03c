// Command-line front end: symbol computations, shape catalogs, Fano
// enumeration and the 2D simulation pipeline, with JSON reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "star/errors.hpp"
#include "star/fano.hpp"
#include "star/field2d.hpp"
#include "star/json_io.hpp"
#include "star/symmetry.hpp"
#include "star/transform2d.hpp"

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fnv1a_digest(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

struct Report {
  json body;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  Report(const std::string& command, unsigned int seed) {
    body["command"] = command;
    body["version"] = kVersion;
    body["seed"] = seed;
    body["inputs"] = json::object();
  }
  void input(const std::string& path) {
    body["inputs"][path] = fnv1a_digest(slurp(path));
  }
  void emit(bool as_json, const std::string& text) {
    if (as_json) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      body["wall_time_ms"] = ms;
      std::cout << body.dump(2) << "\n";
    } else {
      std::cout << text;
    }
  }
};

star::StarSymbol load_star(const std::string& path) {
  return star::star_symbol_from_json(json::parse(slurp(path)));
}

star::Phantom load_phantom(const std::string& path) {
  json j = json::parse(slurp(path));
  star::Phantom p;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "gaussian_bump")
    p.kind = star::PhantomKind::gaussian_bump;
  else if (kind == "two_bumps")
    p.kind = star::PhantomKind::two_bumps;
  else
    throw std::domain_error("phantom: unknown kind " + kind);
  p.centers.clear();
  for (const auto& c : j.at("centers"))
    p.centers.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
  p.width = j.at("width").get<double>();
  p.amplitude = j.value("amplitude", 1.0);
  return p;
}

const char* class_name(star::SymbolClass c) {
  switch (c) {
    case star::SymbolClass::identically_zero: return "identically_zero";
    case star::SymbolClass::elliptic: return "elliptic";
    case star::SymbolClass::non_elliptic_nonzero: return "non_elliptic_nonzero";
    case star::SymbolClass::undetermined: return "undetermined";
  }
  return "?";
}

void write_field(const star::Field2D& f, const std::string& path) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".csv")
    star::write_csv(f, path);
  else if (path.size() > 4 && path.substr(path.size() - 4) == ".pgm")
    star::write_pgm(f, path);
  else
    star::write_sfld(f, path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"star transform toolkit"};
  app.require_subcommand(1);

  std::string format = "text";
  unsigned int seed = 0;
  int threads = 1;
  app.add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "seed for randomized solvers");
  app.add_option("--threads", threads, "thread budget (currently serial)");

  std::string star_file, phantom_file, out_path, in_path, ref_star_file;
  int poly_m = 5, chart_m = 4, chart_n = 2, fano_n = 2, grid_n = 128;
  int starts = 500;
  bool do_solve = false;

  auto* dual = app.add_subcommand("dual", "dual differential-operator symbol");
  dual->add_option("star", star_file)->required();

  auto* injective = app.add_subcommand("injective", "injectivity test");
  injective->add_option("star", star_file)->required();

  auto* symmetry = app.add_subcommand("symmetry", "branch symmetry report");
  symmetry->add_option("star", star_file)->required();

  auto* shapes = app.add_subcommand("shapes", "branch catalog");
  std::string shape_kind;
  shapes->add_option("kind", shape_kind)
      ->required()
      ->check(CLI::IsMember({"polygon", "tetrahedron", "cube", "octahedron",
                             "icosahedron", "dodecahedron"}));
  shapes->add_option("--m", poly_m, "polygon vertex count");

  auto* fano = app.add_subcommand("fano", "non-invertible configurations");
  fano->require_subcommand(1);
  auto* matchings = fano->add_subcommand("matchings");
  matchings->add_option("--n", fano_n)->required();
  fano->add_subcommand("cayley");
  auto* chart = fano->add_subcommand("chart");
  chart->add_option("--m", chart_m)->required();
  chart->add_option("--n", chart_n)->required();
  chart->add_flag("--solve", do_solve);
  chart->add_option("--starts", starts);

  auto* sim = app.add_subcommand("sim", "2D simulation pipeline");
  sim->require_subcommand(1);
  auto* fwd = sim->add_subcommand("forward");
  auto* inv = sim->add_subcommand("invert");
  auto* nullc = sim->add_subcommand("nullcheck");
  for (CLI::App* c : {fwd, inv, nullc}) {
    c->add_option("--star", star_file)->required();
    c->add_option("--phantom", phantom_file)->required();
    c->add_option("--n", grid_n);
  }
  fwd->add_option("--out", out_path)->required();
  inv->add_option("--out", out_path)->required();
  inv->add_option("--in", in_path, "read star data instead of synthesizing");
  double eps_reg = 1e-3;
  inv->add_option("--reg", eps_reg, "Tikhonov parameter");
  nullc->add_option("--reference", ref_star_file,
                    "second star for a residual ratio");

  CLI11_PARSE(app, argc, argv);
  const bool as_json = format == "json";

  std::ostringstream cmdline;
  for (int i = 1; i < argc; ++i) cmdline << (i > 1 ? " " : "") << argv[i];

  try {
    Report report(cmdline.str(), seed);

    if (*dual) {
      report.input(star_file);
      star::StarSymbol s = load_star(star_file);
      star::DualSymbol d = star::dual_symbol(s);
      star::SymbolClass cls = star::classify_symbol(d);
      auto lp = star::laplacian_power_form(d);
      report.body["output"]["sigma"] = star::polynomial_to_json(d.sigma);
      report.body["output"]["class"] = class_name(cls);
      if (lp) {
        report.body["output"]["laplacian_power"] = {
            {"C", lp->first.value()}, {"j", lp->second}};
      }
      std::ostringstream text;
      text << "sigma = " << d.sigma.str("xi") << "\n"
           << "class = " << class_name(cls) << "\n";
      if (lp)
        text << "laplacian power: C = " << lp->first.str()
             << ", j = " << lp->second << "\n";
      report.emit(as_json, text.str());
      return 0;
    }

    if (*injective) {
      report.input(star_file);
      bool inj = star::is_injective(load_star(star_file));
      report.body["output"]["injective"] = inj;
      report.emit(as_json, inj ? "injective\n" : "not injective\n");
      return inj ? 0 : 1;
    }

    if (*symmetry) {
      report.input(star_file);
      star::StarSymbol s = load_star(star_file);
      auto syms = star::branch_symmetries(s.branches);
      star::DualSymbol d = star::dual_symbol(s);
      json list = json::array();
      std::ostringstream text;
      text << syms.size() << " symmetries\n";
      int invariant_count = 0;
      for (const auto& [g, perm] : syms) {
        bool inv_ok = star::is_invariant_polynomial(d.sigma.to_float(), g);
        invariant_count += inv_ok;
        list.push_back(json{
            {"g", g.g}, {"perm", perm.perm}, {"invariant", inv_ok}});
      }
      text << invariant_count << " leave the dual symbol invariant\n";
      report.body["output"]["count"] = syms.size();
      report.body["output"]["symmetries"] = std::move(list);
      report.emit(as_json, text.str());
      return 0;
    }

    if (*shapes) {
      star::BranchMatrix u;
      if (shape_kind == "polygon")
        u = star::regular_polygon_branches(poly_m);
      else if (shape_kind == "tetrahedron")
        u = star::platonic_branches(star::SolidKind::tetrahedron);
      else if (shape_kind == "cube")
        u = star::platonic_branches(star::SolidKind::cube);
      else if (shape_kind == "octahedron")
        u = star::platonic_branches(star::SolidKind::octahedron);
      else if (shape_kind == "icosahedron")
        u = star::platonic_branches(star::SolidKind::icosahedron);
      else
        u = star::platonic_branches(star::SolidKind::dodecahedron);
      json uj = star::branch_matrix_to_json(u);
      report.body["output"]["U"] = uj;
      report.emit(as_json, uj.dump(2) + "\n");
      return 0;
    }

    if (*matchings) {
      json arr = json::array();
      for (const star::Matching& mt : star::perfect_matchings(2 * fano_n)) {
        star::BranchMatrix u = star::matching_to_branch_matrix(mt);
        json pairs = json::array();
        for (auto [a, b] : mt.pairs) pairs.push_back({a, b});
        arr.push_back(json{{"pairs", pairs},
                           {"U", star::branch_matrix_to_json(u)}});
      }
      report.body["output"]["count"] = arr.size();
      report.body["output"]["matchings"] = arr;
      report.emit(as_json, report.body["output"].dump(2) + "\n");
      return 0;
    }

    if (*fano->get_subcommand("cayley")) {
      json arr = json::array();
      for (const star::CayleyLine& line : star::cayley_lines()) {
        arr.push_back(json{
            {"kind", line.kind == star::CayleyLineKind::singular ? "singular"
                                                                 : "smooth"},
            {"label", {line.label.first, line.label.second}},
            {"basis", star::branch_matrix_to_json(line.basis)}});
      }
      report.body["output"]["count"] = arr.size();
      report.body["output"]["lines"] = arr;
      report.emit(as_json, report.body["output"].dump(2) + "\n");
      return 0;
    }

    if (*chart) {
      star::ChartSystem cs = star::chart_equations(chart_m, chart_n);
      report.body["output"]["unknowns"] = cs.unknowns;
      report.body["output"]["equation_count"] = cs.equations.size();
      json eqs = json::array();
      for (std::size_t i = 0; i < cs.equations.size(); ++i)
        eqs.push_back(json{{"xi_exp", cs.xi_monomials[i].exp},
                           {"poly", cs.equations[i].str("w")}});
      report.body["output"]["equations"] = eqs;
      std::ostringstream text;
      text << cs.equations.size() << " equations in " << cs.unknowns
           << " unknowns\n";
      if (do_solve) {
        auto clusters = star::solve_chart_newton(cs, starts, seed);
        json cj = json::array();
        for (const auto& c : clusters)
          cj.push_back(json{{"point", c.point},
                            {"residual", c.residual},
                            {"basins", c.basin_count}});
        report.body["output"]["clusters"] = cj;
        text << clusters.size() << " solution clusters\n";
        for (const auto& c : clusters) {
          text << "  [";
          for (std::size_t i = 0; i < c.point.size(); ++i)
            text << (i ? ", " : "") << c.point[i];
          text << "]  residual " << c.residual << "  basins "
               << c.basin_count << "\n";
        }
      }
      report.emit(as_json, text.str());
      return 0;
    }

    // sim subcommands
    report.input(star_file);
    report.input(phantom_file);
    star::StarSymbol s = load_star(star_file);
    star::Domain2D dom{grid_n};
    star::Field2D f = star::make_phantom(load_phantom(phantom_file), dom);

    if (*fwd) {
      star::Field2D g = star::apply_star(f, s);
      write_field(g, out_path);
      report.body["output"]["path"] = out_path;
      report.body["output"]["l2"] = star::l2_norm(g);
      report.emit(as_json, "forward data written to " + out_path + "\n");
      return 0;
    }
    if (*inv) {
      star::Field2D g = in_path.empty() ? star::apply_star(f, s)
                                        : star::read_sfld(in_path);
      star::Field2D rec = star::invert_star(g, s, eps_reg);
      write_field(rec, out_path);
      double err = star::rel_l2_error(rec, f);
      report.body["output"]["path"] = out_path;
      report.body["output"]["rel_l2_vs_phantom"] = err;
      std::ostringstream text;
      text << "reconstruction written to " << out_path
           << "\nrel L2 error vs phantom: " << err << "\n";
      report.emit(as_json, text.str());
      return 0;
    }
    // nullcheck
    double res = star::null_residual(s, f);
    report.body["output"]["residual"] = res;
    std::ostringstream text;
    text << "null residual: " << res << "\n";
    if (!ref_star_file.empty()) {
      report.input(ref_star_file);
      double ref = star::null_residual(load_star(ref_star_file), f);
      report.body["output"]["reference_residual"] = ref;
      report.body["output"]["ratio"] = res / ref;
      text << "reference residual: " << ref << "\nratio: " << res / ref
           << "\n";
    }
    report.emit(as_json, text.str());
    return 0;
  } catch (const star::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
