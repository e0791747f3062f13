#include "app.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "builtins.hpp"
#include "json.hpp"
#include "kcheeger/anisotropy.hpp"
#include "kcheeger/cheeger.hpp"
#include "kcheeger/disc_polygon.hpp"
#include "kcheeger/error.hpp"
#include "kcheeger/optimizer.hpp"
#include "polygon_json.hpp"

namespace kcheeger::cli {

namespace {

using nlohmann::ordered_json;

constexpr double kTwoRootPi = 3.5449077018110320546;

std::string fmt(double v) {
  char buf[40];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

// display style: truncated, not rounded, to 4 decimals
std::string fmt4(double v) {
  const double t = std::trunc(v * 1e4) / 1e4;
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, t, std::chars_format::fixed, 4);
  return std::string(buf, p);
}

// monostate renders as an empty cell
using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Grid {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c, bool fixed4) {
  switch (c.index()) {
    case 0:
      return {};
    case 1:
      return std::to_string(std::get<long long>(c));
    case 2: {
      const double v = std::get<double>(c);
      return fixed4 ? fmt4(v) : fmt(v);
    }
    default:
      return std::get<std::string>(c);
  }
}

std::string render_delimited(const Grid& g, char sep) {
  std::string s;
  for (std::size_t i = 0; i < g.header.size(); ++i) {
    if (i) s += sep;
    s += g.header[i];
  }
  s += '\n';
  for (const auto& row : g.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s += sep;
      s += cell_text(row[i], false);
    }
    s += '\n';
  }
  return s;
}

std::string render_aligned(const Grid& g) {
  const std::size_t cols = g.header.size();
  std::vector<std::size_t> width(cols);
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < cols; ++i) width[i] = g.header[i].size();
  cells.reserve(g.rows.size());
  for (const auto& row : g.rows) {
    std::vector<std::string> line(cols);
    for (std::size_t i = 0; i < cols && i < row.size(); ++i) {
      line[i] = cell_text(row[i], true);
      width[i] = std::max(width[i], line[i].size());
    }
    cells.push_back(std::move(line));
  }
  std::string s;
  auto put = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < cols; ++i) {
      if (i) s += "  ";
      s.append(width[i] - line[i].size(), ' ');
      s += line[i];
    }
    s += '\n';
  };
  put(g.header);
  for (const auto& line : cells) put(line);
  return s;
}

std::string render_grid(const Grid& g, const std::string& format) {
  if (format == "csv") return render_delimited(g, ',');
  if (format == "tsv") return render_delimited(g, '\t');
  return render_aligned(g);
}

void write_payload(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error(ErrorCode::validation_error, "cannot write \"" + out_path + "\"");
  f << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::validation_error, "cannot write \"" + path + "\"");
  f << text;
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::parse_error:
      return 3;
    case ErrorCode::no_bracket:
    case ErrorCode::tolerance_not_met:
      return 5;
    default:
      return 4;
  }
}

const char* kind_for(int exit_code) {
  switch (exit_code) {
    case 3:
      return "parse";
    case 5:
      return "solver";
    default:
      return "validation";
  }
}

void emit_error(std::ostream& err, const std::string& code, const std::string& kind,
                const std::string& message) {
  err << ordered_json{{"error", {{"code", code}, {"kind", kind}, {"message", message}}}}.dump()
      << '\n';
}

int thread_cap_from_env() {
  const char* env = std::getenv("ANISO_CHEEGER_THREADS");
  if (!env) return std::numeric_limits<int>::max();
  int v = 0;
  const char* last = env + std::string_view(env).size();
  auto [p, ec] = std::from_chars(env, last, v);
  if (ec != std::errc() || p != last || v < 1) return std::numeric_limits<int>::max();
  return v;
}

ordered_json params_json(const optimizer::Params& p) {
  return ordered_json{{"radii", p.radii}, {"angles", p.angles}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"anisotropic Cheeger constants, Cheeger sets, polar bodies, and the"
               " scale invariant functional J for planar convex polygons"};
  app.name("aniso-cheeger");
  app.require_subcommand(1);

  struct {
    std::string omega = "disc";
    std::string k;
    int m = 4096;
    double eps_root = 1e-12;
    std::string format = "json";
    std::string out_path;
    std::vector<int> ns = {4, 6, 8, 10, 50, 100, 200};
    int even_through = 0;
    bool with_limit = false;
    std::string plot_dir;
    int pairs = 2;
    int starts = 8;
    long long budget = 2000;
    std::uint64_t seed = 0;
    int parallel = 1;
    std::vector<double> aspects;
  } o;

  const std::string body_help = "disc | square | pgon:<n> | path to polygon JSON";
  auto check_m = [](const std::string& s) -> std::string {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v < 64 || v % 2 != 0)
      return "disc resolution must be an even integer of at least 64";
    return {};
  };

  auto add_common = [&](CLI::App* c, bool with_eps) {
    c->add_option("--m", o.m, "disc resolution (vertices of the builtin disc)")
        ->check(check_m, "EVEN_M");
    if (with_eps)
      c->add_option("--eps-root", o.eps_root, "relative area tolerance of the bisection")
          ->check(CLI::PositiveNumber);
    c->add_option("--format", o.format, "json, csv, tsv, or table")
        ->check(CLI::IsMember({"json", "csv", "tsv", "table"}));
    c->add_option("--out", o.out_path, "write the payload here instead of stdout");
  };

  CLI::App* polar = app.add_subcommand("polar", "polar dual of a body");
  polar->add_option("--k", o.k, body_help)->required();
  add_common(polar, false);

  CLI::App* mahler = app.add_subcommand("mahler", "area of K times area of its polar dual");
  mahler->add_option("--k", o.k, body_help + " (symmetrized if needed)")->required();
  add_common(mahler, false);

  CLI::App* cheeger = app.add_subcommand("cheeger", "Cheeger constant and Cheeger set");
  cheeger->add_option("--omega", o.omega, "domain: " + body_help);
  cheeger->add_option("--k", o.k, "anisotropy: " + body_help + " (symmetrized if needed)")
      ->required();
  add_common(cheeger, true);

  CLI::App* functionals =
      app.add_subcommand("functionals", "h, F = h/sqrt|K|, J = h sqrt|polar K|, Mahler volume");
  functionals->add_option("--omega", o.omega, "domain: " + body_help);
  functionals->add_option("--k", o.k, "anisotropy: " + body_help + " (symmetrized if needed)")
      ->required();
  add_common(functionals, true);

  CLI::App* table1 = app.add_subcommand(
      "table1", "closed form disc values per circumscribed regular n-gon anisotropy");
  auto* t1_n = table1->add_option("--n", o.ns, "polygon orders, even, at least 4")
                   ->delimiter(',')
                   ->expected(-1);
  auto* t1_even = table1->add_option("--even-through", o.even_through,
                                     "use every even order from 4 through this value");
  t1_n->excludes(t1_even);
  t1_even->excludes(t1_n);
  table1->add_flag("--with-limit", o.with_limit, "append the large n limit 2 sqrt(pi)");
  table1->add_option("--plot-dir", o.plot_dir,
                     "also write xbar_vs_n.dat and J_vs_n.dat into this directory");
  add_common(table1, false);

  CLI::App* bounds = app.add_subcommand("bounds", "closed form bracketing of x_bar and J");
  auto* b_n = bounds->add_option("--n", o.ns, "polygon orders, even, at least 4")
                  ->delimiter(',')
                  ->expected(-1);
  auto* b_even = bounds->add_option("--even-through", o.even_through,
                                    "use every even order from 4 through this value");
  b_n->excludes(b_even);
  b_even->excludes(b_n);
  add_common(bounds, false);

  CLI::App* optimize =
      app.add_subcommand("optimize", "minimize J over symmetric polygonal anisotropies");
  optimize->add_option("--omega", o.omega, "domain: " + body_help);
  optimize->add_option("--pairs", o.pairs, "antipodal vertex pairs of the anisotropy");
  optimize->add_option("--starts", o.starts, "independent simplex starts");
  optimize->add_option("--budget", o.budget, "objective evaluations per start");
  optimize->add_option("--seed", o.seed, "seed for the randomized starts");
  optimize->add_option("--parallel", o.parallel,
                       "worker threads for the starts (capped by ANISO_CHEEGER_THREADS)");
  add_common(optimize, true);
  optimize->get_option("--out")->description("write the improvement trace here as JSON lines");

  CLI::App* probe = app.add_subcommand(
      "probe-divergence", "J along area one rectangles of growing aspect ratio");
  probe->add_option("--omega", o.omega, "domain: " + body_help);
  probe->add_option("--aspects", o.aspects, "aspect ratios, each at least 1")
      ->delimiter(',')
      ->expected(-1);
  add_common(probe, true);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("aniso-cheeger");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "usage", "usage", e.what());
    return 2;
  }

  try {
    auto resolve_ns = [&]() {
      if (t1_even->count() > 0 || b_even->count() > 0) {
        if (o.even_through < 4)
          throw Error(ErrorCode::bad_parameter, "even-through must be at least 4");
        std::vector<int> ns;
        for (int n = 4; n <= o.even_through; n += 2) ns.push_back(n);
        o.ns = std::move(ns);
      }
      return std::span<const int>(o.ns);
    };

    if (*polar) {
      ConvexPolygon dual = polar_body(resolve_body(o.k, o.m));
      if (o.format == "json") {
        write_payload(polygon_to_json(dual).dump() + "\n", o.out_path, out);
      } else {
        Grid g;
        g.header = {"x", "y"};
        for (const Point2& v : dual.vertices()) g.rows.push_back({Cell{v.x}, Cell{v.y}});
        write_payload(render_grid(g, o.format), o.out_path, out);
      }
    } else if (*mahler) {
      Anisotropy k(resolve_body(o.k, o.m));
      if (o.format == "json") {
        ordered_json j{{"area_k", k.area_body()},
                       {"area_polar", k.area_polar()},
                       {"mahler", mahler_volume(k)},
                       {"symmetrized", k.was_symmetrized()}};
        write_payload(j.dump() + "\n", o.out_path, out);
      } else {
        Grid g;
        g.header = {"area_k", "area_polar", "mahler", "symmetrized"};
        g.rows.push_back({Cell{k.area_body()}, Cell{k.area_polar()}, Cell{mahler_volume(k)},
                          Cell{std::string(k.was_symmetrized() ? "true" : "false")}});
        write_payload(render_grid(g, o.format), o.out_path, out);
      }
    } else if (*cheeger) {
      ConvexPolygon omega = resolve_body(o.omega, o.m);
      Anisotropy k(resolve_body(o.k, o.m));
      CheegerResult r = solve_cheeger(omega, k, o.eps_root);
      if (o.format == "json") {
        ordered_json j{{"rho", r.rho},
                       {"h", r.h},
                       {"residual", r.residual},
                       {"inner_body", polygon_to_json(r.inner_body)},
                       {"cheeger_set", polygon_to_json(r.cheeger_set)}};
        write_payload(j.dump() + "\n", o.out_path, out);
      } else {
        Grid g;
        g.header = {"rho", "h", "residual"};
        g.rows.push_back({Cell{r.rho}, Cell{r.h}, Cell{r.residual}});
        write_payload(render_grid(g, o.format), o.out_path, out);
      }
    } else if (*functionals) {
      ConvexPolygon omega = resolve_body(o.omega, o.m);
      Anisotropy k(resolve_body(o.k, o.m));
      FunctionalValues v = kcheeger::functionals(omega, k, o.eps_root);
      if (o.format == "json") {
        ordered_json j{{"h", v.h}, {"F", v.F}, {"J", v.J}, {"mahler", v.mahler}};
        write_payload(j.dump() + "\n", o.out_path, out);
      } else {
        Grid g;
        g.header = {"h", "F", "J", "mahler"};
        g.rows.push_back({Cell{v.h}, Cell{v.F}, Cell{v.J}, Cell{v.mahler}});
        write_payload(render_grid(g, o.format), o.out_path, out);
      }
    } else if (*table1) {
      std::vector<disc::Analytics> rows = disc::table1(resolve_ns());
      if (!o.plot_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(o.plot_dir, ec);
        std::string xs, js;
        for (const disc::Analytics& a : rows) {
          xs += std::to_string(a.n) + " " + fmt(a.x_bar) + "\n";
          js += std::to_string(a.n) + " " + fmt(a.j) + "\n";
        }
        const std::filesystem::path dir(o.plot_dir);
        write_file((dir / "xbar_vs_n.dat").string(), xs);
        write_file((dir / "J_vs_n.dat").string(), js);
      }
      if (o.format == "json") {
        ordered_json j;
        j["rows"] = ordered_json::array();
        for (const disc::Analytics& a : rows)
          j["rows"].push_back(ordered_json{{"n", a.n},
                                           {"x_bar", a.x_bar},
                                           {"J", a.j},
                                           {"x_lower", a.bounds.x_lower},
                                           {"x_upper", a.bounds.x_upper},
                                           {"J_lower", a.bounds.j_lower},
                                           {"J_upper", a.bounds.j_upper}});
        if (o.with_limit) j["limit"] = kTwoRootPi;
        write_payload(j.dump() + "\n", o.out_path, out);
      } else {
        Grid g;
        g.header = {"n", "x_bar", "J", "x_lower", "x_upper", "J_lower", "J_upper"};
        for (const disc::Analytics& a : rows)
          g.rows.push_back({Cell{static_cast<long long>(a.n)}, Cell{a.x_bar}, Cell{a.j},
                            Cell{a.bounds.x_lower}, Cell{a.bounds.x_upper},
                            Cell{a.bounds.j_lower}, Cell{a.bounds.j_upper}});
        if (o.with_limit)
          g.rows.push_back({Cell{std::string("limit")}, Cell{}, Cell{kTwoRootPi}, Cell{}, Cell{},
                            Cell{}, Cell{}});
        write_payload(render_grid(g, o.format), o.out_path, out);
      }
    } else if (*bounds) {
      auto ns = resolve_ns();
      if (o.format == "json") {
        ordered_json j;
        j["rows"] = ordered_json::array();
        for (int n : ns) {
          disc::Bounds b = disc::bounds(n);
          j["rows"].push_back(ordered_json{{"n", n},
                                           {"x_lower", b.x_lower},
                                           {"x_upper", b.x_upper},
                                           {"J_lower", b.j_lower},
                                           {"J_upper", b.j_upper}});
        }
        write_payload(j.dump() + "\n", o.out_path, out);
      } else {
        Grid g;
        g.header = {"n", "x_lower", "x_upper", "J_lower", "J_upper"};
        for (int n : ns) {
          disc::Bounds b = disc::bounds(n);
          g.rows.push_back({Cell{static_cast<long long>(n)}, Cell{b.x_lower}, Cell{b.x_upper},
                            Cell{b.j_lower}, Cell{b.j_upper}});
        }
        write_payload(render_grid(g, o.format), o.out_path, out);
      }
    } else if (*optimize) {
      ConvexPolygon omega = resolve_body(o.omega, o.m);
      optimizer::Options opts;
      opts.starts = o.starts;
      opts.budget = o.budget;
      opts.seed = o.seed;
      opts.eps_root = o.eps_root;
      opts.threads = std::max(1, std::min(o.parallel, thread_cap_from_env()));
      opts.record_trace = !o.out_path.empty();
      optimizer::Result res = optimizer::minimize(omega, o.pairs, opts);
      if (!o.out_path.empty()) {
        std::string lines;
        for (const optimizer::TraceEntry& t : res.trace) {
          ordered_json j{{"start", t.start},
                         {"eval", t.eval},
                         {"J", t.j},
                         {"radii", t.params.radii},
                         {"angles", t.params.angles}};
          lines += j.dump() + "\n";
        }
        write_file(o.out_path, lines);
      }
      if (o.format == "json") {
        ordered_json j{{"best_J", res.best_j},
                       {"best_params", params_json(res.best)},
                       {"best_start", res.best_start},
                       {"evaluations", res.evaluations},
                       {"converged", res.converged},
                       {"pairs", o.pairs},
                       {"starts", o.starts},
                       {"budget", o.budget},
                       {"seed", o.seed}};
        out << j.dump() << '\n';
      } else {
        Grid g;
        g.header = {"best_J", "evaluations", "converged", "best_start"};
        g.rows.push_back({Cell{res.best_j}, Cell{res.evaluations},
                          Cell{std::string(res.converged ? "true" : "false")},
                          Cell{static_cast<long long>(res.best_start)}});
        out << render_grid(g, o.format);
      }
    } else if (*probe) {
      if (o.aspects.empty())
        for (int i = 0; i <= 14; ++i) o.aspects.push_back(std::ldexp(1.0, i));
      ConvexPolygon omega = resolve_body(o.omega, o.m);
      std::vector<double> js = optimizer::divergence_probe(omega, o.aspects, o.eps_root);
      if (o.format == "json") {
        ordered_json j;
        j["rows"] = ordered_json::array();
        for (std::size_t i = 0; i < js.size(); ++i)
          j["rows"].push_back(ordered_json{{"aspect", o.aspects[i]}, {"J", js[i]}});
        write_payload(j.dump() + "\n", o.out_path, out);
      } else {
        Grid g;
        g.header = {"aspect", "J"};
        for (std::size_t i = 0; i < js.size(); ++i)
          g.rows.push_back({Cell{o.aspects[i]}, Cell{js[i]}});
        write_payload(render_grid(g, o.format), o.out_path, out);
      }
    }
    return 0;
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    emit_error(err, code_name(e.code()), kind_for(code), e.what());
    return code;
  } catch (const std::exception& e) {
    emit_error(err, "internal", "internal", e.what());
    return 1;
  }
}

}  // namespace kcheeger::cli
