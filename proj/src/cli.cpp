#include "gmt/cli.hpp"

#include "gmt/acceptance.hpp"
#include "gmt/cone.hpp"
#include "gmt/error.hpp"
#include "gmt/filling.hpp"
#include "gmt/flatnorm.hpp"
#include "gmt/football.hpp"
#include "gmt/io.hpp"
#include "gmt/jacobian.hpp"
#include "gmt/mesh_io.hpp"
#include "gmt/onedim.hpp"
#include "gmt/slicing.hpp"
#include "gmt/svg.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace gmt {

namespace {

struct RunConfig {
  std::uint64_t seed = 0;
  std::string out_dir;  // artifacts go to <out_dir>/<command>.<ext> when set
  std::string out;      // explicit artifact path, overrides out_dir
  double lp_tolerance = 1e-9;
  double john_gap = 1e-11;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s = buf;
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

// Writes one artifact and then the one-line summary. The summary goes to
// stdout unless the artifact itself went there.
class Emitter {
 public:
  Emitter(const RunConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

  void artifact(const std::string& stem, const std::string& ext, const std::string& text) {
    std::string path = cfg_.out;
    if (path.empty() && !cfg_.out_dir.empty()) {
      std::filesystem::create_directories(cfg_.out_dir);
      path = (std::filesystem::path(cfg_.out_dir) / (stem + "." + ext)).string();
    }
    if (path.empty()) {
      out_ << text;
      on_stdout_ = true;
      return;
    }
    write_file(path, text);
  }
  void json(const std::string& stem, const Json& j) { artifact(stem, "json", j.dump(2) + "\n"); }

  void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
    f << text;
  }

  void summary(const std::string& line) { (on_stdout_ ? err_ : out_) << line << '\n'; }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
  bool on_stdout_ = false;
};

AmbientNorm ambient_by_tag(const std::string& tag, int dim) {
  if (tag == "l2") return AmbientNorm::euclidean(dim);
  if (tag == "linf") return AmbientNorm::max_norm(dim);
  if (tag == "l1") return AmbientNorm::sum_norm(dim);
  throw Error(ErrorCode::InvalidInput, "norm must be l2, linf or l1 (got '" + tag + "')");
}

Json report_json(const ConeMassReport& r) {
  return {{"k", r.k},
          {"base_mass", r.base_mass},
          {"cone_mass", r.cone_mass},
          {"closed_form", r.closed_form},
          {"ratio", r.ratio},
          {"base_mass_star", r.base_mass_star},
          {"cone_mass_star", r.cone_mass_star},
          {"mass_star_ratio", r.mass_star_ratio}};
}

Json report_json(const FillingReport& r) {
  return {{"name", r.name},
          {"volume", r.volume},
          {"mass_ir", r.mass_ir},
          {"mass_star", r.mass_star},
          {"gap_ir", r.gap_ir},
          {"gap_star", r.gap_star},
          {"pushforward_mass", r.pushforward_mass},
          {"max_edge_stretch", r.max_edge_stretch},
          {"lipschitz", r.lipschitz},
          {"boundary_matches", r.boundary_matches},
          {"degree_one", r.degree_one},
          {"isometric_boundary", r.isometric_boundary},
          {"boundary_vertices", r.boundary_vertices}};
}

std::string csv_line(std::initializer_list<double> values) {
  std::ostringstream s;
  s.precision(17);
  bool first = true;
  for (double v : values) {
    if (!first) s << ',';
    s << v;
    first = false;
  }
  s << '\n';
  return s.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Polyhedral currents in normed spaces: masses, slicing, decomposition, coning, flat norm and filling experiments", "gmt"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--out-dir", cfg.out_dir, "Write artifacts to DIR/<command>.<ext>");

  auto with_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "Artifact path (default: stdout)"); };

  // jacobian
  std::string norm_tag = "l2", kind_tag = "mstar";
  int dim = 2;
  CLI::App* jac = app.add_subcommand("jacobian", "Jacobian of an ambient norm on R^dim");
  jac->add_option("--norm", norm_tag, "l2, linf or l1")->capture_default_str();
  jac->add_option("--dim", dim, "Dimension")->check(CLI::Range(1, 8))->capture_default_str();
  jac->add_option("--kind", kind_tag, "b, mstar or ir")->capture_default_str();
  jac->add_option("--john-gap", cfg.john_gap, "Certified log-det gap for the John ellipsoid");

  // mass
  std::string current_path, svg_path;
  bool per_cell = false;
  CLI::App* mas = app.add_subcommand("mass", "Mass of a polyhedral current");
  mas->add_option("--current", current_path, "Current JSON")->required()->check(CLI::ExistingFile);
  mas->add_option("--kind", kind_tag, "b, mstar, ir or ak")->capture_default_str();
  mas->add_flag("--per-cell", per_cell, "Emit a CSV of per-cell masses");
  mas->add_option("--svg", svg_path, "Draw a planar current");
  with_out(mas);

  // slice
  int axis = 0;
  double level = 0.0;
  bool fubini = false;
  CLI::App* sli = app.add_subcommand("slice", "Slice by a coordinate projection");
  sli->add_option("--current", current_path, "Current JSON")->required()->check(CLI::ExistingFile);
  sli->add_option("--axis", axis, "Coordinate index, from 0")->capture_default_str();
  sli->add_option("--level", level, "Level p");
  sli->add_flag("--fubini", fubini, "Emit a CSV of (p, slice mass) and compare with the restricted mass");
  sli->add_option("--kind", kind_tag, "b, mstar or ir")->capture_default_str();
  with_out(sli);

  // decompose
  CLI::App* dec = app.add_subcommand("decompose", "Decompose an integral 1-current into paths and loops");
  dec->add_option("--current", current_path, "Current JSON")->required()->check(CLI::ExistingFile);
  dec->add_option("--svg", svg_path, "Draw a planar current");
  with_out(dec);

  // cone
  bool report = false;
  std::string demo;
  int polygon = 64, order = 0;
  CLI::App* con = app.add_subcommand("cone", "Inscribed Riemannian mass of the Euclidean cone");
  auto* cone_cur = con->add_option("--current", current_path, "Current JSON")->check(CLI::ExistingFile);
  con->add_flag("--report", report, "Emit the full mass report as JSON");
  auto* cone_demo = con->add_option("--demo", demo, "circle: the regular m-gon with the intrinsic circle metric");
  con->add_option("--m", polygon, "Polygon size for --demo circle")->check(CLI::Range(3, 100000))->capture_default_str();
  con->add_option("--order", order, "Gauss-Legendre nodes in r (0: k + 1)");
  cone_cur->excludes(cone_demo);
  with_out(con);

  // flatnorm
  std::string complex_path, chain_path, jacobian_tag = "mstar";
  CLI::App* fla = app.add_subcommand("flatnorm", "Simplicial flat norm by linear programming");
  auto* fla_demo = fla->add_option("--demo", demo, "square-boundary");
  auto* fla_cx = fla->add_option("--complex", complex_path, "Complex JSON")->check(CLI::ExistingFile);
  auto* fla_ch = fla->add_option("--chain", chain_path, "Chain JSON")->check(CLI::ExistingFile);
  fla->add_option("--jacobian", jacobian_tag, "b, mstar or ir")->capture_default_str();
  fla->add_option("--lp-tol", cfg.lp_tolerance, "Simplex tolerance")->capture_default_str();
  fla_cx->needs(fla_ch);
  fla_ch->needs(fla_cx);
  fla_demo->excludes(fla_cx);
  with_out(fla);

  // filling
  std::string body = "square", candidate;
  int samples = 20;
  bool corpus = false;
  CLI::App* fil = app.add_subcommand("filling", "l-infinity filling lower bound for a candidate filling");
  fil->add_option("--body", body, "square or hexagon")->capture_default_str();
  fil->add_option("--candidate", candidate, "OFF file or corpus name");
  fil->add_option("--samples", samples, "Degree samples")->capture_default_str();
  fil->add_flag("--corpus", corpus, "Run every corpus candidate and emit a CSV");
  with_out(fil);

  // football
  FootballParams fp;
  int segments = 12;
  CLI::App* foo = app.add_subcommand("football", "The flat football and its collapse map");
  foo->set_help_flag("--help", "Print this help message and exit");  // frees -h for the mesh size
  foo->add_option("--eps", fp.eps, "Strip width")->capture_default_str();
  foo->add_option("--L", fp.slot, "Slot length")->capture_default_str();
  foo->add_option("--h", fp.h, "Mesh size")->capture_default_str();
  foo->add_option("--t", fp.probe_t, "Probe offset")->capture_default_str();
  foo->add_option("--flat-segments", segments, "Polygon edges per half circle for the flat distance (0: skip)")
      ->capture_default_str();
  foo->add_option("--svg", svg_path, "Draw the mesh and the boundary image");
  with_out(foo);

  // witness
  std::string which;
  CLI::App* wit = app.add_subcommand("witness", "Non-rigidity witness");
  wit->add_option("name", which, "linfty-square")->required()->check(CLI::IsMember({"linfty-square"}));
  with_out(wit);

  // verify-all
  std::vector<int> only;
  CLI::App* ver = app.add_subcommand("verify-all", "Acceptance suite, one PASS/FAIL line per criterion");
  ver->add_option("--only", only, "Criterion ids (default: all)")->check(CLI::Range(1, 11));
  with_out(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  Emitter emit(cfg, out, err);
  try {
    if (jac->parsed()) {
      const JacobianKind kind = parse_jacobian_kind(kind_tag);
      const Seminorm s = Seminorm::of(ambient_by_tag(norm_tag, dim));
      JohnOptions jo;
      jo.gap_tolerance = cfg.john_gap;
      const double v = kind == JacobianKind::InscribedRiemannian ? jac_inscribed_riemannian(s, jo) : jacobian(s, kind);
      emit.summary(num(v));
    } else if (mas->parsed()) {
      const PolyhedralCurrent t = current_from_json(read_json_file(current_path));
      const MassMeasureReport m = kind_tag == "ak" ? mass_ambrosio_kirchheim(t) : mass(t, parse_jacobian_kind(kind_tag));
      if (per_cell) {
        std::string csv = "cell,mass\n";
        for (std::size_t i = 0; i < m.per_cell.size(); ++i) csv += std::to_string(i) + "," + csv_line({m.per_cell[i]});
        emit.artifact("mass", "csv", csv);
      }
      if (!svg_path.empty()) {
        SvgFigure fig;
        fig.add_current(t, "black");
        fig.write_file(svg_path);
      }
      emit.summary("mass (" + kind_tag + ") of a " + std::to_string(t.dim()) + "-current with " +
                   std::to_string(t.cells().size()) + " cells: " + num(m.total));
    } else if (sli->parsed()) {
      const PolyhedralCurrent t = current_from_json(read_json_file(current_path));
      if (axis < 0 || axis >= t.ambient_dim()) throw Error(ErrorCode::InvalidInput, "axis out of range");
      const Projection rho = Projection::axis(t.ambient_dim(), axis);
      if (fubini) {
        const FubiniReport f = verify_mass_fubini(t, rho, parse_jacobian_kind(kind_tag));
        std::string csv = "p,slice_mass\n";
        for (const auto& [p, m] : f.samples) csv += csv_line({p, m});
        emit.artifact("fubini", "csv", csv);
        emit.summary("integral of slice masses " + num(f.slice_integral) + ", restricted mass " + num(f.restricted_mass) +
                     ", gap " + num(f.gap) + (f.inequality_holds ? ", slicing inequality holds" : ", SLICING INEQUALITY VIOLATED"));
      } else {
        const PolyhedralCurrent s = slice(t, rho, Vec::Constant(1, level));
        emit.json("slice", to_json(s));
        emit.summary("slice at x" + std::to_string(axis) + " = " + num(level) + ": " + std::to_string(s.cells().size()) +
                     " cells, mass " + num(mass(s, JacobianKind::MassStar).total));
      }
    } else if (dec->parsed()) {
      const PolyhedralCurrent t = current_from_json(read_json_file(current_path));
      const CurrentGraph g = CurrentGraph::from_current(t);
      const Decomposition d = decompose_1current(g);
      emit.json("decompose", to_json(d, g));
      if (!svg_path.empty()) {
        SvgFigure fig;
        fig.add_current(t, "black");
        fig.write_file(svg_path);
      }
      emit.summary(std::to_string(d.paths.size()) + " paths, " + std::to_string(d.loops.size()) +
                   " loops, total length " + num(d.total_length(g)) + ", mass " + num(g.mass()));
    } else if (con->parsed()) {
      ConeMassReport r;
      if (demo == "circle") {
        r = cone_mass_ir(circle_base(polygon), order);
      } else if (!demo.empty()) {
        throw Error(ErrorCode::InvalidInput, "unknown cone demo '" + demo + "'");
      } else if (!current_path.empty()) {
        r = cone_mass_ir(current_from_json(read_json_file(current_path)), order);
      } else {
        err << "error: cone needs --current or --demo\n\n" << con->help();
        return 2;
      }
      if (report) emit.json("cone", report_json(r));
      emit.summary("ratio " + num(r.ratio) + " (base mass " + num(r.base_mass) + ", cone mass " + num(r.cone_mass) +
                   ", 1/(k+1) = " + num(r.closed_form / r.base_mass) + ")");
    } else if (fla->parsed()) {
      const JacobianKind kind = parse_jacobian_kind(jacobian_tag);
      LpOptions lp;
      lp.tolerance = cfg.lp_tolerance;
      if (demo == "square-boundary") {
        const AmbientNorm e2 = AmbientNorm::euclidean(2);
        const ComplexBuild b = build_complex({square_current(1.0, e2), square_boundary(1.0, e2)});
        const FlatNormResult f = flat_norm(b.chains[1], b.complex, kind, lp);
        emit.summary(num(f.value));
      } else if (!demo.empty()) {
        throw Error(ErrorCode::InvalidInput, "unknown flatnorm demo '" + demo + "'");
      } else if (!complex_path.empty()) {
        const SimplicialComplex k = complex_from_json(read_json_file(complex_path));
        const Chain t = chain_from_json(read_json_file(chain_path));
        const FlatNormResult f = flat_norm(t, k, kind, lp);
        emit.json("flatnorm", Json{{"value", f.value},
                                   {"u", to_json(f.u)},
                                   {"v", to_json(f.v)},
                                   {"certified", f.certified},
                                   {"integral", f.integral},
                                   {"integer_upper", f.integer_upper},
                                   {"pivots", f.pivots}});
        emit.summary("flat norm " + num(f.value) + (f.certified ? " (integer certified)" : " (not certified)") +
                     ", mass " + num(chain_mass(t, k, kind)));
      } else {
        err << "error: flatnorm needs --demo or --complex with --chain\n\n" << fla->help();
        return 2;
      }
    } else if (fil->parsed()) {
      if (corpus) {
        std::string csv = "name,body,volume,mass_ir,mass_star,gap_ir,gap_star,lipschitz,boundary_matches,degree_one\n";
        double min_gap = std::numeric_limits<double>::infinity();
        for (const auto& [b, cand] : filling_corpus()) {
          const FillingReport r = ell_infty_filling_bound(ConvexBody::named(b), cand, samples, cfg.seed);
          min_gap = std::min({min_gap, r.gap_ir, r.gap_star});
          std::string line = csv_line({r.volume, r.mass_ir, r.mass_star, r.gap_ir, r.gap_star});
          line.pop_back();
          csv += r.name + "," + b + "," + line + "," + (r.lipschitz ? "1" : "0") + "," +
                 (r.boundary_matches ? "1" : "0") + "," + (r.degree_one ? "1" : "0") + "\n";
        }
        emit.artifact("filling", "csv", csv);
        emit.summary("corpus minimum gap " + num(min_gap));
      } else {
        if (candidate.empty()) {
          err << "error: filling needs --candidate or --corpus\n\n" << fil->help();
          return 2;
        }
        FillingCandidate c;
        if (std::filesystem::exists(candidate)) {
          c = FillingCandidate{std::filesystem::path(candidate).stem().string(), read_off_file(candidate)};
        } else {
          c = corpus_candidate(candidate);
          body = corpus_body(candidate);
        }
        const FillingReport r = ell_infty_filling_bound(ConvexBody::named(body), c, samples, cfg.seed);
        emit.json("filling", report_json(r));
        emit.summary(r.name + ": M_ir - Vol = " + num(r.gap_ir) + ", M_m* - Vol = " + num(r.gap_star));
      }
    } else if (foo->parsed()) {
      const Football f = make_flat_football(fp);
      const FootballReport r = football_report(f);
      Json j{{"eps", fp.eps},
             {"L", fp.slot},
             {"h", fp.h},
             {"t", fp.probe_t},
             {"vertices", r.vertices},
             {"triangles", r.triangles},
             {"area", r.area},
             {"max_edge_stretch", r.max_edge_stretch},
             {"across_distance", r.across_distance},
             {"slit_distance", r.slit_distance},
             {"straight_distance", r.straight_distance},
             {"boundary_loops", r.boundary_loops},
             {"boundary_paths", r.boundary_paths},
             {"winding_number", r.winding_number},
             {"boundary_image_mass", r.boundary_image_mass}};
      if (segments > 0) {
        const FootballFlatReport fl = football_flat_distance(fp.eps, fp.slot, segments);
        j["flat_distance"] = {{"value", fl.flat_distance}, {"filling_bound", fl.filling_bound}, {"certified", fl.certified}};
      }
      emit.json("football", j);
      if (!svg_path.empty()) {
        SvgFigure fig;
        fig.add_mesh(f.mesh, "#999999");
        fig.add_current(r.boundary_image, "#c00000");
        fig.write_file(svg_path);
      }
      emit.summary("area " + num(r.area) + ", stretch " + num(r.max_edge_stretch) + ", across distance " +
                   num(r.across_distance) + " vs slit " + num(r.slit_distance) + " and straight " +
                   num(r.straight_distance));
    } else if (wit->parsed()) {
      const WitnessReport w = make_linfty_square();
      emit.json("witness", Json{{"mass_euclidean", w.mass_euclidean},
                                {"mass_max", w.mass_max},
                                {"boundary_euclidean", w.boundary_euclidean},
                                {"boundary_max", w.boundary_max},
                                {"distance_euclidean", w.distance_euclidean},
                                {"distance_max", w.distance_max},
                                {"identity_one_lipschitz", w.identity_one_lipschitz}});
      emit.summary("masses " + num(w.mass_euclidean) + " / " + num(w.mass_max) + ", boundaries " +
                   num(w.boundary_euclidean) + " / " + num(w.boundary_max) + ", distances " +
                   num(w.distance_euclidean) + " / " + num(w.distance_max));
    } else if (ver->parsed()) {
      const std::vector<CriterionResult> results = run_acceptance(cfg.seed, only);
      std::ostringstream lines;
      print_report(lines, results);
      int passed = 0;
      for (const auto& r : results) passed += r.pass ? 1 : 0;
      emit.artifact("verify-all", "txt", lines.str());
      emit.summary("verify-all (seed " + std::to_string(cfg.seed) + "): " + std::to_string(passed) + "/" +
                   std::to_string(results.size()) + " criteria passed");
      return passed == static_cast<int>(results.size()) ? 0 : 1;
    }
  } catch (const Error& e) {
    Json diag{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (const auto* pe = dynamic_cast<const PairError*>(&e)) {
      diag["first"] = pe->first();
      diag["second"] = pe->second();
    }
    out << diag.dump(2) << '\n';
    return 1;
  }
  return 0;
}

}  // namespace gmt
