#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <optional>
#include <sstream>

#include "ranstrat/errors.hpp"
#include "ranstrat/io.hpp"

namespace ranstrat::cli {

namespace {

struct Options {
  std::uint64_t seed = 0;
  double eps_geo = kEpsGeo;

  std::size_t max_vertices = 3;
  std::string dot_file, json_file;

  std::string points_file;
  double radius = 0.0;
  std::optional<std::size_t> max_dim;

  std::string a_file, b_file;

  std::string path_file, out_file;
  double resolution = kDefaultResolution;
  bool as_filtration = false;

  std::size_t samples = 10000;
  double probe_radius = 0.05;
};

CechOptions cech_options(const Options& o) {
  CechOptions c;
  c.max_dim = o.max_dim;
  c.eps_geo = o.eps_geo;
  return c;
}

void emit(std::ostream& out, const io::Json& j) { out << j.dump(2) << '\n'; }

int enumerate_cmd(const Options& o, std::ostream& out) {
  const PosetUniverse u = enumerate_classes(o.max_vertices);
  const HasseDiagram h = hasse(u);
  if (!o.dot_file.empty()) io::write_file(o.dot_file, export_dot(h));
  if (!o.json_file.empty()) io::write_file(o.json_file, io::to_json(u).dump(2) + "\n");
  out << u.size() << " classes, " << h.cover_edges.size() << " cover edges\n";
  for (const auto& [hi, lo] : h.cover_edges) out << h.nodes[hi].name() << " -> " << h.nodes[lo].name() << '\n';
  return kOk;
}

int cech_cmd(const Options& o, std::ostream& out) {
  const RanPoint x(io::points_from_json(io::read_file(o.points_file)), o.radius);
  emit(out, io::to_json(cech_complex(x, cech_options(o))));
  return kOk;
}

int filtration_cmd(const Options& o, std::ostream& out) {
  emit(out, io::to_json(cech_filtration(io::points_from_json(io::read_file(o.points_file)), cech_options(o))));
  return kOk;
}

int dominates_cmd(const Options& o, std::ostream& out) {
  const auto a = io::complex_from_json(io::read_file(o.a_file));
  const auto b = io::complex_from_json(io::read_file(o.b_file));
  if (const auto w = dominates(a, b)) {
    emit(out, io::to_json(*w));
  } else {
    out << "none\n";
  }
  return kOk;
}

int stratum_cmd(const Options& o, std::ostream& out) {
  const RanPoint x(io::points_from_json(io::read_file(o.points_file)), o.radius);
  const CechOptions opts = cech_options(o);
  emit(out, io::to_json(stratum_label(x, opts), tilde_r(x, opts)));
  return kOk;
}

int track_cmd(const Options& o, std::ostream& out) {
  const PLPath path = io::path_from_json(io::read_file(o.path_file));
  const ZigzagDiagram z = zigzag(path, o.resolution, cech_options(o));
  io::Json j = io::to_json(z);
  if (o.as_filtration) {
    const auto chain = as_filtration(z);
    j["filtration"] = chain ? io::to_json(*chain) : io::Json(nullptr);
  }
  if (o.out_file.empty()) {
    emit(out, j);
  } else {
    io::write_file(o.out_file, j.dump(2) + "\n");
    out << z.times.size() << " transitions written to " << o.out_file << '\n';
  }
  return kOk;
}

int frontier_demo_cmd(const Options& o, std::ostream& out) {
  const CechOptions opts = cech_options(o);
  const PointConfig p(1, {{0.0}, {1.0}});
  const IsoClass two_points = canonical_form(cech_complex(RanPoint(p, 0.4), opts));
  const IsoClass edge = canonical_form(cech_complex(RanPoint(p, 0.6), opts));
  const FrontierReport r = frontier_check(two_point_line_family(), two_points, edge, LabelMode::coarse,
                                          o.samples, o.probe_radius, o.seed, opts);
  emit(out, io::to_json(r));
  return r.verdict == FrontierVerdict::inconclusive ? kInconclusive : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cech stratification toolkit", "ranstrat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "random seed")->envname("RANSTRAT_SEED");
  app.add_option("--eps-geo", o.eps_geo, "critical band half-width")->envname("RANSTRAT_EPS_GEO");

  auto* enumerate = app.add_subcommand("enumerate", "iso-classes and Hasse diagram up to N vertices");
  enumerate->add_option("--max-vertices", o.max_vertices)->required();
  enumerate->add_option("--dot", o.dot_file, "write the Hasse diagram as DOT");
  enumerate->add_option("--json", o.json_file, "write the universe as JSON");

  auto* cech = app.add_subcommand("cech", "Cech complex of a configuration at a radius");
  cech->add_option("--points", o.points_file)->required();
  cech->add_option("--radius", o.radius)->required();
  cech->add_option("--max-dim", o.max_dim);

  auto* filtration = app.add_subcommand("filtration", "Cech filtration of a configuration");
  filtration->add_option("--points", o.points_file)->required();
  filtration->add_option("--max-dim", o.max_dim);

  auto* dom = app.add_subcommand("dominates", "vertex-surjective simplicial map a -> b");
  dom->add_option("--a", o.a_file)->required();
  dom->add_option("--b", o.b_file)->required();

  auto* stratum = app.add_subcommand("stratum", "stratum label and safe ball");
  stratum->add_option("--points", o.points_file)->required();
  stratum->add_option("--radius", o.radius)->required();
  stratum->add_option("--max-dim", o.max_dim);

  auto* track = app.add_subcommand("track", "zigzag diagram along a piecewise-linear path");
  track->add_option("--path", o.path_file)->required();
  track->add_option("--resolution", o.resolution);
  track->add_option("--out", o.out_file);
  track->add_flag("--as-filtration", o.as_filtration, "also extract a filtration");

  auto* demo = app.add_subcommand("frontier-demo", "frontier violation for two points on a line");
  demo->add_option("--samples", o.samples);
  demo->add_option("--probe-radius", o.probe_radius);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (enumerate->parsed()) return enumerate_cmd(o, out);
    if (cech->parsed()) return cech_cmd(o, out);
    if (filtration->parsed()) return filtration_cmd(o, out);
    if (dom->parsed()) return dominates_cmd(o, out);
    if (stratum->parsed()) return stratum_cmd(o, out);
    if (track->parsed()) return track_cmd(o, out);
    if (demo->parsed()) return frontier_demo_cmd(o, out);
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kInvalid;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace ranstrat::cli
