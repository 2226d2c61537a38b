#include "sysent/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sysent/bounds.hpp"
#include "sysent/fuchsian.hpp"
#include "sysent/homotopy.hpp"
#include "sysent/inversion.hpp"
#include "sysent/lattice.hpp"
#include "sysent/report.hpp"
#include "sysent/thresholds.hpp"
#include "sysent/verify.hpp"

namespace sysent {

namespace {

using nlohmann::json;

struct OutOpts {
  std::string format = "pretty";
  std::string out_path;
  int precision = 6;

  OutputSpec spec() const {
    OutputSpec s{parse_format(format), out_path, precision};
    s.check();
    return s;
  }
};

void add_output_options(CLI::App* cmd, OutOpts& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json", "pretty"}));
  cmd->add_option("--out", o.out_path, "write to file instead of stdout");
  cmd->add_option("--precision", o.precision, "decimal places, 1..15")
      ->check(CLI::Range(1, 15));
}

// key/value payload rendered to all three formats; keys are emitted in the
// order given for csv/pretty and sorted lexicographically for json
struct KV {
  std::vector<std::pair<std::string, std::string>> items;  // preformatted
  std::vector<std::pair<std::string, long long>> int_items_marker;

  void add_num(const std::string& k, double v, int precision) {
    items.emplace_back(k, format_number(v, precision));
  }
  void add_int(const std::string& k, long long v) {
    items.emplace_back(k, std::to_string(v));
    int_items_marker.emplace_back(k, v);
  }
  bool is_int(const std::string& k) const {
    for (const auto& [key, _] : int_items_marker)
      if (key == k) return true;
    return false;
  }
};

std::string render_kv(const KV& kv, const OutputSpec& spec) {
  std::ostringstream os;
  switch (spec.format) {
    case OutputFormat::csv: {
      for (size_t i = 0; i < kv.items.size(); ++i)
        os << kv.items[i].first << (i + 1 < kv.items.size() ? "," : "");
      os << "\n";
      for (size_t i = 0; i < kv.items.size(); ++i)
        os << kv.items[i].second << (i + 1 < kv.items.size() ? "," : "");
      os << "\n";
      break;
    }
    case OutputFormat::json: {
      json j = json::object();
      for (const auto& [k, v] : kv.items) {
        if (kv.is_int(k))
          j[k] = std::stoll(v);
        else
          j[k] = v;
      }
      os << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::pretty: {
      for (const auto& [k, v] : kv.items) os << k << ": " << v << "\n";
      break;
    }
  }
  return os.str();
}

int emit(const OutputSpec& spec, const std::string& payload, std::ostream& out,
         std::ostream& err) {
  if (spec.out_path.empty()) {
    out << payload;
    return 0;
  }
  std::ofstream f(spec.out_path, std::ios::binary);
  if (!f) {
    err << "error: cannot open output file " << spec.out_path << "\n";
    return 1;
  }
  f << payload;
  return 0;
}

std::string bounds_table_payload(long long gmin, long long gmax,
                                 const OutputSpec& spec) {
  if (gmin < 1 || gmax < gmin)
    throw std::invalid_argument("need 1 <= gmin <= gmax");
  struct Row {
    long long genus;
    BoundRecord rec;
    bool has_best;
    double best;
  };
  std::vector<Row> rows;
  for (long long g = gmin; g <= gmax; ++g) {
    Row r{g, classical_bounds(g), g >= 2, 0.0};
    if (r.has_best) r.best = best_sigma_upper(g).sigma;
    rows.push_back(r);
  }
  const int p = spec.precision;
  std::ostringstream os;
  static const char* kCols[] = {"genus",
                                "loewner",
                                "gromov_aspherical",
                                "gromov_genus",
                                "buser_sarnak_lower",
                                "paper_asymptotic",
                                "corollary_best"};
  auto cells = [&](const Row& r) {
    std::vector<std::string> c;
    c.push_back(std::to_string(r.genus));
    c.push_back(format_number(r.rec.loewner, p));
    c.push_back(format_number(r.rec.gromov_aspherical, p));
    c.push_back(format_number(r.rec.gromov_genus, p));
    c.push_back(format_number(r.rec.buser_sarnak_lower, p));
    c.push_back(format_number(r.rec.paper_asymptotic, p));
    c.push_back(r.has_best ? format_number(r.best, p) : std::string());
    return c;
  };
  switch (spec.format) {
    case OutputFormat::csv: {
      for (int i = 0; i < 7; ++i) os << kCols[i] << (i < 6 ? "," : "");
      os << "\n";
      for (const Row& r : rows) {
        const auto c = cells(r);
        for (size_t i = 0; i < c.size(); ++i) os << c[i] << (i < 6 ? "," : "");
        os << "\n";
      }
      break;
    }
    case OutputFormat::json: {
      json arr = json::array();
      for (const Row& r : rows) {
        json j = json::object();
        j["genus"] = r.genus;
        j["loewner"] = format_number(r.rec.loewner, p);
        j["gromov_aspherical"] = format_number(r.rec.gromov_aspherical, p);
        j["gromov_genus"] = format_number(r.rec.gromov_genus, p);
        j["buser_sarnak_lower"] = format_number(r.rec.buser_sarnak_lower, p);
        j["paper_asymptotic"] = format_number(r.rec.paper_asymptotic, p);
        if (r.has_best) j["corollary_best"] = format_number(r.best, p);
        arr.push_back(j);
      }
      os << json{{"rows", arr}}.dump(2) << "\n";
      break;
    }
    case OutputFormat::pretty: {
      for (int i = 0; i < 7; ++i) os << std::setw(i == 0 ? 6 : 19) << kCols[i];
      os << "\n";
      for (const Row& r : rows) {
        const auto c = cells(r);
        for (size_t i = 0; i < c.size(); ++i)
          os << std::setw(i == 0 ? 6 : 19) << (c[i].empty() ? "-" : c[i]);
        os << "\n";
      }
      break;
    }
  }
  return os.str();
}

std::string bolza_payload(double rmax, int depth_limit, const OutputSpec& spec) {
  const FuchsianSurface surf = bolza_surface();
  const double sys = fuchsian_systole(surf, 4);
  const EntropyFit fit = orbit_entropy(surf, rmax, depth_limit);
  const double katok = fit.slope * fit.slope;
  const int p = spec.precision;
  std::ostringstream os;
  switch (spec.format) {
    case OutputFormat::csv: {
      os << "R,count\n";
      for (const auto& [r, c] : fit.table.rows)
        os << format_number(r, p) << "," << c << "\n";
      break;
    }
    case OutputFormat::json: {
      json tbl = json::array();
      for (const auto& [r, c] : fit.table.rows)
        tbl.push_back(json{{"R", format_number(r, p)}, {"count", c}});
      json j = json::object();
      j["systole"] = format_number(sys, p);
      j["entropy_slope"] = format_number(fit.slope, p);
      j["katok_ratio"] = format_number(katok, p);
      j["orbit_table"] = tbl;
      os << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::pretty: {
      os << "systole: " << format_number(sys, p) << "\n";
      os << "entropy_slope: " << format_number(fit.slope, p) << "\n";
      os << "katok_ratio: " << format_number(katok, p) << "\n";
      os << "orbit_table:\n";
      for (const auto& [r, c] : fit.table.rows)
        os << "  " << format_number(r, p) << "  " << c << "\n";
      break;
    }
  }
  return os.str();
}

std::string threshold_loewner_payload(const OutputSpec& spec) {
  const ThresholdReport rep = loewner_genus_threshold();
  const int p = spec.precision;
  std::ostringstream os;
  switch (spec.format) {
    case OutputFormat::csv: {
      os << "alpha,objective\n";
      for (const auto& [a, v] : rep.evaluations)
        os << format_number(a, p) << "," << format_number(v, p) << "\n";
      break;
    }
    case OutputFormat::json: {
      json evals = json::array();
      for (const auto& [a, v] : rep.evaluations)
        evals.push_back(json::array({format_number(a, p), format_number(v, p)}));
      json j = json::object();
      j["objective_min"] = format_number(rep.objective_min, p);
      j["argmin_alpha"] = format_number(rep.argmin_alpha, p);
      j["genus_threshold"] = rep.genus_threshold;
      j["evaluations"] = evals;
      os << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::pretty: {
      os << "objective_min: " << format_number(rep.objective_min, p) << "\n";
      os << "argmin_alpha: " << format_number(rep.argmin_alpha, p) << "\n";
      os << "evaluations: " << rep.evaluations.size() << "\n";
      os << "genus_threshold: " << rep.genus_threshold << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"systolic/entropy bounds laboratory"};
  app.require_subcommand(1);

  // ---- bounds ----
  CLI::App* bounds = app.add_subcommand("bounds", "closed-form inequality evaluators");
  bounds->require_subcommand(1);

  CLI::App* btable = bounds->add_subcommand("table", "classical bounds per genus");
  long long gmin = 2, gmax = 20;
  OutOpts btable_out;
  btable->add_option("--gmin", gmin, "first genus")->required();
  btable->add_option("--gmax", gmax, "last genus")->required();
  add_output_options(btable, btable_out);

  CLI::App* bcor = bounds->add_subcommand("corollary", "counting-corollary residual");
  double c_alpha = 0, c_beta = 0, c_sigma = 0;
  long long c_genus = 2;
  OutOpts bcor_out;
  bcor->add_option("--alpha", c_alpha)->required();
  bcor->add_option("--beta", c_beta)->required();
  bcor->add_option("--genus", c_genus)->required();
  bcor->add_option("--sigma", c_sigma)->required();
  add_output_options(bcor, bcor_out);

  // ---- invert ----
  CLI::App* invert = app.add_subcommand("invert", "monotone-equation solvers");
  invert->require_subcommand(1);

  CLI::App* irho = invert->add_subcommand("rholog", "solve rho*log(rho) = delta");
  double i_delta = 0;
  OutOpts irho_out;
  irho->add_option("--delta", i_delta)->required();
  add_output_options(irho, irho_out);

  CLI::App* isig = invert->add_subcommand("sigma", "sigma bound for a fixed pair");
  double s_alpha = 0, s_beta = 0;
  long long s_genus = 2;
  OutOpts isig_out;
  isig->add_option("--alpha", s_alpha)->required();
  isig->add_option("--beta", s_beta)->required();
  isig->add_option("--genus", s_genus)->required();
  add_output_options(isig, isig_out);

  CLI::App* ibest = invert->add_subcommand("best", "sigma bound optimized over pairs");
  long long b_genus = 2;
  OutOpts ibest_out;
  ibest->add_option("--genus", b_genus)->required();
  add_output_options(ibest, ibest_out);

  // ---- threshold ----
  CLI::App* threshold = app.add_subcommand("threshold", "headline numerical results");
  threshold->require_subcommand(1);

  CLI::App* tloe = threshold->add_subcommand("loewner", "genus threshold from the octagon objective");
  OutOpts tloe_out;
  add_output_options(tloe, tloe_out);

  CLI::App* timp = threshold->add_subcommand("improved", "improved-packing fixed point");
  double t_alpha = 1.0 / 30.0;
  OutOpts timp_out;
  timp->add_option("--alpha", t_alpha)->required();
  add_output_options(timp, timp_out);

  CLI::App* tasy = threshold->add_subcommand("asymptotic", "genus threshold for a target constant");
  double t_lambda = 1.0;
  OutOpts tasy_out;
  tasy->add_option("--lambda", t_lambda)->required();
  add_output_options(tasy, tasy_out);

  CLI::App* tcross = threshold->add_subcommand("crossover", "crossover against the classical genus bound");
  OutOpts tcross_out;
  add_output_options(tcross, tcross_out);

  // ---- lab ----
  CLI::App* lab = app.add_subcommand("lab", "computable surfaces");
  lab->require_subcommand(1);

  CLI::App* ltorus = lab->add_subcommand("torus", "flat torus from a lattice basis");
  std::vector<double> basis;
  double l_alpha = 0;
  double l_radius = -1;
  OutOpts ltorus_out;
  ltorus->add_option("--basis", basis, "x1,y1,x2,y2")->delimiter(',')->expected(4)->required();
  ltorus->add_option("--alpha", l_alpha, "packing radius fraction");
  ltorus->add_option("--count-radius", l_radius, "orbit count radius");
  add_output_options(ltorus, ltorus_out);

  CLI::App* lbolza = lab->add_subcommand("bolza", "genus-2 octagon surface");
  double z_rmax = 7.0;
  int z_depth = 12;
  OutOpts lbolza_out;
  lbolza->add_option("--rmax", z_rmax)->required();
  lbolza->add_option("--depth-limit", z_depth);
  add_output_options(lbolza, lbolza_out);

  // ---- verify ----
  CLI::App* verify = app.add_subcommand("verify", "invariant suite");
  verify->require_subcommand(1);
  CLI::App* vall = verify->add_subcommand("all", "run every check");
  bool v_quick = false;
  vall->add_flag("--quick", v_quick, "reduced depths and sample counts");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (btable->parsed()) {
      const OutputSpec spec = btable_out.spec();
      return emit(spec, bounds_table_payload(gmin, gmax, spec), out, err);
    }
    if (bcor->parsed()) {
      const OutputSpec spec = bcor_out.spec();
      const double res = corollary_residual(AdmissiblePair(c_alpha, c_beta),
                                            c_genus, SystolicRatio(c_sigma));
      KV kv;
      kv.add_num("alpha", c_alpha, spec.precision);
      kv.add_num("beta", c_beta, spec.precision);
      kv.add_int("genus", c_genus);
      kv.add_num("sigma", c_sigma, spec.precision);
      kv.add_num("residual", res, spec.precision);
      return emit(spec, render_kv(kv, spec), out, err);
    }
    if (irho->parsed()) {
      const OutputSpec spec = irho_out.spec();
      KV kv;
      kv.add_num("delta", i_delta, spec.precision);
      kv.add_num("rho", invert_rho_log_rho(i_delta), spec.precision);
      return emit(spec, render_kv(kv, spec), out, err);
    }
    if (isig->parsed()) {
      const OutputSpec spec = isig_out.spec();
      KV kv;
      kv.add_num("alpha", s_alpha, spec.precision);
      kv.add_num("beta", s_beta, spec.precision);
      kv.add_int("genus", s_genus);
      kv.add_num("sigma_upper",
                 sigma_upper(AdmissiblePair(s_alpha, s_beta), s_genus),
                 spec.precision);
      return emit(spec, render_kv(kv, spec), out, err);
    }
    if (ibest->parsed()) {
      const OutputSpec spec = ibest_out.spec();
      const BestSigma bs = best_sigma_upper(b_genus);
      KV kv;
      kv.add_int("genus", b_genus);
      kv.add_num("sigma_upper", bs.sigma, spec.precision);
      kv.add_num("alpha", bs.pair.alpha, spec.precision);
      kv.add_num("beta", bs.pair.beta, spec.precision);
      return emit(spec, render_kv(kv, spec), out, err);
    }
    if (tloe->parsed()) {
      const OutputSpec spec = tloe_out.spec();
      return emit(spec, threshold_loewner_payload(spec), out, err);
    }
    if (timp->parsed()) {
      const OutputSpec spec = timp_out.spec();
      const PackingFixedPoint fp = improved_packing_fixed_point(t_alpha);
      KV kv;
      kv.add_num("alpha", fp.alpha, spec.precision);
      kv.add_int("ball_count", fp.ball_count);
      kv.add_num("coefficient", fp.coefficient, spec.precision);
      kv.add_num("objective", fp.objective, spec.precision);
      return emit(spec, render_kv(kv, spec), out, err);
    }
    if (tasy->parsed()) {
      const OutputSpec spec = tasy_out.spec();
      KV kv;
      kv.add_num("lambda", t_lambda, spec.precision);
      kv.add_num("genus_threshold", asymptotic_genus(t_lambda), spec.precision);
      return emit(spec, render_kv(kv, spec), out, err);
    }
    if (tcross->parsed()) {
      const OutputSpec spec = tcross_out.spec();
      const long long g = crossover_genus();
      KV kv;
      kv.add_int("genus", g);
      kv.add_num("corollary_bound", best_sigma_upper(g).sigma, spec.precision);
      kv.add_num("gromov_bound", classical_bounds(g).gromov_genus, spec.precision);
      return emit(spec, render_kv(kv, spec), out, err);
    }
    if (ltorus->parsed()) {
      const OutputSpec spec = ltorus_out.spec();
      const Lattice2 lat{{basis[0], basis[1]}, {basis[2], basis[3]}};
      const FlatInvariants inv = flat_invariants(lat);
      KV kv;
      kv.add_num("systole", inv.sys, spec.precision);
      kv.add_num("area", inv.area, spec.precision);
      kv.add_num("ratio", inv.ratio, spec.precision);
      if (ltorus->count("--alpha") > 0) {
        const FlatPacking p = maximal_packing_flat(lat, l_alpha);
        kv.add_int("packing_count", p.count);
        kv.add_num("packing_bound", p.bound, spec.precision);
      }
      if (ltorus->count("--count-radius") > 0)
        kv.add_int("orbit_count", flat_orbit_count(lat, l_radius));
      return emit(spec, render_kv(kv, spec), out, err);
    }
    if (lbolza->parsed()) {
      const OutputSpec spec = lbolza_out.spec();
      return emit(spec, bolza_payload(z_rmax, z_depth, spec), out, err);
    }
    if (vall->parsed()) {
      return verify_all(v_quick, out) == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace sysent
