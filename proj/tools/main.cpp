#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "hyperball/asymptotics.hpp"
#include "hyperball/geometry.hpp"
#include "hyperball/montecarlo.hpp"
#include "hyperball/table.hpp"

using namespace hyperball;

namespace {

struct CommonOpts {
  std::string format{"csv"};
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& common) {
  cmd->add_option("--format", common.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", common.out, "output path (default: stdout)");
}

void emit(const Table& table, const CommonOpts& common) {
  const std::string text =
      common.format == "json" ? table.to_json() : table.to_csv();
  if (common.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream file(common.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output path: " + common.out);
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  file.flush();
  if (!file) throw std::runtime_error("failed writing output: " + common.out);
}

// exp(log_v) as a cell, with sentinels when the linear value leaves the
// normal double range.
Table::Cell volume_cell(double log_v) {
  const double v = std::exp(log_v);
  if (v < std::numeric_limits<double>::min()) return std::string("0 (underflow)");
  if (!std::isfinite(v)) return std::string("inf (overflow)");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperball: volumes and growth ratios of spheres circumscribing unit hypercubes"};
  app.require_subcommand(1);

  const auto greater_than_two = CLI::Validator(
      [](std::string& s) {
        double v = 0.0;
        try {
          v = std::stod(s);
        } catch (...) {
          return std::string("value is not a number");
        }
        return v > 2.0 ? std::string{} : std::string("value must be > 2");
      },
      "FLOAT>2");

  // volume ------------------------------------------------------------
  std::int64_t vol_n = 0;
  double vol_radius = 0.0;
  bool vol_circ = false;
  bool vol_log = false;
  CommonOpts vol_common;
  CLI::App* volume = app.add_subcommand("volume", "ball volume at one dimension");
  volume->add_option("--dim", vol_n, "dimension n")->required();
  CLI::Option* vol_radius_opt = volume->add_option("--radius", vol_radius, "sphere radius");
  CLI::Option* vol_circ_opt =
      volume->add_flag("--circumscribe", vol_circ,
                       "use the radius circumscribing the unit cube, sqrt(n)/2");
  vol_radius_opt->excludes(vol_circ_opt);
  volume->add_flag("--log", vol_log, "emit only the log-space volume");
  add_common(volume, vol_common);
  volume->callback([&] {
    if (vol_radius_opt->count() == 0 && !vol_circ)
      throw CLI::ValidationError("volume: give exactly one of --radius or --circumscribe");
    const Dimension n(vol_n);
    const Radius r = vol_circ ? circumscribed_radius(n) : Radius(vol_radius);
    const LogVolume lv = log_ball_volume(n, r);
    if (vol_log) {
      Table table({"n", "r", "log_volume"});
      table.add_row({vol_n, r.value(), lv.log()});
      emit(table, vol_common);
    } else {
      Table table({"n", "r", "log_volume", "volume"});
      table.add_row({vol_n, r.value(), lv.log(), volume_cell(lv.log())});
      emit(table, vol_common);
    }
  });

  // ratio -------------------------------------------------------------
  std::int64_t ratio_n = 0;
  bool ratio_formula = false;
  CommonOpts ratio_common;
  CLI::App* ratio = app.add_subcommand("ratio", "growth ratio of consecutive circumscribed volumes");
  ratio->add_option("--dim", ratio_n, "dimension n")->required();
  ratio->add_flag("--formula", ratio_formula,
                  "evaluate the literal closed-form expression, which indexes as V_n / V_{n-1}");
  add_common(ratio, ratio_common);
  ratio->callback([&] {
    const double g = ratio_formula
                         ? growth_ratio_formula(Dimension(ratio_n)).value()
                         : growth_ratio(Dimension(ratio_n)).value();
    Table table({"n", "g"});
    table.add_row({ratio_n, g});
    emit(table, ratio_common);
  });

  // figure ------------------------------------------------------------
  double fig_min = 3.0;
  double fig_max = 25.0;
  std::int64_t fig_points = 500;
  CommonOpts fig_common;
  CLI::App* figure = app.add_subcommand("figure", "growth-ratio curve over a range of real dimensions");
  figure->add_option("--min", fig_min, "lower end of the dimension range")
      ->check(greater_than_two)
      ->capture_default_str();
  figure->add_option("--max", fig_max, "upper end of the dimension range")
      ->check(greater_than_two)
      ->capture_default_str();
  figure->add_option("--points", fig_points, "number of evenly spaced samples")
      ->check(CLI::Range(std::int64_t{2}, std::numeric_limits<std::int64_t>::max()))
      ->capture_default_str();
  add_common(figure, fig_common);
  figure->callback([&] {
    if (!(fig_max > fig_min))
      throw CLI::ValidationError("figure: --max must be greater than --min");
    Table table({"nu", "g"});
    for (std::int64_t i = 0; i < fig_points; ++i) {
      const double s = static_cast<double>(i) / static_cast<double>(fig_points - 1);
      const double nu = (i == fig_points - 1) ? fig_max : fig_min + s * (fig_max - fig_min);
      table.add_row({nu, continuous_ratio(RealDimension(nu)).value()});
    }
    emit(table, fig_common);
  });

  // converge ----------------------------------------------------------
  std::vector<std::int64_t> conv_dims;
  CommonOpts conv_common;
  CLI::App* converge = app.add_subcommand("converge", "approach of the growth ratio to its limit");
  converge->add_option("--dims", conv_dims, "comma-separated dimensions, at least 3 distinct values >= 3")
      ->required()
      ->delimiter(',');
  add_common(converge, conv_common);
  converge->callback([&] {
    std::vector<Dimension> dims;
    dims.reserve(conv_dims.size());
    for (std::int64_t v : conv_dims) dims.emplace_back(v);
    const ConvergenceReport report = convergence_scan(dims);
    Table table({"n", "g", "abs_error"});
    for (const ConvergenceRow& row : report.rows)
      table.add_row({row.n, row.g, row.abs_error});
    table.add_footer("fitted_order", report.fitted_order);
    table.add_footer("fitted_constant", report.fitted_constant);
    emit(table, conv_common);
  });

  // peak --------------------------------------------------------------
  double peak_r = 0.0;
  std::int64_t peak_nmax = 1000;
  CommonOpts peak_common;
  CLI::App* peak = app.add_subcommand("peak", "dimension maximizing the ball volume at fixed radius");
  peak->add_option("--radius", peak_r, "sphere radius")->required();
  peak->add_option("--n-max", peak_nmax, "top of the scanned dimension range")
      ->capture_default_str();
  add_common(peak, peak_common);
  peak->callback([&] {
    const PeakResult result = peak_dimension(Radius(peak_r), Dimension(peak_nmax));
    Table table({"r", "peak_n", "log_v_peak", "truncated"});
    table.add_row({result.r.value(), result.peak_n, result.log_v_peak,
                   static_cast<std::int64_t>(result.truncated ? 1 : 0)});
    emit(table, peak_common);
  });

  // mc ----------------------------------------------------------------
  std::int64_t mc_n = 0;
  double mc_radius = 0.0;
  bool mc_circ = false;
  std::int64_t mc_samples = 1000000;
  std::uint64_t mc_seed = 0;
  bool mc_vertex = false;
  bool mc_contain = false;
  CommonOpts mc_common;
  CLI::App* mc = app.add_subcommand("mc", "Monte Carlo cross-checks of the exact formulas");
  mc->add_option("--dim", mc_n, "dimension n")->required();
  CLI::Option* mc_radius_opt = mc->add_option("--radius", mc_radius, "sphere radius");
  CLI::Option* mc_circ_opt =
      mc->add_flag("--circumscribe", mc_circ, "use the circumscribed radius sqrt(n)/2");
  CLI::Option* mc_samples_opt =
      mc->add_option("--samples", mc_samples, "sample count, >= 1000")->capture_default_str();
  CLI::Option* mc_seed_opt = mc->add_option("--seed", mc_seed, "stream seed")->capture_default_str();
  CLI::Option* mc_vertex_opt =
      mc->add_flag("--vertex-check", mc_vertex,
                   "max deviation of cube vertices from the circumscribed sphere");
  CLI::Option* mc_contain_opt =
      mc->add_flag("--containment", mc_contain,
                   "fraction of cube samples inside the circumscribed ball");
  mc_radius_opt->excludes(mc_circ_opt);
  mc_vertex_opt->excludes(mc_contain_opt, mc_radius_opt, mc_circ_opt, mc_samples_opt, mc_seed_opt);
  mc_contain_opt->excludes(mc_radius_opt, mc_circ_opt);
  add_common(mc, mc_common);
  mc->callback([&] {
    const Dimension n(mc_n);
    if (mc_vertex) {
      Table table({"n", "max_abs_deviation"});
      table.add_row({mc_n, vertex_on_sphere_check(n)});
      emit(table, mc_common);
      return;
    }
    if (mc_contain) {
      Table table({"n", "samples", "seed", "inside_fraction"});
      table.add_row({mc_n, mc_samples, static_cast<std::int64_t>(mc_seed),
                     cube_inside_ball_check(n, mc_samples, mc_seed)});
      emit(table, mc_common);
      return;
    }
    if (mc_radius_opt->count() == 0 && !mc_circ)
      throw CLI::ValidationError("mc: give exactly one of --radius or --circumscribe");
    const Radius r = mc_circ ? circumscribed_radius(n) : Radius(mc_radius);
    const McEstimate est = mc_ball_volume(n, r, mc_samples, mc_seed);
    Table table({"n", "r", "samples", "seed", "hits", "volume_estimate", "std_error"});
    table.add_row({mc_n, r.value(), est.samples, static_cast<std::int64_t>(est.seed),
                   est.hits, est.volume_estimate, est.std_error});
    emit(table, mc_common);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
