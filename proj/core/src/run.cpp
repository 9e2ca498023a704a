#include "adsorb/run.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "adsorb/analytic.hpp"
#include "adsorb/asymptote.hpp"
#include "adsorb/csv.hpp"
#include "adsorb/errors.hpp"
#include "adsorb/version.hpp"

namespace adsorb {

namespace {

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::vector<std::string> provenance_common(const RunConfig& cfg,
                                           const DimensionlessParams& dp) {
  std::vector<std::string> p;
  p.push_back(std::string("adsorb-frac ") + kVersion);
  p.push_back(std::string("mode=") + run_mode_name(cfg.mode));
  p.push_back("isotherm=" + dp.iso.name() +
              " beta_tilde=" + format_number(dp.iso.beta_tilde()));
  p.push_back("ba=" + format_number(dp.ba) + " f_e=" + format_number(dp.f_e) +
              " g_e=" + format_number(dp.g_e) +
              " gamma_star_inf=" + format_number(dp.gamma_star_inf) +
              " ba_star=" + format_number(dp.ba_star));
  return p;
}

void append_mesh_provenance(std::vector<std::string>* p, const Mesh& mesh,
                            bool in_tilde) {
  std::string regions;
  for (const MeshRegion& r : mesh.regions()) {
    if (!regions.empty()) regions += ",";
    regions += format_number(r.end) + ":" + format_number(r.step);
  }
  p->push_back("mesh_hash=" + hex64(mesh.hash()) +
               " mesh_units=" + (in_tilde ? "t_tilde" : "t_star") +
               " regions=" + regions);
}

void append_trajectory_provenance(std::vector<std::string>* p,
                                  const Trajectory& traj) {
  p->push_back(std::string("formulation=") + formulation_name(traj.formulation) +
               " clamp_count=" + std::to_string(traj.clamp_count));
}

Trajectory solve_from_config(const RunConfig& cfg, const DimensionlessParams& dp,
                             const Mesh& mesh) {
  SolveOptions opts;
  opts.corrector_iterations = cfg.corrector_iterations;
  Trajectory traj = solve(dp, mesh, cfg.formulation, opts);
  if (cfg.strict && traj.clamp_count > 0) {
    throw AccuracyError("strict mode: " + std::to_string(traj.clamp_count) +
                            " coverage clamps during stepping",
                        traj.gamma_star.back(), 0.0);
  }
  return traj;
}

std::vector<CsvColumn> trajectory_columns(const RunConfig& cfg,
                                          const Trajectory& traj) {
  std::vector<CsvColumn> cols;
  cols.push_back({"t_star", traj.t_star});
  cols.push_back({"t_tilde", traj.t_tilde});
  cols.push_back({"gamma_star", traj.gamma_star});
  cols.push_back({"coverage", traj.coverage});
  cols.push_back({"pressure", traj.pressure});
  if (cfg.subsurface) cols.push_back({"c_s", subsurface_ratio(traj)});
  if (cfg.has_physical) {
    const DimensionalSeries dim = redimensionalize(traj, cfg.phys);
    cols.push_back({"t_phys", dim.t});
    cols.push_back({"gamma_phys", dim.gamma});
    cols.push_back({"sigma_phys", dim.sigma});
    if (cfg.subsurface) {
      cols.push_back({"c_s_phys", subsurface_concentration(traj, cfg.phys)});
    }
  }
  return cols;
}

std::vector<double> relative_error(const std::vector<double>& solver,
                                   const std::vector<double>& ref) {
  std::vector<double> e(solver.size());
  for (std::size_t i = 0; i < solver.size(); ++i) {
    e[i] = std::abs(solver[i] - ref[i]) / std::max(std::abs(ref[i]), 1e-12);
  }
  return e;
}

void run_solve(const RunConfig& cfg, std::ostream& out) {
  const DimensionlessParams dp = cfg.dimensionless();
  const Mesh mesh = cfg.mesh(dp.ba == 0.0);
  const Trajectory traj = solve_from_config(cfg, dp, mesh);
  std::vector<std::string> prov = provenance_common(cfg, dp);
  append_mesh_provenance(&prov, mesh, traj.mesh_in_tilde);
  append_trajectory_provenance(&prov, traj);
  write_csv_file(cfg.out_path, prov, trajectory_columns(cfg, traj));
  out << "wrote " << cfg.out_path << " (" << traj.size() << " rows)\n";
}

void run_compare(const RunConfig& cfg, std::ostream& out) {
  const DimensionlessParams dp = cfg.dimensionless();
  const Mesh mesh = cfg.mesh(dp.ba == 0.0);
  const Trajectory traj = solve_from_config(cfg, dp, mesh);

  // one Henry-core grid per run, shared by every asymptote column
  const std::vector<double> gh = henry_mixed_grid(traj.t_tilde, dp.ba);
  const std::size_t n = traj.size();
  std::vector<double> first(n), second(n);
  const double pref = dp.gamma_star_inf * dp.f_e;
  for (std::size_t i = 0; i < n; ++i) {
    if (dp.iso.phi_is_unity()) {
      first[i] = first_order(traj.t_tilde[i], dp.ba, pref);
      second[i] = second_order_volmer_from_h(gh[i], pref);
    } else {
      first[i] = first_order_langmuir(traj.t_tilde[i], dp.ba, dp.f_e,
                                      dp.gamma_star_inf);
      second[i] = second_order_langmuir_from_h(gh[i], dp.f_e, dp.gamma_star_inf);
    }
  }
  std::vector<CsvColumn> cols = trajectory_columns(cfg, traj);
  cols.push_back({"henry_ref", gh});
  cols.push_back({"asym_first", first});
  cols.push_back({"asym_second", second});
  cols.push_back({"err_henry_ref", relative_error(traj.gamma_star, gh)});
  cols.push_back({"err_asym_first", relative_error(traj.gamma_star, first)});
  cols.push_back({"err_asym_second", relative_error(traj.gamma_star, second)});

  std::vector<std::string> prov = provenance_common(cfg, dp);
  append_mesh_provenance(&prov, mesh, traj.mesh_in_tilde);
  append_trajectory_provenance(&prov, traj);
  write_csv_file(cfg.out_path, prov, cols);
  out << "wrote " << cfg.out_path << " (" << n << " rows)\n";
}

void run_asymptote(const RunConfig& cfg, std::ostream& out) {
  const DimensionlessParams dp = cfg.dimensionless();
  const Mesh mesh = cfg.mesh(dp.ba == 0.0);
  const bool in_tilde = dp.ba == 0.0;
  const std::vector<double>& nodes = mesh.nodes();
  const std::size_t n = nodes.size();
  std::vector<double> t_tilde(n), t_star(n);
  for (std::size_t i = 0; i < n; ++i) {
    t_tilde[i] = in_tilde ? nodes[i]
                          : time_to_tilde(dp, TimeScale::t_star, nodes[i]);
    t_star[i] = in_tilde ? std::nan("") : nodes[i];
  }
  const std::vector<double> gh = henry_mixed_grid(t_tilde, dp.ba);
  std::vector<double> first(n), second(n), cov(n), press(n), univ(n);
  const double pref = dp.gamma_star_inf * dp.f_e;
  for (std::size_t i = 0; i < n; ++i) {
    if (dp.iso.phi_is_unity()) {
      first[i] = first_order(t_tilde[i], dp.ba, pref);
      second[i] = second_order_volmer_from_h(gh[i], pref);
    } else {
      first[i] = first_order_langmuir(t_tilde[i], dp.ba, dp.f_e,
                                      dp.gamma_star_inf);
      second[i] = second_order_langmuir_from_h(gh[i], dp.f_e, dp.gamma_star_inf);
    }
    cov[i] = coverage_asymptote_from_h(dp.iso.kind(), gh[i], dp.f_e);
    press[i] = pressure_asymptote_from_h(dp.iso, gh[i], dp.f_e);
    univ[i] = dp.f_e * gh[i];
  }
  std::vector<CsvColumn> cols;
  cols.push_back({"t_star", t_star});
  cols.push_back({"t_tilde", t_tilde});
  cols.push_back({"henry_ref", gh});
  cols.push_back({"asym_first", first});
  cols.push_back({"asym_second", second});
  cols.push_back({"coverage_asym", cov});
  cols.push_back({"pressure_asym", press});
  cols.push_back({"pressure_universal", univ});
  std::vector<std::string> prov = provenance_common(cfg, dp);
  append_mesh_provenance(&prov, mesh, in_tilde);
  write_csv_file(cfg.out_path, prov, cols);
  out << "wrote " << cfg.out_path << " (" << n << " rows)\n";
}

void run_henry(const RunConfig& cfg, std::ostream& out) {
  double ba = cfg.ba;
  if (cfg.has_physical) ba = cfg.dimensionless().ba;
  if (!(ba >= 0.0)) throw ConfigError("henry mode needs params.ba");
  const int points = cfg.grid_points;
  std::vector<double> t(points), mixed(points), dc(points), barrier(points);
  const double lmin = std::log(cfg.grid_min), lmax = std::log(cfg.grid_max);
  for (int i = 0; i < points; ++i) {
    t[i] = std::exp(lmin + (lmax - lmin) * i / (points - 1));
    mixed[i] = henry_mixed(t[i], ba);
    dc[i] = henry_dc(t[i]);
    barrier[i] = ba > 0.0 ? barrier_control(t[i] / ba) : std::nan("");
  }
  std::vector<std::string> prov;
  prov.push_back(std::string("adsorb-frac ") + kVersion);
  prov.push_back("mode=henry ba=" + format_number(ba));
  prov.push_back("grid=" + format_number(cfg.grid_min) + ".." +
                 format_number(cfg.grid_max) + " points=" +
                 std::to_string(points));
  write_csv_file(cfg.out_path, prov,
                 {{"t_tilde", t},
                  {"gamma_star_mixed", mixed},
                  {"gamma_star_dc", dc},
                  {"gamma_star_barrier", barrier}});
  out << "wrote " << cfg.out_path << " (" << points << " rows)\n";
}

void run_classify(const RunConfig& cfg, std::ostream& out) {
  const DimensionlessParams dp = cfg.dimensionless();
  const Regime r = classify_regime(dp, cfg.mixed_lo, cfg.mixed_hi);
  out << "regime=" << regime_name(r) << "\n";
  out << "ba_star=" << format_number(dp.ba_star) << "\n";
  out << "ba=" << format_number(dp.ba) << " f_e=" << format_number(dp.f_e)
      << " g_e=" << format_number(dp.g_e) << "\n";
  if (cfg.has_physical) {
    const RegimeBounds rb = regime_bounds(cfg.phys, cfg.classify_er);
    const CharacteristicTimes ct = characteristic_times(dp, cfg.phys);
    out << "T_BC=" << format_number(rb.T_BC)
        << " T_DC=" << format_number(rb.T_DC)
        << " er=" << format_number(cfg.classify_er) << "\n";
    out << "T_d=" << format_number(ct.T_d) << " T_a=" << format_number(ct.T_a)
        << " ratio=" << format_number(ct.ratio) << "\n";
  }
}

std::string sweep_out_path(const std::string& base, std::size_t index) {
  const std::size_t dot = base.rfind('.');
  char suffix[16];
  std::snprintf(suffix, sizeof suffix, "_%03zu", index);
  if (dot == std::string::npos || base.find('/', dot) != std::string::npos) {
    return base + suffix + ".csv";
  }
  return base.substr(0, dot) + suffix + base.substr(dot);
}

void run_sweep(const RunConfig& cfg, std::ostream& out) {
  unsigned workers = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                     : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (const char* cap = std::getenv("ADSORB_FRAC_THREADS")) {
    const unsigned env_cap = static_cast<unsigned>(std::strtoul(cap, nullptr, 10));
    if (env_cap > 0) workers = std::min(workers, env_cap);
  }
  const std::size_t n = cfg.sweep_values.size();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));

  std::vector<RunConfig> tasks(n, cfg);
  std::vector<std::exception_ptr> failures(n);
  for (std::size_t i = 0; i < n; ++i) {
    tasks[i].mode = RunMode::solve;
    config_set(tasks[i], cfg.sweep_param, format_number(cfg.sweep_values[i]));
    tasks[i].out_path = sweep_out_path(cfg.out_path, i);
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    std::ostringstream sink;  // per-run one-line summaries are reprinted below
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        tasks[i].validate();
        run_solve(tasks[i], sink);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  for (std::size_t i = 0; i < n; ++i) {
    if (failures[i]) std::rethrow_exception(failures[i]);
    out << "wrote " << tasks[i].out_path << " (" << cfg.sweep_param << "="
        << format_number(cfg.sweep_values[i]) << ")\n";
  }
}

}  // namespace

void run(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  switch (cfg.mode) {
    case RunMode::solve: run_solve(cfg, out); return;
    case RunMode::compare: run_compare(cfg, out); return;
    case RunMode::asymptote: run_asymptote(cfg, out); return;
    case RunMode::henry: run_henry(cfg, out); return;
    case RunMode::classify: run_classify(cfg, out); return;
    case RunMode::sweep: run_sweep(cfg, out); return;
  }
}

namespace {

const char* kUsage =
    "usage: adsorb-frac <solve|henry|asymptote|compare|sweep|classify>\n"
    "                   [--config <file>] [--set section.key=value]...\n"
    "                   [--out <path>] [--strict]\n";

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  try {
    if (argc < 2) {
      err << kUsage;
      return 2;
    }
    const std::string first = argv[1];
    if (first == "--help" || first == "-h") {
      out << kUsage;
      return 0;
    }
    if (first == "--version") {
      out << "adsorb-frac " << kVersion << "\n";
      return 0;
    }
    const RunMode mode = parse_run_mode(first);
    RunConfig cfg;
    bool have_config = false;
    std::optional<std::string> out_override;
    std::vector<std::pair<std::string, std::string>> overrides;
    bool strict = false;
    for (int i = 2; i < argc; ++i) {
      const std::string arg = argv[i];
      auto need_value = [&](const char* flag) -> std::string {
        if (i + 1 >= argc) throw ConfigError(std::string(flag) + " needs a value");
        return argv[++i];
      };
      if (arg == "--config") {
        cfg = parse_config_file(need_value("--config"));
        have_config = true;
      } else if (arg == "--set") {
        const std::string kv = need_value("--set");
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos) throw ConfigError("--set expects key=value");
        overrides.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
      } else if (arg == "--out") {
        out_override = need_value("--out");
      } else if (arg == "--strict") {
        strict = true;
      } else {
        throw ConfigError("unknown argument '" + arg + "'");
      }
    }
    (void)have_config;
    for (const auto& [k, v] : overrides) config_set(cfg, k, v);
    cfg.mode = mode;  // the positional mode wins
    if (out_override) cfg.out_path = *out_override;
    if (strict) cfg.strict = true;
    run(cfg, out);
    return 0;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ModelError& e) {
    err << "model error: " << e.what() << "\n";
    return 3;
  } catch (const AccuracyError& e) {
    err << "accuracy error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace adsorb
