// Command-line front end. Exit codes: 0 success, 1 validation or format
// error, 2 numerical blow-up.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "ldm/diagnostics.hpp"
#include "ldm/error.hpp"
#include "ldm/experiments.hpp"
#include "ldm/filtering.hpp"
#include "ldm/io/artifacts.hpp"
#include "ldm/io/config.hpp"
#include "ldm/io/csv.hpp"
#include "ldm/io/snapshot.hpp"
#include "ldm/solver.hpp"

namespace fs = std::filesystem;
using namespace ldm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitBlowUp = 2;

struct ConfigArgs {
  std::string path;
  std::vector<std::string> overrides;
  std::string out;
};

void add_config_options(CLI::App* cmd, ConfigArgs& a) {
  cmd->add_option("-c,--config", a.path, "run configuration file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--set", a.overrides, "override as section.key=value (repeatable)");
  cmd->add_option("-o,--out", a.out, "output directory (overrides output.dir)");
}

io::RunConfig load_config(const ConfigArgs& a) {
  io::ConfigDocument doc = io::ConfigDocument::load(a.path);
  for (const auto& s : a.overrides) doc.set(s);
  if (!a.out.empty()) doc.set("output.dir", a.out);
  return io::to_run_config(doc);
}

std::string command_line(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) s += (i ? " " : "") + std::string(argv[i]);
  return s;
}

io::SnapshotMeta meta_of(const SolverConfig& c) {
  return {c.model.is_model() ? c.filter.delta : 0.0, std::uint32_t(c.model.order),
          c.model.is_model() ? 1u : 0u};
}

std::string snapshot_name(long step) { return fmt::format("snap_{:08d}.ldsnap", step); }

int cmd_run(const ConfigArgs& a, const std::string& cmdline) {
  const io::RunConfig rc = load_config(a);
  const SolverConfig& c = rc.solver;
  io::ArtifactDir dir(rc.output_dir);
  const std::string cfg_text = io::effective_config_text(rc);
  dir.write_text("effective.cfg", cfg_text);

  const long every = c.snapshot_every;
  const long steps = c.step_count();
  const RunResult r = run(c, [&](long step, const SpectralField& w) {
    if (!rc.write_snapshots) return;
    if (step == 0 || step == steps || (every > 0 && step % every == 0)) {
      io::write_snapshot(dir.path(snapshot_name(step)).string(), w, meta_of(c));
      dir.record(snapshot_name(step));
    }
  });

  if (c.dt > r.cfl_dt_max && r.cfl_dt_max > 0.0) {
    std::cerr << fmt::format("warning: dt = {} exceeds the CFL advisory dx/max|u| = {:.4g}\n", c.dt, r.cfl_dt_max);
  }
  if (rc.write_csv) {
    io::write_csv(dir.path("diag.csv").string(), io::diag_table(r.diagnostics));
    dir.record("diag.csv");
  }
  dir.finish(cfg_text, cmdline);

  const DiagRecord& last = r.diagnostics.back();
  std::cout << fmt::format("{}: n={} steps={} t={:.6g} energy={:.10e} balance_residual={:.3e}\n", c.model.name(),
                           c.grid.n, r.steps_taken, last.t, last.energy, last.balance_residual);
  if (r.blowup) {
    std::cerr << "error: " << r.blowup->what() << "\n";
    return kExitBlowUp;
  }
  return kExitOk;
}

int write_report(const StudyReport& rep, const std::string& out, const std::string& cfg_text,
                 const std::string& cmdline) {
  std::cout << summary_text(rep);
  if (!out.empty()) {
    io::ArtifactDir dir(out);
    if (!cfg_text.empty()) dir.write_text("effective.cfg", cfg_text);
    std::ostringstream csv;
    io::write_csv(csv, io::study_table(rep));
    dir.write_text(rep.kind + ".csv", csv.str());
    dir.write_text("summary.txt", summary_text(rep));
    dir.finish(cfg_text, cmdline);
  }
  return kExitOk;
}

Trajectory load_trajectory(const std::string& path, int expected_n) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(path)) {
    if (e.path().extension() == ".ldsnap") files.push_back(e.path());
  }
  if (files.empty()) throw ValidationError("no snapshots (*.ldsnap) in " + path);
  std::sort(files.begin(), files.end());
  Trajectory t;
  for (const auto& f : files) {
    io::Snapshot s = io::read_snapshot(f.string(), expected_n);
    expected_n = s.field.n();
    t.snapshots.push_back({s.field.time(), std::move(s.field)});
  }
  return t;
}

SpectralField study_field(const std::string& kind, int n, std::uint64_t seed) {
  const Grid g = Grid::make(n);
  if (kind == "taylor_green") return taylor_green(g);
  if (kind == "single_mode") return single_mode(g, {1, 0, 0});
  if (kind == "random") return random_solenoidal(g, -5.0 / 3.0, seed);
  throw ValidationError("--field must be taylor_green, single_mode or random");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leray-deconvolution model runs and studies"};
  app.require_subcommand(1);
  const std::string cmdline = command_line(argc, argv);

  ConfigArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "integrate one configuration");
  add_config_options(run_cmd, run_args);

  double tr_delta = 1.0, tr_kmax = 10.0;
  int tr_points = 201;
  std::vector<int> tr_orders{0, 1, 2};
  std::string tr_out;
  auto* transfer_cmd = app.add_subcommand("transfer", "tabulate G, D_N and H_N against k");
  transfer_cmd->add_option("--delta", tr_delta, "filter width")->check(CLI::PositiveNumber);
  transfer_cmd->add_option("--orders", tr_orders, "deconvolution orders")->delimiter(',');
  transfer_cmd->add_option("--kmax", tr_kmax, "largest wavenumber")->check(CLI::PositiveNumber);
  transfer_cmd->add_option("--points", tr_points, "samples on [0, kmax]")->check(CLI::Range(2, 1000000));
  transfer_cmd->add_option("-o,--out", tr_out, "output directory (default: CSV on stdout)");

  ConfigArgs sd_args;
  int sd_order = 0;
  std::vector<double> sd_deltas{0.4, 0.2, 0.1};
  double sd_tol = 0.2;
  auto* sd_cmd = app.add_subcommand("sweep-delta", "model-vs-NSE error rate in delta");
  add_config_options(sd_cmd, sd_args);
  sd_cmd->add_option("--order", sd_order, "deconvolution order N");
  sd_cmd->add_option("--deltas", sd_deltas, "strictly decreasing deltas (0 = NSE pass-through)")->delimiter(',');
  sd_cmd->add_option("--tol", sd_tol, "slope tolerance");

  ConfigArgs sn_args;
  double sn_delta = 0.5;
  std::vector<int> sn_orders{0, 1, 2, 4, 8};
  auto* sn_cmd = app.add_subcommand("sweep-n", "model-vs-NSE error across N at fixed delta");
  add_config_options(sn_cmd, sn_args);
  sn_cmd->add_option("--delta", sn_delta, "filter width")->check(CLI::PositiveNumber);
  sn_cmd->add_option("--orders", sn_orders, "deconvolution orders")->delimiter(',');

  std::vector<int> co_orders{0, 1, 2, 4, 8, 16, 32, 50};
  std::vector<double> co_deltas{1.0, 0.5, 0.25};
  std::string co_out;
  auto* cutoff_cmd = app.add_subcommand("cutoff", "cutoff frequency table");
  cutoff_cmd->add_option("--orders", co_orders, "deconvolution orders")->delimiter(',');
  cutoff_cmd->add_option("--deltas", co_deltas, "filter widths")->delimiter(',');
  cutoff_cmd->add_option("-o,--out", co_out, "output directory");

  std::string cs_field = "taylor_green", cs_out;
  int cs_n = 32;
  std::uint64_t cs_seed = 1;
  std::vector<double> cs_deltas{0.2, 0.1, 0.05, 0.025};
  std::vector<int> cs_orders{0, 1};
  auto* cons_cmd = app.add_subcommand("consistency", "integral |tau_N| against the analytic bound");
  cons_cmd->add_option("--field", cs_field, "taylor_green, single_mode or random");
  cons_cmd->add_option("--n", cs_n, "grid size");
  cons_cmd->add_option("--seed", cs_seed, "seed for --field random");
  cons_cmd->add_option("--deltas", cs_deltas, "strictly decreasing deltas")->delimiter(',');
  cons_cmd->add_option("--orders", cs_orders, "deconvolution orders")->delimiter(',');
  cons_cmd->add_option("-o,--out", cs_out, "output directory");

  std::string dr_field = "single_mode", dr_out;
  int dr_n = 16;
  std::vector<double> dr_deltas{0.2, 0.1, 0.05, 0.025};
  std::vector<int> dr_orders{0, 1, 2};
  auto* dr_cmd = app.add_subcommand("deconv-rate", "||phi - D_N G phi|| rate in delta");
  dr_cmd->add_option("--field", dr_field, "taylor_green, single_mode or random");
  dr_cmd->add_option("--n", dr_n, "grid size");
  dr_cmd->add_option("--deltas", dr_deltas, "strictly decreasing deltas")->delimiter(',');
  dr_cmd->add_option("--orders", dr_orders, "deconvolution orders")->delimiter(',');
  dr_cmd->add_option("-o,--out", dr_out, "output directory");

  std::string cmp_model, cmp_ref;
  auto* cmp_cmd = app.add_subcommand("compare", "error norms between two run directories");
  cmp_cmd->add_option("--model", cmp_model, "model run directory")->required()->check(CLI::ExistingDirectory);
  cmp_cmd->add_option("--reference", cmp_ref, "reference run directory")->required()->check(CLI::ExistingDirectory);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*run_cmd) return cmd_run(run_args, cmdline);

    if (*transfer_cmd) {
      io::CsvTable t;
      t.schema = "ldm.transfer/1";
      t.columns = {"k", "g_hat", "exact"};
      for (int n : tr_orders) {
        t.columns.push_back(fmt::format("d_hat_N{}", n));
        t.columns.push_back(fmt::format("h_hat_N{}", n));
      }
      for (int i = 0; i < tr_points; ++i) {
        const double k = tr_kmax * i / (tr_points - 1);
        const double dk = tr_delta * k;
        std::vector<double> row{k, transfer_g(k, FilterSpec::make(tr_delta, 0)), 1.0 + dk * dk};
        for (int n : tr_orders) {
          const FilterSpec s = FilterSpec::make(tr_delta, n);
          row.push_back(transfer_dn(k, s));
          row.push_back(transfer_hn(k, s));
        }
        t.rows.push_back(std::move(row));
      }
      if (tr_out.empty()) {
        io::write_csv(std::cout, t);
      } else {
        io::ArtifactDir dir(tr_out);
        std::ostringstream csv;
        io::write_csv(csv, t);
        dir.write_text("transfer.csv", csv.str());
        dir.finish("", cmdline);
      }
      return kExitOk;
    }

    if (*sd_cmd) {
      const io::RunConfig rc = load_config(sd_args);
      DeltaRateSpec spec;
      spec.base = rc.solver;
      spec.order = sd_order;
      spec.deltas = sd_deltas;
      spec.tolerance = sd_tol;
      return write_report(delta_rate_study(spec), rc.output_dir, io::effective_config_text(rc), cmdline);
    }

    if (*sn_cmd) {
      const io::RunConfig rc = load_config(sn_args);
      NLimitSpec spec;
      spec.base = rc.solver;
      spec.delta = sn_delta;
      spec.orders = sn_orders;
      return write_report(n_limit_study(spec), rc.output_dir, io::effective_config_text(rc), cmdline);
    }

    if (*cutoff_cmd) return write_report(cutoff_table_study({co_orders, co_deltas}), co_out, "", cmdline);

    if (*cons_cmd) {
      ConsistencyRateSpec spec{study_field(cs_field, cs_n, cs_seed), cs_deltas, cs_orders};
      return write_report(consistency_rate_study(spec), cs_out, "", cmdline);
    }

    if (*dr_cmd) {
      DeconvRateSpec spec{study_field(dr_field, dr_n, 1), dr_deltas, dr_orders};
      return write_report(deconv_rate_study(spec), dr_out, "", cmdline);
    }

    if (*cmp_cmd) {
      const Trajectory ref = load_trajectory(cmp_ref, 0);
      const Trajectory model = load_trajectory(cmp_model, ref.final_state().n());
      const ModelError e = model_error(model, ref);
      std::cout << fmt::format("snapshots={} l2_final={:.10e} l2l2={:.10e} h1_timeavg={:.10e}\n",
                               ref.snapshots.size(), e.l2_final, e.l2l2, e.h1_timeavg);
      return kExitOk;
    }
  } catch (const BlowUpError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBlowUp;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}
