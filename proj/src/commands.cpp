#include <algorithm>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "catotoc/artifacts.hpp"
#include "catotoc/relevance.hpp"
#include "catotoc/runconfig.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace catotoc {

namespace {

// Exit-code policy: 0 success, 1 configuration problems, 2 failed numerical
// self-checks.  A degenerate relevance window counts as configuration (the
// requested t0 has nothing to rank).
int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const numerical_consistency_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

void apply_threads(const RunConfig& cfg) {
  if (cfg.threads > 0) {
    Eigen::setNbThreads(cfg.threads);
#ifdef _OPENMP
    omp_set_num_threads(cfg.threads);
#endif
  }
}

std::string single_preset(const RunConfig& cfg, const char* cmd) {
  if (cfg.presets.size() > 1) {
    throw config_error(std::string(cmd) + " takes a single scenario, got " +
                       std::to_string(cfg.presets.size()) + " presets");
  }
  return cfg.presets.empty() ? std::string() : cfg.presets.front();
}

const TorusSpace& observed_space(const Scenario& sc) {
  return sc.observed == Subsystem::first ? sc.space.first : sc.space.second;
}

const CatMapSpec& observed_map(const Scenario& sc) {
  return sc.observed == Subsystem::first ? sc.coupled.map1 : sc.coupled.map2;
}

}  // namespace

int cmd_verify(const RunConfig& cfg) {
  return run_guarded([&] {
    apply_threads(cfg);
    const Scenario sc = scenario_from_config(cfg, single_preset(cfg, "verify"));
    const OperatorBasis basis(sc.basis_kind, observed_space(sc));
    const auto [series, entropies] = otoc_re_series(sc, basis);

    std::printf("# %s, basis=%s, N=%d, t_max=%d\n", sc.name.c_str(),
                to_string(basis.kind()).c_str(), observed_space(sc).n, sc.t_max);
    std::printf("t,S_L,sum_C_M,residual\n");
    double worst = 0.0;
    for (int t = 0; t <= sc.t_max; ++t) {
      const double sum = series.values.col(t).sum();
      const double residual = std::abs((1.0 - sum) - entropies.s_linear(t));
      worst = std::max(worst, residual);
      std::printf("%d,%s,%s,%s\n", t, format_double(entropies.s_linear(t)).c_str(),
                  format_double(sum).c_str(), format_double(residual).c_str());
    }
    const bool ok = worst < 1e-9;
    std::printf("verify: max residual %s against threshold 1e-09: %s\n",
                format_double(worst).c_str(), ok ? "OK" : "FAIL");
    return ok ? 0 : 2;
  });
}

int cmd_run(const RunConfig& cfg) {
  return run_guarded([&] {
    apply_threads(cfg);
    if (cfg.out_dir.empty()) throw config_error("run needs an output directory (--out)");
    const Scenario sc = scenario_from_config(cfg, single_preset(cfg, "run"));
    const OperatorBasis basis(sc.basis_kind, observed_space(sc));
    for (int t0 : cfg.t0) {
      if (t0 < 0 || t0 > sc.t_max) {
        throw config_error("t0 = " + std::to_string(t0) + " outside [0, " +
                           std::to_string(sc.t_max) + "]");
      }
    }

    const auto [series, entropies] = otoc_re_series(sc, basis);

    const std::filesystem::path out(cfg.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(out, ec);
    if (ec) throw config_error("cannot create output directory '" + cfg.out_dir + "'");

    if (cfg.emit_csv) {
      write_entropy_csv(out / "entropy.csv", entropies);
      write_otoc_csv(out / "otoc.csv", series);
    }

    if (!cfg.t0.empty()) {
      std::vector<RelevanceReport> reports;
      for (int t0 : cfg.t0) {
        reports.push_back(rank_and_cut(otoc_areas(series, t0), entropy_area(entropies, t0),
                                       cfg.fraction, t0));
      }
      if (cfg.emit_json) {
        write_relevance_json(out / "relevance.json", sc.name, to_string(basis.kind()),
                             observed_space(sc).n, cfg.fraction, reports, series.labels);
      }
      if (basis.kind() == BasisKind::pauli) {
        std::fprintf(stderr, "note: footprint skipped (Pauli labels have no coordinates)\n");
      } else {
        // Footprint for the widest window, overlaid with the observed map's
        // unstable direction when it has one.
        const auto widest = std::max_element(
            reports.begin(), reports.end(),
            [](const RelevanceReport& a, const RelevanceReport& b) { return a.t0 < b.t0; });
        const FootprintMap fp = footprint(*widest, basis, observed_map(sc));
        if (cfg.emit_csv) write_footprint_csv(out / "footprint.csv", fp);
        if (cfg.emit_svg) write_footprint_svg(out / "footprint.svg", fp);
      }
    }

    std::printf("run: %s basis=%s N=%d t_max=%d -> %s\n", sc.name.c_str(),
                to_string(basis.kind()).c_str(), observed_space(sc).n, sc.t_max,
                cfg.out_dir.c_str());
    return 0;
  });
}

int cmd_sweep(const RunConfig& cfg) {
  return run_guarded([&] {
    apply_threads(cfg);
    if (cfg.out_dir.empty()) throw config_error("sweep needs an output directory (--out)");
    if (cfg.presets.empty()) throw config_error("sweep needs at least one --preset");
    if (cfg.t0.empty()) throw config_error("sweep needs a --t0 list");

    std::vector<CountsRow> rows;
    for (const std::string& preset : cfg.presets) {
      const Scenario sc = scenario_from_config(cfg, preset);
      const OperatorBasis basis(sc.basis_kind, observed_space(sc));
      for (const auto& [t0, count] : counts_vs_t0(sc, basis, cfg.t0, cfg.fraction)) {
        rows.push_back(CountsRow{sc.name, to_string(basis.kind()), t0, count, basis.size()});
        std::printf("sweep: %s %s t0=%d n_relevant=%d/%d\n", sc.name.c_str(),
                    to_string(basis.kind()).c_str(), t0, count, basis.size());
      }
    }

    const std::filesystem::path out(cfg.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(out, ec);
    if (ec) throw config_error("cannot create output directory '" + cfg.out_dir + "'");
    write_counts_csv(out / "counts_vs_t0.csv", rows);
    return 0;
  });
}

}  // namespace catotoc
