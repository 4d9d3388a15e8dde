#include "catotoc/relevance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "internal.hpp"

namespace catotoc {

namespace {

void check_window(int t0, int t_max) {
  if (t0 < 0 || t0 > t_max) {
    throw std::out_of_range("t0 = " + std::to_string(t0) +
                            " outside the computed window [0, " +
                            std::to_string(t_max) + "]");
  }
}

}  // namespace

double otoc_area(const OtocSeries& series, int element, int t0) {
  if (element < 0 || element >= series.values.rows()) {
    throw std::out_of_range("otoc_area: element index " + std::to_string(element));
  }
  check_window(t0, series.t_max());
  return series.values.row(element).head(t0 + 1).sum();
}

Eigen::VectorXd otoc_areas(const OtocSeries& series, int t0) {
  check_window(t0, series.t_max());
  return series.values.leftCols(t0 + 1).rowwise().sum();
}

double entropy_area(const EntropySeries& entropies, int t0) {
  check_window(t0, static_cast<int>(entropies.s_linear.size()) - 1);
  return (1.0 - entropies.s_linear.head(t0 + 1).array()).sum();
}

RelevanceReport rank_and_cut(const Eigen::VectorXd& areas, double entropy_area,
                             double fraction, int t0) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw config_error("rank_and_cut: fraction must be in (0, 1], got " +
                       std::to_string(fraction));
  }
  if (!(entropy_area > 0.0)) {
    throw degenerate_window_error("rank_and_cut: entropy area " +
                                  std::to_string(entropy_area) + " is not positive");
  }
  const int m = static_cast<int>(areas.size());
  RelevanceReport report;
  report.t0 = t0;
  report.areas = areas;
  report.entropy_area = entropy_area;
  report.fraction = fraction;
  report.ranked.resize(m);
  std::iota(report.ranked.begin(), report.ranked.end(), 0);
  // Stable sort: ties keep basis (= label) order, so ranking is reproducible.
  std::stable_sort(report.ranked.begin(), report.ranked.end(),
                   [&](int a, int b) { return areas(a) > areas(b); });

  const double target = fraction * entropy_area;
  double cumulative = 0.0;
  int count = 0;
  for (int i = 0; i < m; ++i) {
    cumulative += areas(report.ranked[i]);
    if (cumulative >= target) {
      count = i + 1;
      break;
    }
  }
  if (count == 0) {
    // The target was never reached (possible only through roundoff when
    // fraction is at its upper end); everything that contributes is relevant.
    for (int i = 0; i < m; ++i) {
      if (areas(report.ranked[i]) > 0.0) count = i + 1;
    }
  }
  report.n_relevant = count;
  return report;
}

std::vector<RelevanceReport> relevance_reports(const Scenario& scenario,
                                               const OperatorBasis& basis,
                                               const std::vector<int>& t0_list,
                                               double fraction) {
  for (int t0 : t0_list) check_window(t0, scenario.t_max);
  const auto [series, entropies] = otoc_re_series(scenario, basis);
  std::vector<RelevanceReport> reports;
  reports.reserve(t0_list.size());
  for (int t0 : t0_list) {
    reports.push_back(
        rank_and_cut(otoc_areas(series, t0), entropy_area(entropies, t0), fraction, t0));
  }
  return reports;
}

std::vector<std::pair<int, int>> counts_vs_t0(const Scenario& scenario,
                                              const OperatorBasis& basis,
                                              const std::vector<int>& t0_list,
                                              double fraction) {
  std::vector<std::pair<int, int>> counts;
  for (const RelevanceReport& report : relevance_reports(scenario, basis, t0_list, fraction)) {
    counts.emplace_back(report.t0, report.n_relevant);
  }
  return counts;
}

FootprintMap footprint(const RelevanceReport& report, const OperatorBasis& basis,
                       const std::optional<CatMapSpec>& overlay_map, bool deploy_odd) {
  if (basis.kind() == BasisKind::pauli) {
    throw basis_unavailable_error(
        "footprint: Pauli labels carry no phase-space coordinates");
  }
  const int n = basis.space().n;
  FootprintMap map;
  map.kind = basis.kind();
  const bool deploy = deploy_odd && n % 2 == 1 && basis.kind() == BasisKind::reflection;
  map.deployed = deploy;
  const long long inv2 = (n + 1) / 2;  // 2 * inv2 == 1 (mod N) for odd N

  map.points.reserve(report.n_relevant);
  for (int rank = 0; rank < report.n_relevant; ++rank) {
    const int e = report.ranked[rank];
    const int hi = e / n;
    const int lo = e % n;
    FootprintPoint pt;
    pt.rank = rank;
    switch (basis.kind()) {
      case BasisKind::translation:  // label (r, s) = (hi, lo), chord at (s/N, r/N)
        pt.coord1 = static_cast<double>(lo) / n;
        pt.coord2 = static_cast<double>(hi) / n;
        break;
      case BasisKind::reflection:  // label (2a, 2b) = (hi, lo), center at (b/N, a/N)
        if (deploy) {
          pt.coord1 = static_cast<double>(internal::mod_floor(lo * inv2, n)) / n;
          pt.coord2 = static_cast<double>(internal::mod_floor(hi * inv2, n)) / n;
        } else {
          pt.coord1 = 0.5 * lo / n;
          pt.coord2 = 0.5 * hi / n;
        }
        break;
      default:  // Kirkwood: the (i, j) index grid scaled to the unit square
        pt.coord1 = static_cast<double>(hi) / n;
        pt.coord2 = static_cast<double>(lo) / n;
        break;
    }
    map.points.push_back(pt);
  }

  if (overlay_map && basis.kind() != BasisKind::kirkwood) {
    map.overlay_anchor = basis.kind() == BasisKind::reflection
                             ? Eigen::Vector2d(0.5, 0.5)
                             : Eigen::Vector2d(0.0, 0.0);
    try {
      map.overlay_direction = unstable_direction(overlay_map->m);
    } catch (const not_hyperbolic_error& err) {
      std::fprintf(stderr, "warning: overlay omitted: %s\n", err.what());
    }
  }
  return map;
}

double torus_line_distance(double c1, double c2, const Eigen::Vector2d& anchor,
                           const Eigen::Vector2d& direction) {
  const Eigen::Vector2d u = direction.normalized();
  const Eigen::Vector2d perp(-u.y(), u.x());
  double best = std::numeric_limits<double>::infinity();
  for (int dx = -1; dx <= 1; ++dx) {
    for (int dy = -1; dy <= 1; ++dy) {
      const Eigen::Vector2d shifted(c1 + dx - anchor.x(), c2 + dy - anchor.y());
      best = std::min(best, std::abs(shifted.dot(perp)));
    }
  }
  return best;
}

}  // namespace catotoc
