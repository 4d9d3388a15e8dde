#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "catotoc/bases.hpp"
#include "catotoc/maps.hpp"
#include "catotoc/otoc.hpp"

namespace catotoc {

// Result of ranking basis elements by time-integrated OTOC area over the
// window t = 0..t0.
struct RelevanceReport {
  int t0 = 0;
  Eigen::VectorXd areas;    // per element, in basis order
  double entropy_area = 0.0;
  std::vector<int> ranked;  // element indices, areas descending (ties: label order)
  int n_relevant = 0;       // minimal prefix of `ranked` covering fraction * entropy_area
  double fraction = 0.8;
};

// A_M(t0) = sum_{t=0}^{t0} C_M(t), both endpoints included.
double otoc_area(const OtocSeries& series, int element, int t0);
Eigen::VectorXd otoc_areas(const OtocSeries& series, int t0);

// A_S(t0) = sum_{t=0}^{t0} (1 - S_L(t)); by the sum rule this equals
// sum_M A_M(t0) exactly, term by term.
double entropy_area(const EntropySeries& entropies, int t0);

// Stable descending sort of the areas and the minimal cutoff covering
// fraction * entropy_area.  fraction in (0, 1]; entropy_area must be > 0.
RelevanceReport rank_and_cut(const Eigen::VectorXd& areas, double entropy_area,
                             double fraction = 0.8, int t0 = 0);

// One report per t0, all derived from a single evolved series.
std::vector<RelevanceReport> relevance_reports(const Scenario& scenario,
                                               const OperatorBasis& basis,
                                               const std::vector<int>& t0_list,
                                               double fraction = 0.8);

// (t0, n_relevant) pairs, same sharing.
std::vector<std::pair<int, int>> counts_vs_t0(const Scenario& scenario,
                                              const OperatorBasis& basis,
                                              const std::vector<int>& t0_list,
                                              double fraction = 0.8);

struct FootprintPoint {
  double coord1 = 0.0;  // s/N (chords), b/N (centers), i/N (Kirkwood)
  double coord2 = 0.0;  // r/N (chords), a/N (centers), j/N (Kirkwood)
  int rank = 0;
};

// Phase-space footprint of the relevant elements.  For odd N, reflection
// centers are deployed onto the integer grid via a' = 2a * inv(2) mod N (the
// half-integer grid and the integer grid coincide there).
struct FootprintMap {
  BasisKind kind = BasisKind::translation;
  std::vector<FootprintPoint> points;
  std::optional<Eigen::Vector2d> overlay_direction;
  Eigen::Vector2d overlay_anchor = Eigen::Vector2d::Zero();
  bool deployed = false;
};

// overlay_map: when given and hyperbolic, its unstable direction is attached
// (anchored at the origin for chords, at the torus center for reflection
// centers).  A non-hyperbolic overlay request prints a warning and the
// overlay is omitted.  Kirkwood footprints are plain (i, j) grids and never
// carry an overlay; Pauli labels have no phase-space coordinates at all.
FootprintMap footprint(const RelevanceReport& report, const OperatorBasis& basis,
                       const std::optional<CatMapSpec>& overlay_map,
                       bool deploy_odd = true);

// Torus-periodic perpendicular distance from a point to the line through
// `anchor` along `direction` (minimum over the 3x3 block of unit shifts).
double torus_line_distance(double c1, double c2, const Eigen::Vector2d& anchor,
                           const Eigen::Vector2d& direction);

}  // namespace catotoc
