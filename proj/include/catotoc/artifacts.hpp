#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "catotoc/otoc.hpp"
#include "catotoc/relevance.hpp"

namespace catotoc {

// All file emission in one place so runs are reproducible byte for byte:
// fixed headers, fixed row order, 17 significant digits for every double.

std::string format_double(double value);

void write_entropy_csv(const std::filesystem::path& path, const EntropySeries& entropies);

void write_otoc_csv(const std::filesystem::path& path, const OtocSeries& series);

struct CountsRow {
  std::string scenario;
  std::string basis;
  int t0 = 0;
  int n_relevant = 0;
  int basis_size = 0;
};

void write_counts_csv(const std::filesystem::path& path, const std::vector<CountsRow>& rows);

void write_relevance_json(const std::filesystem::path& path, const std::string& scenario,
                          const std::string& basis, int n, double fraction,
                          const std::vector<RelevanceReport>& reports,
                          const std::vector<BasisLabel>& labels);

void write_footprint_csv(const std::filesystem::path& path, const FootprintMap& map);

// Minimal hand-rolled SVG scatter of the footprint with the overlay line
// drawn across all its torus wraps.
void write_footprint_svg(const std::filesystem::path& path, const FootprintMap& map);

}  // namespace catotoc
