#include "catotoc/artifacts.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace catotoc {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // binary: identical bytes everywhere
  if (!out) {
    throw config_error("cannot open '" + path.string() + "' for writing");
  }
  return out;
}

// Liang-Barsky clip of the parametric line p + t d against the unit square.
bool clip_unit_square(double px, double py, double dx, double dy, double& t0,
                      double& t1) {
  t0 = -1e18;
  t1 = 1e18;
  const double p[2] = {px, py};
  const double d[2] = {dx, dy};
  for (int axis = 0; axis < 2; ++axis) {
    if (std::abs(d[axis]) < 1e-15) {
      if (p[axis] < 0.0 || p[axis] > 1.0) return false;
      continue;
    }
    double lo = (0.0 - p[axis]) / d[axis];
    double hi = (1.0 - p[axis]) / d[axis];
    if (lo > hi) std::swap(lo, hi);
    t0 = std::max(t0, lo);
    t1 = std::min(t1, hi);
  }
  return t1 - t0 > 1e-9;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_entropy_csv(const std::filesystem::path& path, const EntropySeries& entropies) {
  std::ofstream out = open_for_write(path);
  out << "t,S_L,S2,purity\n";
  for (Eigen::Index t = 0; t < entropies.s_linear.size(); ++t) {
    out << t << ',' << format_double(entropies.s_linear(t)) << ','
        << format_double(entropies.s_renyi2(t)) << ','
        << format_double(entropies.purity(t)) << '\n';
  }
}

void write_otoc_csv(const std::filesystem::path& path, const OtocSeries& series) {
  std::ofstream out = open_for_write(path);
  out << "label,t,C\n";
  for (Eigen::Index e = 0; e < series.values.rows(); ++e) {
    const std::string label = label_to_string(series.labels[e]);
    for (Eigen::Index t = 0; t < series.values.cols(); ++t) {
      out << label << ',' << t << ',' << format_double(series.values(e, t)) << '\n';
    }
  }
}

void write_counts_csv(const std::filesystem::path& path, const std::vector<CountsRow>& rows) {
  std::ofstream out = open_for_write(path);
  out << "scenario,basis,t0,n_relevant,basis_size\n";
  for (const CountsRow& row : rows) {
    out << row.scenario << ',' << row.basis << ',' << row.t0 << ',' << row.n_relevant
        << ',' << row.basis_size << '\n';
  }
}

void write_relevance_json(const std::filesystem::path& path, const std::string& scenario,
                          const std::string& basis, int n, double fraction,
                          const std::vector<RelevanceReport>& reports,
                          const std::vector<BasisLabel>& labels) {
  nlohmann::ordered_json doc;
  doc["scenario"] = scenario;
  doc["basis"] = basis;
  doc["n"] = n;
  doc["fraction"] = fraction;
  doc["reports"] = nlohmann::ordered_json::array();
  for (const RelevanceReport& report : reports) {
    nlohmann::ordered_json jr;
    jr["t0"] = report.t0;
    jr["entropy_area"] = report.entropy_area;
    jr["n_relevant"] = report.n_relevant;
    jr["ranked"] = nlohmann::ordered_json::array();
    for (int index : report.ranked) {
      jr["ranked"].push_back({{"label", label_to_string(labels[index])},
                              {"area", report.areas(index)}});
    }
    doc["reports"].push_back(std::move(jr));
  }
  std::ofstream out = open_for_write(path);
  out << doc.dump(2) << '\n';
}

void write_footprint_csv(const std::filesystem::path& path, const FootprintMap& map) {
  std::ofstream out = open_for_write(path);
  out << "coord1,coord2,rank\n";
  for (const FootprintPoint& p : map.points) {
    out << format_double(p.coord1) << ',' << format_double(p.coord2) << ',' << p.rank
        << '\n';
  }
}

void write_footprint_svg(const std::filesystem::path& path, const FootprintMap& map) {
  constexpr double kMargin = 40.0;
  constexpr double kPlot = 640.0;
  const double size = kPlot + 2 * kMargin;
  auto px = [&](double c) { return kMargin + c * kPlot; };
  auto py = [&](double c) { return kMargin + (1.0 - c) * kPlot; };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return std::string(buf);
  };

  std::ofstream out = open_for_write(path);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
      << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
      << "  <rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n"
      << "  <rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kPlot
      << "\" height=\"" << kPlot << "\" fill=\"none\" stroke=\"#333333\"/>\n";

  if (map.overlay_direction) {
    const Eigen::Vector2d d = *map.overlay_direction;
    for (int kx = -3; kx <= 3; ++kx) {
      for (int ky = -3; ky <= 3; ++ky) {
        const double ax = map.overlay_anchor.x() + kx;
        const double ay = map.overlay_anchor.y() + ky;
        double t0 = 0.0;
        double t1 = 0.0;
        if (!clip_unit_square(ax, ay, d.x(), d.y(), t0, t1)) continue;
        out << "  <line x1=\"" << num(px(ax + t0 * d.x())) << "\" y1=\""
            << num(py(ay + t0 * d.y())) << "\" x2=\"" << num(px(ax + t1 * d.x()))
            << "\" y2=\"" << num(py(ay + t1 * d.y()))
            << "\" stroke=\"#c0392b\" stroke-width=\"2\" stroke-dasharray=\"7,5\"/>\n";
      }
    }
  }

  for (const FootprintPoint& p : map.points) {
    out << "  <circle cx=\"" << num(px(p.coord1)) << "\" cy=\"" << num(py(p.coord2))
        << "\" r=\"3\" fill=\"#1f77b4\" fill-opacity=\"0.55\"/>\n";
  }

  out << "  <text x=\"" << kMargin << "\" y=\"" << kMargin - 12.0
      << "\" font-family=\"sans-serif\" font-size=\"16\">" << to_string(map.kind)
      << " footprint, " << map.points.size() << " relevant elements"
      << (map.deployed ? " (deployed grid)" : "") << "</text>\n"
      << "</svg>\n";
}

}  // namespace catotoc
