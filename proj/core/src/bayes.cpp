// SPDX-License-Identifier: Apache-2.0
#include "fuzzymt/bayes.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "fuzzymt/errors.hpp"

namespace fuzzymt {

namespace {

void check_unit(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
    throw ValueError(std::string(name) + " must be in [0,1]");
  }
}

} // namespace

std::optional<double> posterior(double p_e_h, double p_h, double p_e_not_h) {
  check_unit(p_e_h, "p_e_h");
  check_unit(p_h, "p_h");
  check_unit(p_e_not_h, "p_e_not_h");
  const double numerator = p_e_h * p_h;
  const double denominator = numerator + p_e_not_h * (1.0 - p_h);
  if (denominator == 0.0) {
    return std::nullopt;
  }
  return numerator / denominator;
}

PosteriorGrid::PosteriorGrid(double p_e_given_h, int resolution)
    : p_e_given_h_(p_e_given_h), resolution_(resolution) {
  check_unit(p_e_given_h, "p_e_given_h");
  if (resolution < 2) {
    throw ValueError("grid resolution must be at least 2");
  }
  values_.resize(static_cast<std::size_t>(resolution) * resolution);
  for (int i = 0; i < resolution; ++i) {
    const double p_h = coordinate(i);
    for (int j = 0; j < resolution; ++j) {
      const double p_e_not_h = coordinate(j);
      const auto v = posterior(p_e_given_h, p_h, p_e_not_h);
      const std::size_t idx =
          static_cast<std::size_t>(i) * resolution + j;
      if (v) {
        values_[idx] = *v;
      } else {
        values_[idx] = std::numeric_limits<double>::quiet_NaN();
        ++undefined_count_;
      }
    }
  }
}

double PosteriorGrid::coordinate(int i) const {
  return static_cast<double>(i) / (resolution_ - 1);
}

std::optional<double> PosteriorGrid::at(int p_h_index,
                                        int p_e_not_h_index) const {
  if (p_h_index < 0 || p_h_index >= resolution_ || p_e_not_h_index < 0 ||
      p_e_not_h_index >= resolution_) {
    throw ValueError("grid index out of range");
  }
  const double v =
      values_[static_cast<std::size_t>(p_h_index) * resolution_ +
              p_e_not_h_index];
  if (std::isnan(v)) return std::nullopt;
  return v;
}

double exceedance_fraction(const PosteriorGrid& grid, double threshold) {
  check_unit(threshold, "threshold");
  const int n = grid.resolution();
  std::size_t defined = 0, above = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto v = grid.at(i, j);
      if (!v) continue;
      ++defined;
      if (*v > threshold) ++above;
    }
  }
  if (defined == 0) {
    throw ValueError("grid has no defined cells");
  }
  return static_cast<double>(above) / static_cast<double>(defined);
}

void write_csv(const PosteriorGrid& grid, std::ostream& out) {
  out << "p_h,p_e_not_h,posterior\n";
  char buf[96];
  const int n = grid.resolution();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto v = grid.at(i, j);
      if (v) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g\n",
                      grid.coordinate(i), grid.coordinate(j), *v);
      } else {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,NA\n",
                      grid.coordinate(i), grid.coordinate(j));
      }
      out << buf;
    }
  }
}

void write_pgm(const PosteriorGrid& grid, std::ostream& out) {
  const int n = grid.resolution();
  out << "P5\n# p_e_given_h=" << grid.p_e_given_h() << " resolution=" << n
      << "\n" << n << " " << n << "\n255\n";
  std::vector<unsigned char> row(n);
  for (int j = 0; j < n; ++j) { // p_e_not_h ascending top-to-bottom
    for (int i = 0; i < n; ++i) { // p_h ascending left-to-right
      const auto v = grid.at(i, j);
      row[i] = v ? static_cast<unsigned char>(std::lround(255.0 * *v)) : 0;
    }
    out.write(reinterpret_cast<const char*>(row.data()), n);
  }
}

} // namespace fuzzymt
