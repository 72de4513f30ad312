// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

namespace fuzzymt {

/// Bayes posterior P(H|E) = P(E|H)P(H) / (P(E|H)P(H) + P(E|!H)(1-P(H))).
/// Returns nullopt when the denominator is exactly zero.
std::optional<double> posterior(double p_e_h, double p_h, double p_e_not_h);

/// Discretized posterior map over the (P(H), P(E|!H)) unit square at fixed
/// P(E|H). Axis coordinates are i/(resolution-1); undefined (0/0) cells
/// are counted, never interpolated.
class PosteriorGrid {
public:
  PosteriorGrid(double p_e_given_h, int resolution);

  double p_e_given_h() const { return p_e_given_h_; }
  int resolution() const { return resolution_; }
  std::size_t undefined_count() const { return undefined_count_; }

  double coordinate(int i) const;
  /// Cell at (P(H) index, P(E|!H) index).
  std::optional<double> at(int p_h_index, int p_e_not_h_index) const;

private:
  double p_e_given_h_;
  int resolution_;
  std::vector<double> values_; // NaN marks undefined cells
  std::size_t undefined_count_ = 0;
};

inline PosteriorGrid posterior_grid(double p_e_h, int resolution) {
  return PosteriorGrid(p_e_h, resolution);
}

/// Fraction of defined cells with value strictly above threshold.
double exceedance_fraction(const PosteriorGrid& grid, double threshold);

/// CSV with header p_h,p_e_not_h,posterior; NA for undefined cells.
void write_csv(const PosteriorGrid& grid, std::ostream& out);

/// Binary 8-bit PGM (P5), value = round(255 * posterior), undefined = 0.
/// Rows: P(E|!H) ascending top-to-bottom; columns: P(H) ascending
/// left-to-right. A comment line records p_e_given_h and resolution.
void write_pgm(const PosteriorGrid& grid, std::ostream& out);

} // namespace fuzzymt
