// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "fuzzymt/bayes.hpp"
#include "fuzzymt/errors.hpp"

using namespace fuzzymt;

TEST_CASE("pointwise posterior") {
  CHECK(*posterior(0.04, 0.5, 0.04) == 0.5);
  CHECK(*posterior(0.04, 0.5, 0.08) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK_FALSE(posterior(0.04, 0.0, 0.0).has_value());
  CHECK_THROWS_AS(posterior(1.5, 0.5, 0.5), ValueError);
  CHECK_THROWS_AS(posterior(0.5, -0.1, 0.5), ValueError);
}

TEST_CASE("posterior identity family and monotonicity") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double x = 0.001 + 0.999 * unit(rng);
    const double h = unit(rng);
    CHECK(*posterior(x, h, x) == doctest::Approx(h).epsilon(1e-12));
  }
  // increasing in p_h, decreasing in p_e_not_h
  for (int i = 0; i < 500; ++i) {
    const double e = 0.01 + 0.98 * unit(rng);
    const double q = 0.01 + 0.98 * unit(rng);
    const double h1 = 0.01 + 0.48 * unit(rng);
    const double h2 = h1 + 0.01 + (0.98 - h1) * unit(rng) * 0.5;
    CHECK(*posterior(e, h1, q) < *posterior(e, h2, q));
    CHECK(*posterior(e, h1, q + 0.005) < *posterior(e, h1, q));
  }
}

TEST_CASE("2x2 grid corners") {
  const PosteriorGrid g = posterior_grid(0.04, 2);
  CHECK_FALSE(g.at(0, 0).has_value()); // P(H)=0, P(E|!H)=0
  CHECK(*g.at(0, 1) == 0.0);
  CHECK(*g.at(1, 0) == 1.0);
  CHECK(*g.at(1, 1) == 1.0);
  CHECK(g.undefined_count() == 1);
}

TEST_CASE("1001 grid has exactly one undefined cell") {
  const PosteriorGrid g = posterior_grid(0.04, 1001);
  CHECK(g.undefined_count() == 1);
  CHECK_FALSE(g.at(0, 0).has_value());
}

TEST_CASE("p_e_h = 0 grid per direct enumeration") {
  const PosteriorGrid g = posterior_grid(0.0, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double p_h = g.coordinate(i), q = g.coordinate(j);
      if (q * (1.0 - p_h) == 0.0) {
        CHECK_FALSE(g.at(i, j).has_value());
      } else {
        CHECK(*g.at(i, j) == 0.0);
      }
    }
  }
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(posterior_grid(0.04, 1), ValueError);
  CHECK_THROWS_AS(posterior_grid(-0.1, 10), ValueError);
}

TEST_CASE("exceedance fraction") {
  const PosteriorGrid g = posterior_grid(0.04, 1001);
  // strictly positive cells are exactly those with p_h > 0
  CHECK(exceedance_fraction(g, 0.0) ==
        doctest::Approx(1000.0 * 1001.0 / (1001.0 * 1001.0 - 1.0))
            .epsilon(1e-12));
  CHECK(exceedance_fraction(g, 1.0) == 0.0);
  // monotone non-increasing in the threshold
  double prev = 1.0;
  for (double thr = 0.0; thr <= 1.0; thr += 0.1) {
    const double f = exceedance_fraction(g, thr);
    CHECK(f <= prev);
    prev = f;
  }
}

TEST_CASE("coarse grid is a sub-sample of a refined one") {
  const PosteriorGrid coarse = posterior_grid(0.3, 6);  // coords k/5
  const PosteriorGrid fine = posterior_grid(0.3, 11);   // coords k/10
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      CHECK(coarse.at(i, j) == fine.at(2 * i, 2 * j));
    }
  }
}

TEST_CASE("CSV export") {
  const PosteriorGrid g = posterior_grid(0.04, 2);
  std::ostringstream out;
  write_csv(g, out);
  CHECK(out.str() ==
        "p_h,p_e_not_h,posterior\n"
        "0,0,NA\n"
        "0,1,0\n"
        "1,0,1\n"
        "1,1,1\n");
}

TEST_CASE("PGM export") {
  const PosteriorGrid g = posterior_grid(0.04, 2);
  std::ostringstream out;
  write_pgm(g, out);
  const std::string pgm = out.str();
  const std::string header = "P5\n# p_e_given_h=0.04 resolution=2\n2 2\n255\n";
  REQUIRE(pgm.size() == header.size() + 4);
  CHECK(pgm.substr(0, header.size()) == header);
  // row 0 is p_e_not_h = 0: cells (p_h=0 -> undefined -> 0, p_h=1 -> 255)
  CHECK(static_cast<unsigned char>(pgm[header.size() + 0]) == 0);
  CHECK(static_cast<unsigned char>(pgm[header.size() + 1]) == 255);
  // row 1 is p_e_not_h = 1: (0 -> 0, 1 -> 255)
  CHECK(static_cast<unsigned char>(pgm[header.size() + 2]) == 0);
  CHECK(static_cast<unsigned char>(pgm[header.size() + 3]) == 255);
}
