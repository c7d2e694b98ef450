// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "torsion/thresholds.hpp"

#include <cmath>
#include <stdexcept>

#include "torsion/errors.hpp"
#include "torsion/simplicial.hpp"

namespace torsion {

double ProcessConstants::c_d(int d) const {
  auto it = c.find(d);
  if (it != c.end()) return it->second;
  if (use_solved_defaults && d >= 2 && d <= 5) return c_d_solve(d);
  throw std::invalid_argument("no c_d configured for d = " + std::to_string(d));
}

std::uint64_t m_star(int n, int d, const ProcessConstants& k) {
  if (d < 2 || d > 5) throw std::invalid_argument("m_star: d must be in 2..5");
  if (n <= d + 1) throw std::invalid_argument("m_star: need n > d + 1");
  const double v = k.c_d(d) / n * static_cast<double>(binomial(n, d + 1));
  return static_cast<std::uint64_t>(std::floor(v));
}

double c_value(int n, double f, int d) {
  if (f < 0) throw std::invalid_argument("c_value: negative face count");
  return n * f / static_cast<double>(binomial(n, d + 1));
}

namespace {

double fixed_point_gap(double t, double c, int d) {
  return t - std::exp(-c * std::pow(1 - t, d));
}

}  // namespace

double t_c_solve(double c, int d) {
  if (!(c > 0)) throw std::invalid_argument("t_c_solve: need c > 0");
  // The map t -> exp(-c(1-t)^d) is increasing, so iterating from 0 stays
  // below the smallest fixed point.
  double lo = 0;
  for (int i = 0; i < 200; ++i) lo = std::exp(-c * std::pow(1 - lo, d));
  // First sign change of the gap above lo.
  constexpr int kGrid = 20000;
  const double h = (1 - lo) / kGrid;
  double a = lo;
  double b = -1;
  for (int i = 1; i < kGrid; ++i) {
    const double t = lo + i * h;
    if (fixed_point_gap(t, c, d) >= 0) {
      b = t;
      break;
    }
    a = t;
  }
  if (b < 0) return 1.0;
  for (int i = 0; i < 200 && b - a > 1e-16; ++i) {
    const double mid = 0.5 * (a + b);
    if (fixed_point_gap(mid, c, d) >= 0) {
      b = mid;
    } else {
      a = mid;
    }
  }
  return b;
}

double betti_bracket(double c, int d) {
  const double t = t_c_solve(c, d);
  const double u = 1 - t;
  return c * t * std::pow(u, d) + c / (d + 1) * std::pow(u, d + 1) - u;
}

double predicted_betti_d(int n, double c, int d) {
  return static_cast<double>(binomial(n, d)) * betti_bracket(c, d);
}

double c_d_solve(int d) {
  if (d < 1) throw std::invalid_argument("c_d_solve: need d >= 1");
  // Scan upward for the first positive bracket, then bisect.
  double a = 0.5;
  double b = -1;
  for (double c = 0.5; c < 64; c += 1e-3) {
    if (betti_bracket(c, d) > 1e-13) {
      b = c;
      break;
    }
    a = c;
  }
  if (b < 0) throw std::runtime_error("c_d_solve: no crossing found");
  for (int i = 0; i < 100 && b - a > 1e-13; ++i) {
    const double mid = 0.5 * (a + b);
    if (betti_bracket(mid, d) > 0) {
      b = mid;
    } else {
      a = mid;
    }
  }
  return 0.5 * (a + b);
}

Quadratic quadratic_fit(const std::vector<std::pair<double, double>>& points) {
  // Normal equations on centred abscissae for conditioning.
  if (points.size() < 3) throw SingularFit("quadratic_fit: need >= 3 points");
  double mean = 0;
  for (const auto& p : points) mean += p.first;
  mean /= points.size();
  double s[5] = {0, 0, 0, 0, 0};
  double r[3] = {0, 0, 0};
  for (const auto& [x0, y] : points) {
    const double x = x0 - mean;
    double xp = 1;
    for (int k = 0; k < 5; ++k) {
      s[k] += xp;
      if (k < 3) r[k] += xp * y;
      xp *= x;
    }
  }
  // Solve [[s4 s3 s2][s3 s2 s1][s2 s1 s0]] (A B C) = (r2 r1 r0).
  double m[3][4] = {{s[4], s[3], s[2], r[2]},
                    {s[3], s[2], s[1], r[1]},
                    {s[2], s[1], s[0], r[0]}};
  const double scale = std::abs(s[4]) + std::abs(s[2]) + std::abs(s[0]);
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int i = col + 1; i < 3; ++i) {
      if (std::abs(m[i][col]) > std::abs(m[piv][col])) piv = i;
    }
    if (std::abs(m[piv][col]) <= 1e-12 * scale) {
      throw SingularFit("quadratic_fit: degenerate design matrix");
    }
    for (int j = 0; j < 4; ++j) std::swap(m[col][j], m[piv][j]);
    for (int i = 0; i < 3; ++i) {
      if (i == col) continue;
      const double f = m[i][col] / m[col][col];
      for (int j = col; j < 4; ++j) m[i][j] -= f * m[col][j];
    }
  }
  const double A = m[0][3] / m[0][0];
  const double B = m[1][3] / m[1][1];
  const double C = m[2][3] / m[2][2];
  // Undo the shift x = n - mean.
  return Quadratic{A, B - 2 * A * mean, A * mean * mean - B * mean + C};
}

double predict(const Quadratic& q, double n) {
  return q.a * n * n + q.b * n + q.c;
}

}  // namespace torsion
