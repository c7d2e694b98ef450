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

// Density constants for the top-homology threshold: the critical constants
// c_d, the fixed point t_c, predicted top Betti numbers, m*, and the quadratic
// fit used to extrapolate torsion sizes.

#ifndef TORSION_THRESHOLDS_HPP_
#define TORSION_THRESHOLDS_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace torsion {

// Configured c_d values. The d >= 3 entries are empirical, fitted to face
// counts at n = 25, 17, 16; they sit slightly above the asymptotic roots.
// Dimensions without an entry fall back to c_d_solve(d) when
// use_solved_defaults is set.
struct ProcessConstants {
  std::map<int, double> c{{2, 2.7538}, {3, 3.907}, {4, 4.960}, {5, 5.980}};
  bool use_solved_defaults = true;

  double c_d(int d) const;
};

// floor(c_d / n * C(n, d+1)). Throws std::invalid_argument for d outside
// {2,3,4,5}, n <= d+1, or a missing constant.
std::uint64_t m_star(int n, int d, const ProcessConstants& k = {});

// n f / C(n, d+1).
double c_value(int n, double f, int d);

// Smallest positive root of t = exp(-c (1-t)^d); 1 when there is none below.
double t_c_solve(double c, int d);

// c t (1-t)^d + c/(d+1) (1-t)^{d+1} - (1-t) at t = t_c.
double betti_bracket(double c, int d);
// C(n, d) * betti_bracket(c, d).
double predicted_betti_d(int n, double c, int d);
// Smallest c > 0 with betti_bracket(c, d) > 0, to about 1e-12.
double c_d_solve(int d);

// a n^2 + b n + c.
struct Quadratic {
  double a = 0;
  double b = 0;
  double c = 0;
};
// Least squares over (n, y) points. Throws SingularFit when fewer than three
// distinct abscissae are given.
Quadratic quadratic_fit(const std::vector<std::pair<double, double>>& points);
double predict(const Quadratic& q, double n);

}  // namespace torsion

#endif  // TORSION_THRESHOLDS_HPP_
