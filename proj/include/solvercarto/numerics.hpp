// Copyright 2026 The Solvercarto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SOLVERCARTO_NUMERICS_H_
#define SOLVERCARTO_NUMERICS_H_

#include "solvercarto/matrix.hpp"

namespace solvercarto {

struct EigenDecomposition {
  Vec eigenvalues;     // ascending
  Matrix eigenvectors;  // column k pairs with eigenvalues[k]
};

// Cyclic Jacobi rotations on a symmetric matrix; sweeps until the
// off-diagonal Frobenius norm drops below `tol`. The matrices here are at
// most (n+m)-dimensional, so this is exact enough and dependency-free.
EigenDecomposition jacobi_eigen_symmetric(const Matrix& s, double tol = 1e-12,
                                          int max_sweeps = 128);

double min_eigenvalue_symmetric(const Matrix& s);

// Linear-interpolation percentile (q in [0,1]) of an unsorted sample.
double percentile(Vec values, double q);

}  // namespace solvercarto

#endif  // SOLVERCARTO_NUMERICS_H_
