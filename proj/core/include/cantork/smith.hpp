// Copyright 2026 The cantor-k Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "cantork/rational.hpp"

namespace cantork::kgroup {

using exact::Int;

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }

  static IntMatrix identity(int n);
  IntMatrix operator*(const IntMatrix& o) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;  // this * v
  bool is_zero() const;
};

// d = u * a * v with u, v unimodular; d diagonal with d_1 | d_2 | ... and
// nonnegative entries; rank = number of nonzero diagonal entries.
struct SmithForm {
  IntMatrix d, u, v;
  int rank = 0;
};

SmithForm smith_normal_form(IntMatrix a);

// Integer solutions of M x = y via the Smith form. Returns a particular
// solution (empty optional if none) and a basis of the integer kernel.
struct IntegerSolve {
  bool solvable = false;
  std::vector<Int> particular;
  std::vector<std::vector<Int>> kernel;
};

IntegerSolve solve_integer(const IntMatrix& m, const std::vector<Int>& y);

// Cyclic shift matrix S on Z^m with (S f)(k) = f(k-1 mod m): the action of
// alpha^* on level-m vectors. id_minus_shift = I - S.
IntMatrix cyclic_shift(int m);
IntMatrix id_minus_shift(int m);

}  // namespace cantork::kgroup
