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

#include "cantork/smith.hpp"

#include <cstdlib>

namespace cantork::kgroup {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols != o.rows) throw PreconditionError("matrix dimension mismatch");
  IntMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != cols)
    throw PreconditionError("matrix/vector dimension mismatch");
  std::vector<Int> r(rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

namespace {

// Quotient minimizing |a - q*d|.
Int nearest_div(const Int& a, const Int& d) {
  Int q = exact::floor_div(a, d);
  Int r = a - q * d;
  Int ad = abs(d);
  if (2 * r > ad) q += (d > 0 ? 1 : -1);
  return q;
}

struct Worker {
  IntMatrix d, u, v;

  void row_sub(int dst, int src, const Int& q) {  // row dst -= q * row src
    for (int j = 0; j < d.cols; ++j) d.at(dst, j) -= q * d.at(src, j);
    for (int j = 0; j < u.cols; ++j) u.at(dst, j) -= q * u.at(src, j);
  }
  void col_sub(int dst, int src, const Int& q) {
    for (int i = 0; i < d.rows; ++i) d.at(i, dst) -= q * d.at(i, src);
    for (int i = 0; i < v.rows; ++i) v.at(i, dst) -= q * v.at(i, src);
  }
  void row_swap(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < d.cols; ++j) std::swap(d.at(a, j), d.at(b, j));
    for (int j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void col_swap(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < d.rows; ++i) std::swap(d.at(i, a), d.at(i, b));
    for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
  }
  void row_neg(int r) {
    for (int j = 0; j < d.cols; ++j) d.at(r, j) = -d.at(r, j);
    for (int j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
  }

  bool find_pivot(int t, int* pi, int* pj) {
    bool found = false;
    Int best;
    for (int i = t; i < d.rows; ++i)
      for (int j = t; j < d.cols; ++j) {
        const Int& x = d.at(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          *pi = i;
          *pj = j;
        }
      }
    return found;
  }
};

}  // namespace

SmithForm smith_normal_form(IntMatrix a) {
  Worker w;
  w.u = IntMatrix::identity(a.rows);
  w.v = IntMatrix::identity(a.cols);
  w.d = std::move(a);

  int t = 0;
  const int tmax = std::min(w.d.rows, w.d.cols);
  while (t < tmax) {
    int pi, pj;
    if (!w.find_pivot(t, &pi, &pj)) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);

    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < w.d.rows; ++i) {
        if (w.d.at(i, t) == 0) continue;
        Int q = nearest_div(w.d.at(i, t), w.d.at(t, t));
        w.row_sub(i, t, q);
        if (w.d.at(i, t) != 0) dirty = true;
      }
      for (int j = t + 1; j < w.d.cols; ++j) {
        if (w.d.at(t, j) == 0) continue;
        Int q = nearest_div(w.d.at(t, j), w.d.at(t, t));
        w.col_sub(j, t, q);
        if (w.d.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // A smaller nonzero remainder now exists; move it to the pivot.
        w.find_pivot(t, &pi, &pj);
        w.row_swap(t, pi);
        w.col_swap(t, pj);
        continue;
      }
      // Pivot clears its row and column. Enforce divisibility of the rest.
      bool fixed = true;
      for (int i = t + 1; i < w.d.rows && fixed; ++i)
        for (int j = t + 1; j < w.d.cols && fixed; ++j)
          if (!mpz_divisible_p(w.d.at(i, j).get_mpz_t(),
                               w.d.at(t, t).get_mpz_t())) {
            // Fold row i into row t and restart the reduction.
            w.row_sub(t, i, Int(-1));
            fixed = false;
          }
      if (fixed) break;
    }
    if (w.d.at(t, t) < 0) w.row_neg(t);
    ++t;
  }

  SmithForm out;
  out.rank = 0;
  for (int i = 0; i < tmax; ++i)
    if (w.d.at(i, i) != 0) ++out.rank;
  out.d = std::move(w.d);
  out.u = std::move(w.u);
  out.v = std::move(w.v);
  return out;
}

IntegerSolve solve_integer(const IntMatrix& m, const std::vector<Int>& y) {
  SmithForm s = smith_normal_form(m);
  std::vector<Int> uy = s.u.apply(y);
  IntegerSolve out;
  std::vector<Int> z(m.cols, Int(0));
  for (int i = 0; i < std::min(m.rows, m.cols); ++i) {
    const Int& di = s.d.at(i, i);
    if (di != 0) {
      if (!mpz_divisible_p(uy[i].get_mpz_t(), di.get_mpz_t())) return out;
      z[i] = uy[i] / di;
    }
  }
  for (int i = 0; i < m.rows; ++i) {
    bool zero_row = i >= std::min(m.rows, m.cols) || s.d.at(i, i) == 0;
    if (zero_row && uy[i] != 0) return out;
  }
  out.solvable = true;
  out.particular = s.v.apply(z);
  for (int j = 0; j < m.cols; ++j) {
    bool free_col = j >= std::min(m.rows, m.cols) || s.d.at(j, j) == 0;
    if (!free_col) continue;
    std::vector<Int> e(m.cols, Int(0));
    e[j] = 1;
    out.kernel.push_back(s.v.apply(e));
  }
  return out;
}

IntMatrix cyclic_shift(int m) {
  IntMatrix s(m, m);
  for (int k = 0; k < m; ++k) s.at(k, (k - 1 + m) % m) = 1;
  return s;
}

IntMatrix id_minus_shift(int m) {
  IntMatrix r = cyclic_shift(m);
  for (auto& x : r.a) x = -x;
  for (int i = 0; i < m; ++i) r.at(i, i) += 1;
  return r;
}

}  // namespace cantork::kgroup
