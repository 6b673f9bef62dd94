#include "stabwalls/linalg.hpp"

#include <algorithm>

#include "stabwalls/errors.hpp"

namespace stabwalls {

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  if (rows != b.size()) throw ComputationError("linear system shape mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  Matrix m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != cols) throw ComputationError("linear system shape mismatch");
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) return std::nullopt;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (m[i][cols] != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < cols; ++i) x[i] = m[i][cols] / m[i][i];
  return x;
}

Rational determinant(Matrix a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

UniPoly characteristic_polynomial(const Matrix& a) {
  // Faddeev–LeVerrier
  const std::size_t n = a.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix m(n, std::vector<Rational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s(0);
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[n - k + 1];
    }
    m = std::move(next);
    Rational trace(0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    }
    c[n - k] = -trace / static_cast<long>(k);
  }
  return UniPoly(std::move(c));
}

Inertia inertia(const Matrix& symmetric) {
  UniPoly p = characteristic_polynomial(symmetric);
  Inertia out;
  const auto& c = p.coeffs();
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  out.zero = static_cast<int>(low);
  auto variations = [&](bool negate) {
    int count = 0;
    int last = 0;
    for (std::size_t i = low; i < c.size(); ++i) {
      int s = sign(c[i]);
      if (negate && i % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  out.positive = variations(false);
  out.negative = variations(true);
  return out;
}

}  // namespace stabwalls

namespace stabwalls {

namespace {

struct Tableau {
  Matrix rows;  // last column is the right-hand side
  std::vector<std::size_t> basis;

  std::size_t width() const { return rows.empty() ? 0 : rows[0].size() - 1; }

  void pivot(std::size_t r, std::size_t col) {
    Rational inv = 1 / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = col;
  }

  // Runs the simplex method on the columns [0, usable) for objective c.
  // Returns false if unbounded.
  bool optimize(const std::vector<Rational>& c, std::size_t usable) {
    for (;;) {
      std::size_t entering = usable;
      for (std::size_t j = 0; j < usable && entering == usable; ++j) {
        if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
        Rational reduced = c[j];
        for (std::size_t i = 0; i < rows.size(); ++i) reduced -= c[basis[i]] * rows[i][j];
        if (reduced > 0) entering = j;
      }
      if (entering == usable) return true;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][entering] <= 0) continue;
        Rational ratio = rows[i].back() / rows[i][entering];
        if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, entering);
    }
  }
};

}  // namespace

LpResult maximize(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
  const std::size_t m = a.size(), n = c.size();
  Tableau t;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> row(n + m + 1, Rational(0));
    const int flip = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) row[j] = a[i][j] * flip;
    row[n + i] = 1;
    row.back() = b[i] * flip;
    t.rows.push_back(std::move(row));
    t.basis.push_back(n + i);
  }
  std::vector<Rational> phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  t.optimize(phase1, n + m);
  Rational infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] >= n) infeasibility += t.rows[i].back();
  }
  LpResult out;
  if (infeasibility != 0) return out;
  // drive artificial variables out of the basis; rows that cannot be pivoted are redundant
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n && col == n; ++j) {
      if (t.rows[i][j] != 0) col = j;
    }
    if (col == n) {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    t.pivot(i, col);
    ++i;
  }
  std::vector<Rational> cost(n + m, Rational(0));
  std::copy(c.begin(), c.end(), cost.begin());
  if (!t.optimize(cost, n)) {
    out.status = LpResult::Status::unbounded;
    return out;
  }
  out.status = LpResult::Status::optimal;
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) out.x[t.basis[i]] = t.rows[i].back();
  out.value = 0;
  for (std::size_t j = 0; j < n; ++j) out.value += c[j] * out.x[j];
  return out;
}

}  // namespace stabwalls
