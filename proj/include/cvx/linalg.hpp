#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace cvx {

using Vec = std::vector<double>;

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(std::span<const double> a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

inline double dist2(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

inline Vec add(std::span<const double> a, std::span<const double> b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(std::span<const double> a, std::span<const double> b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scaled(std::span<const double> a, double c) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

// Strict lexicographic order on coordinate vectors; used as the
// deterministic tie-break for support points.
inline bool lex_less(std::span<const double> a, std::span<const double> b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return a.size() < b.size();
}

// Dense row-major matrix, small sizes only.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;  // rows*cols entries

  Mat() = default;
  Mat(int r, int c, double fill = 0.0) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, fill) {}

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }
};

inline Vec matvec(const Mat& m, std::span<const double> x) {
  Vec y(static_cast<std::size_t>(m.rows), 0.0);
  for (int i = 0; i < m.rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

inline Vec mat_t_vec(const Mat& m, std::span<const double> x) {
  Vec y(static_cast<std::size_t>(m.cols), 0.0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) y[static_cast<std::size_t>(j)] += m.at(i, j) * x[static_cast<std::size_t>(i)];
  return y;
}

inline double frobenius_norm(const Mat& m) {
  double s = 0.0;
  for (double v : m.a) s += v * v;
  return std::sqrt(s);
}

// Solves A x = b in place by Gaussian elimination with partial pivoting.
// Returns false when the system is numerically singular.
inline bool solve_linear(Mat A, Vec b, Vec& x) {
  const int n = A.rows;
  if (A.cols != n || static_cast<int>(b.size()) != n) throw std::invalid_argument("solve_linear: shape mismatch");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::fabs(A.at(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::fabs(A.at(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best < 1e-300) return false;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(piv, j));
      std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(piv)]);
    }
    for (int i = k + 1; i < n; ++i) {
      const double f = A.at(i, k) / A.at(k, k);
      if (f == 0.0) continue;
      A.at(i, k) = 0.0;
      for (int j = k + 1; j < n; ++j) A.at(i, j) -= f * A.at(k, j);
      b[static_cast<std::size_t>(i)] -= f * b[static_cast<std::size_t>(k)];
    }
  }
  x.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) s -= A.at(i, j) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] = s / A.at(i, i);
  }
  return true;
}

// Cholesky solve for symmetric positive definite systems; returns false if
// a pivot drops below the tolerance.
inline bool cholesky_solve(Mat A, Vec b, Vec& x) {
  const int n = A.rows;
  if (A.cols != n || static_cast<int>(b.size()) != n) throw std::invalid_argument("cholesky_solve: shape mismatch");
  for (int k = 0; k < n; ++k) {
    double d = A.at(k, k);
    for (int j = 0; j < k; ++j) d -= A.at(k, j) * A.at(k, j);
    if (d <= 0.0) return false;
    const double l = std::sqrt(d);
    A.at(k, k) = l;
    for (int i = k + 1; i < n; ++i) {
      double s = A.at(i, k);
      for (int j = 0; j < k; ++j) s -= A.at(i, j) * A.at(k, j);
      A.at(i, k) = s / l;
    }
  }
  // forward then backward substitution with the lower factor
  for (int i = 0; i < n; ++i) {
    double s = b[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) s -= A.at(i, j) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(i)] = s / A.at(i, i);
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = b[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) s -= A.at(j, i) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(i)] = s / A.at(i, i);
  }
  x = std::move(b);
  return true;
}

}  // namespace cvx
