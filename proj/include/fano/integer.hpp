#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <tuple>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace fano {

using Int = std::int64_t;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMat = Mat<Int>;
using IntVec = Vec<Int>;

// Overflow-checked arithmetic. Built-in integers throw instead of wrapping;
// arbitrary-precision scalars fall through to their own operators.
namespace arith {

template <class S>
S add(S a, S b) {
  if constexpr (std::is_integral_v<S>) {
    S r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
  } else {
    return a + b;
  }
}

template <class S>
S sub(S a, S b) {
  if constexpr (std::is_integral_v<S>) {
    S r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sub");
    return r;
  } else {
    return a - b;
  }
}

template <class S>
S mul(S a, S b) {
  if constexpr (std::is_integral_v<S>) {
    S r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
  } else {
    return a * b;
  }
}

template <class S>
S abs(S a) {
  return a < S(0) ? S(0) - a : a;
}

template <class S>
S gcd(S a, S b) {
  a = abs(a);
  b = abs(b);
  while (b != S(0)) {
    S t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Floor and ceiling of a/b for b != 0.
template <class S>
S floor_div(S a, S b) {
  S q = a / b;
  if ((a % b != S(0)) && ((a < S(0)) != (b < S(0)))) q = q - S(1);
  return q;
}

template <class S>
S ceil_div(S a, S b) {
  S q = a / b;
  if ((a % b != S(0)) && ((a < S(0)) == (b < S(0)))) q = q + S(1);
  return q;
}

}  // namespace arith

// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}.
template <class Scalar>
struct SmithForm {
  Mat<Scalar> U;
  Mat<Scalar> D;
  Mat<Scalar> V;
  Mat<Scalar> V_inv;
  int rank = 0;

  std::vector<Scalar> divisors() const {
    std::vector<Scalar> out;
    for (int i = 0; i < rank; ++i) out.push_back(D(i, i));
    return out;
  }
};

namespace detail {

template <class S>
void row_combine(Mat<S>& M, int i, int j, S a, S b, S c, S d) {
  // (row_i, row_j) <- (a row_i + b row_j, c row_i + d row_j)
  for (int k = 0; k < M.cols(); ++k) {
    S x = M(i, k), y = M(j, k);
    M(i, k) = arith::add(arith::mul(a, x), arith::mul(b, y));
    M(j, k) = arith::add(arith::mul(c, x), arith::mul(d, y));
  }
}

template <class S>
void col_combine(Mat<S>& M, int i, int j, S a, S b, S c, S d) {
  // (col_i, col_j) <- (a col_i + b col_j, c col_i + d col_j)
  for (int k = 0; k < M.rows(); ++k) {
    S x = M(k, i), y = M(k, j);
    M(k, i) = arith::add(arith::mul(a, x), arith::mul(b, y));
    M(k, j) = arith::add(arith::mul(c, x), arith::mul(d, y));
  }
}

// Extended gcd: returns (g, s, t) with s a + t b = g >= 0.
template <class S>
std::tuple<S, S, S> xgcd(S a, S b) {
  S old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != S(0)) {
    S q = old_r / r;
    S tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < S(0)) return {S(0) - old_r, S(0) - old_s, S(0) - old_t};
  return {old_r, old_s, old_t};
}

}  // namespace detail

template <class Scalar>
SmithForm<Scalar> smith_normal_form(const Mat<Scalar>& A) {
  using S = Scalar;
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  SmithForm<S> f;
  f.D = A;
  f.U = Mat<S>::Identity(m, m);
  f.V = Mat<S>::Identity(n, n);
  f.V_inv = Mat<S>::Identity(n, n);
  Mat<S>& D = f.D;

  // Column op on D and V is mirrored by the inverse row op on V_inv.
  auto col_op = [&](int i, int j, S a, S b, S c, S d) {
    // new (ci, cj) = (a ci + b cj, c ci + d cj), determinant ad - bc = +-1
    detail::col_combine(D, i, j, a, b, c, d);
    detail::col_combine(f.V, i, j, a, b, c, d);
    S det = a * d - b * c;
    // V' = V T with T = [[a, c], [b, d]], so V_inv' = T^-1 V_inv
    detail::row_combine(f.V_inv, i, j, d * det, S(0) - c * det, S(0) - b * det, a * det);
  };
  auto row_op = [&](int i, int j, S a, S b, S c, S d) {
    detail::row_combine(D, i, j, a, b, c, d);
    detail::row_combine(f.U, i, j, a, b, c, d);
  };
  auto swap_cols = [&](int i, int j) {
    if (i != j) col_op(i, j, S(0), S(1), S(1), S(0));
  };
  auto swap_rows = [&](int i, int j) {
    if (i != j) row_op(i, j, S(0), S(1), S(1), S(0));
  };

  int t = 0;
  while (t < m && t < n) {
    // pivot: smallest nonzero absolute value in the trailing block
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (D(i, j) != S(0) && (pi < 0 || arith::abs(D(i, j)) < arith::abs(D(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < m; ++i) {
        if (D(i, t) == S(0)) continue;
        if (D(i, t) % D(t, t) == S(0)) {
          row_op(t, i, S(1), S(0), S(0) - D(i, t) / D(t, t), S(1));
          continue;
        }
        auto [g, s, u] = detail::xgcd(D(t, t), D(i, t));
        S a = D(t, t) / g, b = D(i, t) / g;
        row_op(t, i, s, u, S(0) - b, a);
      }
      for (int j = t + 1; j < n; ++j) {
        if (D(t, j) == S(0)) continue;
        if (D(t, j) % D(t, t) == S(0)) {
          col_op(t, j, S(1), S(0), S(0) - D(t, j) / D(t, t), S(1));
          continue;
        }
        auto [g, s, u] = detail::xgcd(D(t, t), D(t, j));
        S a = D(t, t) / g, b = D(t, j) / g;
        col_op(t, j, s, u, S(0) - b, a);
        dirty = true;
      }
      if (!dirty) {
        for (int i = t + 1; i < m && !dirty; ++i)
          if (D(i, t) != S(0)) dirty = true;
      }
      if (!dirty) {
        // divisibility: fold a row with an indivisible entry into row t
        for (int i = t + 1; i < m && !dirty; ++i)
          for (int j = t + 1; j < n && !dirty; ++j)
            if (D(i, j) % D(t, t) != S(0)) {
              row_op(t, i, S(1), S(1), S(0), S(1));
              dirty = true;
            }
      }
    }
    if (D(t, t) < S(0)) {
      for (int k = 0; k < n; ++k) D(t, k) = S(0) - D(t, k);
      for (int k = 0; k < m; ++k) f.U(t, k) = S(0) - f.U(t, k);
    }
    ++t;
  }
  f.rank = t;
  for (int i = 0; i < std::min(m, n); ++i)
    if (D(i, i) == S(0)) {
      f.rank = i;
      break;
    }
  return f;
}

// Rank by fraction-free elimination.
template <class Scalar>
int matrix_rank(Mat<Scalar> M) {
  using S = Scalar;
  const int m = static_cast<int>(M.rows()), n = static_cast<int>(M.cols());
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (M(i, c) != S(0)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    M.row(r).swap(M.row(p));
    for (int i = r + 1; i < m; ++i) {
      if (M(i, c) == S(0)) continue;
      S g = arith::gcd(M(r, c), M(i, c));
      S a = M(r, c) / g, b = M(i, c) / g;
      for (int k = c; k < n; ++k) M(i, k) = arith::sub(arith::mul(a, M(i, k)), arith::mul(b, M(r, k)));
      S rg = 0;
      for (int k = c; k < n; ++k) rg = arith::gcd(rg, M(i, k));
      if (rg > S(1))
        for (int k = c; k < n; ++k) M(i, k) /= rg;
    }
    ++r;
  }
  return r;
}

// Fraction-free (Bareiss) determinant.
template <class Scalar>
Scalar determinant(Mat<Scalar> M) {
  using S = Scalar;
  const int n = static_cast<int>(M.rows());
  if (n == 0) return S(1);
  S sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (M(k, k) == S(0)) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (M(i, k) != S(0)) {
          p = i;
          break;
        }
      if (p < 0) return S(0);
      M.row(k).swap(M.row(p));
      sign = S(0) - sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        M(i, j) = arith::sub(arith::mul(M(i, j), M(k, k)), arith::mul(M(i, k), M(k, j))) / prev;
    prev = M(k, k);
  }
  return arith::mul(sign, M(n - 1, n - 1));
}

// Adjugate: A adj(A) = det(A) I.
template <class Scalar>
Mat<Scalar> adjugate(const Mat<Scalar>& A) {
  const int n = static_cast<int>(A.rows());
  Mat<Scalar> adj(n, n);
  if (n == 1) {
    adj(0, 0) = Scalar(1);
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat<Scalar> minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = A(r, c);
        }
        ++rr;
      }
      Scalar d = determinant<Scalar>(minor);
      adj(i, j) = ((i + j) % 2 == 0) ? d : Scalar(0) - d;
    }
  return adj;
}

// Divide a vector by the gcd of its entries.
template <class Scalar>
void make_primitive(Vec<Scalar>& v) {
  Scalar g = 0;
  for (int i = 0; i < v.size(); ++i) g = arith::gcd(g, v(i));
  if (g > Scalar(1))
    for (int i = 0; i < v.size(); ++i) v(i) /= g;
}

}  // namespace fano
