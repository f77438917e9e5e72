#pragma once

// The alternating involutions K_j and exact small-integer matrix algebra.
//
// All indices in this header are 1-based (row/line j of K_j), matching the way
// the identities are usually written; storage is Eigen's 0-based.

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aughts/checked.hpp"
#include "aughts/errors.hpp"

namespace aughts {

using Index = Eigen::Index;

template <typename Scalar = std::int64_t>
using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar = std::int64_t>
using IntRow = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

template <typename Scalar = std::int64_t>
using IntColumn = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using SmallIntMatrix = IntMatrix<std::int64_t>;
using AlternatingRow = IntRow<std::int64_t>;

enum class Direction { up, down };

namespace detail {

inline void require_dimension(Index n) {
  if (n < 1) throw ArgumentError("dimension must be positive, got " + std::to_string(n));
}

inline void require_index(Index n, Index j) {
  require_dimension(n);
  if (j < 1 || j > n)
    throw ArgumentError("index " + std::to_string(j) + " outside 1.." + std::to_string(n));
}

}  // namespace detail

/// r_j = ((-1)^j, (-1)^(j+1), ..., (-1)^(j+n-1)).
template <typename Scalar = std::int64_t>
IntRow<Scalar> alternating_row(Index n, Index j) {
  detail::require_index(n, j);
  IntRow<Scalar> r(n);
  for (Index k = 0; k < n; ++k) r(k) = sign_pow<Scalar>(j + k);
  return r;
}

/// Standard basis column e_j.
template <typename Scalar = std::int64_t>
IntColumn<Scalar> basis(Index n, Index j) {
  detail::require_index(n, j);
  IntColumn<Scalar> e = IntColumn<Scalar>::Zero(n);
  e(j - 1) = Scalar{1};
  return e;
}

/// K_j = Id - e_j e_j^T + e_j r_j: the identity with row j replaced by r_j.
template <typename Scalar = std::int64_t>
IntMatrix<Scalar> make_k(Index n, Index j) {
  detail::require_index(n, j);
  IntMatrix<Scalar> k = IntMatrix<Scalar>::Identity(n, n);
  k.row(j - 1) = alternating_row<Scalar>(n, j);
  return k;
}

/// Exact product with overflow detection. Works for any integral Eigen
/// operands; this is the brute-force route every closed form is checked against.
template <typename DerivedA, typename DerivedB>
auto mat_mul(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b)
    -> IntMatrix<typename DerivedA::Scalar> {
  using Scalar = typename DerivedA::Scalar;
  static_assert(std::is_integral_v<Scalar>, "mat_mul is for exact integer matrices");
  if (a.cols() != b.rows())
    throw ArgumentError("dimension mismatch: " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
  IntMatrix<Scalar> out(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < b.cols(); ++k) {
      Scalar acc{0};
      for (Index j = 0; j < a.cols(); ++j)
        acc = checked_add(acc, checked_mul(Scalar(a(i, j)), Scalar(b(j, k))));
      out(i, k) = acc;
    }
  }
  return out;
}

template <typename Derived>
bool is_trinary(const Eigen::MatrixBase<Derived>& m) {
  return (m.array().abs() <= typename Derived::Scalar{1}).all();
}

/// Product of two group elements; asserts the {-1, 0, 1} entry invariant.
template <typename DerivedA, typename DerivedB>
auto group_mul(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  auto out = mat_mul(a, b);
  if (!is_trinary(out)) throw ConsistencyError("group product left the {-1,0,1} entry range");
  return out;
}

/// K_{js[0]} K_{js[1]} ... by repeated checked multiplication.
template <typename Scalar = std::int64_t>
IntMatrix<Scalar> k_product(Index n, std::span<const Index> js) {
  detail::require_dimension(n);
  IntMatrix<Scalar> acc = IntMatrix<Scalar>::Identity(n, n);
  for (Index j : js) acc = group_mul(acc, make_k<Scalar>(n, j));
  return acc;
}

/// Closed form of K_{j_1} ... K_{j_s} for distinct indices, assembled entry by
/// entry without multiplying:
///   Id - sum e_j e_j^T + sum_{adjacent (j,l)} (-1)^(j+l) e_j e_l^T + e_{j_s} r_{j_s}.
template <typename Scalar = std::int64_t>
IntMatrix<Scalar> product_closed_form(Index n, std::span<const Index> js) {
  detail::require_dimension(n);
  if (js.empty() || static_cast<Index>(js.size()) > n)
    throw ArgumentError("closed form needs 1 <= s <= n indices");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (Index j : js) {
    detail::require_index(n, j);
    if (seen[static_cast<std::size_t>(j)])
      throw ArgumentError("closed form requires distinct indices; " + std::to_string(j) + " repeats");
    seen[static_cast<std::size_t>(j)] = true;
  }
  IntMatrix<Scalar> m = IntMatrix<Scalar>::Identity(n, n);
  for (Index j : js) m(j - 1, j - 1) = Scalar{0};
  for (std::size_t t = 0; t + 1 < js.size(); ++t)
    m(js[t] - 1, js[t + 1] - 1) = sign_pow<Scalar>(js[t] + js[t + 1]);
  const Index last = js.back();
  m.row(last - 1) = alternating_row<Scalar>(n, last);
  return m;
}

template <typename Scalar = std::int64_t>
IntMatrix<Scalar> product_closed_form(Index n, std::initializer_list<Index> js) {
  return product_closed_form<Scalar>(n, std::span<const Index>(js.begin(), js.size()));
}

/// K_n ... K_1 (down) or K_1 ... K_n (up).
template <typename Scalar = std::int64_t>
IntMatrix<Scalar> full_cycle_matrix(Index n, Direction direction) {
  detail::require_dimension(n);
  std::vector<Index> js(static_cast<std::size_t>(n));
  for (Index t = 0; t < n; ++t) js[static_cast<std::size_t>(t)] = direction == Direction::up ? t + 1 : n - t;
  return product_closed_form<Scalar>(n, js);
}

/// Powers of the sub-diagonal shift S = sum e_{j+1} e_j^T; S^n is zero.
template <typename Scalar = std::int64_t>
IntMatrix<Scalar> shift_power(Index n, Index k) {
  detail::require_dimension(n);
  if (k < 0 || k > n) throw ArgumentError("shift exponent must lie in 0..n");
  IntMatrix<Scalar> s = IntMatrix<Scalar>::Zero(n, n);
  for (Index l = k + 1; l <= n; ++l) s(l - 1, l - k - 1) = Scalar{1};
  return s;
}

template <typename Derived>
auto mat_pow(const Eigen::MatrixBase<Derived>& m, unsigned long k) -> IntMatrix<typename Derived::Scalar> {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw ArgumentError("mat_pow needs a square matrix");
  IntMatrix<Scalar> acc = IntMatrix<Scalar>::Identity(m.rows(), m.cols());
  for (unsigned long t = 0; t < k; ++t) acc = mat_mul(acc, m);
  return acc;
}

/// Smallest N >= 1 with m^N = Id; 0 if none up to `limit`.
template <typename Derived>
unsigned long multiplicative_order(const Eigen::MatrixBase<Derived>& m, unsigned long limit = 1u << 20) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw ArgumentError("order needs a square matrix");
  const IntMatrix<Scalar> id = IntMatrix<Scalar>::Identity(m.rows(), m.cols());
  IntMatrix<Scalar> acc = m;
  for (unsigned long k = 1; k <= limit; ++k) {
    if (acc == id) return k;
    acc = mat_mul(acc, m);
  }
  return 0;
}

}  // namespace aughts
