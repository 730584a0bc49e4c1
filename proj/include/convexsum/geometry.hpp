#pragma once

#include "convexsum/rational.hpp"
#include "convexsum/scalar.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace convexsum {

/// Number types the geometry is instantiated for.
template <class T>
concept ExactField = std::same_as<T, Rational> || std::same_as<T, Scalar>;

template <class T>
using Point = Eigen::Matrix<T, Eigen::Dynamic, 1>;

/// Column-major point cloud: one point per column.
template <class T>
using PointMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

/// Largest ambient dimension the hull engine accepts.  Bodies of the
/// verification harness live in dimension <= 4; direct products of two
/// witness triples reach dimension 8.
inline constexpr int kMaxDim = 8;

/// Thrown when operands live in different ambient dimensions.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <ExactField T>
bool lex_less(const Point<T>& x, const Point<T>& y) {
  for (Index i = 0; i < x.size(); ++i) {
    if (x[i] < y[i]) return true;
    if (y[i] < x[i]) return false;
  }
  return false;
}

template <ExactField T>
bool lex_less_col(const PointMatrix<T>& m, Index i, Index j) {
  for (Index r = 0; r < m.rows(); ++r) {
    if (m(r, i) < m(r, j)) return true;
    if (m(r, j) < m(r, i)) return false;
  }
  return false;
}

template <ExactField T>
bool columns_equal(const PointMatrix<T>& m, Index i, Index j) {
  for (Index r = 0; r < m.rows(); ++r) {
    if (!(m(r, i) == m(r, j))) return false;
  }
  return true;
}

/// Sorts columns lexicographically and drops duplicates.
template <ExactField T>
PointMatrix<T> sorted_unique_columns(const PointMatrix<T>& m) {
  std::vector<Index> order(static_cast<std::size_t>(m.cols()));
  for (Index i = 0; i < m.cols(); ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return lex_less_col<T>(m, a, b); });
  std::vector<Index> keep;
  for (Index idx : order) {
    if (keep.empty() || !columns_equal<T>(m, keep.back(), idx)) keep.push_back(idx);
  }
  PointMatrix<T> out(m.rows(), static_cast<Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) out.col(static_cast<Index>(c)) = m.col(keep[c]);
  return out;
}

template <ExactField T>
T dot(const Point<T>& x, const Point<T>& y) {
  T acc(0);
  for (Index i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

inline Scalar to_scalar(const Rational& x) { return Scalar(x); }
inline const Scalar& to_scalar(const Scalar& x) { return x; }

}  // namespace convexsum
