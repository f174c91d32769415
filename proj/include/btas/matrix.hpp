// Copyright 2026 The BTAS Authors
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

#ifndef BTAS_MATRIX_HPP_
#define BTAS_MATRIX_HPP_

// Dense tropical vectors and matrices and the level-2/level-3 kernels over
// them.
//
// Every product reduces the inner index k in ascending order, and parallel
// execution only partitions the output index space into tiles, so a product
// is bit-identical for every TileSpec.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "btas/error.hpp"
#include "btas/semiring.hpp"

namespace btas {

inline std::size_t default_worker_count() noexcept {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Partition of a product's output into tile_rows x tile_cols blocks, each
/// computed as one task by a pool of worker_count threads (the calling
/// thread included).
struct TileSpec {
  std::size_t tile_rows = 8;
  std::size_t tile_cols = 8;
  std::size_t worker_count = default_worker_count();

  void validate() const {
    if (tile_rows == 0 || tile_cols == 0) {
      throw InvalidArgument("tile dimensions must be at least 1");
    }
    if (worker_count == 0) throw InvalidArgument("worker_count must be at least 1");
  }
};

template <WeightScalar T>
class TropicalVector {
 public:
  using weight_type = Weight<T>;

  TropicalVector(std::size_t len, SemiringKind kind,
                 weight_type fill = weight_type::infinity())
      : kind_(kind), data_(check_len(len), fill) {}

  TropicalVector(SemiringKind kind, std::vector<weight_type> data)
      : kind_(kind), data_(std::move(data)) {
    check_len(data_.size());
  }

  TropicalVector(SemiringKind kind, std::initializer_list<weight_type> data)
      : TropicalVector(kind, std::vector<weight_type>(data)) {}

  std::size_t size() const noexcept { return data_.size(); }
  SemiringKind kind() const noexcept { return kind_; }

  weight_type operator[](std::size_t i) const { return data_[i]; }
  weight_type& operator[](std::size_t i) { return data_[i]; }

  std::span<const weight_type> data() const noexcept { return data_; }

  bool saturated() const noexcept { return saturated_; }
  void mark_saturated(bool s = true) noexcept { saturated_ = s; }

  friend bool operator==(const TropicalVector& a, const TropicalVector& b) {
    return a.kind_ == b.kind_ && a.data_ == b.data_;
  }

 private:
  static std::size_t check_len(std::size_t len) {
    if (len == 0) throw DimensionError("vector length must be positive");
    return len;
  }

  SemiringKind kind_;
  std::vector<weight_type> data_;
  bool saturated_ = false;
};

/// Dense row-major matrix of tropical weights over a fixed semiring.
template <WeightScalar T>
class TropicalMatrix {
 public:
  using weight_type = Weight<T>;
  using value_type = T;

  TropicalMatrix(std::size_t rows, std::size_t cols, SemiringKind kind,
                 weight_type fill = weight_type::infinity())
      : rows_(rows), cols_(cols), kind_(kind) {
    check_shape(rows, cols);
    data_.assign(rows * cols, fill);
  }

  TropicalMatrix(std::size_t rows, std::size_t cols, SemiringKind kind,
                 std::vector<weight_type> data)
      : rows_(rows), cols_(cols), kind_(kind), data_(std::move(data)) {
    check_shape(rows, cols);
    if (data_.size() != rows * cols) {
      throw DimensionError("matrix data holds " + std::to_string(data_.size()) +
                           " entries, expected " + std::to_string(rows * cols));
    }
  }

  /// Row-by-row literal; all rows must have the same length.
  static TropicalMatrix from_rows(
      SemiringKind kind,
      std::initializer_list<std::initializer_list<weight_type>> rows) {
    if (rows.size() == 0) throw DimensionError("matrix needs at least one row");
    const std::size_t cols = rows.begin()->size();
    std::vector<weight_type> data;
    data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
      if (r.size() != cols) throw DimensionError("ragged matrix literal");
      data.insert(data.end(), r.begin(), r.end());
    }
    return TropicalMatrix(rows.size(), cols, kind, std::move(data));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  SemiringKind kind() const noexcept { return kind_; }

  weight_type operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  weight_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const weight_type> row(std::size_t i) const noexcept {
    return std::span<const weight_type>(data_).subspan(i * cols_, cols_);
  }
  std::span<weight_type> row(std::size_t i) noexcept {
    return std::span<weight_type>(data_).subspan(i * cols_, cols_);
  }
  std::span<const weight_type> data() const noexcept { return data_; }

  /// Set when some finite sum feeding this matrix overflowed and was
  /// saturated to Infinity.
  bool saturated() const noexcept { return saturated_; }
  void mark_saturated(bool s = true) noexcept { saturated_ = s; }

  /// Entrywise equality of shape, kind and weights; the saturation flag is
  /// not compared.
  friend bool operator==(const TropicalMatrix& a, const TropicalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.kind_ == b.kind_ &&
           a.data_ == b.data_;
  }

 private:
  static void check_shape(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
      throw DimensionError("matrix dimensions must be positive, got " +
                           std::to_string(rows) + "x" + std::to_string(cols));
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  SemiringKind kind_;
  std::vector<weight_type> data_;
  bool saturated_ = false;
};

namespace detail {

inline void require_same_kind(SemiringKind a, SemiringKind b) {
  if (a != b) {
    throw KindError("semiring mismatch: " + to_string(a) + " vs " + to_string(b));
  }
}

inline std::string shape_str(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

// Computes out(i, j) for i in [r0, r1), j in [c0, c1). Each entry starts
// from the accumulator (or Infinity) and folds k = 0, 1, ... in order.
// Returns whether any finite sum saturated.
template <SemiringKind Kind, WeightScalar T>
bool matmul_tile(const TropicalMatrix<T>& x, const TropicalMatrix<T>& y,
                 const TropicalMatrix<T>* acc, TropicalMatrix<T>& out,
                 std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
  bool saturated = false;
  const std::size_t inner = x.cols();
  for (std::size_t i = r0; i < r1; ++i) {
    auto out_row = out.row(i).subspan(c0, c1 - c0);
    if (acc != nullptr) {
      const auto acc_row = acc->row(i).subspan(c0, c1 - c0);
      std::copy(acc_row.begin(), acc_row.end(), out_row.begin());
    } else {
      std::fill(out_row.begin(), out_row.end(), Weight<T>::infinity());
    }
    const auto x_row = x.row(i);
    for (std::size_t k = 0; k < inner; ++k) {
      const Weight<T> xik = x_row[k];
      // Infinity absorbs the product and is neutral for the sum.
      if (xik.is_infinite()) continue;
      const auto y_row = y.row(k).subspan(c0, c1 - c0);
      for (std::size_t j = 0; j < out_row.size(); ++j) {
        const auto p = checked_tmul(xik, y_row[j]);
        saturated = saturated || p.saturated;
        out_row[j] = tadd(Kind, out_row[j], p.value);
      }
    }
  }
  return saturated;
}

template <SemiringKind Kind, WeightScalar T>
bool run_tiled(const TropicalMatrix<T>& x, const TropicalMatrix<T>& y,
               const TropicalMatrix<T>* acc, TropicalMatrix<T>& out,
               const TileSpec& tiles) {
  const std::size_t rows = out.rows();
  const std::size_t cols = out.cols();
  const std::size_t tile_rows = std::min(tiles.tile_rows, rows);
  const std::size_t tile_cols = std::min(tiles.tile_cols, cols);
  const std::size_t row_tiles = (rows + tile_rows - 1) / tile_rows;
  const std::size_t col_tiles = (cols + tile_cols - 1) / tile_cols;
  const std::size_t total = row_tiles * col_tiles;

  std::atomic<std::size_t> next{0};
  std::atomic<bool> saturated{false};
  auto work = [&] {
    bool local = false;
    for (std::size_t t = next.fetch_add(1); t < total; t = next.fetch_add(1)) {
      const std::size_t r0 = (t / col_tiles) * tile_rows;
      const std::size_t c0 = (t % col_tiles) * tile_cols;
      local |= matmul_tile<Kind>(x, y, acc, out, r0, std::min(r0 + tile_rows, rows),
                                 c0, std::min(c0 + tile_cols, cols));
    }
    if (local) saturated.store(true, std::memory_order_relaxed);
  };

  const std::size_t workers = std::min(tiles.worker_count, total);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }  // pool joins here
  return saturated.load();
}

template <WeightScalar T>
TropicalMatrix<T> matmul_impl(const TropicalMatrix<T>& x, const TropicalMatrix<T>& y,
                              const TropicalMatrix<T>* acc, const TileSpec& tiles) {
  require_same_kind(x.kind(), y.kind());
  if (x.cols() != y.rows()) {
    throw DimensionError("matmul: " + shape_str(x.rows(), x.cols()) + " times " +
                         shape_str(y.rows(), y.cols()));
  }
  if (acc != nullptr) {
    require_same_kind(x.kind(), acc->kind());
    if (acc->rows() != x.rows() || acc->cols() != y.cols()) {
      throw DimensionError("matmul: accumulator is " +
                           shape_str(acc->rows(), acc->cols()) + ", expected " +
                           shape_str(x.rows(), y.cols()));
    }
  }
  tiles.validate();

  TropicalMatrix<T> out(x.rows(), y.cols(), x.kind());
  const bool saturated =
      x.kind() == SemiringKind::MinPlus
          ? run_tiled<SemiringKind::MinPlus>(x, y, acc, out, tiles)
          : run_tiled<SemiringKind::MaxPlus>(x, y, acc, out, tiles);
  out.mark_saturated(saturated || x.saturated() || y.saturated() ||
                     (acc != nullptr && acc->saturated()));
  return out;
}

}  // namespace detail

/// Zero diagonal, Infinity elsewhere: the two-sided unit of matmul.
template <WeightScalar T>
TropicalMatrix<T> identity_matrix(SemiringKind kind, std::size_t n) {
  if (n == 0) throw DimensionError("identity matrix needs n >= 1");
  TropicalMatrix<T> id(n, n, kind);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = multiplicative_identity<T>(kind);
  return id;
}

/// Entrywise a ⊕ b.
template <WeightScalar T>
TropicalMatrix<T> ew_add(const TropicalMatrix<T>& a, const TropicalMatrix<T>& b) {
  detail::require_same_kind(a.kind(), b.kind());
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("ew_add: " + detail::shape_str(a.rows(), a.cols()) +
                         " vs " + detail::shape_str(b.rows(), b.cols()));
  }
  TropicalMatrix<T> out(a.rows(), a.cols(), a.kind());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = tadd(a.kind(), a(i, j), b(i, j));
    }
  }
  out.mark_saturated(a.saturated() || b.saturated());
  return out;
}

/// out(i, j) = ⊕_k x(i, k) ⊗ y(k, j).
template <WeightScalar T>
TropicalMatrix<T> matmul(const TropicalMatrix<T>& x, const TropicalMatrix<T>& y,
                         const TileSpec& tiles = {}) {
  return detail::matmul_impl(x, y, static_cast<const TropicalMatrix<T>*>(nullptr),
                             tiles);
}

/// Fused multiply-accumulate Z ⊕ X ⊗ Y; `accumulate_into` is not modified.
template <WeightScalar T>
TropicalMatrix<T> matmul(const TropicalMatrix<T>& x, const TropicalMatrix<T>& y,
                         const TropicalMatrix<T>& accumulate_into,
                         const TileSpec& tiles = {}) {
  return detail::matmul_impl(x, y, &accumulate_into, tiles);
}

/// out(i) = ⊕_k a(i, k) ⊗ v(k).
template <WeightScalar T>
TropicalVector<T> matvec(const TropicalMatrix<T>& a, const TropicalVector<T>& v) {
  detail::require_same_kind(a.kind(), v.kind());
  if (a.cols() != v.size()) {
    throw DimensionError("matvec: " + detail::shape_str(a.rows(), a.cols()) +
                         " times vector of length " + std::to_string(v.size()));
  }
  TropicalVector<T> out(a.rows(), a.kind());
  bool saturated = a.saturated() || v.saturated();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Weight<T> acc = Weight<T>::infinity();
    for (std::size_t k = 0; k < a.cols(); ++k) {
      acc = tadd(a.kind(), acc, tmul(a.kind(), a(i, k), v[k], saturated));
    }
    out[i] = acc;
  }
  out.mark_saturated(saturated);
  return out;
}

/// a^p by binary exponentiation: floor(log2 p) squarings plus popcount(p) - 1
/// combining products. When `multiplications` is non-null it receives the
/// number of products performed.
template <WeightScalar T>
TropicalMatrix<T> matrix_power(const TropicalMatrix<T>& a, std::size_t p,
                               const TileSpec& tiles = {},
                               std::size_t* multiplications = nullptr) {
  if (!a.is_square()) {
    throw DimensionError("matrix_power needs a square matrix, got " +
                         detail::shape_str(a.rows(), a.cols()));
  }
  if (p == 0) throw InvalidArgument("matrix_power needs p >= 1");
  std::size_t count = 0;
  std::optional<TropicalMatrix<T>> result;
  TropicalMatrix<T> base = a;
  while (true) {
    if (p & 1U) {
      if (result) {
        result = matmul(*result, base, tiles);
        ++count;
      } else {
        result = base;
      }
    }
    p >>= 1U;
    if (p == 0) break;
    base = matmul(base, base, tiles);
    ++count;
  }
  if (multiplications != nullptr) *multiplications = count;
  return std::move(*result);
}

}  // namespace btas

#endif  // BTAS_MATRIX_HPP_
