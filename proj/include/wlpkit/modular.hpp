#pragma once

// Prime-field arithmetic and incremental row echelon forms.
//
// Two word sizes are supported: 32-bit storage for moduli below 2^31 (the
// default 31-bit primes) and 64-bit storage for moduli below 2^63. Row
// updates use Shoup's precomputed-quotient multiplication so the inner loop
// needs no division.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "wlpkit/errors.hpp"

namespace wlpkit::modp {

bool is_prime(std::uint64_t n);

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

template <class W>
struct WordTraits;

template <>
struct WordTraits<std::uint32_t> {
  using Wide = std::uint64_t;
  static constexpr unsigned kBits = 32;
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31);
};

template <>
struct WordTraits<std::uint64_t> {
  using Wide = unsigned __int128;
  static constexpr unsigned kBits = 64;
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 63);
};

template <class W>
class Field {
  static_assert(std::is_same_v<W, std::uint32_t> || std::is_same_v<W, std::uint64_t>);
  using Wide = typename WordTraits<W>::Wide;

 public:
  using word = W;

  explicit Field(std::uint64_t p) : p_(static_cast<W>(p)) {
    if (p < 2 || p >= WordTraits<W>::kMaxModulus || !is_prime(p))
      throw InvalidModulus("modulus is not a prime in the supported range");
  }

  W modulus() const noexcept { return p_; }

  W add(W a, W b) const noexcept {
    W s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  W sub(W a, W b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  W neg(W a) const noexcept { return a == 0 ? 0 : p_ - a; }
  W mul(W a, W b) const noexcept { return static_cast<W>(static_cast<Wide>(a) * b % p_); }
  W inv(W a) const { return static_cast<W>(powmod64(a, p_ - 2, p_)); }

  W from_signed(std::int64_t v) const noexcept {
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = v % p;
    return static_cast<W>(r < 0 ? r + p : r);
  }
  W from_unsigned(std::uint64_t v) const noexcept { return static_cast<W>(v % p_); }

  /// y[i] <- y[i] - c * x[i] for i < n, with c already reduced.
  void sub_mul(W* y, W c, const W* x, std::size_t n) const noexcept {
    if (c == 0) return;
    const W p = p_;
    const W cp = static_cast<W>((static_cast<Wide>(c) << WordTraits<W>::kBits) / p);
    for (std::size_t i = 0; i < n; ++i) {
      const W xi = x[i];
      const W q = static_cast<W>((static_cast<Wide>(cp) * xi) >> WordTraits<W>::kBits);
      W t = static_cast<W>(c * xi - q * p);
      t = t >= p ? t - p : t;
      const W yi = y[i];
      y[i] = yi >= t ? yi - t : yi + (p - t);
    }
  }

  /// x[i] <- c * x[i] for i < n.
  void scale(W* x, W c, std::size_t n) const noexcept {
    const W p = p_;
    const W cp = static_cast<W>((static_cast<Wide>(c) << WordTraits<W>::kBits) / p);
    for (std::size_t i = 0; i < n; ++i) {
      const W xi = x[i];
      const W q = static_cast<W>((static_cast<Wide>(cp) * xi) >> WordTraits<W>::kBits);
      W t = static_cast<W>(c * xi - q * p);
      x[i] = t >= p ? t - p : t;
    }
  }

 private:
  W p_;
};

/// Dense row-major matrix over a prime field.
template <class W>
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<W> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, W{0}) {}

  W& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  W operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  std::span<W> row(std::size_t i) { return {data.data() + i * cols, cols}; }
  std::span<const W> row(std::size_t i) const { return {data.data() + i * cols, cols}; }
};

/// Row echelon basis of a subspace of F_p^cols, grown one vector at a time.
///
/// Every stored row is normalized so that its pivot (first nonzero column)
/// equals 1 and is zero at the pivots of all rows stored before it.
template <class W>
class Echelon {
 public:
  Echelon(Field<W> field, std::size_t cols)
      : field_(field), cols_(cols), row_of_col_(cols, -1) {}

  const Field<W>& field() const noexcept { return field_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == cols_; }

  /// Adds `v` to the spanning set. Returns true when the rank grows.
  bool insert(std::vector<W> v) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const W a = v[c];
      if (a == 0) continue;
      const long k = row_of_col_[c];
      if (k >= 0) {
        field_.sub_mul(v.data() + c, a, rows_[k].data() + c, cols_ - c);
        continue;
      }
      field_.scale(v.data() + c, field_.inv(a), cols_ - c);
      row_of_col_[c] = static_cast<long>(rows_.size());
      pivots_.push_back(c);
      rows_.push_back(std::move(v));
      reduced_ = false;
      return true;
    }
    return false;
  }

  /// Reduces `v` in place so that it vanishes on every pivot column.
  void reduce(std::span<W> v) const {
    for (std::size_t c = 0; c < cols_; ++c) {
      const W a = v[c];
      if (a == 0) continue;
      const long k = row_of_col_[c];
      if (k >= 0) field_.sub_mul(v.data() + c, a, rows_[k].data() + c, cols_ - c);
    }
  }

  bool contains(std::vector<W> v) const {
    reduce(v);
    for (W a : v)
      if (a != 0) return false;
    return true;
  }

  /// Back-substitutes so every row vanishes on every other pivot column.
  void make_reduced() {
    if (reduced_) return;
    std::vector<std::size_t> order(pivots_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    // rows with larger pivots first
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] > pivots_[b]; });
    for (std::size_t k : order) {
      auto& row = rows_[k];
      for (std::size_t c = pivots_[k] + 1; c < cols_; ++c) {
        const W a = row[c];
        if (a == 0) continue;
        const long j = row_of_col_[c];
        if (j >= 0) field_.sub_mul(row.data() + c, a, rows_[j].data() + c, cols_ - c);
      }
    }
    reduced_ = true;
  }

  bool is_reduced() const noexcept { return reduced_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  long row_of_col(std::size_t c) const noexcept { return row_of_col_[c]; }
  const std::vector<W>& row(std::size_t k) const noexcept { return rows_[k]; }

  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    out.reserve(cols_ - rows_.size());
    for (std::size_t c = 0; c < cols_; ++c)
      if (row_of_col_[c] < 0) out.push_back(c);
    return out;
  }

  /// Null space of the inserted rows: vectors x with <row, x> = 0 for all rows.
  std::vector<std::vector<W>> kernel_basis() {
    make_reduced();
    std::vector<std::vector<W>> out;
    for (std::size_t f : free_columns()) {
      std::vector<W> x(cols_, W{0});
      x[f] = 1;
      for (std::size_t k = 0; k < rows_.size(); ++k) x[pivots_[k]] = field_.neg(rows_[k][f]);
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  Field<W> field_;
  std::size_t cols_;
  std::vector<std::vector<W>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> row_of_col_;
  bool reduced_ = true;
};

template <class W>
std::size_t rank(const DenseMatrix<W>& m, const Field<W>& field) {
  // eliminate along the shorter side
  const bool by_rows = m.cols <= m.rows;
  const std::size_t n = by_rows ? m.rows : m.cols;
  const std::size_t len = by_rows ? m.cols : m.rows;
  Echelon<W> e(field, len);
  for (std::size_t i = 0; i < n && !e.full(); ++i) {
    std::vector<W> v(len);
    for (std::size_t j = 0; j < len; ++j) v[j] = by_rows ? m(i, j) : m(j, i);
    e.insert(std::move(v));
  }
  return e.rank();
}

template <class W>
DenseMatrix<W> multiply(const DenseMatrix<W>& a, const DenseMatrix<W>& b, const Field<W>& field) {
  DenseMatrix<W> out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const W x = a(i, k);
      if (x == 0) continue;
      // out_i += x * b_k  ==  out_i -= (p - x) * b_k
      field.sub_mul(out.data.data() + i * out.cols, field.neg(x), b.data.data() + k * b.cols, b.cols);
    }
  return out;
}

/// Calls `fn(Field<W>)` with the narrowest word type able to hold `p`.
template <class Fn>
decltype(auto) with_field(std::uint64_t p, Fn&& fn) {
  if (p < WordTraits<std::uint32_t>::kMaxModulus) return fn(Field<std::uint32_t>(p));
  return fn(Field<std::uint64_t>(p));
}

}  // namespace wlpkit::modp
