#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wlpkit/errors.hpp"
#include "wlpkit/modular.hpp"

namespace wlpkit {

using BigInt = boost::multiprecision::cpp_int;

/// The field with `modulus` elements; construction checks primality.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t reduce(const BigInt& v) const;
  std::uint64_t reduce(std::int64_t v) const;

 private:
  std::uint64_t modulus_;
};

/// Dense row-major integer matrix.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<BigInt>& entries() const noexcept { return entries_; }

  IntegerMatrix transpose() const;
  bool operator==(const IntegerMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

enum class RankMethod { ModularTrials, FractionFreeExact };

struct RankCertificate {
  std::size_t rank = 0;
  RankMethod method = RankMethod::ModularTrials;
  unsigned trials = 0;
  std::vector<std::uint64_t> primes_used;
  std::optional<std::size_t> oracle_bound;
  bool certified = false;
};

/// Rank over F_p of the reduction of `m`. Throws InvalidModulus when p is not prime.
std::size_t rank_mod_p(const IntegerMatrix& m, std::uint64_t p);

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank_exact(const IntegerMatrix& m);

/// Max of `rank_mod_p` over `trials` seeded random primes, certified when it
/// meets `oracle_bound` or when `exact_fallback` runs fraction-free elimination.
/// A modular rank above the oracle bound raises RankInconsistency.
RankCertificate certified_rank(const IntegerMatrix& m, std::optional<std::size_t> oracle_bound,
                               unsigned trials, std::uint64_t seed, bool exact_fallback = false,
                               unsigned prime_bits = 31);

/// Uniformly sampled prime in [2^(bits-1), 2^bits); 20 <= bits <= 62.
std::uint64_t random_prime(unsigned bits, std::uint64_t seed);

/// Derives an independent 64-bit stream seed (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

std::string to_string(RankMethod method);

}  // namespace wlpkit
