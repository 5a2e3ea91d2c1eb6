#include "wlpkit/exact_linalg.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace wlpkit {

namespace modp {

std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mulmod64(result, base, p);
    base = mulmod64(base, base, p);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n == small) return true;
    if (n % small == 0) return false;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // these bases are deterministic for all n < 2^64
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace modp

PrimeField::PrimeField(std::uint64_t modulus) : modulus_(modulus) {
  if (!modp::is_prime(modulus)) throw InvalidModulus("modulus " + std::to_string(modulus) + " is not prime");
}

std::uint64_t PrimeField::reduce(const BigInt& v) const {
  BigInt r = v % modulus_;
  if (r < 0) r += modulus_;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::reduce(std::int64_t v) const {
  const auto p = static_cast<__int128>(modulus_);
  __int128 r = static_cast<__int128>(v) % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long long v : r) entries_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

namespace {

template <class W>
std::size_t rank_reduced(const IntegerMatrix& m, const modp::Field<W>& field) {
  const PrimeField pf(field.modulus());
  modp::DenseMatrix<W> reduced(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = static_cast<W>(pf.reduce(m(i, j)));
  return modp::rank(reduced, field);
}

}  // namespace

std::size_t rank_mod_p(const IntegerMatrix& m, std::uint64_t p) {
  if (!modp::is_prime(p)) throw InvalidModulus("modulus " + std::to_string(p) + " is not prime");
  return modp::with_field(p, [&](auto field) { return rank_reduced(m, field); });
}

std::size_t rank_exact(const IntegerMatrix& m) {
  std::vector<BigInt> a = m.entries();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * cols + j]; };
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = rank; i < rows; ++i)
      if (at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    const BigInt piv = at(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const BigInt lead = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) at(i, j) = (piv * at(i, j) - lead * at(rank, j)) / prev;
      at(i, c) = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t random_prime(unsigned bits, std::uint64_t seed) {
  if (bits < 20 || bits > 62) throw std::invalid_argument("prime size must be between 20 and 62 bits");
  std::mt19937_64 rng(mix_seed(seed, 0x7072696d65ULL));
  const std::uint64_t lo = std::uint64_t{1} << (bits - 1);
  std::uniform_int_distribution<std::uint64_t> dist(lo, (lo << 1) - 1);
  for (;;) {
    const std::uint64_t candidate = dist(rng);
    if (modp::is_prime(candidate)) return candidate;
  }
}

RankCertificate certified_rank(const IntegerMatrix& m, std::optional<std::size_t> oracle_bound, unsigned trials,
                               std::uint64_t seed, bool exact_fallback, unsigned prime_bits) {
  if (trials < 1) throw std::invalid_argument("certified_rank needs at least one trial");
  RankCertificate cert;
  cert.trials = trials;
  cert.oracle_bound = oracle_bound;
  for (unsigned t = 0; t < trials; ++t) {
    const std::uint64_t p = random_prime(prime_bits, mix_seed(seed, t));
    cert.primes_used.push_back(p);
    cert.rank = std::max(cert.rank, rank_mod_p(m, p));
  }
  if (oracle_bound && cert.rank > *oracle_bound)
    throw RankInconsistency("modular rank " + std::to_string(cert.rank) + " exceeds oracle bound " +
                            std::to_string(*oracle_bound));
  if (exact_fallback) {
    const std::size_t exact = rank_exact(m);
    if (oracle_bound && exact > *oracle_bound)
      throw RankInconsistency("exact rank " + std::to_string(exact) + " exceeds oracle bound " +
                              std::to_string(*oracle_bound));
    cert.rank = exact;
    cert.method = RankMethod::FractionFreeExact;
    cert.certified = true;
    return cert;
  }
  cert.certified = oracle_bound.has_value() && cert.rank == *oracle_bound;
  return cert;
}

std::string to_string(RankMethod method) {
  return method == RankMethod::FractionFreeExact ? "fraction-free-exact" : "modular-trials";
}

}  // namespace wlpkit
