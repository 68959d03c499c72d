#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace srginv {

/// How matrix-power entries are computed.
///
/// `exact` uses checked unsigned 64-bit arithmetic and throws OverflowError
/// when an entry does not fit. `modular` reduces every entry modulo the two
/// primes in `kModuli`; each invariant value then occupies two consecutive
/// slots (residue mod the first prime, residue mod the second).
enum class Arithmetic { exact, modular };

enum class InvariantMode { trace, sorted_diag };

inline constexpr std::array<std::uint64_t, 2> kModuli = {
    2305843009213693951ULL,  // 2^61 - 1
    2305843009213693921ULL,  // largest prime below 2^61 - 1
};

/// Number of vector slots one invariant value occupies.
constexpr std::size_t value_width(Arithmetic arithmetic) {
  return arithmetic == Arithmetic::exact ? 1 : kModuli.size();
}

using InvariantVector = std::vector<std::uint64_t>;

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

/// Exact or modular scalar operations. A default-constructed Ring is exact.
class Ring {
 public:
  Ring() = default;
  static Ring exact() { return Ring{}; }
  static Ring modulo(std::uint64_t modulus) { return Ring{modulus}; }

  bool is_exact() const { return modulus_ == 0; }
  std::uint64_t modulus() const { return modulus_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (modulus_ == 0) return checked_add(a, b);
    std::uint64_t s = a + b;  // both < 2^61
    return s >= modulus_ ? s - modulus_ : s;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (modulus_ == 0) return checked_mul(a, b);
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % modulus_);
  }
  std::uint64_t reduce(std::uint64_t a) const { return modulus_ == 0 ? a : a % modulus_; }

 private:
  explicit Ring(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_ = 0;
};

/// Rings an invariant is evaluated over, one per value slot.
std::vector<Ring> rings_for(Arithmetic arithmetic);

/// Dense square matrix of unsigned 64-bit entries, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  static Matrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  std::uint64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<const std::uint64_t> row(std::size_t i) const {
    return {data_.data() + i * n_, n_};
  }

  std::uint64_t trace(const Ring& ring) const;
  std::vector<std::uint64_t> diagonal() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b, const Ring& ring);

/// `m^p` by repeated squaring; p = 0 yields the identity.
Matrix power(const Matrix& m, unsigned p, const Ring& ring);

/// Sorts a vector of `width`-slot values lexicographically by value.
void sort_values(InvariantVector& values, std::size_t width);

}  // namespace srginv
