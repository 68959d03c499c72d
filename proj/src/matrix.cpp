#include "srginv/matrix.hpp"

#include <algorithm>
#include <string>

#include "srginv/error.hpp"

namespace srginv {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("64-bit overflow in addition " + std::to_string(a) + " + " +
                        std::to_string(b));
  }
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("64-bit overflow in multiplication " + std::to_string(a) + " * " +
                        std::to_string(b));
  }
  return r;
}

std::vector<Ring> rings_for(Arithmetic arithmetic) {
  if (arithmetic == Arithmetic::exact) return {Ring::exact()};
  std::vector<Ring> rings;
  for (auto m : kModuli) rings.push_back(Ring::modulo(m));
  return rings;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::uint64_t Matrix::trace(const Ring& ring) const {
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < n_; ++i) t = ring.add(t, (*this)(i, i));
  return t;
}

std::vector<std::uint64_t> Matrix::diagonal() const {
  std::vector<std::uint64_t> d(n_);
  for (std::size_t i = 0; i < n_; ++i) d[i] = (*this)(i, i);
  return d;
}

Matrix multiply(const Matrix& a, const Matrix& b, const Ring& ring) {
  const std::size_t n = a.size();
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const std::uint64_t x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t y = b(l, j);
        if (y != 0) c(i, j) = ring.add(c(i, j), ring.mul(x, y));
      }
    }
  }
  return c;
}

Matrix power(const Matrix& m, unsigned p, const Ring& ring) {
  Matrix result = Matrix::identity(m.size());
  Matrix base = m;
  if (!ring.is_exact()) {
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = 0; j < base.size(); ++j) base(i, j) = ring.reduce(base(i, j));
  }
  bool first = true;
  while (p > 0) {
    if (p & 1U) {
      result = first ? base : multiply(result, base, ring);
      first = false;
    }
    p >>= 1U;
    if (p > 0) base = multiply(base, base, ring);
  }
  return result;
}

void sort_values(InvariantVector& values, std::size_t width) {
  if (width == 1) {
    std::sort(values.begin(), values.end());
    return;
  }
  const std::size_t count = values.size() / width;
  std::vector<std::span<const std::uint64_t>> items;
  items.reserve(count);
  InvariantVector copy = values;
  for (std::size_t i = 0; i < count; ++i) items.emplace_back(copy.data() + i * width, width);
  std::sort(items.begin(), items.end(), [](auto x, auto y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  auto out = values.begin();
  for (auto item : items) out = std::copy(item.begin(), item.end(), out);
}

}  // namespace srginv
