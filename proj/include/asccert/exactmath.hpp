#pragma once

// Exact integer / rational scalars and dense integer matrices.
//
// Everything in the certification path goes through these types; there is
// no floating point anywhere below.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace asccert {

using BigInt = boost::multiprecision::cpp_int;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long value) : num_(value), den_(1) {}  // NOLINT(implicit)
  Rat(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT(implicit)
  Rat(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }
  Rat operator-() const { return Rat(-num_, den_); }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  /// "num/den"; integers still carry "/1" so the format is uniform.
  std::string str() const;
  /// Accepts "a/b" or a plain integer "a". Throws std::invalid_argument.
  static Rat parse(std::string_view text);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  /// Bounds-checked access; throws std::out_of_range.
  const BigInt& at(std::size_t r, std::size_t c) const;

  std::span<const BigInt> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<BigInt> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  IntMatrix transpose() const;
  /// Copy of the block [r0, r0+nr) x [c0, c0+nc).
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool is_zero() const;
  bool is_lower_triangular() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Throws DimensionError for non-square input.
BigInt det_bareiss(const IntMatrix& m);

/// Rank over the rationals, computed with fraction-free elimination.
std::size_t rank(const IntMatrix& m);

struct RowTerm {
  BigInt coeff;
  std::size_t row;
};

/// Returns a copy of `m` with row `target` replaced by
/// row(target) + sum(coeff * row(idx)). Throws std::out_of_range.
IntMatrix row_combine(const IntMatrix& m, std::size_t target, std::span<const RowTerm> add);

/// Returns a copy of `m` with row `target` divided by `divisor`. Every entry
/// of the row must be divisible; otherwise std::domain_error.
IntMatrix row_divide_exact(const IntMatrix& m, std::size_t target, const BigInt& divisor);

}  // namespace asccert
