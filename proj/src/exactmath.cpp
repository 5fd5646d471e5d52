#include "asccert/exactmath.hpp"

#include <algorithm>

namespace asccert {

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    throw std::domain_error("Rat: zero denominator");
  }
  normalize();
}

void Rat::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat& Rat::operator+=(const Rat& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.num_ == 0) {
    throw std::domain_error("Rat: division by zero");
  }
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  // Denominators are positive, so cross-multiplication keeps the order.
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rat::str() const { return num_.str() + "/" + den_.str(); }

namespace {

BigInt parse_int(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("Rat::parse: not an integer: '" + std::string(s) + "'");
  }
  BigInt v{std::string(digits)};
  return s.front() == '-' ? BigInt(-v) : v;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_int(text));
  }
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("Rat::parse: zero denominator");
  }
  return Rat(parse_int(text.substr(0, slash)), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw DimensionError("IntMatrix: ragged initializer");
    }
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

const BigInt& IntMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw std::out_of_range("IntMatrix::at: index out of range");
  }
  return (*this)(r, c);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                           std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw std::out_of_range("IntMatrix::block: block exceeds matrix");
  }
  IntMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

bool IntMatrix::is_lower_triangular() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != 0) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r == 0 ? "[[" : " [");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << m(r, c);
    }
    os << (r + 1 == m.rows() ? "]]" : "]\n");
  }
  if (m.rows() == 0) os << "[]";
  return os;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  auto ra = m.row(a);
  auto rb = m.row(b);
  std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

// Fraction-free forward elimination. Returns the number of pivots found and
// leaves the last pivot in `last_pivot`. `sign` flips on every row swap.
std::size_t bareiss_eliminate(IntMatrix& m, int& sign, BigInt& last_pivot) {
  BigInt prev = 1;
  std::size_t pivot_row = 0;
  sign = 1;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t p = pivot_row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != pivot_row) {
      swap_rows(m, p, pivot_row);
      sign = -sign;
    }
    const BigInt& piv = m(pivot_row, col);
    for (std::size_t i = pivot_row + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        m(i, j) = (m(i, j) * piv - m(i, col) * m(pivot_row, j)) / prev;
      }
      m(i, col) = 0;
    }
    prev = piv;
    ++pivot_row;
  }
  last_pivot = prev;
  return pivot_row;
}

}  // namespace

BigInt det_bareiss(const IntMatrix& m) {
  if (!m.square()) {
    throw DimensionError("det_bareiss: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", not square");
  }
  if (m.rows() == 0) return 1;
  IntMatrix work = m;
  int sign = 1;
  BigInt last;
  const std::size_t pivots = bareiss_eliminate(work, sign, last);
  if (pivots < m.rows()) return 0;
  return sign < 0 ? BigInt(-last) : last;
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix work = m;
  int sign = 1;
  BigInt last;
  return bareiss_eliminate(work, sign, last);
}

IntMatrix row_combine(const IntMatrix& m, std::size_t target, std::span<const RowTerm> add) {
  if (target >= m.rows()) {
    throw std::out_of_range("row_combine: target row " + std::to_string(target) +
                            " out of range");
  }
  for (const auto& t : add) {
    if (t.row >= m.rows()) {
      throw std::out_of_range("row_combine: source row " + std::to_string(t.row) +
                              " out of range");
    }
  }
  IntMatrix out = m;
  auto dst = out.row(target);
  for (const auto& t : add) {
    // Read from the original so a term referencing `target` uses its old value.
    auto src = m.row(t.row);
    for (std::size_t c = 0; c < m.cols(); ++c) dst[c] += t.coeff * src[c];
  }
  return out;
}

IntMatrix row_divide_exact(const IntMatrix& m, std::size_t target, const BigInt& divisor) {
  if (target >= m.rows()) {
    throw std::out_of_range("row_divide_exact: row out of range");
  }
  if (divisor == 0) {
    throw std::domain_error("row_divide_exact: zero divisor");
  }
  IntMatrix out = m;
  for (auto& v : out.row(target)) {
    if (v % divisor != 0) {
      throw std::domain_error("row_divide_exact: entry not divisible");
    }
    v /= divisor;
  }
  return out;
}

}  // namespace asccert
