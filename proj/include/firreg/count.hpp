#pragma once

/**
 * Exact nonnegative integer counts and the small amount of combinatorics
 * (factorials, binomials) used by the condition solver and the verifiers.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace firreg {

/// Unbounded nonnegative integer. Subtraction only through checked_sub().
class Count {
public:
  using Backing = boost::multiprecision::cpp_int;

  Count() = default;
  Count(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Count(Backing v) : value_(std::move(v)) {
    if (value_ < 0)
      throw std::domain_error("Count: negative value " + value_.str());
  }

  static auto from_u128(unsigned __int128 v) -> Count {
    Count c;
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    const auto lo = static_cast<std::uint64_t>(v);
    c.value_ = Backing(hi);
    c.value_ <<= 64;
    c.value_ += lo;
    return c;
  }

  static auto parse(std::string_view text) -> Count {
    if (text.empty())
      throw std::invalid_argument("Count::parse: empty string");
    Count c;
    for (char ch : text) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("Count::parse: not a decimal digit in '" + std::string(text) + "'");
      c.value_ *= 10;
      c.value_ += ch - '0';
    }
    return c;
  }

  auto str() const -> std::string { return value_.str(); }
  auto is_zero() const -> bool { return value_.is_zero(); }
  auto backing() const -> const Backing & { return value_; }

  auto fits_u64() const -> bool { return value_ <= std::numeric_limits<std::uint64_t>::max(); }
  auto to_u64() const -> std::uint64_t {
    if (!fits_u64())
      throw std::overflow_error("Count::to_u64: value " + str() + " exceeds 64 bits");
    return value_.convert_to<std::uint64_t>();
  }

  auto operator+=(const Count &o) -> Count & { value_ += o.value_; return *this; }
  auto operator*=(const Count &o) -> Count & { value_ *= o.value_; return *this; }

  friend auto operator+(Count a, const Count &b) -> Count { return a += b; }
  friend auto operator*(Count a, const Count &b) -> Count { return a *= b; }

  friend auto operator==(const Count &a, const Count &b) -> bool { return a.value_ == b.value_; }
  friend auto operator<=>(const Count &a, const Count &b) -> std::strong_ordering {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// a - b; throws std::domain_error if the result would be negative.
  friend auto checked_sub(const Count &a, const Count &b) -> Count {
    if (a < b)
      throw std::domain_error("checked_sub: " + a.str() + " - " + b.str() + " is negative");
    Count c;
    c.value_ = a.value_ - b.value_;
    return c;
  }

  /// a / b where b must divide a; anything else is an internal error.
  friend auto divide_exact(const Count &a, const Count &b) -> Count {
    if (b.is_zero())
      throw std::logic_error("divide_exact: division by zero");
    Count q, r;
    boost::multiprecision::divide_qr(a.value_, b.value_, q.value_, r.value_);
    if (!r.is_zero())
      throw std::logic_error("divide_exact: " + b.str() + " does not divide " + a.str());
    return q;
  }

  friend auto operator<<(std::ostream &os, const Count &c) -> std::ostream & { return os << c.value_; }

private:
  Backing value_;
};

inline auto factorial(std::uint64_t n) -> Count {
  Count acc{1};
  for (std::uint64_t k = 2; k <= n; ++k)
    acc *= Count{k};
  return acc;
}

/// C(n, k), zero outside 0 <= k <= n.
inline auto binomial(std::int64_t n, std::int64_t k) -> Count {
  if (n < 0 || k < 0 || k > n)
    return Count{};
  if (k > n - k)
    k = n - k;
  // acc = C(n - k + j, j) after step j; each division is exact.
  Count::Backing acc = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    acc *= (n - k + j);
    acc /= j;
  }
  return Count{std::move(acc)};
}

}  // namespace firreg
