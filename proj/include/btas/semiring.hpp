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

#ifndef BTAS_SEMIRING_HPP_
#define BTAS_SEMIRING_HPP_

// Tropical scalars. A Weight is either a finite number or the symbolic
// Infinity, the additive identity of both semirings. Whether Infinity sits
// above every finite value (min-plus) or below it (max-plus) is decided by
// the SemiringKind an operation is evaluated under, never by the weight.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <system_error>

#include "btas/error.hpp"

namespace btas {

enum class SemiringKind { MinPlus, MaxPlus };

/// Scalar types a Weight can carry. Signed integers give exact arithmetic,
/// floating point the general case.
template <class T>
concept WeightScalar = std::signed_integral<T> || std::floating_point<T>;

template <WeightScalar T>
class Weight {
 public:
  using value_type = T;

  /// Default construction yields Infinity ("no path").
  constexpr Weight() noexcept = default;

  /// A finite weight. NaN and IEEE infinities are rejected; use
  /// `Weight::infinity()` for the semiring's Infinity.
  constexpr Weight(T value) : value_(value), finite_(true) {  // NOLINT
    if constexpr (std::floating_point<T>) {
      if (std::isnan(value)) throw InvalidArgument("NaN weight");
      if (std::isinf(value)) {
        throw InvalidArgument("IEEE infinity is not a finite weight; use inf");
      }
      if (value == T{0}) value_ = T{0};  // fold -0.0 into +0.0
    }
  }

  static constexpr Weight infinity() noexcept { return Weight(); }

  constexpr bool is_finite() const noexcept { return finite_; }
  constexpr bool is_infinite() const noexcept { return !finite_; }

  /// The finite value; 0 for Infinity.
  constexpr T value() const noexcept { return value_; }

  friend constexpr bool operator==(const Weight&, const Weight&) = default;

  /// Negation maps a finite x to -x and keeps Infinity. It carries min-plus
  /// results to their max-plus duals. Integer negation of the lowest value
  /// saturates to Infinity.
  constexpr Weight operator-() const noexcept {
    if (!finite_) return infinity();
    if constexpr (std::signed_integral<T>) {
      if (value_ == std::numeric_limits<T>::min()) return infinity();
    }
    Weight w;
    w.value_ = value_ == T{0} ? T{0} : -value_;
    w.finite_ = true;
    return w;
  }

 private:
  T value_{0};
  bool finite_{false};
};

/// Result of a checked tropical product.
template <WeightScalar T>
struct Product {
  Weight<T> value;
  bool saturated = false;
};

/// Strict order of the extended line of `kind`: Infinity is the greatest
/// element under MinPlus and the least under MaxPlus.
template <WeightScalar T>
constexpr bool order_less(SemiringKind kind, Weight<T> x, Weight<T> y) noexcept {
  if (x.is_infinite() && y.is_infinite()) return false;
  if (x.is_infinite()) return kind == SemiringKind::MaxPlus;
  if (y.is_infinite()) return kind == SemiringKind::MinPlus;
  return x.value() < y.value();
}

/// x ⊕ y: min under MinPlus, max under MaxPlus.
template <WeightScalar T>
constexpr Weight<T> tadd(SemiringKind kind, Weight<T> x, Weight<T> y) noexcept {
  if (x.is_infinite()) return y;
  if (y.is_infinite()) return x;
  if (kind == SemiringKind::MinPlus) return y.value() < x.value() ? y : x;
  return x.value() < y.value() ? y : x;
}

/// x ⊗ y with overflow reporting. A finite sum that leaves the range of T
/// saturates to Infinity and sets `saturated`.
template <WeightScalar T>
constexpr Product<T> checked_tmul(Weight<T> x, Weight<T> y) noexcept {
  if (x.is_infinite() || y.is_infinite()) return {Weight<T>::infinity(), false};
  if constexpr (std::signed_integral<T>) {
    T sum{};
    if (__builtin_add_overflow(x.value(), y.value(), &sum)) {
      return {Weight<T>::infinity(), true};
    }
    return {Weight<T>(sum), false};
  } else {
    const T sum = x.value() + y.value();
    if (!std::isfinite(sum)) return {Weight<T>::infinity(), true};
    return {Weight<T>(sum), false};
  }
}

/// x ⊗ y; ordinary addition for both kinds, Infinity absorbing.
template <WeightScalar T>
constexpr Weight<T> tmul(SemiringKind /*kind*/, Weight<T> x, Weight<T> y) noexcept {
  return checked_tmul(x, y).value;
}

/// x ⊗ y, OR-ing an overflow into `saturated`.
template <WeightScalar T>
constexpr Weight<T> tmul(SemiringKind /*kind*/, Weight<T> x, Weight<T> y,
                         bool& saturated) noexcept {
  const auto p = checked_tmul(x, y);
  saturated = saturated || p.saturated;
  return p.value;
}

template <WeightScalar T>
constexpr Weight<T> additive_identity(SemiringKind /*kind*/) noexcept {
  return Weight<T>::infinity();
}

template <WeightScalar T>
constexpr Weight<T> multiplicative_identity(SemiringKind /*kind*/) noexcept {
  return Weight<T>(T{0});
}

// ---------------------------------------------------------------------------
// Text rendering

inline std::string to_string(SemiringKind kind) {
  return kind == SemiringKind::MinPlus ? "minplus" : "maxplus";
}

namespace detail {

inline bool iequals(std::string_view a, std::string_view b) noexcept {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char l, char r) {
           return std::tolower(static_cast<unsigned char>(l)) ==
                  std::tolower(static_cast<unsigned char>(r));
         });
}

}  // namespace detail

inline SemiringKind parse_kind(std::string_view token) {
  if (detail::iequals(token, "minplus")) return SemiringKind::MinPlus;
  if (detail::iequals(token, "maxplus")) return SemiringKind::MaxPlus;
  throw InvalidArgument("unknown semiring '" + std::string(token) +
                        "' (expected minplus or maxplus)");
}

/// Decimal literal for finite weights, `inf` for Infinity. Floating values
/// use the shortest representation that reads back to the same bits.
template <WeightScalar T>
std::string to_string(Weight<T> w) {
  if (w.is_infinite()) return "inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), w.value());
  return std::string(buf, res.ptr);
}

/// Parses one weight token. `inf` (any case) is Infinity; anything else must
/// be a complete finite literal of T.
template <WeightScalar T>
Weight<T> parse_weight(std::string_view token) {
  if (detail::iequals(token, "inf")) return Weight<T>::infinity();
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  T value{};
  const char* const last = digits.data() + digits.size();
  const auto res = std::from_chars(digits.data(), last, value);
  if (digits.empty() || res.ec == std::errc::invalid_argument || res.ptr != last) {
    if constexpr (std::signed_integral<T>) {
      throw InvalidArgument("'" + std::string(token) + "' is not an integer weight");
    } else {
      throw InvalidArgument("'" + std::string(token) + "' is not a weight");
    }
  }
  if (res.ec == std::errc::result_out_of_range) {
    throw InvalidArgument("weight '" + std::string(token) + "' is out of range");
  }
  if constexpr (std::floating_point<T>) {
    if (!std::isfinite(value)) {
      throw InvalidArgument("'" + std::string(token) +
                            "' is not a finite weight (use inf for no edge)");
    }
  }
  return Weight<T>(value);
}

}  // namespace btas

#endif  // BTAS_SEMIRING_HPP_
