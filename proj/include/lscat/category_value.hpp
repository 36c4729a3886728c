#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace lscat {

/// Value of a category: a non-negative integer or +infinity.
/// Arithmetic saturates at infinity.
class CategoryValue {
 public:
  constexpr CategoryValue() = default;
  constexpr CategoryValue(std::uint32_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr CategoryValue infinity() {
    CategoryValue c;
    c.v_ = kInf;
    return c;
  }

  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr std::uint32_t value() const { return v_; }

  constexpr CategoryValue operator+(CategoryValue o) const {
    if (is_infinite() || o.is_infinite()) return infinity();
    return CategoryValue(v_ + o.v_);
  }
  constexpr CategoryValue operator*(std::uint32_t k) const {
    if (k == 0) return CategoryValue(0);
    if (is_infinite()) return infinity();
    return CategoryValue(v_ * k);
  }

  constexpr bool operator==(const CategoryValue&) const = default;
  constexpr auto operator<=>(const CategoryValue&) const = default;

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(v_); }

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t v_ = 0;
};

}  // namespace lscat
