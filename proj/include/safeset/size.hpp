#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

namespace safeset {

/// Cardinality of an optimum, or INFEASIBLE when no feasible set exists.
/// INFEASIBLE orders above every finite value, matching the convention
/// ss(D) = +infinity.
class Size {
 public:
  constexpr Size() = default;
  constexpr explicit Size(std::size_t value) : value_(value) {}

  static constexpr Size infeasible() { return Size(); }

  constexpr bool feasible() const { return value_.has_value(); }
  constexpr std::size_t value() const { return value_.value(); }

  friend constexpr bool operator==(const Size&, const Size&) = default;

  friend constexpr std::strong_ordering operator<=>(const Size& a, const Size& b) {
    if (a.feasible() && b.feasible()) return a.value() <=> b.value();
    if (a.feasible()) return std::strong_ordering::less;
    if (b.feasible()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    return feasible() ? std::to_string(*value_) : std::string("INFEASIBLE");
  }

  friend std::ostream& operator<<(std::ostream& os, const Size& s) { return os << s.to_string(); }

 private:
  std::optional<std::size_t> value_;
};

}  // namespace safeset
