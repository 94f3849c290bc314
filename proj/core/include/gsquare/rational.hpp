#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gsquare {

// Exact rational in the closed unit interval. Numerator/denominator are
// arbitrary-precision, so chained operations never overflow or round.
class Rational01 {
public:
  using Backend = boost::multiprecision::cpp_rational;

  Rational01() : v_(0) {}
  Rational01(long long num, long long den);
  explicit Rational01(Backend v);

  // Accepts "p/q", integer literals ("0", "1"), and decimal literals
  // ("0.7" == 7/10). Throws std::invalid_argument for anything outside [0,1]
  // or not a number.
  static Rational01 parse(std::string_view text);

  static const Rational01& zero();
  static const Rational01& one();

  // Lowest terms; integers print without a denominator ("1", not "1/1").
  std::string str() const;

  const Backend& raw() const { return v_; }

  friend bool operator==(const Rational01& a, const Rational01& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational01& a, const Rational01& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  Backend v_;
  void check_range() const;
};

// Bi-Goedel algebra operations on [0,1].
Rational01 meet(const Rational01& a, const Rational01& b);   // min
Rational01 join(const Rational01& a, const Rational01& b);   // max
// a -> b: 1 when a <= b, otherwise b.
Rational01 gimpl(const Rational01& a, const Rational01& b);
// a coimplies b: 0 when a <= b, otherwise a.
Rational01 gcoimpl(const Rational01& a, const Rational01& b);

}  // namespace gsquare
