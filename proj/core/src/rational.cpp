#include "gsquare/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>

namespace gsquare {

using boost::multiprecision::cpp_int;

Rational01::Rational01(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("Rational01: zero denominator");
  v_ = Backend(cpp_int(num), cpp_int(den));
  check_range();
}

Rational01::Rational01(Backend v) : v_(std::move(v)) { check_range(); }

void Rational01::check_range() const {
  if (v_ < 0 || v_ > 1) {
    throw std::invalid_argument("Rational01: value outside [0,1]");
  }
}

const Rational01& Rational01::zero() {
  static const Rational01 z;
  return z;
}

const Rational01& Rational01::one() {
  static const Rational01 o(1, 1);
  return o;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational01 Rational01::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("Rational01: cannot parse \"" + std::string(text) + "\"");
  };
  if (text.empty()) fail();

  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail();
    cpp_int n(std::string(num)), d(std::string(den));
    if (d == 0) fail();
    return Rational01(Backend(n, d));
  }

  auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) fail();
    cpp_int n(std::string(whole));
    cpp_int scale = 1;
    for (char c : frac) {
      n = n * 10 + (c - '0');
      scale *= 10;
    }
    return Rational01(Backend(n, scale));
  }

  if (!all_digits(text)) fail();
  return Rational01(Backend(cpp_int(std::string(text)), cpp_int(1)));
}

std::string Rational01::str() const {
  cpp_int num = boost::multiprecision::numerator(v_);
  cpp_int den = boost::multiprecision::denominator(v_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational01 meet(const Rational01& a, const Rational01& b) { return a <= b ? a : b; }

Rational01 join(const Rational01& a, const Rational01& b) { return a <= b ? b : a; }

Rational01 gimpl(const Rational01& a, const Rational01& b) {
  return a <= b ? Rational01::one() : b;
}

Rational01 gcoimpl(const Rational01& a, const Rational01& b) {
  return a <= b ? Rational01::zero() : a;
}

}  // namespace gsquare
