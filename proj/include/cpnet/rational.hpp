#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cpnet {

/// Exact non-negative rational, used for the axiom constants so that the
/// dominance/robustness tests are integer-exact. Accepts "2", "3/4" and
/// decimal forms like "0.25".
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den <= 0 || num < 0) throw std::invalid_argument("rational must be non-negative");
    reduce();
  }

  void reduce() {
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  bool positive() const { return num > 0; }

  Rational operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  static Rational parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      std::int64_t n = parse_uint(s.substr(0, slash));
      std::int64_t d = parse_uint(s.substr(slash + 1));
      if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
      return Rational(n, d);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string whole = s.substr(0, dot);
      std::string frac = s.substr(dot + 1);
      if (frac.size() > 9) throw std::invalid_argument("too many decimal digits in '" + s + "'");
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      std::int64_t n = (whole.empty() ? 0 : parse_uint(whole)) * scale +
                       (frac.empty() ? 0 : parse_uint(frac));
      return Rational(n, scale);
    }
    return Rational(parse_uint(s), 1);
  }

 private:
  static std::int64_t parse_uint(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad rational component '" + s + "'");
    if (s.size() > 18) throw std::invalid_argument("rational component too large");
    return std::stoll(s);
  }
};

// lhs >= r * rhs, exact.
inline bool geq_scaled(std::uint64_t lhs, const Rational& r, std::uint64_t rhs) {
  using W = unsigned __int128;
  return static_cast<W>(lhs) * static_cast<W>(r.den) >=
         static_cast<W>(r.num) * static_cast<W>(rhs);
}

}  // namespace cpnet
