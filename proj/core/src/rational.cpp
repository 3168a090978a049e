#include "itm/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace itm {

Rational make_rational(Int num, Int den) {
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

Int floor_int(const Rational& x) {
  Int q = numerator(x) / denominator(x);
  if (numerator(x) < 0 && q * denominator(x) != numerator(x)) {
    --q;
  }
  return q;
}

Int ceil_int(const Rational& x) { return -floor_int(-x); }

Rational frac_part(const Rational& x) { return x - Rational(floor_int(x)); }

std::string format_rational(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_rational(const std::string& text) {
  const auto bad = [&] {
    return std::invalid_argument("malformed rational: \"" + text + "\"");
  };
  std::size_t pos = 0;
  const auto read_integer = [&](bool allow_sign) -> Int {
    std::size_t start = pos;
    if (allow_sign && pos < text.size() &&
        (text[pos] == '+' || text[pos] == '-')) {
      ++pos;
    }
    std::size_t digits = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      ++digits;
    }
    if (digits == 0) {
      throw bad();
    }
    return Int(text.substr(start, pos - start));
  };

  Int num = read_integer(true);
  Int den = 1;
  if (pos < text.size()) {
    if (text[pos] != '/') {
      throw bad();
    }
    ++pos;
    den = read_integer(false);
    if (pos != text.size()) {
      throw bad();
    }
    if (den == 0) {
      throw bad();
    }
  }
  return make_rational(std::move(num), std::move(den));
}

Int common_denominator(const std::vector<Rational>& values) {
  Int result = 1;
  for (const Rational& v : values) {
    result = lcm(result, denominator(v));
  }
  return result;
}

}  // namespace itm
