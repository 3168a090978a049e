#include "itm/render.hpp"

#include "itm/rational.hpp"

#include <cstddef>
#include <string>

namespace itm {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                    "#d62728", "#9467bd", "#8c564b"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

Rational px(const Rational& x) { return Rational(40) + Rational(720) * x; }

// Fixed two-decimal rendering, halves rounded up.
std::string fixed2(const Rational& value) {
  const Int scaled = floor_int(value * 100 + Rational(1, 2));
  const bool negative = scaled < 0;
  const Int magnitude = negative ? Int(-scaled) : scaled;
  const Int whole = magnitude / 100;
  std::string cents = Int(magnitude % 100).str();
  if (cents.size() < 2) {
    cents.insert(cents.begin(), '0');
  }
  return (negative ? "-" : "") + whole.str() + "." + cents;
}

std::string arc(const Rational& from, const Rational& to, int sweep,
                const char* color) {
  const Rational x1 = px(from);
  const Rational x2 = px(to);
  const Rational radius = (x2 - x1) / 2;
  return "<path d=\"M " + fixed2(x1) + ",400 A " + fixed2(radius) + "," +
         fixed2(radius) + " 0 0," + std::to_string(sweep) + " " + fixed2(x2) +
         ",400\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
}

}  // namespace

std::string render_svg(const Map& map) {
  std::string out;
  out +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
      "viewBox=\"0 0 800 800\">\n";
  out += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  out +=
      "<line x1=\"40\" y1=\"400\" x2=\"760\" y2=\"400\" stroke=\"black\" "
      "stroke-width=\"1\"/>\n";
  for (std::size_t i = 0; i <= map.piece_count(); ++i) {
    const std::string x = fixed2(px(map.breakpoint(i)));
    out += "<line x1=\"" + x + "\" y1=\"394\" x2=\"" + x +
           "\" y2=\"406\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  for (std::size_t j = 0; j < map.piece_count(); ++j) {
    out += arc(map.breakpoint(j), map.breakpoint(j + 1), 1,
               kPalette[j % kPaletteSize]);
  }
  for (std::size_t j = 0; j < map.piece_count(); ++j) {
    const Rational& g = map.translation(j);
    out += arc(map.breakpoint(j) + g, map.breakpoint(j + 1) + g, 0,
               kPalette[j % kPaletteSize]);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace itm
