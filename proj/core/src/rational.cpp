#include "equitrans/rational.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace equitrans {

namespace {
long long parse_ll(std::string_view text) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("bad integer '" + std::string(text) + "'");
  return value;
}
}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("sign without digits");

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    long long num = parse_ll(text.substr(0, slash));
    long long den = parse_ll(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    value = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    long long whole = dot == 0 ? 0 : parse_ll(text.substr(0, dot));
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15)
      throw std::invalid_argument("bad decimal literal '" + std::string(text) + "'");
    long long scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(whole) + Rational(parse_ll(frac), scale);
  } else {
    value = Rational(parse_ll(text));
  }
  return negative ? -value : value;
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace equitrans
