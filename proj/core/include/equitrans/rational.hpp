#pragma once

#include <boost/rational.hpp>

#include <string>
#include <string_view>

namespace equitrans {

/// Exact rational payoffs; no floating point anywhere in comparisons.
using Rational = boost::rational<long long>;

/// Accepts "3", "-7/2" and decimal literals like "1.25" (converted exactly).
Rational parse_rational(std::string_view text);

/// Canonical form: "p" or "p/q" with q > 1.
std::string format_rational(const Rational& r);

}  // namespace equitrans
