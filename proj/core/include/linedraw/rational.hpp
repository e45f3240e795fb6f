#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace linedraw {

/// Exact rational number. Everything on the decision path is computed with
/// exact arithmetic; values are kept canonical (lowest terms, positive
/// denominator).
using Rational = mpq_class;

/// Parses an integer ("5"), a fraction ("7/2", "-3/4") or a decimal
/// ("3.25") into an exact rational. Returns nullopt on malformed input or a
/// zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// Lowest-terms text form: "7/3", "-2", "0".
std::string to_string(const Rational& q);

}  // namespace linedraw
