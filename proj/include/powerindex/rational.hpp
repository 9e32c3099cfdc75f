#ifndef POWERINDEX_RATIONAL_HPP
#define POWERINDEX_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace powerindex {

/// Exact fraction, always in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

/// Formats as "num/den"; integers keep the "/1" suffix so every value has
/// one shape on the wire ("0/1", "1/1").
std::string to_string(const Rational& r);

/// Parses "num/den" or a bare integer. Decimal notation is rejected so that
/// boundary values such as 3/5 are never approximated.
/// Throws InvalidWinConditionError on malformed input.
Rational parse_rational(std::string_view text);

/// True iff 1/2 <= w < 1.
bool is_valid_win_condition(const Rational& w);

/// Throws InvalidWinConditionError unless 1/2 <= w < 1.
void require_win_condition(const Rational& w);

/// parse_rational() followed by require_win_condition().
Rational parse_win_condition(std::string_view text);

}  // namespace powerindex

#endif  // POWERINDEX_RATIONAL_HPP
