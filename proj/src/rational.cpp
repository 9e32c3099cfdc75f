#include "powerindex/rational.hpp"

#include <charconv>
#include <limits>

#include "powerindex/error.hpp"

namespace powerindex {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw InvalidWinConditionError("not an exact fraction: '" +
                                   std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text, text));
  }
  const auto num = parse_int(text.substr(0, slash), text);
  const auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) {
    throw InvalidWinConditionError("zero denominator: '" + std::string(text) +
                                   "'");
  }
  return Rational(num, den);
}

bool is_valid_win_condition(const Rational& w) {
  return w >= Rational(1, 2) && w < Rational(1);
}

void require_win_condition(const Rational& w) {
  if (!is_valid_win_condition(w)) {
    throw InvalidWinConditionError("win condition " + to_string(w) +
                                   " outside [1/2, 1)");
  }
}

Rational parse_win_condition(std::string_view text) {
  const Rational w = parse_rational(text);
  require_win_condition(w);
  return w;
}

}  // namespace powerindex
