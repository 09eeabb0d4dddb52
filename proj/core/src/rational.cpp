#include "greenlie/rational.hpp"
#include "greenlie/validation.hpp"

namespace greenlie {

namespace {

Integer parse_integer(std::string_view text) {
  if (text.empty())
    throw ParseError("empty integer in rational literal");
  std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (start == text.size())
    throw ParseError("sign without digits in rational literal");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw ParseError("invalid character in rational literal: '" + std::string(text) + "'");
  Integer magnitude{std::string(text.substr(start))};
  return text[0] == '-' ? Integer(-magnitude) : magnitude;
}

} // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den.is_zero())
    throw ParseError("zero denominator in rational literal: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1)
    return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace greenlie
