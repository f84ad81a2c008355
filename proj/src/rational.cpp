#include "spinchain/rational.hpp"

#include <charconv>

namespace spinchain {

namespace {

long long parse_integer(std::string_view text, const char* what) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument(std::string("Rational: malformed ") + what + " in \"" +
                                std::string(text) + "\"");
  return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty string");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, "integer"));
  const long long num = parse_integer(text.substr(0, slash), "numerator");
  const long long den = parse_integer(text.substr(slash + 1), "denominator");
  return {num, den};
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace spinchain
