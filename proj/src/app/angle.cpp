#include "tcqed/app.hpp"

#include "tcqed/error.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace tcqed {
namespace {

[[noreturn]] void bad_angle(std::string_view text) {
  throw Error(Errc::InvalidArgument, "cannot parse angle '" + std::string(text) + "'");
}

double parse_number(std::string_view text, std::string_view whole) {
  const std::string s(text);
  if (s.empty()) bad_angle(whole);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) bad_angle(whole);
  return v;
}

}  // namespace

double parse_angle(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s.empty()) bad_angle(text);

  const auto pos = s.find("pi");
  if (pos == std::string::npos) return parse_number(s, text);

  std::string_view coeff(s.data(), pos);
  if (!coeff.empty() && coeff.back() == '*') coeff.remove_suffix(1);
  double factor = 1.0;
  if (coeff == "-") {
    factor = -1.0;
  } else if (!coeff.empty() && coeff != "+") {
    factor = parse_number(coeff, text);
  }

  std::string_view rest(s.data() + pos + 2, s.size() - pos - 2);
  if (!rest.empty()) {
    if (rest.front() != '/') bad_angle(text);
    rest.remove_prefix(1);
    const double denom = parse_number(rest, text);
    if (denom == 0.0) bad_angle(text);
    factor /= denom;
  }
  return factor * std::numbers::pi;
}

}  // namespace tcqed
