#include "sexpand/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace sexpand {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
    BigInt d(std::string(den), 10);
    if (d == 0) throw bad();
    result = Rational(BigInt(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw bad();
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    result = Rational(digits, scale);
  } else {
    if (!all_digits(body)) throw bad();
    result = Rational(BigInt(std::string(body), 10));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

}  // namespace sexpand
