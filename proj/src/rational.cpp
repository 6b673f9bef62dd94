#include "stabwalls/rational.hpp"

#include <cctype>

#include "stabwalls/errors.hpp"

namespace stabwalls {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
      throw InputError("malformed rational \"" + std::string(text) + "\"");
    }
    Integer d = parse_integer(den);
    if (d == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
    Rational q(parse_integer(num), d);
    q.canonicalize();
    return q;
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !is_integer_literal(whole)) ||
        (!frac.empty() && (!is_integer_literal(frac) || frac.front() == '-' || frac.front() == '+'))) {
      throw InputError("malformed decimal \"" + std::string(text) + "\"");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer digits = (whole.empty() ? Integer(0) : Integer(std::string(whole))) * scale +
                     (frac.empty() ? Integer(0) : Integer(std::string(frac)));
    Rational q(negative ? Integer(-digits) : digits, scale);
    q.canonicalize();
    return q;
  }
  if (!is_integer_literal(s)) throw InputError("malformed rational \"" + std::string(text) + "\"");
  return Rational(parse_integer(s));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int sign(const Rational& q) { return sgn(q); }

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational pow10_inv(int k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return Rational(Integer(1), p);
}

std::string to_decimal(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * scale + Rational(1, 2);
  Integer units = floor_of(scaled);
  std::string s = units.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  bool zero = units == 0;
  return (q < 0 && !zero ? "-" : "") + s;
}

}  // namespace stabwalls
