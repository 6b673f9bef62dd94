#include "stabwalls/unipoly.hpp"

#include <sstream>

#include "stabwalls/errors.hpp"

namespace stabwalls {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& root) {
  return UniPoly(std::vector<Rational>{Rational(-root), Rational(1)});
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw ComputationError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::compose_affine(const Rational& a, const Rational& b) const {
  UniPoly inner(std::vector<Rational>{a, b});
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += UniPoly::constant(*it);
  }
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly operator-(const UniPoly& a) {
  UniPoly r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw ComputationError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs_;
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {UniPoly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(dq) + 1);
  const Rational& lb = b.leading();
  for (int k = dq; k >= 0; --k) {
    Rational c = rem[static_cast<std::size_t>(k + db)] / lb;
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b.coeffs_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * Rational(1 / leading());
}

Rational UniPoly::primitive_scale() const {
  if (is_zero()) return Rational(0);
  Integer den_lcm(1), num_gcd(0);
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational s(num_gcd, den_lcm);
  s.canonicalize();
  if (leading() < 0) s = -s;
  return s;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return {};
  return *this * Rational(1 / primitive_scale());
}

UniPoly UniPoly::squarefree() const {
  if (is_zero()) return {};
  if (degree() == 0) return UniPoly::constant(Rational(1));
  UniPoly g = gcd(*this, derivative());
  return divmod(*this, g).first.primitive();
}

namespace {

const char* superscript_digit(char c) {
  static const char* const table[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  return table[c - '0'];
}

std::string render(const std::vector<Rational>& coeffs, std::string_view var, bool unicode) {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const Rational& c = coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << (unicode ? "−" : "-");
    } else {
      out << (c < 0 ? (unicode ? " − " : " - ") : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (i == 0 || !unit) {
      std::string m = to_string(mag);
      if (mag.get_den() != 1 && i > 0) m = "(" + m + ")";
      out << m;
      if (i > 0 && !unicode) out << "*";
    }
    if (i > 0) {
      out << var;
      if (i > 1) {
        if (unicode) {
          for (char d : std::to_string(i)) out << superscript_digit(d);
        } else {
          out << "^" << i;
        }
      }
    }
  }
  return out.str();
}

}  // namespace

std::string UniPoly::to_string(std::string_view var) const { return render(coeffs_, var, true); }
std::string UniPoly::to_ascii(std::string_view var) const { return render(coeffs_, var, false); }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = UniPoly::divmod(x, y).second;
    // keep coefficient growth in check
    x = std::move(y);
    y = r.is_zero() ? r : r.primitive();
  }
  return x.monic();
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  UniPoly result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UniPoly basis = UniPoly::constant(Rational(1));
    Rational denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * UniPoly::linear_root(xs[j]);
      denom *= xs[i] - xs[j];
    }
    if (denom == 0) throw ComputationError("interpolation nodes must be distinct");
    result += basis * Rational(ys[i] / denom);
  }
  return result;
}

std::pair<Rational, Rational> range_bound(const UniPoly& p, const Rational& a, const Rational& b) {
  Rational c = (a + b) / 2, r = (b - a) / 2;
  Rational center = p(c), spread(0), rk(1), fact(1);
  UniPoly d = p;
  for (int k = 1; k <= p.degree(); ++k) {
    d = d.derivative();
    rk *= r;
    fact *= k;
    spread += abs(d(c)) * rk / fact;
  }
  return {center - spread, center + spread};
}

}  // namespace stabwalls
