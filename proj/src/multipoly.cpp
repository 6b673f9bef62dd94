#include "stabwalls/multipoly.hpp"

#include <numeric>

#include "stabwalls/errors.hpp"

namespace stabwalls {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  MultiPoly p(nvars);
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Rational MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw ComputationError("exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultiPoly::operator()(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw ComputationError("evaluation point arity mismatch");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    }
    total += t;
  }
  return total;
}

MultiPoly MultiPoly::homogeneous_part(int degree) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0) == degree) out.terms_.emplace(e, c);
  }
  return out;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw ComputationError("composition arity mismatch");
  int target = images.empty() ? 0 : images.front().nvars();
  // powers[i][k] = images[i]^k, built lazily
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, Rational(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(k)];
  };
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) t = t * power(i, e[i]);
    }
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::shifted(std::span<const Rational> shift) const {
  std::vector<MultiPoly> images;
  for (int i = 0; i < nvars_; ++i) {
    images.push_back(variable(nvars_, i) + constant(nvars_, shift[static_cast<std::size_t>(i)]));
  }
  return compose(images);
}

UniPoly MultiPoly::to_unipoly() const {
  if (nvars_ != 1) throw ComputationError("to_unipoly needs a univariate polynomial");
  std::vector<Rational> c(static_cast<std::size_t>(std::max(total_degree(), -1) + 1));
  for (const auto& [e, v] : terms_) c[static_cast<std::size_t>(e[0])] = v;
  return UniPoly(std::move(c));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (terms_.empty() && nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (terms_.empty() && nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, Rational(-c));
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw ComputationError("product arity mismatch");
  MultiPoly out(a.nvars_);
  Exponent e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, Rational(ca * cb));
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(int k) const {
  MultiPoly r = constant(nvars_, Rational(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::vector<Exponent> exponents_of_degree(int nvars, int degree) {
  std::vector<Exponent> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent cur(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == nvars - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[static_cast<std::size_t>(pos)] = k;
      self(self, pos + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer multinomial(const Exponent& e) {
  int total = std::accumulate(e.begin(), e.end(), 0);
  Integer r = factorial(total);
  for (int k : e) r /= factorial(k);
  return r;
}

}  // namespace stabwalls
