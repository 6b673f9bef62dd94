#include "stabwalls/bipoly.hpp"

#include <algorithm>

namespace stabwalls {

BiPoly::BiPoly(std::vector<std::vector<Rational>> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

BiPoly BiPoly::from_multi(const MultiPoly& p) {
  std::vector<std::vector<Rational>> c;
  for (const auto& [e, v] : p.terms()) {
    auto i = static_cast<std::size_t>(e[0]);
    auto j = static_cast<std::size_t>(e[1]);
    if (c.size() <= i) c.resize(i + 1);
    if (c[i].size() <= j) c[i].resize(j + 1);
    c[i][j] = v;
  }
  return BiPoly(std::move(c));
}

void BiPoly::trim() {
  for (auto& row : coeffs_) {
    while (!row.empty() && row.back() == 0) row.pop_back();
  }
  while (!coeffs_.empty() && coeffs_.back().empty()) coeffs_.pop_back();
}

int BiPoly::degree_t() const {
  int d = -1;
  for (const auto& row : coeffs_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

Rational BiPoly::coeff(int i, int j) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  const auto& row = coeffs_[static_cast<std::size_t>(i)];
  if (j < 0 || j >= static_cast<int>(row.size())) return Rational(0);
  return row[static_cast<std::size_t>(j)];
}

UniPoly BiPoly::m_coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return {};
  return UniPoly(coeffs_[static_cast<std::size_t>(i)]);
}

UniPoly BiPoly::at_t(const Rational& t) const {
  std::vector<Rational> out;
  for (const auto& row : coeffs_) out.push_back(UniPoly(row)(t));
  return UniPoly(std::move(out));
}

UniPoly BiPoly::at_m(const Rational& m) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= m;
    acc += UniPoly(*it);
  }
  return acc;
}

Rational BiPoly::operator()(const Rational& m, const Rational& t) const { return at_t(t)(m); }

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    auto& row = coeffs_[i];
    if (row.size() < o.coeffs_[i].size()) row.resize(o.coeffs_[i].size());
    for (std::size_t j = 0; j < o.coeffs_[i].size(); ++j) row[j] += o.coeffs_[i][j];
  }
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  BiPoly neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  for (auto& row : coeffs_) {
    for (auto& v : row) v *= c;
  }
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::vector<Rational>> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                                         std::vector<Rational>(static_cast<std::size_t>(a.degree_t() + b.degree_t() + 1)));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < a.coeffs_[i].size(); ++j) {
      if (a.coeffs_[i][j] == 0) continue;
      for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
        for (std::size_t l = 0; l < b.coeffs_[k].size(); ++l) out[i + k][j + l] += a.coeffs_[i][j] * b.coeffs_[k][l];
      }
    }
  }
  return BiPoly(std::move(out));
}

}  // namespace stabwalls
