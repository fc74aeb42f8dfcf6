#include "cospec/spectral.hpp"

#include <stdexcept>

namespace cospec {

ExactPoly::ExactPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ExactPoly ExactPoly::constant(BigInt c) { return ExactPoly({std::move(c)}); }

ExactPoly ExactPoly::monomial(std::size_t power, BigInt c) {
  std::vector<BigInt> v(power + 1, 0);
  v[power] = std::move(c);
  return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::linear_root(const BigInt& root) { return ExactPoly({-root, BigInt(1)}); }

void ExactPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt ExactPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ExactPoly ExactPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return ExactPoly(std::move(d));
}

BigInt ExactPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
    if (g == 1) break;
  }
  return g;
}

ExactPoly ExactPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i] / g;
  return ExactPoly(std::move(v));
}

ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return ExactPoly(std::move(v));
}

ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return ExactPoly(std::move(v));
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::operator-() const {
  std::vector<BigInt> v = coeffs_;
  for (auto& c : v) c = -c;
  return ExactPoly(std::move(v));
}

std::string ExactPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    if (mag != 1 || k == 0) s += mag.str();
    if (k >= 1) s += "x";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

std::vector<std::string> ExactPoly::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.str());
  return out;
}

DivisionResult divide(const ExactPoly& dividend, const ExactPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<BigInt> r = dividend.coeffs();
  const std::size_t db = static_cast<std::size_t>(divisor.degree());
  if (r.size() <= db) return {ExactPoly{}, dividend};
  std::vector<BigInt> q(r.size() - db, 0);
  const BigInt& lead = divisor.leading();
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    BigInt t, rem;
    boost::multiprecision::divide_qr(r[k], lead, t, rem);
    if (rem != 0) throw std::domain_error("polynomial division leaves the integers");
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] -= t * divisor.coeffs()[i];
    q[k - db] = std::move(t);
  }
  return {ExactPoly(std::move(q)), ExactPoly(std::move(r))};
}

ExactPoly divide_exact(const ExactPoly& dividend, const ExactPoly& divisor) {
  auto [q, r] = divide(dividend, divisor);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

ExactPoly positive_pseudo_remainder(const ExactPoly& a, const ExactPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  const BigInt scale = boost::multiprecision::abs(b.leading());
  const int sign = b.leading() < 0 ? -1 : 1;
  ExactPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
    const BigInt t = r.leading() * sign;
    r = ExactPoly::constant(scale) * r - ExactPoly::monomial(shift, t) * b;
  }
  return r;
}

ExactPoly gcd(const ExactPoly& a, const ExactPoly& b) {
  ExactPoly x = a.primitive_part();
  ExactPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    ExactPoly r = positive_pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x;
}

std::size_t root_multiplicity(ExactPoly p, const BigInt& root) {
  if (p.is_zero()) throw std::domain_error("root multiplicity of the zero polynomial");
  const ExactPoly lin = ExactPoly::linear_root(root);
  std::size_t k = 0;
  while (p.degree() > 0 && p.evaluate(root) == 0) {
    p = divide_exact(p, lin);
    ++k;
  }
  return k;
}

ExactPoly strip_root(ExactPoly p, const BigInt& root) {
  const ExactPoly lin = ExactPoly::linear_root(root);
  while (p.degree() > 0 && p.evaluate(root) == 0) p = divide_exact(p, lin);
  return p;
}

}  // namespace cospec
