#include "tdpoly/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tdpoly {

Polynomial::Polynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

Polynomial::Polynomial(std::initializer_list<long long> coefficients)
    : coeffs_(coefficients.begin(), coefficients.end()) {
  normalize();
}

Polynomial Polynomial::constant(const Integer& c) { return Polynomial(std::vector<Integer>{c}); }

Polynomial Polynomial::monomial(std::size_t degree, const Integer& c) {
  std::vector<Integer> coeffs(degree + 1);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer Polynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer{0}; }

std::size_t Polynomial::lowest_degree() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return k;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) {
  if (is_zero() || q.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * q.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Integer Polynomial::eval(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial combine(PolyOp op, const Polynomial& p, const Polynomial& q) {
  switch (op) {
    case PolyOp::add:
      return p + q;
    case PolyOp::sub:
      return p - q;
    case PolyOp::mul:
      return p * q;
  }
  throw std::invalid_argument("unknown polynomial operation");
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result{1};
  Polynomial base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

std::vector<Integer> integer_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("every integer is a root of the zero polynomial");
  const auto& c = p.coefficients();
  const std::size_t k = p.lowest_degree();
  std::vector<Integer> roots;
  if (k > 0) roots.emplace_back(0);

  // A nonzero integer root t divides c[k] and satisfies the Cauchy bound
  // |t| <= 1 + max_i |c[i] / c[deg]|.
  const Integer constant = abs(c[k]);
  const Integer lead = abs(c.back());
  Integer bound = 0;
  for (std::size_t i = k; i + 1 < c.size(); ++i) bound = std::max(bound, Integer(abs(c[i])));
  bound = bound / lead + 1;
  bound = std::min(bound, constant);

  for (Integer t = 1; t <= bound; ++t) {
    if (constant % t != 0) continue;
    if (p.eval(-t) == 0) roots.push_back(-t);
    if (p.eval(t) == 0) roots.push_back(t);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string to_dense_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out << ' ';
    out << c[i];
  }
  return out.str();
}

std::string to_human_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  const auto& c = p.coefficients();
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Integer mag = abs(c[i]);
    if (c[i] < 0) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    first = false;
    if (mag != 1 || i == 0) out << mag;
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

Polynomial parse_dense(const std::string& text) {
  std::istringstream in(text);
  std::vector<Integer> coeffs;
  std::string token;
  while (in >> token) {
    try {
      coeffs.emplace_back(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer coefficient: '" + token + "'");
    }
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace tdpoly
