#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tdpoly {

using Integer = boost::multiprecision::cpp_int;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// coefficients()[i] is the coefficient of x^i. The representation is kept
/// normalized: no trailing zero coefficients, so the zero polynomial has an
/// empty coefficient list and equality is coefficient-wise.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coefficients);
  Polynomial(std::initializer_list<long long> coefficients);

  static Polynomial constant(const Integer& c);
  /// c * x^degree
  static Polynomial monomial(std::size_t degree, const Integer& c = 1);
  static Polynomial x() { return monomial(1); }

  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as 0; check is_zero() first.
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  /// Coefficient of x^i, zero beyond the degree.
  Integer coefficient(std::size_t i) const;
  /// Multiplicity of 0 as a root (index of the lowest nonzero coefficient).
  std::size_t lowest_degree() const;

  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(Polynomial p, const Polynomial& q) { return p *= q; }
  Polynomial operator-() const;
  bool operator==(const Polynomial&) const = default;

  Integer eval(const Integer& t) const;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

enum class PolyOp { add, sub, mul };

Polynomial combine(PolyOp op, const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, unsigned k);

/// Every integer t with p(t) = 0, ascending. Throws std::domain_error for
/// the zero polynomial.
std::vector<Integer> integer_roots(const Polynomial& p);

/// "0 0 4 4 1" for x^4+4x^3+4x^2; the zero polynomial renders as "0".
std::string to_dense_string(const Polynomial& p);
/// "x^4+4x^3+4x^2"; the zero polynomial renders as "0".
std::string to_human_string(const Polynomial& p);
/// Inverse of to_dense_string; throws std::invalid_argument on bad tokens.
Polynomial parse_dense(const std::string& text);

}  // namespace tdpoly
