#pragma once

#include <string>
#include <vector>

#include "lb/ring.hpp"

namespace lb {

// Σ c_i t^i over a Ring, trailing zeros trimmed.
class BraidPolynomial {
 public:
  explicit BraidPolynomial(Ring ring = Ring::integers()) : ring_(ring) {}
  BraidPolynomial(Ring ring, std::vector<Scalar> coeffs);
  static BraidPolynomial monomial(const Scalar& c, std::size_t degree);

  const Ring& ring() const { return ring_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  // Coefficient of t^i (zero past the end).
  Scalar coeff(std::size_t i) const;
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Scalar evaluate(const Scalar& t) const;

  BraidPolynomial& operator+=(const BraidPolynomial& o);
  BraidPolynomial& operator-=(const BraidPolynomial& o);
  BraidPolynomial operator*(const BraidPolynomial& o) const;
  BraidPolynomial operator*(const Scalar& s) const;
  // Multiply by t^d.
  BraidPolynomial shifted(std::size_t d) const;
  friend BraidPolynomial operator+(BraidPolynomial a, const BraidPolynomial& b) { return a += b; }
  friend BraidPolynomial operator-(BraidPolynomial a, const BraidPolynomial& b) { return a -= b; }
  bool operator==(const BraidPolynomial& o) const { return ring_ == o.ring_ && c_ == o.c_; }

  // e.g. "1 - 2t + t^3"
  std::string str() const;

 private:
  void trim();

  Ring ring_;
  std::vector<Scalar> c_;
};

}  // namespace lb
