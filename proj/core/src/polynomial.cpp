#include "lb/polynomial.hpp"

namespace lb {

BraidPolynomial::BraidPolynomial(Ring ring, std::vector<Scalar> coeffs) : ring_(ring), c_(std::move(coeffs)) {
  trim();
}

BraidPolynomial BraidPolynomial::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Scalar> v(degree + 1, Scalar::zero(c.ring()));
  v[degree] = c;
  return BraidPolynomial(c.ring(), std::move(v));
}

void BraidPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar BraidPolynomial::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar::zero(ring_); }

Scalar BraidPolynomial::evaluate(const Scalar& t) const {
  Scalar acc = Scalar::zero(ring_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

BraidPolynomial& BraidPolynomial::operator+=(const BraidPolynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar::zero(ring_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

BraidPolynomial& BraidPolynomial::operator-=(const BraidPolynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar::zero(ring_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

BraidPolynomial BraidPolynomial::operator*(const BraidPolynomial& o) const {
  if (is_zero() || o.is_zero()) return BraidPolynomial(ring_);
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar::zero(ring_));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return BraidPolynomial(ring_, std::move(r));
}

BraidPolynomial BraidPolynomial::operator*(const Scalar& s) const {
  std::vector<Scalar> r = c_;
  for (auto& x : r) x *= s;
  return BraidPolynomial(ring_, std::move(r));
}

BraidPolynomial BraidPolynomial::shifted(std::size_t d) const {
  if (is_zero()) return *this;
  std::vector<Scalar> r(d, Scalar::zero(ring_));
  r.insert(r.end(), c_.begin(), c_.end());
  return BraidPolynomial(ring_, std::move(r));
}

std::string BraidPolynomial::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string mag = c_[i].str();
    bool neg = !mag.empty() && mag[0] == '-';
    if (neg) mag.erase(0, 1);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string var = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    if (i == 0)
      out += mag;
    else
      out += (mag == "1" ? "" : mag) + var;
  }
  return out;
}

}  // namespace lb
