#include "lb/ring.hpp"

#include <charconv>

#include "lb/error.hpp"

namespace lb {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

Ring Ring::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  return Ring(RingKind::PrimeField, p);
}

Ring Ring::parse(std::string_view text) {
  if (text == "z" || text == "Z") return integers();
  if (text == "q" || text == "Q") return rationals();
  if (text.substr(0, 3) == "fp:") {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw ParseError("malformed prime modulus '" + std::string(digits) + "'", 3);
    return prime_field(p);
  }
  throw ParseError("unknown ring '" + std::string(text) + "' (expected z, q or fp:<p>)", 0);
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Integers: return "z";
    case RingKind::Rationals: return "q";
    case RingKind::PrimeField: return "fp:" + std::to_string(p_);
  }
  return "?";
}

Scalar::Scalar(Ring ring, long v) : ring_(ring), v_(v) { normalize(); }

Scalar::Scalar(Ring ring, const mpz_class& v) : ring_(ring), v_(v) { normalize(); }

Scalar::Scalar(Ring ring, const mpq_class& v) : ring_(ring), v_(v) {
  v_.canonicalize();
  normalize();
}

Scalar Scalar::parse(Ring ring, std::string_view text) {
  auto bad = [&](std::size_t pos) -> ParseError {
    return ParseError("malformed scalar '" + std::string(text) + "'", pos);
  };
  if (text.empty()) throw bad(0);
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  auto slash = text.find('/');
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = text.substr(i, slash == std::string_view::npos ? std::string_view::npos : slash - i);
  if (!all_digits(num)) throw bad(i);
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpz_class(std::string(num));
  } else {
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(den)) throw bad(slash + 1);
    mpz_class d{std::string(den)};
    if (d == 0) throw bad(slash + 1);
    q = mpq_class(mpz_class(std::string(num)), d);
    q.canonicalize();
  }
  if (text[0] == '-') q = -q;
  try {
    return Scalar(ring, q);
  } catch (const DomainError& e) {
    throw ParseError(std::string(e.what()) + " in scalar '" + std::string(text) + "'", 0);
  }
}

void Scalar::normalize() {
  switch (ring_.kind()) {
    case RingKind::Integers:
      if (v_.get_den() != 1) throw DomainError("value " + v_.get_str() + " is not an integer");
      break;
    case RingKind::Rationals:
      break;
    case RingKind::PrimeField: {
      mpz_class p(static_cast<unsigned long>(ring_.modulus()));
      mpz_class num = v_.get_num(), den = v_.get_den();
      if (den != 1) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
          throw DomainError("denominator " + den.get_str() + " is not invertible mod " + p.get_str());
        num *= inv;
      }
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
      v_ = r;
      break;
    }
  }
}

void Scalar::check_same(const Scalar& o) const {
  if (!(ring_ == o.ring_))
    throw DomainError("ring mismatch: " + ring_.name() + " vs " + o.ring_.name());
}

bool Scalar::is_invertible() const {
  if (is_zero()) return false;
  if (ring_.kind() == RingKind::Integers) return v_ == 1 || v_ == -1;
  return true;
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.v_ = -r.v_;
  r.normalize();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  v_ += o.v_;
  if (ring_.kind() == RingKind::PrimeField) normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  v_ -= o.v_;
  if (ring_.kind() == RingKind::PrimeField) normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  v_ *= o.v_;
  if (ring_.kind() == RingKind::PrimeField) normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (!is_invertible()) throw DomainError(str() + " is not invertible in " + ring_.name());
  return one(ring_) / *this;
}

mpz_class Scalar::to_integer() const {
  if (ring_.kind() == RingKind::Rationals && v_.get_den() != 1)
    throw DomainError(str() + " is not an integer");
  return v_.get_num();
}

std::string Scalar::str() const { return v_.get_str(); }

}  // namespace lb
