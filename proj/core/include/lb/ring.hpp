#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lb {

enum class RingKind { Integers, Rationals, PrimeField };

// Coefficient ring: ℤ, ℚ or 𝔽p.
class Ring {
 public:
  Ring() = default;

  static Ring integers() { return Ring(RingKind::Integers, 0); }
  static Ring rationals() { return Ring(RingKind::Rationals, 0); }
  // Throws DomainError unless p is prime.
  static Ring prime_field(std::uint64_t p);
  // "z", "q" or "fp:<p>".
  static Ring parse(std::string_view text);

  RingKind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }
  bool is_field() const { return kind_ != RingKind::Integers; }
  std::string name() const;

  bool operator==(const Ring&) const = default;

 private:
  Ring(RingKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  RingKind kind_ = RingKind::Integers;
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

// An exact element of a Ring. Integers are mpq values with denominator 1;
// 𝔽p values are canonical residues 0..p-1.
class Scalar {
 public:
  explicit Scalar(Ring ring = Ring::integers()) : ring_(ring) {}
  Scalar(Ring ring, long v);
  Scalar(Ring ring, const mpz_class& v);
  // Throws DomainError if the value is not in the ring (e.g. 1/2 over ℤ,
  // or a denominator divisible by p over 𝔽p).
  Scalar(Ring ring, const mpq_class& v);

  // Decimal literal "n" or "a/b".
  static Scalar parse(Ring ring, std::string_view text);

  static Scalar zero(Ring r) { return Scalar(r); }
  static Scalar one(Ring r) { return Scalar(r, 1L); }

  const Ring& ring() const { return ring_; }
  const mpq_class& value() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  // True for units of the ring.
  bool is_invertible() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  // Exact division; over ℤ the quotient must be integral (DomainError otherwise).
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const { return ring_ == o.ring_ && v_ == o.v_; }

  // Integer value (ℤ and 𝔽p only).
  mpz_class to_integer() const;
  // "n" or "a/b".
  std::string str() const;

 private:
  void check_same(const Scalar& o) const;
  void normalize();

  Ring ring_;
  mpq_class v_;
};

}  // namespace lb
