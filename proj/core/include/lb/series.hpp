#pragma once

#include "lb/tensor.hpp"

namespace lb {

// Noncommutative polynomial in X_s of degree < N (the Magnus target).
class TruncSeries {
 public:
  TruncSeries(Ring ring, Alphabet alphabet, std::size_t order);

  static TruncSeries one(Ring ring, Alphabet alphabet, std::size_t order);
  static TruncSeries variable(Ring ring, Alphabet alphabet, std::size_t order, int gen);

  const Ring& ring() const { return ring_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t order() const { return order_; }
  const TermMap& terms() const { return terms_; }

  Scalar coeff(const Key& k) const;
  // Keys of length ≥ order are dropped.
  void add(const Key& k, const Scalar& c);
  bool is_zero() const { return terms_.empty(); }
  // Smallest key length present (order() for the zero series).
  std::size_t valuation() const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries operator*(const Scalar& s) const;
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  bool operator==(const TruncSeries& o) const {
    return ring_ == o.ring_ && alphabet_ == o.alphabet_ && order_ == o.order_ && terms_ == o.terms_;
  }

 private:
  void check_same(const TruncSeries& o) const;

  Ring ring_;
  Alphabet alphabet_;
  std::size_t order_;
  TermMap terms_;
};

// Throws DomainError on mismatched order, ring or alphabet.
TruncSeries trunc_mul(const TruncSeries& a, const TruncSeries& b);

// x ↦ 1 + X, x⁻¹ ↦ Σ_{j<N} (−X)^j, multiplied out letter by letter.
TruncSeries magnus_expand(const Word& w, std::size_t order, Ring ring);

// Σ_key T[key]·S[key]; requires weight(T) < order(S).
Scalar apply(const TensorElement& t, const TruncSeries& s);

}  // namespace lb
