#pragma once

#include <map>

#include "lb/tensor.hpp"
#include "lb/words.hpp"

namespace lb {

// Element of the free group ring A[F_S]; keys are freely reduced words.
class FreeGroupRingElement {
 public:
  FreeGroupRingElement(Ring ring, Alphabet alphabet) : ring_(ring), alphabet_(std::move(alphabet)) {}

  static FreeGroupRingElement of(const Word& w, Scalar c);
  static FreeGroupRingElement of(const Word& w, Ring ring) { return of(w, Scalar::one(ring)); }
  static FreeGroupRingElement one(Ring ring, Alphabet alphabet);
  // w − 1
  static FreeGroupRingElement shifted(const Word& w, Ring ring);

  const Ring& ring() const { return ring_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::map<Word, Scalar>& terms() const { return terms_; }

  // The key is freely reduced before insertion.
  void add(const Word& w, const Scalar& c);
  Scalar coeff(const Word& w) const;
  bool is_zero() const { return terms_.empty(); }

  FreeGroupRingElement& operator+=(const FreeGroupRingElement& o);
  FreeGroupRingElement& operator-=(const FreeGroupRingElement& o);
  friend FreeGroupRingElement operator+(FreeGroupRingElement a, const FreeGroupRingElement& b) { return a += b; }
  friend FreeGroupRingElement operator-(FreeGroupRingElement a, const FreeGroupRingElement& b) { return a -= b; }
  bool operator==(const FreeGroupRingElement& o) const {
    return ring_ == o.ring_ && alphabet_ == o.alphabet_ && terms_ == o.terms_;
  }

 private:
  Ring ring_;
  Alphabet alphabet_;
  std::map<Word, Scalar> terms_;
};

FreeGroupRingElement group_ring_mul(const FreeGroupRingElement& a, const FreeGroupRingElement& b);
Scalar augment(const FreeGroupRingElement& el);
// ∂/∂x_gen with ∂(uv) = ∂u + u∂v and ∂x⁻¹/∂x = −x⁻¹.
FreeGroupRingElement fox_derivative(const FreeGroupRingElement& el, int gen);
// ε(∂_{k₁}(∂_{k₂}(⋯∂_{k_r}(w)))): the last index is applied first.
Scalar augmented_fox(const Word& w, const Key& key, Ring ring);

}  // namespace lb
