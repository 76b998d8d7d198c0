#pragma once

#include <vector>

#include "lb/polynomial.hpp"
#include "lb/tensor.hpp"
#include "lb/words.hpp"

namespace lb {

// The subdivided circle of a word: vertices 0..n, segment 0 is the standard
// segment 0→1, segment i ≥ 1 carries letter i and runs i→i+1 (mod n+1) when
// the letter is positive, i+1→i when negative.
class CircleWord {
 public:
  explicit CircleWord(Word w) : w_(std::move(w)) {}

  const Word& word() const { return w_; }
  std::size_t n() const { return w_.length(); }
  int sign(std::size_t i) const { return i == 0 ? 1 : w_[i - 1].sign; }
  // Start and end vertex of segment i.
  std::size_t d0(std::size_t i) const;
  std::size_t d1(std::size_t i) const;

 private:
  Word w_;
};

// A 1-cochain α = f dx + c δ₀ on the circle, stored in dx-coordinates:
// values()[0] = c, values()[i] = f(i) for i ≥ 1.
class CircleForm {
 public:
  CircleForm(Ring ring, std::size_t n) : v_(zero_vector(ring, n + 1)) {}
  explicit CircleForm(Vector values) : v_(std::move(values)) {}

  std::size_t n() const { return v_.size() - 1; }
  const Vector& values() const { return v_; }
  const Scalar& f(std::size_t i) const { return v_[i]; }
  Scalar& f(std::size_t i) { return v_[i]; }
  const Scalar& delta0() const { return v_[0]; }
  Scalar& delta0() { return v_[0]; }
  bool is_pure_dx() const { return v_[0].is_zero(); }
  // f(1) + … + f(n)
  Scalar integral() const;
  bool operator==(const CircleForm&) const = default;

 private:
  Vector v_;
};

CircleForm pullback_to_circle(const Functional& alpha, const Word& w);

// g on vertices 0..n with d(g) = f dx − (∫f) δ₀; g(0) = 0.
Vector cobound(const CircleWord& cw, const CircleForm& fdx);
// d of a 0-cochain, in dx-coordinates.
CircleForm differential(const CircleWord& cw, const Vector& g);

struct BarFactor {
  bool is_t = false;
  CircleForm form{Ring::integers(), 0};

  static BarFactor t(Ring ring, std::size_t n) { return {true, CircleForm(ring, n)}; }
  static BarFactor of(CircleForm f) { return {false, std::move(f)}; }
};

struct BarTerm {
  Scalar coeff;
  std::vector<BarFactor> factors;
};

using BarTensor = std::vector<BarTerm>;

// The pullback of T along w as a bar tensor on the circle of w.
BarTensor pullback_tensor(const TensorElement& t, const Word& w);

// The unique polynomial in t cohomologous to B (rightmost pivot).
BraidPolynomial weight_reduce(const CircleWord& cw, const BarTensor& b, Ring ring);

// Letter-braiding number of α₁|…|α_r: sum over chains i₁ <_w … <_w i_r.
Scalar iterated_sum(const std::vector<Functional>& factors, const Word& w, Ring ring);
// Same, for the dual monomial X_{k₁}|…|X_{k_r}.
Scalar iterated_sum(const Key& key, const Word& w, Ring ring);

Scalar braiding_number(const TensorElement& t, const Word& w);
BraidPolynomial braiding_polynomial(const TensorElement& t, const Word& w);
// The two independent routes braiding_polynomial compares in debug builds.
BraidPolynomial braiding_polynomial_by_reduction(const TensorElement& t, const Word& w);
BraidPolynomial braiding_polynomial_by_coproduct(const TensorElement& t, const Word& w);

// ℓ_T(w₀|…|w_n) by inclusion-exclusion over products of subsets.
Scalar multi_evaluation(const TensorElement& t, const std::vector<Word>& words);

struct ProductCheck {
  Scalar lhs;    // ℓ_T(w₁w₂)
  Scalar left;   // ℓ_T(w₁)
  Scalar right;  // ℓ_T(w₂)
  Scalar cross;  // Σ ℓ_{T₁}(w₁)ℓ_{T₂}(w₂) over Δ̄T
  Scalar rhs() const { return left + right + cross; }
};

ProductCheck product_check(const TensorElement& t, const Word& w1, const Word& w2);

}  // namespace lb
