#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lb/matrix.hpp"
#include "lb/ring.hpp"
#include "lb/words.hpp"

namespace lb {

// A monomial: sequence of generator indices. Empty = unit.
using Key = std::vector<int>;

// Shorter keys first, then lexicographic by generator index.
struct GradedLex {
  bool operator()(const Key& a, const Key& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using TermMap = std::map<Key, Scalar, GradedLex>;

// A linear functional on A^S: coefficient per generator.
struct Functional {
  Alphabet alphabet;
  Vector coeffs;

  static Functional dual(const Alphabet& a, Ring ring, int gen);
  Scalar operator()(int gen) const { return coeffs[static_cast<std::size_t>(gen)]; }
};

// Element of the tensor coalgebra T(A^S), expanded over the dual monomial basis.
class TensorElement {
 public:
  TensorElement() = default;
  TensorElement(Ring ring, Alphabet alphabet) : ring_(ring), alphabet_(std::move(alphabet)) {}

  static TensorElement unit(Ring ring, Alphabet alphabet);
  static TensorElement pure(Ring ring, Alphabet alphabet, Key key, Scalar coeff);
  static TensorElement pure(Ring ring, Alphabet alphabet, Key key);
  // α₁|…|α_r expanded over monomials.
  static TensorElement from_functionals(Ring ring, const std::vector<Functional>& factors);

  const Ring& ring() const { return ring_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }

  Scalar coeff(const Key& k) const;
  void add(const Key& k, const Scalar& c);
  // Longest key length; 0 for the zero tensor.
  std::size_t weight() const;
  Scalar counit() const { return coeff({}); }
  bool is_zero() const { return terms_.empty(); }

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement operator-() const;
  TensorElement operator*(const Scalar& s) const;
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  bool operator==(const TensorElement& o) const {
    return ring_ == o.ring_ && alphabet_ == o.alphabet_ && terms_ == o.terms_;
  }

 private:
  void check_same(const TensorElement& o) const;

  Ring ring_;
  Alphabet alphabet_;
  TermMap terms_;
};

// a|b: concatenation product.
TensorElement tensor(const TensorElement& a, const TensorElement& b);

// Homogeneous weight-n part.
TensorElement leading_term(const TensorElement& t, std::size_t n);

// Formal sums of (k+1)-fold tensors of monomials.
using MultiTensor = std::map<std::vector<Key>, Scalar>;

MultiTensor coproduct(const TensorElement& t);
MultiTensor reduced_coproduct(const TensorElement& t);
// Left-iterated reduced coproduct Δ̄^k, a (k+1)-fold tensor. Δ̄^0 is T minus its unit part.
MultiTensor iterated_reduced_coproduct(const TensorElement& t, std::size_t k);

// Grammar: scalars, generator names (dual functionals), '|' for tensor
// factors, '+'/'-', parentheses distributing over '|'.
TensorElement parse_tensor(std::string_view text, const Alphabet& alphabet, Ring ring);
// Highest weight first, e.g. "x|y + z"; parse_tensor inverts it.
std::string format_tensor(const TensorElement& t);
std::string format_key(const Key& k, const Alphabet& a);

}  // namespace lb
