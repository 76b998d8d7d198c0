#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lb/matrix.hpp"
#include "lb/series.hpp"
#include "lb/tensor.hpp"
#include "lb/words.hpp"

namespace lb {

struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;  // freely reduced

  static Presentation free(Alphabet a) { return {std::move(a), {}}; }
};

// Lines "gens: x y z" and "rel: <word>"; blank lines and '#' comments are
// ignored. Errors report "line L, column C".
Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& p);

// Monomials of degree < N in graded-lex order, indexed densely.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t gens, std::size_t order);

  std::size_t size() const { return offsets_.back(); }
  std::size_t order() const { return order_; }
  // Number of monomials of degree < d.
  std::size_t count_below(std::size_t d) const { return offsets_[d]; }
  std::size_t index(const Key& k) const;
  Key key(std::size_t index) const;

 private:
  std::size_t gens_, order_;
  std::vector<std::size_t> offsets_;
};

// m₁·(M(r) − 1)·m₂
struct Sandwich {
  Key left;
  std::size_t relator;
  Key right;
};

struct QuotientBasisElement {
  Key monomial;
  // Largest k with the class in image(degree ≥ k).
  std::size_t filtration_degree;
};

// A[Γ]/I^N presented as A⟨X_S⟩_{<N} modulo the span of sandwiches.
class TruncatedQuotient {
 public:
  const Presentation& presentation() const { return pres_; }
  const Ring& ring() const { return ring_; }
  const Alphabet& alphabet() const { return pres_.alphabet; }
  std::size_t order() const { return monomials_.order(); }
  const MonomialBasis& monomials() const { return monomials_; }
  const std::vector<Sandwich>& sandwiches() const { return sandwiches_; }
  // Rows = monomials, columns = sandwiches.
  Matrix ideal_span() const;
  // Echelon form of the ideal, rows over monomials; pivots sit on the
  // lowest-degree term of each row.
  const Echelon& reduction() const { return echelon_; }

  // Over a field: standard monomials. Over ℤ: monomials generating the free
  // part; torsion is described by elementary_divisors().
  const std::vector<QuotientBasisElement>& basis() const { return basis_; }
  // Nontrivial elementary divisors (> 1) of the ideal lattice; ℤ only.
  const std::vector<mpz_class>& elementary_divisors() const { return divisors_; }
  // Rank of the free part.
  std::size_t rank() const { return monomials_.size() - echelon_.pivots.size(); }

  Vector coordinates(const TruncSeries& s) const;
  Vector normal_form(const Vector& v) const;
  Vector normal_form(const TruncSeries& s) const { return normal_form(coordinates(s)); }
  // Largest k < N with v in span + image(degree ≥ k); nullopt if v is zero in the quotient.
  std::optional<std::size_t> filtration_degree(const Vector& v) const;
  // Coordinates of each sandwich, aligned with sandwiches().
  const std::vector<Vector>& sandwich_columns() const { return columns_; }

 private:
  friend TruncatedQuotient build_truncated_quotient(const Presentation&, std::size_t, Ring, std::size_t);
  TruncatedQuotient(Presentation p, std::size_t order, Ring ring) : pres_(std::move(p)), ring_(ring), monomials_(pres_.alphabet.size(), order) {}

  Presentation pres_;
  Ring ring_;
  MonomialBasis monomials_;
  std::vector<Sandwich> sandwiches_;
  std::vector<Vector> columns_;
  Echelon echelon_;
  // truncated_[k]: echelon of the ideal restricted to monomials of degree < k.
  std::vector<Echelon> truncated_;
  std::vector<QuotientBasisElement> basis_;
  std::vector<mpz_class> divisors_;
};

inline constexpr std::size_t kDefaultEntryCap = 50'000'000;

// Throws DomainError if monomials × sandwiches exceeds entry_cap.
TruncatedQuotient build_truncated_quotient(const Presentation& p, std::size_t order, Ring ring,
                                           std::size_t entry_cap = kDefaultEntryCap);

// Formal A-combination of words.
using Combo = std::vector<std::pair<Scalar, Word>>;

// "2 x y - x^-1 + [x,y]": terms separated by top-level '+'/'-', each an
// optional scalar followed by a word.
Combo parse_combo(std::string_view text, const Alphabet& alphabet, Ring ring);

// ⟨T, Σ cᵢwᵢ⟩ = Σ cᵢ·T(M(wᵢ)); requires weight(T) < N.
Scalar pair(const TruncatedQuotient& q, const TensorElement& t, const Combo& combo);
Scalar pair(const TruncatedQuotient& q, const TensorElement& t, const Word& w);

struct InvariantElement {
  TensorElement tensor;
  std::size_t weight;
};

struct InvariantBasis {
  Ring ring;
  Alphabet alphabet;
  std::size_t max_weight;
  // Lowest weight first.
  std::vector<InvariantElement> elements;
  std::vector<mpz_class> elementary_divisors;
  // duality(i, j) = ⟨elements[i], class of quotient basis monomial j⟩.
  Matrix duality;
};

InvariantBasis invariants_basis(const TruncatedQuotient& q);
InvariantBasis invariants_basis(const Presentation& p, std::size_t order, Ring ring);

struct InvarianceWitness {
  Sandwich sandwich;
  Scalar value;
  // The same value as a multi-evaluation ℓ_T(s…|r|…s).
  std::vector<Word> words;
};

struct InvarianceReport {
  bool invariant;
  std::optional<InvarianceWitness> witness;
};

InvarianceReport is_invariant(const Presentation& p, const TensorElement& t);

// A correction C of weight < weight(lead) with lead + C invariant, or nullopt
// when lead is not the leading term of any invariant.
std::optional<TensorElement> complete_leading_term(const Presentation& p, const TensorElement& lead);

struct DepthReport {
  std::optional<std::size_t> exact;
  std::size_t order;
  // "k" or ">= N"
  std::string str() const;
};

DepthReport dimension_depth(const TruncatedQuotient& q, const Word& w);

struct GroupHom {
  Alphabet source;
  Alphabet target;
  std::map<std::string, Word> images;

  Word image(int source_gen) const;
};

// "s -> w, t -> u v": entries split on top-level commas; every source
// generator needs exactly one entry.
GroupHom parse_hom(std::string_view text, const Alphabet& source, const Alphabet& target);
// Source alphabet taken from the left-hand sides in order of appearance.
GroupHom parse_hom(std::string_view text, const Alphabet& target);
std::string format_hom(const GroupHom& h);

// h*(T): coefficient at (s₁…s_k) is ⟨T, Π(h(sᵢ) − 1)⟩.
TensorElement pullback(const GroupHom& h, const TensorElement& t, const TruncatedQuotient& q_target);

}  // namespace lb
