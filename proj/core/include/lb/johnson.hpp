#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lb/presented.hpp"

namespace lb {

// An endomorphism of ⟨S|R⟩ given on generators. Not checked to be well
// defined or invertible.
using Endo = GroupHom;

Endo parse_endo(std::string_view text, const Presentation& p);
Endo identity_endo(const Presentation& p);
// (φ∘ψ)(s) = φ(ψ(s))
Endo compose(const Endo& phi, const Endo& psi);

struct JohnsonLevel {
  // Exact level, or nullopt for the bound "≥ N−1".
  std::optional<std::size_t> exact;
  std::size_t order;
  // Generator whose image moves least deep into the filtration.
  std::optional<std::string> limiting_generator;
  // Relators whose images are visibly nontrivial at this truncation.
  std::vector<std::string> warnings;

  std::string str() const;
  bool at_least(std::size_t k) const { return !exact || *exact >= k; }
};

JohnsonLevel johnson_level(const TruncatedQuotient& q, const Endo& phi);
JohnsonLevel johnson_level(const Presentation& p, const Endo& phi, Ring ring, std::size_t order);

struct JohnsonReport {
  std::size_t k;
  // Weight-(k+1) basis invariants indexing the rows (leading terms span K_{k+1}).
  std::vector<TensorElement> rows;
  // Weight-1 basis invariants indexing the columns.
  std::vector<TensorElement> columns;
  // τ_φ(rows[i]) = Σ_j tau(i, j)·columns[j]
  Matrix tau;
  std::vector<TensorElement> images;
  std::vector<std::string> warnings;

  bool is_zero() const;
};

// Throws DomainError naming the offending generator when φ is not in J(k).
JohnsonReport johnson_tau(const Presentation& p, const Endo& phi, std::size_t k, Ring ring);

}  // namespace lb
