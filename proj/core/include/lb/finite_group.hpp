#pragma once

#include <map>
#include <string>
#include <vector>

#include "lb/tensor.hpp"
#include "lb/words.hpp"

namespace lb {

// A finite group given by its multiplication table.
class FiniteGroupTable {
 public:
  // Throws DomainError unless the table is a group and labels are in range.
  FiniteGroupTable(std::vector<std::vector<std::size_t>> mul, std::map<std::string, std::size_t> gens);

  std::size_t size() const { return mul_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a][b]; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::map<std::string, std::size_t>& gens() const { return gens_; }
  const std::vector<std::vector<std::size_t>>& table() const { return mul_; }

 private:
  std::vector<std::vector<std::size_t>> mul_;
  std::map<std::string, std::size_t> gens_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

std::size_t word_image(const FiniteGroupTable& g, const Word& w);

struct IdealPowerDims {
  // dims[k-1] = rank of A[Γ]/I^k for k = 1..N.
  std::vector<std::size_t> dims;
  // Over ℤ: nontrivial elementary divisors of each quotient.
  std::vector<std::vector<mpz_class>> torsion;
};

IdealPowerDims ideal_power_dims(const FiniteGroupTable& g, Ring ring, std::size_t n);

// ⟨T, element⟩ computed inside A[Γ]: write the element modulo I^N as a
// combination of products (s_{k₁}−1)⋯(s_{k_r}−1) and apply T's coefficients.
// Requires a field and weight(T) < N.
Scalar oracle_pair(const FiniteGroupTable& g, const TensorElement& t, std::size_t element, std::size_t order);

}  // namespace lb
