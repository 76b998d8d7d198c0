#pragma once

#include <random>
#include <string>
#include <vector>

#include "lb/finite_group.hpp"
#include "lb/presented.hpp"
#include "lb/tensor.hpp"
#include "lb/words.hpp"

namespace lb::test {

inline Ring Z() { return Ring::integers(); }
inline Ring Q() { return Ring::rationals(); }
inline Ring F(std::uint64_t p) { return Ring::prime_field(p); }

inline Scalar s(Ring r, long v) { return Scalar(r, v); }

inline Word W(const Alphabet& a, const std::string& text) { return parse_word(text, a); }
inline TensorElement T(const Alphabet& a, const std::string& text, Ring r = Ring::integers()) {
  return parse_tensor(text, a, r);
}

// All words of exact length n, in lexicographic order of (gen, sign) choices.
inline std::vector<Word> all_words(const Alphabet& a, std::size_t n) {
  std::vector<Word> out;
  std::size_t choices = 2 * a.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= choices;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Letter> letters;
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      letters.push_back({static_cast<int>(c % choices / 2), c % 2 ? -1 : 1});
      c /= choices;
    }
    out.emplace_back(a, letters);
  }
  return out;
}

// All keys of length exactly n over g generators.
inline std::vector<Key> all_keys(std::size_t g, std::size_t n) {
  std::vector<Key> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Key> next;
    for (const auto& k : out)
      for (std::size_t j = 0; j < g; ++j) {
        Key e = k;
        e.push_back(static_cast<int>(j));
        next.push_back(e);
      }
    out = std::move(next);
  }
  return out;
}

inline Word random_word(const Alphabet& a, std::size_t max_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, static_cast<int>(a.size()) - 1), sign(0, 1);
  std::vector<Letter> letters(len(rng));
  for (auto& l : letters) l = {gen(rng), sign(rng) ? 1 : -1};
  return Word(a, letters);
}

// Random tensor with small coefficients and keys of length 1..max_weight.
inline TensorElement random_tensor(Ring r, const Alphabet& a, std::size_t max_weight, std::size_t terms,
                                   std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(1, max_weight);
  std::uniform_int_distribution<int> gen(0, static_cast<int>(a.size()) - 1);
  std::uniform_int_distribution<long> coeff(-3, 3);
  TensorElement t(r, a);
  for (std::size_t i = 0; i < terms; ++i) {
    Key k(len(rng));
    for (auto& g : k) g = gen(rng);
    t.add(k, Scalar(r, coeff(rng)));
  }
  return t;
}

inline FiniteGroupTable cyclic_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  return FiniteGroupTable(mul, {{"x", n > 1 ? 1 : 0}});
}

// C_m × C_n with generators x = (1,0), y = (0,1); element (i,j) ↦ i·n + j.
inline FiniteGroupTable product_table(std::size_t m, std::size_t n) {
  std::size_t size = m * n;
  std::vector<std::vector<std::size_t>> mul(size, std::vector<std::size_t>(size));
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      mul[a][b] = ((a / n + b / n) % m) * n + (a % n + b % n) % n;
  return FiniteGroupTable(mul, {{"x", n}, {"y", 1}});
}

// Unitriangular 3×3 matrices over F_2, (a,b,c) ↦ 4a + 2b + c with entries
// (1,2) = a, (2,3) = b, (1,3) = c.
inline FiniteGroupTable heisenberg_table() {
  std::vector<std::vector<std::size_t>> mul(8, std::vector<std::size_t>(8));
  for (std::size_t u = 0; u < 8; ++u)
    for (std::size_t v = 0; v < 8; ++v) {
      std::size_t a = (u >> 2) ^ (v >> 2), b = ((u >> 1) & 1) ^ ((v >> 1) & 1);
      std::size_t c = (u & 1) ^ (v & 1) ^ ((u >> 2) & (v >> 1) & 1);
      mul[u][v] = 4 * a + 2 * b + c;
    }
  return FiniteGroupTable(mul, {{"x", 4}, {"y", 2}, {"z", 1}});
}

// S_3 as permutations of {0,1,2} in lexicographic order; s = (0 1), t = (1 2).
inline FiniteGroupTable s3_table() {
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index = [&](const std::vector<int>& p) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return i;
    return perms.size();
  };
  std::vector<std::vector<std::size_t>> mul(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      mul[a][b] = index(c);
    }
  return FiniteGroupTable(mul, {{"s", 2}, {"t", 1}});
}

inline Presentation cyclic(std::size_t n) {
  return parse_presentation("gens: x\nrel: x^" + std::to_string(n));
}
inline Presentation product(std::size_t m, std::size_t n) {
  return parse_presentation("gens: x y\nrel: x^" + std::to_string(m) + "\nrel: y^" + std::to_string(n) +
                            "\nrel: [x, y]");
}
inline Presentation heisenberg() {
  return parse_presentation("gens: x y z\nrel: x^2\nrel: y^2\nrel: z^2\nrel: [x, y] z^-1");
}
inline Presentation s3() { return parse_presentation("gens: s t\nrel: s^2\nrel: t^2\nrel: (s t)^3"); }
inline Presentation surface(int genus) {
  std::string gens = "gens:", rel = "rel:";
  for (int i = 1; i <= genus; ++i) {
    std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
    gens += " " + a + " " + b;
    rel += " [" + a + ", " + b + "]";
  }
  return parse_presentation(gens + "\n" + rel);
}
inline Presentation pure_braid3() {
  return parse_presentation("gens: A12 A13 A23\nrel: [A12 A13 A23, A13]\nrel: [A12 A13 A23, A23]");
}

}  // namespace lb::test
