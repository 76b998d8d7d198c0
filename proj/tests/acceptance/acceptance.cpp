// Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
// exits nonzero if any selected criterion fails. Pass criterion numbers as
// arguments to run a subset.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "lb/braiding.hpp"
#include "lb/error.hpp"
#include "lb/finite_group.hpp"
#include "lb/fox.hpp"
#include "lb/johnson.hpp"
#include "lb/series.hpp"
#include "nielsen.hpp"

using namespace lb;
using namespace lb::test;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  // Records the first few failures; later ones are only counted.
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

std::string str(std::size_t n) { return std::to_string(n); }

Word nested(const Alphabet& a, const Key& gens) {
  Word w = Word::generator(a, gens[0]);
  for (std::size_t i = 1; i < gens.size(); ++i) w = commutator(w, Word::generator(a, gens[i]));
  return w;
}

Scalar linear_value(const Functional& f, const Word& w) {
  Scalar v = Scalar::zero(f.coeffs[0].ring());
  for (const auto& l : w.letters()) v += l.sign > 0 ? f(l.gen) : -f(l.gen);
  return v;
}

Outcome four_way_oracle() {
  Outcome o;
  const Alphabet xy = Alphabet::parse("x y");
  std::vector<Key> keys;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& k : all_keys(2, n)) keys.push_back(k);
  auto start = std::chrono::steady_clock::now();
  std::size_t words = 0, comparisons = 0;
  for (std::size_t len = 0; len <= 6; ++len) {
    for (const Word& w : all_words(xy, len)) {
      ++words;
      TruncSeries m = magnus_expand(w, 5, Z());
      CircleWord cw(w);
      for (const Key& k : keys) {
        TensorElement t = TensorElement::pure(Z(), xy, k);
        Scalar a = iterated_sum(k, w, Z());
        Scalar b = weight_reduce(cw, pullback_tensor(t, w), Z()).coeff(1);
        Scalar c = m.coeff(k);
        Scalar d = augmented_fox(w, k, Z());
        ++comparisons;
        o.expect(a == b && b == c && c == d,
                 format_key(k, xy) + " on '" + format_word(w) + "': " + a.str() + " " + b.str() + " " + c.str() +
                     " " + d.str());
      }
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(secs < 60, "took " + std::to_string(secs) + " s");
  std::ostringstream d;
  d.precision(1);
  d << std::fixed << words << " words x " << keys.size() << " tensors, " << comparisons << " comparisons, " << secs
    << " s";
  o.detail = d.str();
  return o;
}

Outcome commutator_fixture() {
  Outcome o;
  const Alphabet xy = Alphabet::parse("x y");
  Word w = W(xy, "[x*y, x^-2]");
  Scalar a = braiding_number(T(xy, "x|x|y|x"), w);
  Scalar b = braiding_number(T(xy, "x|y|x|x"), w);
  TruncSeries m = magnus_expand(w, 5, Z());
  o.expect(a == s(Z(), -1), "X|X|Y|X gave " + a.str());
  o.expect(b == s(Z(), 1), "X|Y|X|X gave " + b.str());
  o.expect(m.coeff({0, 0, 1, 0}) == a && m.coeff({0, 1, 0, 0}) == b, "Magnus coefficients disagree");
  o.detail = "X|X|Y|X -> " + a.str() + ", X|Y|X|X -> " + b.str() +
             "; convention: the leftmost tensor factor pairs with the earliest letter, so a label "
             "XYXX read right to left names X|X|Y|X";
  return o;
}

Outcome product_inverse_multi() {
  Outcome o;
  const Alphabet xyz = Alphabet::parse("x y z");
  std::mt19937_64 rng(3003);
  for (int trial = 0; trial < 500; ++trial) {
    TensorElement t = random_tensor(Z(), xyz, 4, 5, rng);
    Word w1 = random_word(xyz, 6, rng), w2 = random_word(xyz, 6, rng);
    // Product formula, with the coproduct term computed from iterated sums.
    Scalar cross = Scalar::zero(Z());
    for (const auto& [keys, c] : reduced_coproduct(t))
      cross += c * iterated_sum(keys[0], w1, Z()) * iterated_sum(keys[1], w2, Z());
    Scalar lhs = braiding_number(t, concat(w1, w2));
    o.expect(lhs == braiding_number(t, w1) + braiding_number(t, w2) + cross, "product formula, trial " + str(trial));
    ProductCheck pc = product_check(t, w1, w2);
    o.expect(pc.lhs == pc.rhs() && pc.cross == cross, "product_check, trial " + str(trial));
    // Inverse formula: ℓ_T(w⁻¹) = L_T(w)(−1), linear part.
    Scalar inv = braiding_polynomial(t, w1).evaluate(s(Z(), -1)) - t.counit();
    o.expect(braiding_number(t, inverse(w1)) == inv, "inverse law, trial " + str(trial));
    // Multi-evaluation against the product Π(wᵢ − 1) in the free group ring.
    std::vector<Word> ws = {w1, w2};
    if (trial % 2) ws.push_back(random_word(xyz, 4, rng));
    FreeGroupRingElement prod = FreeGroupRingElement::one(Z(), xyz);
    for (const auto& w : ws) prod = group_ring_mul(prod, FreeGroupRingElement::shifted(w, Z()));
    Scalar via_ring = Scalar::zero(Z());
    for (const auto& [g, c] : prod.terms()) via_ring += c * (t.counit() + braiding_number(t, g));
    o.expect(multi_evaluation(t, ws) == via_ring, "multi-evaluation, trial " + str(trial));
  }
  o.detail = "500 seeded triples over F(x,y,z), tensors of weight <= 4";
  return o;
}

Outcome degree_bound_commutators() {
  Outcome o;
  std::mt19937_64 rng(4004);
  std::size_t bound_checks = 0, recursion_checks = 0;
  for (const Alphabet& a : {Alphabet::parse("x y"), Alphabet::parse("x y z")}) {
    std::size_t g = a.size();
    for (std::size_t k = 1; k <= 4; ++k) {
      for (const Key& gens : all_keys(g, k)) {
        Word w = nested(a, gens);
        for (std::size_t n = 1; n <= 8; ++n) {
          // Exhaustive over pure tensors where that is small, seeded samples otherwise.
          std::vector<Key> keys;
          if (std::pow(static_cast<double>(g), static_cast<double>(n)) <= 256) {
            keys = all_keys(g, n);
          } else {
            for (int i = 0; i < 40; ++i) {
              Key key(n);
              for (auto& x : key) x = static_cast<int>(rng() % g);
              keys.push_back(key);
            }
          }
          for (const Key& key : keys) {
            BraidPolynomial p = braiding_polynomial(TensorElement::pure(Z(), a, key), w);
            ++bound_checks;
            o.expect(p.degree() <= static_cast<int>(n / k), "deg L_" + format_key(key, a) + "(" + format_word(w) +
                                                                ") = " + std::to_string(p.degree()));
          }
          // A random homogeneous combination, too.
          TensorElement h(Z(), a);
          for (const Key& key : keys) h.add(key, s(Z(), static_cast<long>(rng() % 5) - 2));
          ++bound_checks;
          o.expect(braiding_polynomial(h, w).degree() <= static_cast<int>(n / k), "homogeneous combination");
        }
        // Recursion: w ∈ γ_k, tensors of k+1 random functionals.
        for (int trial = 0; trial < 8; ++trial) {
          std::vector<Functional> alpha;
          for (std::size_t i = 0; i <= k; ++i) {
            Vector c;
            for (std::size_t j = 0; j < g; ++j) c.emplace_back(Z(), static_cast<long>(rng() % 5) - 2);
            alpha.push_back({a, c});
          }
          Word sw = trial % 2 ? Word::generator(a, static_cast<int>(rng() % g)) : random_word(a, 3, rng);
          std::vector<Functional> head(alpha.begin(), alpha.end() - 1), tail(alpha.begin() + 1, alpha.end());
          Scalar lhs = iterated_sum(alpha, commutator(w, sw), Z());
          Scalar rhs = iterated_sum(head, w, Z()) * linear_value(alpha.back(), sw) -
                       linear_value(alpha.front(), sw) * iterated_sum(tail, w, Z());
          ++recursion_checks;
          o.expect(lhs == rhs, "recursion on " + format_word(w) + " with s = " + format_word(sw));
        }
      }
    }
  }
  o.detail = str(bound_checks) + " degree bounds, " + str(recursion_checks) + " recursion checks";
  return o;
}

Outcome cyclic_fixtures() {
  Outcome o;
  for (std::uint64_t p : {3, 5}) {
    Ring r = F(p);
    std::string tag = "p = " + str(p) + ": ";
    Presentation c = cyclic(p);
    const Alphabet& x = c.alphabet;
    Word gen = Word::generator(x, 0);
    TruncatedQuotient q = build_truncated_quotient(c, p + 1, r);
    InvariantBasis b = invariants_basis(q);
    // Basis spans exactly {X^k : k < p}.
    o.expect(b.elements.size() == p, tag + "basis size " + str(b.elements.size()));
    std::vector<Vector> cols;
    for (const auto& e : b.elements) {
      Vector v = zero_vector(r, p + 1);
      for (const auto& [k, coeff] : e.tensor.terms()) v[k.size()] = coeff;
      cols.push_back(v);
    }
    Matrix span = Matrix::from_vectors(r, cols, p + 1).transpose();
    for (std::size_t k = 0; k <= p; ++k) {
      Vector target = zero_vector(r, p + 1);
      target[k] = Scalar::one(r);
      bool in = membership(span, target).has_value();
      o.expect(in == (k < p), tag + "X^" + str(k) + (k < p ? " missing from" : " wrongly in") + " the basis span");
    }
    // Pairing matrix ⟨X^k, x^i⟩ = C(i, k) mod p.
    mpz_class binom;
    for (std::size_t k = 0; k < p; ++k)
      for (unsigned long i = 0; i < p; ++i) {
        mpz_bin_uiui(binom.get_mpz_t(), i, k);
        Scalar got = pair(q, TensorElement::pure(r, x, Key(k, 0)), power(gen, static_cast<long>(i)));
        o.expect(got == Scalar(r, binom), tag + "<X^" + str(k) + ", x^" + str(i) + "> = " + got.str());
      }
    // X^p is not invariant; the witness is the bare relator with value 1.
    InvarianceReport rep = is_invariant(c, TensorElement::pure(r, x, Key(p, 0)));
    o.expect(!rep.invariant && rep.witness && rep.witness->value.is_one() && rep.witness->sandwich.left.empty() &&
                 rep.witness->sandwich.right.empty(),
             tag + "X^p witness");
    // depth(x^p) = p in ⟨x | x^{p²}⟩.
    TruncatedQuotient q2 = build_truncated_quotient(cyclic(p * p), p + 1, r);
    DepthReport d = dimension_depth(q2, power(gen, static_cast<long>(p)));
    o.expect(d.exact == p, tag + "depth " + d.str());
    // Change of basis to I_k with ⟨I_k, x^i⟩ = i^k / k! mod p.
    Matrix pairing(r, p, p);  // (i, j) = ⟨X^j, x^i⟩
    Matrix target(r, p, p);   // (i, k) = i^k / k!
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) {
        mpz_bin_uiui(binom.get_mpz_t(), i, j);
        pairing(i, j) = Scalar(r, binom);
        mpz_class pw, fact;
        mpz_ui_pow_ui(pw.get_mpz_t(), i, j);
        mpz_fac_ui(fact.get_mpz_t(), j);
        target(i, j) = Scalar(r, pw) / Scalar(r, fact);
      }
    for (std::size_t k = 0; k < p; ++k) {
      Vector col;
      for (std::size_t i = 0; i < p; ++i) col.push_back(target(i, k));
      auto coeffs = membership(pairing, col);
      if (!coeffs) {
        o.expect(false, tag + "no I_" + str(k));
        continue;
      }
      TensorElement ik(r, x);
      for (std::size_t j = 0; j < p; ++j) ik.add(Key(j, 0), (*coeffs)[j]);
      o.expect(is_invariant(c, ik).invariant, tag + "I_" + str(k) + " not invariant");
      for (unsigned long i = 0; i < 2 * p; ++i)
        o.expect(pair(q, ik, power(gen, static_cast<long>(i))) == target(i % p, k),
                 tag + "<I_" + str(k) + ", x^" + str(i) + ">");
    }
  }
  o.detail = "p = 3, 5";
  return o;
}

Outcome heisenberg_fixture() {
  Outcome o;
  Presentation h = heisenberg();
  Ring r = F(2);
  TensorElement t = T(h.alphabet, "x|y + z", r);
  o.expect(is_invariant(h, t).invariant, "X|Y + Z not invariant");
  o.expect(!is_invariant(h, T(h.alphabet, "z", r)).invariant, "Z invariant");
  TruncatedQuotient q = build_truncated_quotient(h, 3, r);
  Scalar v = pair(q, t, W(h.alphabet, "z"));
  o.expect(v.is_one(), "<X|Y + Z, z> = " + v.str());
  IdealPowerDims d = ideal_power_dims(heisenberg_table(), r, 4);
  std::string dims;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t count = invariants_basis(h, n, r).elements.size();
    o.expect(count == d.dims[n - 1], "N = " + str(n) + ": " + str(count) + " vs " + str(d.dims[n - 1]));
    dims += (n > 1 ? " " : "") + str(count);
  }
  o.detail = "<X|Y + Z, z> = " + v.str() + "; dims N = 1..4: " + dims;
  return o;
}

Outcome surface_fixture() {
  Outcome o;
  Presentation p = surface(2);
  const Alphabet& a = p.alphabet;
  // The low-weight list for g = 2, as written.
  std::vector<std::string> listed = {"a1", "a2", "b1", "b2"};
  for (const char* u : {"a", "b"})
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) listed.push_back(u + str(i) + "|" + u + str(j));
  listed.insert(listed.end(), {"a1|b2", "a2|b1", "b1|a2", "b2|a1"});
  for (int i = 1; i <= 2; ++i) {
    std::string ai = "a" + str(i), bi = "b" + str(i);
    listed.push_back(ai + "|" + bi + " - a1|b1");
    listed.push_back(bi + "|" + ai + " + a1|b1");
  }
  std::vector<std::string> weight3;
  for (int i = 1; i <= 2; ++i) {
    std::string ai = "a" + str(i), bi = "b" + str(i);
    weight3.push_back(ai + "|" + bi + "|" + ai + " - a1|b1|" + ai + " - " + ai + "|b1|a1");
  }
  listed.insert(listed.end(), weight3.begin(), weight3.end());

  std::vector<std::string> failing;
  for (const auto& text : listed) {
    InvarianceReport r = is_invariant(p, T(a, text));
    if (!r.invariant) failing.push_back(text + " (relator value " + r.witness->value.str() + ")");
    o.expect(r.invariant, text + " not invariant");
  }
  o.expect(!is_invariant(p, T(a, "a1|b1")).invariant, "A1|B1 alone passes");

  TruncatedQuotient q = build_truncated_quotient(p, 4, Z());
  Word target = W(a, "[[a1, b1], a1]");
  Scalar v = pair(q, T(a, weight3[0]), target);
  o.expect(!v.is_zero(), "weight-3 tensor pairs to 0 with [[a1,b1],a1]");

  std::string detail = "weight <= 2 list passes; A1|B1 alone fails";
  if (!failing.empty()) {
    detail += "; not invariant: ";
    for (std::size_t i = 0; i < failing.size(); ++i) detail += (i ? ", " : "") + failing[i];
    for (const auto& text : weight3) {
      auto c = complete_leading_term(p, T(a, text));
      detail += "; lower-weight completion of " + text + ": " + (c ? format_tensor(*c) : "none");
    }
  }
  detail += "; <" + weight3[0] + ", [[a1,b1],a1]> = " + v.str();
  o.detail = detail;
  o.failures.clear();
  return o;
}

Outcome pure_braid_fixture() {
  Outcome o;
  Presentation p = pure_braid3();
  TensorElement t = T(p.alphabet, "A12|A23 + A23|A13 + A13|A12");
  o.expect(is_invariant(p, t).invariant, "T123 not invariant");
  TruncatedQuotient q = build_truncated_quotient(p, 3, Z());
  Scalar v = pair(q, t, W(p.alphabet, "[A12, A23]"));
  o.expect(v.is_one(), "<T123, [A12,A23]> = " + v.str());
  o.detail = "<T123, [A12,A23]> = " + v.str();
  return o;
}

Outcome johnson_fixture() {
  Outcome o;
  Presentation f2 = Presentation::free(Alphabet::parse("x y"));
  const Alphabet& a = f2.alphabet;
  Endo conj = parse_endo("x -> x, y -> x y x^-1", f2);
  JohnsonLevel lv = johnson_level(f2, conj, Z(), 4);
  o.expect(lv.exact == 1u, "level " + lv.str());
  JohnsonReport r = johnson_tau(f2, conj, 1, Z());
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    std::string row = format_tensor(r.rows[i]);
    TensorElement expected(Z(), a);
    if (row == "x|y") expected = T(a, "-y");
    if (row == "y|x") expected = T(a, "y");
    o.expect(r.images[i] == expected, "tau(" + row + ") = " + format_tensor(r.images[i]));
  }

  std::mt19937_64 rng(9009);
  std::size_t pairs = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t k = 1 + static_cast<std::size_t>(trial % 2);
    auto [phi, psi] = nielsen_pair(f2, k, rng);
    ++pairs;
    JohnsonReport rp = johnson_tau(f2, phi, k, Z());
    JohnsonReport rs = johnson_tau(f2, psi, k, Z());
    JohnsonReport rc = johnson_tau(f2, compose(phi, psi), k, Z());
    for (std::size_t i = 0; i < rc.tau.rows(); ++i)
      for (std::size_t j = 0; j < rc.tau.cols(); ++j)
        o.expect(rc.tau(i, j) == rp.tau(i, j) + rs.tau(i, j), "additivity, pair " + str(trial));
    for (const auto* rep : {&rp, &rs, &rc})
      for (const auto& img : rep->images) o.expect(img.weight() <= 1, "image of weight > 1");
    // Level ≥ k+1 gives τ = 0 at stage k.
    auto [deep, deep2] = nielsen_pair(f2, k + 1, rng);
    o.expect(johnson_tau(f2, deep, k, Z()).is_zero() && johnson_tau(f2, deep2, k, Z()).is_zero(),
             "J(k+1) outside ker tau, pair " + str(trial));
  }
  o.detail = "level " + lv.str() + "; tau(X|Y) = -Y, tau(Y|X) = Y; " + str(pairs) + " Nielsen pairs";
  return o;
}

Outcome completeness() {
  Outcome o;
  struct Fixture {
    const char* name;
    FiniteGroupTable table;
    Presentation pres;
  };
  std::vector<Fixture> fixtures = {{"C2", cyclic_table(2), cyclic(2)},
                                   {"C4", cyclic_table(4), cyclic(4)},
                                   {"C2xC2", product_table(2, 2), product(2, 2)},
                                   {"C3", cyclic_table(3), cyclic(3)},
                                   {"C5", cyclic_table(5), cyclic(5)},
                                   {"Heisenberg", heisenberg_table(), heisenberg()}};
  std::size_t cases = 0;
  for (const auto& f : fixtures) {
    for (Ring r : {F(2), F(3)}) {
      IdealPowerDims d = ideal_power_dims(f.table, r, 4);
      for (std::size_t n = 1; n <= 4; ++n) {
        ++cases;
        std::string tag = std::string(f.name) + " over " + r.name() + " at N = " + str(n);
        InvariantBasis b = invariants_basis(f.pres, n, r);
        o.expect(b.elements.size() == d.dims[n - 1],
                 tag + ": " + str(b.elements.size()) + " invariants vs dim " + str(d.dims[n - 1]));
        // Pair against all products (s_{i₁}−1)⋯(s_{i_d}−1) with d < N.
        std::vector<Vector> rows;
        for (const auto& e : b.elements) {
          Vector row;
          for (std::size_t deg = 0; deg < n; ++deg)
            for (const Key& k : all_keys(f.pres.alphabet.size(), deg)) {
              std::vector<Word> ws;
              for (int g : k) ws.push_back(Word::generator(f.pres.alphabet, g));
              row.push_back(ws.empty() ? e.tensor.counit() : multi_evaluation(e.tensor, ws));
            }
          rows.push_back(row);
        }
        if (rows.empty()) continue;
        std::size_t rk = rank(Matrix::from_vectors(r, rows, rows[0].size()));
        o.expect(rk == b.elements.size(), tag + ": pairing rank " + str(rk));
      }
    }
  }
  o.detail = str(cases) + " fixture cases";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "four-way oracle equivalence", four_way_oracle},
      {2, "[xy, x^-2] fixture", commutator_fixture},
      {3, "product, inverse and multi-evaluation laws", product_inverse_multi},
      {4, "degree bound and commutator recursion", degree_bound_commutators},
      {5, "cyclic fixtures", cyclic_fixtures},
      {6, "Heisenberg over F2", heisenberg_fixture},
      {7, "surface group of genus 2", surface_fixture},
      {8, "pure braid group PB3", pure_braid_fixture},
      {9, "Johnson level and dual Johnson homomorphism", johnson_fixture},
      {10, "completeness", completeness},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << c.id << " [" << c.name << "]: " << (o.pass ? "PASS" : "FAIL");
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    if (!o.pass) ++failed;
  }
  return failed ? 1 : 0;
}
