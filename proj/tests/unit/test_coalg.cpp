#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "lb/error.hpp"

using namespace lb;
using namespace lb::test;

namespace {

const Alphabet xy = Alphabet::parse("x y");
const Alphabet xyz = Alphabet::parse("x y z");

using Triple = std::map<std::vector<Key>, Scalar>;

void add_to(Triple& m, std::vector<Key> k, const Scalar& c) {
  auto [it, fresh] = m.emplace(std::move(k), c);
  if (!fresh) it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

// (Δ⊗id)Δ and (id⊗Δ)Δ on the deconcatenation coproduct.
Triple left_coassoc(const TensorElement& t) {
  Triple out;
  for (const auto& [pair, c] : coproduct(t)) {
    TensorElement a = TensorElement::pure(t.ring(), t.alphabet(), pair[0], c);
    for (const auto& [inner, d] : coproduct(a)) add_to(out, {inner[0], inner[1], pair[1]}, d);
  }
  return out;
}

Triple right_coassoc(const TensorElement& t) {
  Triple out;
  for (const auto& [pair, c] : coproduct(t)) {
    TensorElement b = TensorElement::pure(t.ring(), t.alphabet(), pair[1], c);
    for (const auto& [inner, d] : coproduct(b)) add_to(out, {pair[0], inner[0], inner[1]}, d);
  }
  return out;
}

}  // namespace

TEST_CASE("reduced coproduct examples") {
  MultiTensor d = reduced_coproduct(T(xy, "x|y"));
  REQUIRE(d.size() == 1);
  CHECK(d.begin()->first == std::vector<Key>{{0}, {1}});
  CHECK(d.begin()->second.is_one());
  CHECK(reduced_coproduct(T(xy, "x")).empty());
  MultiTensor unit = coproduct(T(xy, "1"));
  REQUIRE(unit.size() == 1);
  CHECK(unit.begin()->first == std::vector<Key>{{}, {}});
}

TEST_CASE("iterated reduced coproduct examples") {
  MultiTensor d = iterated_reduced_coproduct(T(xy, "x|y|x"), 2);
  REQUIRE(d.size() == 1);
  CHECK(d.begin()->first == std::vector<Key>{{0}, {1}, {0}});
  CHECK(iterated_reduced_coproduct(T(xy, "x|y"), 2).empty());
  MultiTensor e = iterated_reduced_coproduct(T(xy, "x|y + y|x"), 1);
  CHECK(e.size() == 2);
  CHECK(e.at({{0}, {1}}).is_one());
  CHECK(e.at({{1}, {0}}).is_one());
}

TEST_CASE("leading terms") {
  Ring f2 = F(2);
  CHECK(leading_term(T(xyz, "x|y + z", f2), 2) == T(xyz, "x|y", f2));
  CHECK(leading_term(T(xyz, "x"), 2).is_zero());
  CHECK(leading_term(T(xyz, "3"), 0) == T(xyz, "3"));
}

TEST_CASE("tensor parsing") {
  TensorElement h = T(xyz, "x|y + z", F(2));
  CHECK(h.coeff({0, 1}).is_one());
  CHECK(h.coeff({2}).is_one());
  CHECK(h.terms().size() == 2);
  CHECK(T(xy, "1") == TensorElement::unit(Z(), xy));
  TensorElement t = T(xy, "2 x|x - x");
  CHECK(t.coeff({0, 0}) == s(Z(), 2));
  CHECK(t.coeff({0}) == s(Z(), -1));
  CHECK(format_tensor(t) == "2 x|x - x");
  // Parentheses distribute over '|'.
  CHECK(T(xy, "(x + y)|x") == T(xy, "x|x + y|x"));
  CHECK(T(xy, "x|(x - 2 y)") == T(xy, "x|x - 2 x|y"));
  CHECK(format_tensor(TensorElement(Z(), xy)) == "0");
  CHECK_THROWS_AS(T(xy, "x|w"), ParseError);
  CHECK_THROWS_AS(T(xy, "x||y"), ParseError);
  CHECK_THROWS_AS(T(xy, "1/2 x"), ParseError);
}

TEST_CASE("format then parse is the identity on tensors") {
  std::mt19937_64 rng(8);
  for (Ring r : {Z(), Q(), F(3)}) {
    for (int i = 0; i < 200; ++i) {
      TensorElement t = random_tensor(r, xyz, 4, 5, rng);
      if (i % 3 == 0) t.add({}, Scalar(r, 2));
      CHECK(parse_tensor(format_tensor(t), xyz, r) == t);
    }
  }
}

TEST_CASE("functional expansion") {
  Functional a{xy, {s(Z(), 1), s(Z(), 2)}}, b{xy, {s(Z(), 0), s(Z(), -1)}};
  CHECK(TensorElement::from_functionals(Z(), {a, b}) == T(xy, "(x + 2 y)|(-y)"));
}

TEST_CASE("coassociativity") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    TensorElement t = random_tensor(Z(), xyz, 4, 6, rng);
    t.add({}, s(Z(), static_cast<long>(rng() % 3)));
    CHECK(left_coassoc(t) == right_coassoc(t));
  }
}

TEST_CASE("counit law") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 200; ++i) {
    TensorElement t = random_tensor(Q(), xyz, 4, 6, rng);
    TensorElement left(Q(), xyz), right(Q(), xyz);
    for (const auto& [pair, c] : coproduct(t)) {
      if (pair[0].empty()) left.add(pair[1], c);
      if (pair[1].empty()) right.add(pair[0], c);
    }
    CHECK(left == t);
    CHECK(right == t);
  }
}

TEST_CASE("weight is the order of vanishing of iterated reduced coproducts") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    TensorElement t = random_tensor(Z(), xy, 5, 4, rng);
    if (t.is_zero()) continue;
    std::size_t k = 0;
    while (!iterated_reduced_coproduct(t, k).empty()) ++k;
    CHECK(k == t.weight());
  }
}
