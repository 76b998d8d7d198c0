#include "doctest.h"
#include "fixtures.hpp"
#include "lb/error.hpp"
#include "lb/finite_group.hpp"

using namespace lb;
using namespace lb::test;

TEST_CASE("table validation") {
  CHECK_THROWS_AS(FiniteGroupTable({{0, 1}, {1, 1}}, {{"x", 1}}), DomainError);
  CHECK_THROWS_AS(FiniteGroupTable({{0, 1}, {1, 0}}, {{"x", 2}}), DomainError);
  CHECK_THROWS_AS(FiniteGroupTable({{0, 1}, {0, 1}}, {{"x", 1}}), DomainError);
  // Latin square that is not associative.
  std::vector<std::vector<std::size_t>> quasi = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroupTable(quasi, {{"x", 1}}), DomainError);
  FiniteGroupTable h = heisenberg_table();
  CHECK(h.identity() == 0);
  for (std::size_t g = 0; g < h.size(); ++g) CHECK(h.mul(g, h.inverse(g)) == h.identity());
}

TEST_CASE("word images") {
  FiniteGroupTable h = heisenberg_table();
  Alphabet a = Alphabet::parse("x y z");
  CHECK(word_image(h, W(a, "[x, y]")) == 1);  // the (1,3) elementary matrix
  CHECK(word_image(h, Word(a)) == h.identity());
  FiniteGroupTable c2 = cyclic_table(2);
  CHECK(word_image(c2, W(Alphabet::parse("x"), "x^2")) == c2.identity());
}

TEST_CASE("ideal power dimensions") {
  CHECK(ideal_power_dims(cyclic_table(2), F(2), 4).dims == std::vector<std::size_t>{1, 2, 2, 2});
  CHECK(ideal_power_dims(cyclic_table(3), F(2), 4).dims == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(ideal_power_dims(cyclic_table(1), Q(), 3).dims == std::vector<std::size_t>{1, 1, 1});
  CHECK(ideal_power_dims(cyclic_table(4), F(2), 5).dims == std::vector<std::size_t>{1, 2, 3, 4, 4});
}

TEST_CASE("oracle agrees with the truncated quotient") {
  struct Case {
    const char* name;
    FiniteGroupTable table;
    Presentation pres;
  };
  std::vector<Case> cases = {{"C2", cyclic_table(2), cyclic(2)},
                             {"C4", cyclic_table(4), cyclic(4)},
                             {"C2xC2", product_table(2, 2), product(2, 2)},
                             {"C3", cyclic_table(3), cyclic(3)},
                             {"C5", cyclic_table(5), cyclic(5)},
                             {"Heisenberg", heisenberg_table(), heisenberg()},
                             {"S3", s3_table(), s3()}};
  for (const auto& c : cases) {
    for (Ring r : {F(2), F(3), F(5)}) {
      IdealPowerDims d = ideal_power_dims(c.table, r, 4);
      for (std::size_t n = 1; n <= 4; ++n) {
        INFO(c.name, " over ", r.name(), " at N = ", n);
        CHECK(invariants_basis(c.pres, n, r).elements.size() == d.dims[n - 1]);
      }
    }
  }
}

TEST_CASE("integer torsion agrees with the truncated quotient") {
  std::vector<std::pair<FiniteGroupTable, Presentation>> cases = {
      {cyclic_table(2), cyclic(2)}, {cyclic_table(4), cyclic(4)}, {product_table(2, 2), product(2, 2)},
      {cyclic_table(3), cyclic(3)}};
  for (const auto& [g, p] : cases) {
    IdealPowerDims d = ideal_power_dims(g, Z(), 4);
    for (std::size_t n = 1; n <= 4; ++n) {
      TruncatedQuotient q = build_truncated_quotient(p, n, Z());
      CHECK(q.rank() == d.dims[n - 1]);
      CHECK(q.elementary_divisors() == d.torsion[n - 1]);
    }
  }
}

TEST_CASE("pairing agrees on all Heisenberg elements") {
  FiniteGroupTable g = heisenberg_table();
  Presentation p = heisenberg();
  TruncatedQuotient q = build_truncated_quotient(p, 4, F(2));
  InvariantBasis b = invariants_basis(q);
  // y^b x^a z^c is the matrix with entries (a, b, c).
  for (std::size_t e = 0; e < 8; ++e) {
    std::string text = std::string(e & 2 ? "y " : "") + (e & 4 ? "x " : "") + (e & 1 ? "z" : "");
    Word w = W(p.alphabet, text);
    REQUIRE(word_image(g, w) == e);
    for (const auto& inv : b.elements) CHECK(pair(q, inv.tensor, w) == oracle_pair(g, inv.tensor, e, 4));
  }
}
