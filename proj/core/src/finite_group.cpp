#include "lb/finite_group.hpp"

#include <random>

#include "lb/error.hpp"
#include "lb/matrix.hpp"

namespace lb {

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<std::size_t>> mul, std::map<std::string, std::size_t> gens)
    : mul_(std::move(mul)), gens_(std::move(gens)) {
  const std::size_t n = mul_.size();
  if (n == 0) throw DomainError("not a group: empty table");
  for (const auto& row : mul_) {
    if (row.size() != n) throw DomainError("not a group: table is not square");
    for (auto v : row)
      if (v >= n) throw DomainError("not a group: entry out of range");
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = mul_[e][x] == x && mul_[x][e] == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw DomainError("not a group: no identity element");
  inverse_.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      if (mul_[x][y] == identity_ && mul_[y][x] == identity_) {
        inverse_[x] = y;
        break;
      }
    if (inverse_[x] == n) throw DomainError("not a group: element " + std::to_string(x) + " has no inverse");
  }
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
      throw DomainError("not a group: (" + std::to_string(a) + "*" + std::to_string(b) + ")*" + std::to_string(c) +
                        " differs from " + std::to_string(a) + "*(" + std::to_string(b) + "*" + std::to_string(c) + ")");
  };
  if (n <= 16) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 20000; ++i) assoc(pick(rng), pick(rng), pick(rng));
  }
  for (const auto& [name, idx] : gens_) {
    if (!is_identifier(name)) throw DomainError("invalid generator label '" + name + "'");
    if (idx >= n) throw DomainError("generator '" + name + "' labels an element out of range");
  }
}

std::size_t word_image(const FiniteGroupTable& g, const Word& w) {
  std::size_t acc = g.identity();
  for (const auto& l : w.letters()) {
    const auto& name = w.alphabet().name(static_cast<std::size_t>(l.gen));
    auto it = g.gens().find(name);
    if (it == g.gens().end()) throw DomainError("generator '" + name + "' is not labeled in the table");
    acc = g.mul(acc, l.sign > 0 ? it->second : g.inverse(it->second));
  }
  return acc;
}

namespace {

Vector group_mul(const FiniteGroupTable& g, const Vector& a, const Vector& b, Ring ring) {
  Vector r = zero_vector(ring, g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (a[x].is_zero()) continue;
    for (std::size_t y = 0; y < g.size(); ++y)
      if (!b[y].is_zero()) r[g.mul(x, y)] += a[x] * b[y];
  }
  return r;
}

Vector shifted_element(const FiniteGroupTable& g, std::size_t x, Ring ring) {
  Vector v = zero_vector(ring, g.size());
  v[x] += Scalar::one(ring);
  v[g.identity()] -= Scalar::one(ring);
  return v;
}

// Spanning rows of I^1..I^n (echelon form, zero rows dropped).
std::vector<Echelon> ideal_powers(const FiniteGroupTable& g, Ring ring, std::size_t n) {
  std::vector<Vector> gens;
  for (std::size_t x = 0; x < g.size(); ++x)
    if (x != g.identity()) gens.push_back(shifted_element(g, x, ring));
  std::vector<Echelon> powers;
  std::vector<Vector> current = gens;
  for (std::size_t k = 1; k <= n; ++k) {
    Echelon e = current.empty() ? Echelon{Matrix(ring, 0, g.size()), {}, Matrix()}
                                : echelon(Matrix::from_vectors(ring, current, g.size()));
    powers.push_back(e);
    current.clear();
    for (std::size_t i = 0; i < e.form.rows(); ++i)
      for (const auto& s : gens) current.push_back(group_mul(g, e.form.row(i), s, ring));
  }
  return powers;
}

}  // namespace

IdealPowerDims ideal_power_dims(const FiniteGroupTable& g, Ring ring, std::size_t n) {
  IdealPowerDims out;
  for (const auto& e : ideal_powers(g, ring, n)) {
    out.dims.push_back(g.size() - e.pivots.size());
    std::vector<mpz_class> tors;
    if (ring.kind() == RingKind::Integers && e.form.rows() > 0)
      for (const auto& d : smith_form(e.form).divisors)
        if (d > 1) tors.push_back(d);
    out.torsion.push_back(std::move(tors));
  }
  return out;
}

Scalar oracle_pair(const FiniteGroupTable& g, const TensorElement& t, std::size_t element, std::size_t order) {
  const Ring ring = t.ring();
  if (!ring.is_field()) throw DomainError("oracle_pair needs a field");
  if (t.weight() >= order) throw DomainError("tensor weight is not below the truncation order");
  const Alphabet& a = t.alphabet();
  std::vector<Vector> gen_shift;
  for (std::size_t s = 0; s < a.size(); ++s) {
    auto it = g.gens().find(a.name(s));
    if (it == g.gens().end()) throw DomainError("generator '" + a.name(s) + "' is not labeled in the table");
    gen_shift.push_back(shifted_element(g, it->second, ring));
  }
  // Columns: Π(s−1) for every key of length < order, then a spanning set of I^order.
  std::vector<Key> keys{Key{}};
  std::vector<Vector> cols;
  Vector unit = zero_vector(ring, g.size());
  unit[g.identity()] = Scalar::one(ring);
  std::vector<std::pair<Key, Vector>> frontier{{Key{}, unit}};
  cols.push_back(unit);
  for (std::size_t d = 1; d < order; ++d) {
    std::vector<std::pair<Key, Vector>> next;
    for (const auto& [k, v] : frontier)
      for (std::size_t s = 0; s < a.size(); ++s) {
        Key nk = k;
        nk.push_back(static_cast<int>(s));
        Vector nv = group_mul(g, v, gen_shift[s], ring);
        keys.push_back(nk);
        cols.push_back(nv);
        next.emplace_back(std::move(nk), std::move(nv));
      }
    frontier = std::move(next);
  }
  const std::size_t monomial_cols = cols.size();
  Echelon top = ideal_powers(g, ring, order).back();
  for (std::size_t i = 0; i < top.form.rows(); ++i) cols.push_back(top.form.row(i));
  Matrix m = Matrix::from_vectors(ring, cols, g.size()).transpose();
  Vector target = zero_vector(ring, g.size());
  target[element] = Scalar::one(ring);
  auto x = membership(m, target);
  if (!x) throw DomainError("element is not reached by the generators' products");
  Scalar total = Scalar::zero(ring);
  for (std::size_t i = 0; i < monomial_cols; ++i)
    if (!(*x)[i].is_zero()) total += (*x)[i] * t.coeff(keys[i]);
  return total;
}

}  // namespace lb
