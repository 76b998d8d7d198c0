#include "lb/braiding.hpp"

#include <map>
#include <stdexcept>

#include "lb/error.hpp"

namespace lb {

std::size_t CircleWord::d0(std::size_t i) const {
  if (i == 0) return 0;
  std::size_t next = i == n() ? 0 : i + 1;
  return sign(i) > 0 ? i : next;
}

std::size_t CircleWord::d1(std::size_t i) const {
  if (i == 0) return n() == 0 ? 0 : 1;
  std::size_t next = i == n() ? 0 : i + 1;
  return sign(i) > 0 ? next : i;
}

Scalar CircleForm::integral() const {
  Scalar s = Scalar::zero(v_[0].ring());
  for (std::size_t i = 1; i < v_.size(); ++i) s += v_[i];
  return s;
}

CircleForm pullback_to_circle(const Functional& alpha, const Word& w) {
  if (!(alpha.alphabet == w.alphabet())) throw DomainError("pullback: alphabet mismatch");
  Ring ring = alpha.coeffs.empty() ? Ring::integers() : alpha.coeffs[0].ring();
  CircleForm f(ring, w.length());
  for (std::size_t i = 1; i <= w.length(); ++i) {
    const Letter& l = w[i - 1];
    f.f(i) = l.sign > 0 ? alpha(l.gen) : -alpha(l.gen);
  }
  return f;
}

Vector cobound(const CircleWord& cw, const CircleForm& fdx) {
  if (!fdx.is_pure_dx()) throw DomainError("cobound: form has a nonzero δ₀ part");
  const std::size_t n = cw.n();
  Ring ring = fdx.delta0().ring();
  Vector g = zero_vector(ring, n + 1);
  Scalar tail = Scalar::zero(ring);
  for (std::size_t j = n; j >= 1; --j) {
    tail += fdx.f(j);
    g[j] = -tail;
  }
  return g;
}

CircleForm differential(const CircleWord& cw, const Vector& g) {
  const std::size_t n = cw.n();
  CircleForm d(g[0].ring(), n);
  // (dg)(i) = g(end) − g(start); divide by the orientation sign dx(i) = ±1.
  for (std::size_t i = 0; i <= n; ++i) {
    Scalar v = g[cw.d1(i)] - g[cw.d0(i)];
    d.f(i) = cw.sign(i) > 0 ? v : -v;
  }
  return d;
}

BarTensor pullback_tensor(const TensorElement& t, const Word& w) {
  BarTensor b;
  std::vector<CircleForm> duals;
  for (std::size_t g = 0; g < t.alphabet().size(); ++g)
    duals.push_back(pullback_to_circle(Functional::dual(t.alphabet(), t.ring(), static_cast<int>(g)), w));
  for (const auto& [key, c] : t.terms()) {
    BarTerm term{c, {}};
    for (int g : key) term.factors.push_back(BarFactor::of(duals[static_cast<std::size_t>(g)]));
    b.push_back(std::move(term));
  }
  return b;
}

namespace {

// Reduce the first m factors; all forms are pure f dx.
BraidPolynomial reduce(const CircleWord& cw, std::vector<BarFactor> fs, std::size_t m, Ring ring) {
  std::size_t k = m;
  while (k > 0 && fs[k - 1].is_t) --k;
  if (k == 0) return BraidPolynomial::monomial(Scalar::one(ring), m);
  --k;
  const std::size_t suffix = m - 1 - k;
  const CircleForm& f = fs[k].form;
  Scalar integral = f.integral();
  Vector g = cobound(cw, f);

  // (…|f dx) ~ (∫f)(…|t) − (…|α_{k−1} ⌣ g); the g ⌣ α_{k+1} term is absent
  // because the pivot is the last non-t factor.
  BraidPolynomial out(ring);
  if (!integral.is_zero()) out += reduce(cw, fs, k, ring).shifted(1) * integral;
  if (k >= 1) {
    if (fs[k - 1].is_t) {
      // t ⌣ g = −(∫f) t
      if (!integral.is_zero()) out += reduce(cw, fs, k - 1, ring).shifted(1) * integral;
    } else {
      CircleForm h = fs[k - 1].form;
      bool nonzero = false;
      for (std::size_t i = 1; i <= cw.n(); ++i) {
        h.f(i) *= g[cw.d1(i)];
        nonzero = nonzero || !h.f(i).is_zero();
      }
      if (nonzero) {
        fs[k - 1].form = std::move(h);
        out -= reduce(cw, std::move(fs), k, ring);
      }
    }
  }
  return out.shifted(suffix);
}

}  // namespace

BraidPolynomial weight_reduce(const CircleWord& cw, const BarTensor& b, Ring ring) {
  BraidPolynomial total(ring);
  for (const auto& term : b) {
    if (term.coeff.is_zero()) continue;
    // Split general forms α = f dx + c δ₀ into their pure parts.
    std::vector<std::pair<Scalar, std::vector<BarFactor>>> pure{{term.coeff, {}}};
    for (const auto& fac : term.factors) {
      if (!fac.is_t && fac.form.n() != cw.n()) throw DomainError("weight_reduce: form length does not match the word");
      std::vector<std::pair<Scalar, std::vector<BarFactor>>> next;
      for (auto& [c, fs] : pure) {
        if (fac.is_t || fac.form.is_pure_dx()) {
          auto copy = fs;
          copy.push_back(fac);
          next.emplace_back(c, std::move(copy));
          continue;
        }
        auto with_t = fs;
        with_t.push_back(BarFactor::t(ring, cw.n()));
        next.emplace_back(c * fac.form.delta0(), std::move(with_t));
        CircleForm dx = fac.form;
        dx.delta0() = Scalar::zero(ring);
        auto with_dx = fs;
        with_dx.push_back(BarFactor::of(std::move(dx)));
        next.emplace_back(c, std::move(with_dx));
      }
      pure = std::move(next);
    }
    for (auto& [c, fs] : pure) {
      if (c.is_zero()) continue;
      std::size_t m = fs.size();
      total += reduce(cw, std::move(fs), m, ring) * c;
    }
  }
  return total;
}

namespace {

// values[j][i-1] = α_j(letter i) with sign extension.
Scalar chain_sum(const std::vector<Vector>& values, const Word& w, Ring ring) {
  const std::size_t n = w.length();
  const std::size_t r = values.size();
  if (r == 0) return Scalar::zero(ring);
  // s[i] = sum over chains for factors j..r−1 starting at position i.
  Vector s = values[r - 1];
  for (std::size_t jj = r - 1; jj-- > 0;) {
    // suffix[i] = Σ_{i' ≥ i} s[i']
    Vector suffix = zero_vector(ring, n + 1);
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + s[i];
    Vector next = zero_vector(ring, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (values[jj][i].is_zero()) continue;
      // Positive letters need a strictly later position, negative ones allow repeats.
      const Scalar& later = w[i].sign > 0 ? suffix[i + 1] : suffix[i];
      next[i] = values[jj][i] * later;
    }
    s = std::move(next);
  }
  Scalar total = Scalar::zero(ring);
  for (const auto& x : s) total += x;
  return total;
}

}  // namespace

Scalar iterated_sum(const std::vector<Functional>& factors, const Word& w, Ring ring) {
  std::vector<Vector> values;
  for (const auto& a : factors) {
    if (!(a.alphabet == w.alphabet())) throw DomainError("iterated_sum: alphabet mismatch");
    Vector v = zero_vector(ring, w.length());
    for (std::size_t i = 0; i < w.length(); ++i) v[i] = w[i].sign > 0 ? a(w[i].gen) : -a(w[i].gen);
    values.push_back(std::move(v));
  }
  return chain_sum(values, w, ring);
}

Scalar iterated_sum(const Key& key, const Word& w, Ring ring) {
  std::vector<Vector> values;
  for (int g : key) {
    Vector v = zero_vector(ring, w.length());
    for (std::size_t i = 0; i < w.length(); ++i)
      if (w[i].gen == g) v[i] = Scalar(ring, static_cast<long>(w[i].sign));
    values.push_back(std::move(v));
  }
  return chain_sum(values, w, ring);
}

namespace {

void check_compatible(const TensorElement& t, const Word& w) {
  if (!(t.alphabet() == w.alphabet())) throw DomainError("tensor and word use different alphabets");
}

}  // namespace

Scalar braiding_number(const TensorElement& t, const Word& w) {
  check_compatible(t, w);
  Scalar total = Scalar::zero(t.ring());
  for (const auto& [key, c] : t.terms())
    if (!key.empty()) total += c * iterated_sum(key, w, t.ring());
  return total;
}

BraidPolynomial braiding_polynomial_by_reduction(const TensorElement& t, const Word& w) {
  check_compatible(t, w);
  return weight_reduce(CircleWord(w), pullback_tensor(t, w), t.ring());
}

BraidPolynomial braiding_polynomial_by_coproduct(const TensorElement& t, const Word& w) {
  check_compatible(t, w);
  const Ring ring = t.ring();
  std::map<Key, Scalar> cache;
  auto ell = [&](const Key& k) -> const Scalar& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, iterated_sum(k, w, ring)).first;
    return it->second;
  };
  std::vector<Scalar> coeffs{t.counit()};
  for (std::size_t k = 0; k < t.weight(); ++k) {
    Scalar c = Scalar::zero(ring);
    for (const auto& [parts, coeff] : iterated_reduced_coproduct(t, k)) {
      Scalar prod = coeff;
      for (const auto& p : parts) {
        prod *= ell(p);
        if (prod.is_zero()) break;
      }
      c += prod;
    }
    coeffs.push_back(c);
  }
  return BraidPolynomial(ring, std::move(coeffs));
}

BraidPolynomial braiding_polynomial(const TensorElement& t, const Word& w) {
  BraidPolynomial p = braiding_polynomial_by_reduction(t, w);
#ifndef NDEBUG
  if (!(p == braiding_polynomial_by_coproduct(t, w)))
    throw std::logic_error("weight reduction disagrees with the coproduct reconstruction");
#endif
  return p;
}

Scalar multi_evaluation(const TensorElement& t, const std::vector<Word>& words) {
  if (words.empty()) throw DomainError("multi_evaluation needs at least one word");
  if (words.size() > 24) throw DomainError("multi_evaluation: too many words");
  for (const auto& w : words) check_compatible(t, w);
  const std::size_t m = words.size();
  Scalar total = Scalar::zero(t.ring());
  for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
    std::vector<Letter> letters;
    std::size_t bits = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1UL << i)) {
        ++bits;
        letters.insert(letters.end(), words[i].letters().begin(), words[i].letters().end());
      }
    Scalar v = braiding_number(t, Word(t.alphabet(), std::move(letters)));
    if ((m - bits) % 2)
      total -= v;
    else
      total += v;
  }
  return total;
}

ProductCheck product_check(const TensorElement& t, const Word& w1, const Word& w2) {
  check_compatible(t, w1);
  check_compatible(t, w2);
  const Ring ring = t.ring();
  ProductCheck r{braiding_number(t, concat(w1, w2)), braiding_number(t, w1), braiding_number(t, w2),
                 Scalar::zero(ring)};
  for (const auto& [parts, c] : reduced_coproduct(t))
    r.cross += c * iterated_sum(parts[0], w1, ring) * iterated_sum(parts[1], w2, ring);
  return r;
}

}  // namespace lb
