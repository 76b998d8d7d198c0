#include "lb/series.hpp"

#include "lb/error.hpp"

namespace lb {

TruncSeries::TruncSeries(Ring ring, Alphabet alphabet, std::size_t order)
    : ring_(ring), alphabet_(std::move(alphabet)), order_(order) {
  if (order == 0) throw DomainError("truncation order must be at least 1");
}

TruncSeries TruncSeries::one(Ring ring, Alphabet alphabet, std::size_t order) {
  TruncSeries s(ring, std::move(alphabet), order);
  s.add({}, Scalar::one(ring));
  return s;
}

TruncSeries TruncSeries::variable(Ring ring, Alphabet alphabet, std::size_t order, int gen) {
  TruncSeries s(ring, std::move(alphabet), order);
  s.add({gen}, Scalar::one(ring));
  return s;
}

Scalar TruncSeries::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

void TruncSeries::add(const Key& k, const Scalar& c) {
  if (k.size() >= order_ || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::size_t TruncSeries::valuation() const { return terms_.empty() ? order_ : terms_.begin()->first.size(); }

void TruncSeries::check_same(const TruncSeries& o) const {
  if (order_ != o.order_)
    throw DomainError("truncation order mismatch: " + std::to_string(order_) + " vs " + std::to_string(o.order_));
  if (!(ring_ == o.ring_)) throw DomainError("ring mismatch between series");
  if (!(alphabet_ == o.alphabet_)) throw DomainError("alphabet mismatch between series");
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

TruncSeries TruncSeries::operator*(const Scalar& s) const {
  TruncSeries r(ring_, alphabet_, order_);
  for (const auto& [k, c] : terms_) r.add(k, c * s);
  return r;
}

TruncSeries trunc_mul(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order())
    throw DomainError("truncation order mismatch: " + std::to_string(a.order()) + " vs " +
                      std::to_string(b.order()));
  if (!(a.ring() == b.ring()) || !(a.alphabet() == b.alphabet())) throw DomainError("series operand mismatch");
  TruncSeries r(a.ring(), a.alphabet(), a.order());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.size() + kb.size() >= a.order()) break;  // b's keys are sorted by length
      Key k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      r.add(k, ca * cb);
    }
  return r;
}

TruncSeries magnus_expand(const Word& w, std::size_t order, Ring ring) {
  const Alphabet& a = w.alphabet();
  TruncSeries acc = TruncSeries::one(ring, a, order);
  for (const auto& l : w.letters()) {
    TruncSeries factor = TruncSeries::one(ring, a, order);
    if (l.sign > 0) {
      factor.add({l.gen}, Scalar::one(ring));
    } else {
      Key k;
      Scalar c = Scalar::one(ring);
      for (std::size_t j = 1; j < order; ++j) {
        k.push_back(l.gen);
        c = -c;
        factor.add(k, c);
      }
    }
    acc = trunc_mul(acc, factor);
  }
  return acc;
}

Scalar apply(const TensorElement& t, const TruncSeries& s) {
  if (!(t.ring() == s.ring()) || !(t.alphabet() == s.alphabet())) throw DomainError("apply: operand mismatch");
  if (t.weight() >= s.order())
    throw DomainError("tensor weight " + std::to_string(t.weight()) + " is not below the truncation order " +
                      std::to_string(s.order()));
  Scalar total = Scalar::zero(t.ring());
  for (const auto& [k, c] : t.terms()) {
    auto it = s.terms().find(k);
    if (it != s.terms().end()) total += c * it->second;
  }
  return total;
}

}  // namespace lb
