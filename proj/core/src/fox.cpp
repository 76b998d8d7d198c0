#include "lb/fox.hpp"

#include "lb/error.hpp"

namespace lb {

FreeGroupRingElement FreeGroupRingElement::of(const Word& w, Scalar c) {
  FreeGroupRingElement e(c.ring(), w.alphabet());
  e.add(w, c);
  return e;
}

FreeGroupRingElement FreeGroupRingElement::one(Ring ring, Alphabet alphabet) {
  return of(Word(std::move(alphabet)), Scalar::one(ring));
}

FreeGroupRingElement FreeGroupRingElement::shifted(const Word& w, Ring ring) {
  FreeGroupRingElement e = of(w, ring);
  e.add(Word(w.alphabet()), Scalar(ring, -1L));
  return e;
}

void FreeGroupRingElement::add(const Word& w, const Scalar& c) {
  if (!(w.alphabet() == alphabet_)) throw DomainError("group ring: alphabet mismatch");
  if (c.is_zero()) return;
  Word r = free_reduce(w);
  auto [it, inserted] = terms_.try_emplace(r, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar FreeGroupRingElement::coeff(const Word& w) const {
  auto it = terms_.find(free_reduce(w));
  return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

FreeGroupRingElement& FreeGroupRingElement::operator+=(const FreeGroupRingElement& o) {
  if (!(ring_ == o.ring_)) throw DomainError("group ring: ring mismatch");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FreeGroupRingElement& FreeGroupRingElement::operator-=(const FreeGroupRingElement& o) {
  if (!(ring_ == o.ring_)) throw DomainError("group ring: ring mismatch");
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FreeGroupRingElement group_ring_mul(const FreeGroupRingElement& a, const FreeGroupRingElement& b) {
  if (!(a.ring() == b.ring())) throw DomainError("group ring: ring mismatch");
  FreeGroupRingElement r(a.ring(), a.alphabet());
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) r.add(concat(u, v), cu * cv);
  return r;
}

Scalar augment(const FreeGroupRingElement& el) {
  Scalar s = Scalar::zero(el.ring());
  for (const auto& [w, c] : el.terms()) s += c;
  return s;
}

FreeGroupRingElement fox_derivative(const FreeGroupRingElement& el, int gen) {
  FreeGroupRingElement r(el.ring(), el.alphabet());
  for (const auto& [w, c] : el.terms()) {
    const auto& ls = w.letters();
    for (std::size_t p = 0; p < ls.size(); ++p) {
      if (ls[p].gen != gen) continue;
      // x contributes the prefix before it; x⁻¹ contributes −(prefix)·x⁻¹.
      std::size_t len = ls[p].sign > 0 ? p : p + 1;
      Word prefix(w.alphabet(), std::vector<Letter>(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(len)));
      r.add(prefix, ls[p].sign > 0 ? c : -c);
    }
  }
  return r;
}

Scalar augmented_fox(const Word& w, const Key& key, Ring ring) {
  FreeGroupRingElement e = FreeGroupRingElement::of(w, ring);
  for (auto it = key.rbegin(); it != key.rend(); ++it) e = fox_derivative(e, *it);
  return augment(e);
}

}  // namespace lb
