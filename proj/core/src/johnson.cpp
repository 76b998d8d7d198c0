#include "lb/johnson.hpp"

#include <stdexcept>

#include "lb/error.hpp"

namespace lb {

Endo parse_endo(std::string_view text, const Presentation& p) { return parse_hom(text, p.alphabet, p.alphabet); }

Endo identity_endo(const Presentation& p) {
  Endo e{p.alphabet, p.alphabet, {}};
  for (std::size_t i = 0; i < p.alphabet.size(); ++i)
    e.images.emplace(p.alphabet.name(i), Word::generator(p.alphabet, static_cast<int>(i)));
  return e;
}

Endo compose(const Endo& phi, const Endo& psi) {
  if (!(psi.target == phi.source)) throw DomainError("compose: alphabets do not chain");
  Endo e{psi.source, phi.target, {}};
  for (const auto& [name, w] : psi.images) e.images.emplace(name, substitute(w, phi.images, phi.target));
  return e;
}

std::string JohnsonLevel::str() const {
  return exact ? std::to_string(*exact) : ">= " + std::to_string(order - 1);
}

namespace {

TruncSeries image_difference(const Endo& phi, int gen, std::size_t order, Ring ring) {
  const Alphabet& a = phi.target;
  return magnus_expand(phi.image(gen), order, ring) - magnus_expand(Word::generator(a, gen), order, ring);
}

}  // namespace

JohnsonLevel johnson_level(const TruncatedQuotient& q, const Endo& phi) {
  if (!(phi.source == q.alphabet()) || !(phi.target == q.alphabet()))
    throw DomainError("endomorphism and presentation use different alphabets");
  JohnsonLevel level{std::nullopt, q.order(), std::nullopt, {}};
  for (std::size_t s = 0; s < q.alphabet().size(); ++s) {
    auto fd = q.filtration_degree(q.coordinates(image_difference(phi, static_cast<int>(s), q.order(), q.ring())));
    if (!fd) continue;
    // Filtration degree ≥ 1 always: the difference has no constant term.
    std::size_t lv = *fd - 1;
    if (!level.exact || lv < *level.exact) {
      level.exact = lv;
      level.limiting_generator = q.alphabet().name(s);
    }
  }
  const auto& rels = q.presentation().relators;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    DepthReport d = dimension_depth(q, substitute(rels[i], phi.images, phi.target));
    if (d.exact)
      level.warnings.push_back("image of relator " + std::to_string(i + 1) + " (" + format_word(rels[i]) +
                               ") has depth " + std::to_string(*d.exact) + " < " + std::to_string(q.order()) +
                               "; the map may not be well defined");
  }
  return level;
}

JohnsonLevel johnson_level(const Presentation& p, const Endo& phi, Ring ring, std::size_t order) {
  return johnson_level(build_truncated_quotient(p, order, ring), phi);
}

bool JohnsonReport::is_zero() const {
  for (std::size_t i = 0; i < tau.rows(); ++i)
    for (std::size_t j = 0; j < tau.cols(); ++j)
      if (!tau(i, j).is_zero()) return false;
  return true;
}

JohnsonReport johnson_tau(const Presentation& p, const Endo& phi, std::size_t k, Ring ring) {
  const std::size_t order = k + 2;
  TruncatedQuotient q = build_truncated_quotient(p, order, ring);
  JohnsonLevel level = johnson_level(q, phi);
  if (!level.at_least(k))
    throw DomainError("endomorphism has Johnson level " + std::to_string(*level.exact) + " < " + std::to_string(k) +
                      ": the image of generator '" + *level.limiting_generator + "' differs from it in filtration degree " +
                      std::to_string(*level.exact + 1));
  InvariantBasis basis = invariants_basis(q);

  JohnsonReport r{k, {}, {}, Matrix(), {}, level.warnings};
  for (const auto& e : basis.elements) {
    if (e.weight == 1) r.columns.push_back(e.tensor);
    if (e.weight == k + 1) r.rows.push_back(e.tensor);
  }
  // Weight-1 coordinates: columns are the linear parts of the weight-1 invariants.
  const std::size_t n = p.alphabet.size();
  Matrix lin(ring, n, r.columns.size());
  for (std::size_t j = 0; j < r.columns.size(); ++j)
    for (std::size_t g = 0; g < n; ++g) lin(g, j) = r.columns[j].coeff({static_cast<int>(g)});

  r.tau = Matrix(ring, r.rows.size(), r.columns.size());
  for (const auto& e : basis.elements) {
    if (e.weight > k + 1) continue;
    TensorElement image = e.tensor - pullback(phi, e.tensor, q);
    if (image.weight() > 1)
      throw std::logic_error("dual Johnson image of weight " + std::to_string(image.weight()) + " for " +
                             format_tensor(e.tensor));
    if (e.weight <= k) {
      if (!image.is_zero())
        throw std::logic_error("endomorphism in J(k) moves the lower-weight invariant " + format_tensor(e.tensor));
      continue;
    }
    Vector rhs = zero_vector(ring, n);
    for (std::size_t g = 0; g < n; ++g) rhs[g] = image.coeff({static_cast<int>(g)});
    if (!image.counit().is_zero()) throw std::logic_error("dual Johnson image has a unit part");
    auto coords = membership(lin, rhs);
    if (!coords)
      throw DomainError("image " + format_tensor(image) + " is not a weight-1 invariant; the map is not well defined on the group");
    std::size_t i = r.images.size();
    for (std::size_t j = 0; j < r.columns.size(); ++j) r.tau(i, j) = (*coords)[j];
    r.images.push_back(std::move(image));
  }
  return r;
}

}  // namespace lb
