#include "lb/presented.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "lb/error.hpp"

namespace lb {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t leading_space(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::vector<Word> relators;
  std::size_t line_no = 0, offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    ++line_no;
    auto fail = [&](const std::string& msg, std::size_t col) -> ParseError {
      return ParseError("line " + std::to_string(line_no) + ", column " + std::to_string(col + 1) + ": " + msg,
                        offset + col);
    };
    std::size_t hash = line.find('#');
    std::string_view body = hash == std::string_view::npos ? line : line.substr(0, hash);
    if (!trim(body).empty()) {
      std::size_t colon = body.find(':');
      if (colon == std::string_view::npos) throw fail("expected 'gens:' or 'rel:'", leading_space(body));
      std::string_view head = trim(body.substr(0, colon));
      std::string_view rest = body.substr(colon + 1);
      std::size_t rest_col = colon + 1;
      if (head == "gens") {
        if (alphabet) throw fail("duplicate 'gens:' declaration", leading_space(body));
        try {
          alphabet = Alphabet::parse(rest);
        } catch (const ParseError& e) {
          throw fail(e.what(), rest_col + e.position());
        } catch (const DomainError& e) {
          throw fail(e.what(), rest_col);
        }
      } else if (head == "rel") {
        if (!alphabet) throw fail("'rel:' before 'gens:'", leading_space(body));
        try {
          relators.push_back(free_reduce(parse_word(rest, *alphabet)));
        } catch (const ParseError& e) {
          throw fail(e.what(), rest_col + e.position());
        }
      } else {
        throw fail("unknown declaration '" + std::string(head) + "'", leading_space(body));
      }
    }
    if (end == text.size()) break;
    offset = end + 1;
  }
  if (!alphabet) throw ParseError("presentation has no 'gens:' line", 0);
  return {*alphabet, std::move(relators)};
}

std::string format_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& n : p.alphabet.names()) out += " " + n;
  out += "\n";
  for (const auto& r : p.relators) out += "rel: " + format_word(r) + "\n";
  return out;
}

MonomialBasis::MonomialBasis(std::size_t gens, std::size_t order) : gens_(gens), order_(order) {
  if (order == 0) throw DomainError("truncation order must be at least 1");
  offsets_.push_back(0);
  std::size_t block = 1;
  for (std::size_t d = 0; d < order; ++d) {
    offsets_.push_back(offsets_.back() + block);
    block *= gens;
  }
}

std::size_t MonomialBasis::index(const Key& k) const {
  if (k.size() >= order_) throw DomainError("monomial degree exceeds truncation");
  std::size_t v = 0;
  for (int g : k) v = v * gens_ + static_cast<std::size_t>(g);
  return offsets_[k.size()] + v;
}

Key MonomialBasis::key(std::size_t index) const {
  std::size_t d = 0;
  while (offsets_[d + 1] <= index) ++d;
  std::size_t v = index - offsets_[d];
  Key k(d);
  for (std::size_t i = d; i-- > 0;) {
    k[i] = static_cast<int>(v % gens_);
    v /= gens_;
  }
  return k;
}

namespace {

// All keys of length d in lex order.
std::vector<Key> keys_of_length(std::size_t gens, std::size_t d) {
  std::vector<Key> out{Key{}};
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Key> next;
    for (const auto& k : out)
      for (std::size_t g = 0; g < gens; ++g) {
        Key n = k;
        n.push_back(static_cast<int>(g));
        next.push_back(std::move(n));
      }
    out = std::move(next);
  }
  return out;
}

// Sandwiches in deterministic order: relator, total degree, left degree, left key, right key.
template <typename F>
void for_each_sandwich(const Presentation& p, std::size_t order, F&& f) {
  const std::size_t gens = p.alphabet.size();
  if (order < 2) return;
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (std::size_t total = 0; total + 2 <= order; ++total)
      for (std::size_t a = 0; a <= total; ++a) {
        auto lefts = keys_of_length(gens, a);
        auto rights = keys_of_length(gens, total - a);
        for (const auto& l : lefts)
          for (const auto& rr : rights) f(Sandwich{l, r, rr});
      }
}

Key join(const Key& a, const Key& b, const Key& c) {
  Key k = a;
  k.insert(k.end(), b.begin(), b.end());
  k.insert(k.end(), c.begin(), c.end());
  return k;
}

TruncSeries shifted_magnus(const Word& w, std::size_t order, Ring ring) {
  TruncSeries m = magnus_expand(w, order, ring);
  m.add({}, Scalar(ring, -1L));
  return m;
}

}  // namespace

Matrix TruncatedQuotient::ideal_span() const {
  Matrix m(ring_, monomials_.size(), columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (std::size_t i = 0; i < monomials_.size(); ++i) m(i, j) = columns_[j][i];
  return m;
}

Vector TruncatedQuotient::coordinates(const TruncSeries& s) const {
  if (s.order() != order()) throw DomainError("series order does not match the quotient");
  if (!(s.ring() == ring_)) throw DomainError("series ring does not match the quotient");
  Vector v = zero_vector(ring_, monomials_.size());
  for (const auto& [k, c] : s.terms()) v[monomials_.index(k)] = c;
  return v;
}

Vector TruncatedQuotient::normal_form(const Vector& v) const { return reduce_modulo(echelon_, v); }

std::optional<std::size_t> TruncatedQuotient::filtration_degree(const Vector& v) const {
  Vector nf = normal_form(v);
  if (std::all_of(nf.begin(), nf.end(), [](const Scalar& s) { return s.is_zero(); })) return std::nullopt;
  for (std::size_t k = order() - 1; k >= 1; --k) {
    Vector head(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(monomials_.count_below(k)));
    Vector rest = reduce_modulo(truncated_[k], std::move(head));
    if (std::all_of(rest.begin(), rest.end(), [](const Scalar& s) { return s.is_zero(); })) return k;
  }
  return 0;
}

TruncatedQuotient build_truncated_quotient(const Presentation& p, std::size_t order, Ring ring,
                                           std::size_t entry_cap) {
  TruncatedQuotient q(p, order, ring);
  const MonomialBasis& mb = q.monomials_;
  std::size_t count = 0;
  for_each_sandwich(p, order, [&](const Sandwich&) { ++count; });
  if (count > 0 && mb.size() > entry_cap / count)
    throw DomainError("truncation order " + std::to_string(order) + " needs " + std::to_string(mb.size()) + " x " +
                      std::to_string(count) + " matrix entries, above the cap of " + std::to_string(entry_cap));

  std::vector<TruncSeries> shifted;
  for (const auto& r : p.relators) shifted.push_back(shifted_magnus(r, order, ring));
  for_each_sandwich(p, order, [&](const Sandwich& s) {
    Vector col = zero_vector(ring, mb.size());
    for (const auto& [k, c] : shifted[s.relator].terms()) {
      if (s.left.size() + k.size() + s.right.size() >= order) break;
      col[mb.index(join(s.left, k, s.right))] += c;
    }
    q.sandwiches_.push_back(s);
    q.columns_.push_back(std::move(col));
  });

  q.echelon_ = echelon(Matrix::from_vectors(ring, q.columns_, mb.size()));
  q.truncated_.resize(order);
  for (std::size_t k = 1; k < order; ++k) {
    std::size_t width = mb.count_below(k);
    Matrix head(ring, q.echelon_.form.rows(), width);
    for (std::size_t i = 0; i < head.rows(); ++i)
      for (std::size_t j = 0; j < width; ++j) head(i, j) = q.echelon_.form(i, j);
    q.truncated_[k] = echelon(head);
  }

  std::vector<bool> pivot(mb.size(), false);
  for (auto c : q.echelon_.pivots) pivot[c] = true;
  for (std::size_t i = 0; i < mb.size(); ++i) {
    if (pivot[i]) continue;
    Vector e = zero_vector(ring, mb.size());
    e[i] = Scalar::one(ring);
    auto fd = q.filtration_degree(e);
    q.basis_.push_back({mb.key(i), fd ? *fd : order});
  }

  if (ring.kind() == RingKind::Integers && q.echelon_.form.rows() > 0)
    for (const auto& d : smith_form(q.echelon_.form).divisors)
      if (d > 1) q.divisors_.push_back(d);
  return q;
}

Combo parse_combo(std::string_view text, const Alphabet& alphabet, Ring ring) {
  Combo out;
  int depth = 0;
  std::size_t start = 0;
  int sign = 1;
  char prev = 0;
  auto flush = [&](std::size_t end) {
    std::string_view raw = text.substr(start, end - start);
    std::size_t lead = leading_space(raw);
    std::string_view term = trim(raw);
    if (term.empty()) throw ParseError("empty term in combination", start + lead);
    std::size_t i = 0;
    while (i < term.size() && (std::isdigit(static_cast<unsigned char>(term[i])) || term[i] == '/')) ++i;
    Scalar c = Scalar::one(ring);
    if (i > 0) {
      try {
        c = Scalar::parse(ring, term.substr(0, i));
      } catch (const ParseError& e) {
        throw ParseError("malformed scalar '" + std::string(term.substr(0, i)) + "'", start + lead);
      }
    }
    try {
      Word w = parse_word(term.substr(i), alphabet);
      out.emplace_back(sign < 0 ? -c : c, std::move(w));
    } catch (const ParseError& e) {
      throw ParseError(std::string("in combination term: ") + e.what(), start + lead + i + e.position());
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if ((ch == '+' || ch == '-') && depth == 0 && prev != '^') {
      if (!trim(text.substr(start, i - start)).empty()) flush(i);
      else if (!out.empty() || start != 0) throw ParseError("empty term in combination", i);
      sign = ch == '-' ? -1 : 1;
      start = i + 1;
    }
    if (!std::isspace(static_cast<unsigned char>(ch))) prev = ch;
  }
  if (trim(text.substr(start)).empty() && (start != 0 || !out.empty()))
    throw ParseError("empty term in combination", text.size());
  flush(text.size());
  return out;
}

Scalar pair(const TruncatedQuotient& q, const TensorElement& t, const Combo& combo) {
  if (t.weight() >= q.order())
    throw DomainError("tensor weight " + std::to_string(t.weight()) + " is not below the truncation order " +
                      std::to_string(q.order()));
  Scalar total = Scalar::zero(t.ring());
  for (const auto& [c, w] : combo) total += c * apply(t, magnus_expand(w, q.order(), t.ring()));
  return total;
}

Scalar pair(const TruncatedQuotient& q, const TensorElement& t, const Word& w) {
  return pair(q, t, Combo{{Scalar::one(t.ring()), w}});
}

InvariantBasis invariants_basis(const TruncatedQuotient& q) {
  const Ring ring = q.ring();
  const MonomialBasis& mb = q.monomials();
  const std::size_t n = mb.size();
  const Matrix& ideal = q.reduction().form;
  // Reverse the monomial order so each kernel vector pivots on its highest-weight term.
  Matrix rev(ring, ideal.rows(), n);
  for (std::size_t i = 0; i < ideal.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) rev(i, n - 1 - j) = ideal(i, j);
  std::vector<Vector> kernel = kernel_basis(rev);

  InvariantBasis b{ring, q.alphabet(), q.order() - 1, {}, q.elementary_divisors(), Matrix()};
  for (const auto& v : kernel) {
    TensorElement t(ring, q.alphabet());
    std::size_t weight = 0;
    bool first = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      Key k = mb.key(n - 1 - j);
      if (first) weight = k.size();
      first = false;
      t.add(k, v[j]);
    }
    b.elements.push_back({std::move(t), weight});
  }
  std::reverse(b.elements.begin(), b.elements.end());
  b.duality = Matrix(ring, b.elements.size(), q.basis().size());
  for (std::size_t i = 0; i < b.elements.size(); ++i)
    for (std::size_t j = 0; j < q.basis().size(); ++j) b.duality(i, j) = b.elements[i].tensor.coeff(q.basis()[j].monomial);
  return b;
}

InvariantBasis invariants_basis(const Presentation& p, std::size_t order, Ring ring) {
  return invariants_basis(build_truncated_quotient(p, order, ring));
}

InvarianceReport is_invariant(const Presentation& p, const TensorElement& t) {
  if (!(t.alphabet() == p.alphabet)) throw DomainError("tensor and presentation use different alphabets");
  const std::size_t order = t.weight() + 1;
  const Ring ring = t.ring();
  std::vector<TruncSeries> shifted;
  for (const auto& r : p.relators) shifted.push_back(shifted_magnus(r, order, ring));
  std::optional<InvarianceWitness> witness;
  for_each_sandwich(p, order, [&](const Sandwich& s) {
    if (witness) return;
    Scalar v = Scalar::zero(ring);
    for (const auto& [k, c] : shifted[s.relator].terms()) {
      if (s.left.size() + k.size() + s.right.size() >= order) break;
      v += c * t.coeff(join(s.left, k, s.right));
    }
    if (v.is_zero()) return;
    InvarianceWitness w{s, v, {}};
    for (int g : s.left) w.words.push_back(Word::generator(p.alphabet, g));
    w.words.push_back(p.relators[s.relator]);
    for (int g : s.right) w.words.push_back(Word::generator(p.alphabet, g));
    witness = std::move(w);
  });
  return {!witness.has_value(), witness};
}

std::optional<TensorElement> complete_leading_term(const Presentation& p, const TensorElement& lead) {
  if (!(lead.alphabet() == p.alphabet)) throw DomainError("tensor and presentation use different alphabets");
  const std::size_t n = lead.weight();
  const Ring ring = lead.ring();
  if (n == 0) return TensorElement(ring, p.alphabet);
  TruncatedQuotient q = build_truncated_quotient(p, n + 1, ring);
  const MonomialBasis& mb = q.monomials();
  const std::size_t lower = mb.count_below(n);
  const auto& cols = q.sandwich_columns();
  // ⟨C, sandwich⟩ = −⟨lead, sandwich⟩ for every sandwich, C on monomials of degree < n.
  Matrix a(ring, cols.size(), lower);
  Vector b = zero_vector(ring, cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    for (std::size_t j = 0; j < lower; ++j) a(i, j) = cols[i][j];
    for (std::size_t j = lower; j < mb.size(); ++j)
      if (!cols[i][j].is_zero()) b[i] -= cols[i][j] * lead.coeff(mb.key(j));
  }
  auto x = membership(a, b);
  if (!x) return std::nullopt;
  TensorElement c(ring, p.alphabet);
  for (std::size_t j = 0; j < lower; ++j) c.add(mb.key(j), (*x)[j]);
  return c;
}

std::string DepthReport::str() const { return exact ? std::to_string(*exact) : ">= " + std::to_string(order); }

DepthReport dimension_depth(const TruncatedQuotient& q, const Word& w) {
  if (!(w.alphabet() == q.alphabet())) throw DomainError("word and presentation use different alphabets");
  Vector v = q.coordinates(shifted_magnus(w, q.order(), q.ring()));
  return {q.filtration_degree(v), q.order()};
}

Word GroupHom::image(int source_gen) const {
  const auto& name = source.name(static_cast<std::size_t>(source_gen));
  auto it = images.find(name);
  if (it == images.end()) throw DomainError("no image given for generator '" + name + "'");
  return it->second;
}

namespace {

struct HomEntry {
  std::string name;
  Word image;
  std::size_t position;
};

std::vector<HomEntry> parse_hom_entries(std::string_view text, const Alphabet& target) {
  std::vector<HomEntry> entries;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view entry = text.substr(start, end - start);
    std::size_t arrow = entry.find("->");
    if (arrow == std::string_view::npos) throw ParseError("expected 'generator -> word'", start + leading_space(entry));
    std::string_view lhs = trim(entry.substr(0, arrow));
    if (!is_identifier(lhs)) throw ParseError("invalid generator name '" + std::string(lhs) + "'", start);
    std::size_t rhs_at = start + arrow + 2;
    try {
      entries.push_back({std::string(lhs), parse_word(entry.substr(arrow + 2), target), start + leading_space(entry)});
    } catch (const ParseError& e) {
      throw ParseError(std::string("in image of '") + std::string(lhs) + "': " + e.what(), rhs_at + e.position());
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(text.size());
  return entries;
}

}  // namespace

GroupHom parse_hom(std::string_view text, const Alphabet& source, const Alphabet& target) {
  GroupHom h{source, target, {}};
  for (auto& e : parse_hom_entries(text, target)) {
    if (source.find(e.name) < 0) throw ParseError("'" + e.name + "' is not a source generator", e.position);
    if (!h.images.emplace(e.name, std::move(e.image)).second)
      throw ParseError("generator '" + e.name + "' mapped twice", e.position);
  }
  for (const auto& n : source.names())
    if (!h.images.count(n)) throw ParseError("no image given for generator '" + n + "'", text.size());
  return h;
}

GroupHom parse_hom(std::string_view text, const Alphabet& target) {
  std::vector<std::string> names;
  for (auto& e : parse_hom_entries(text, target)) names.push_back(e.name);
  return parse_hom(text, Alphabet(names), target);
}

std::string format_hom(const GroupHom& h) {
  std::string out;
  for (const auto& n : h.source.names()) {
    if (!out.empty()) out += ", ";
    out += n + " -> " + format_word(h.images.at(n));
  }
  return out;
}

TensorElement pullback(const GroupHom& h, const TensorElement& t, const TruncatedQuotient& q_target) {
  if (!(t.alphabet() == q_target.alphabet()) || !(h.target == q_target.alphabet()))
    throw DomainError("pullback: tensor, homomorphism and quotient alphabets differ");
  if (t.weight() >= q_target.order())
    throw DomainError("pullback: tensor weight " + std::to_string(t.weight()) + " overflows truncation order " +
                      std::to_string(q_target.order()));
  const Ring ring = t.ring();
  const std::size_t order = t.weight() + 1;
  std::vector<TruncSeries> factors;
  for (std::size_t s = 0; s < h.source.size(); ++s)
    factors.push_back(shifted_magnus(h.image(static_cast<int>(s)), order, ring));

  TensorElement out(ring, h.source);
  Key key;
  // Depth-first over source sequences; a vanishing product prunes the subtree.
  auto visit = [&](auto&& self, const TruncSeries& prod) -> void {
    out.add(key, apply(t, prod));
    if (key.size() == t.weight()) return;
    for (std::size_t s = 0; s < factors.size(); ++s) {
      TruncSeries next = trunc_mul(prod, factors[s]);
      if (next.is_zero()) continue;
      key.push_back(static_cast<int>(s));
      self(self, next);
      key.pop_back();
    }
  };
  visit(visit, TruncSeries::one(ring, h.target, order));
  return out;
}

}  // namespace lb
