#include "lb/tensor.hpp"

#include <algorithm>
#include <cctype>

#include "lb/error.hpp"

namespace lb {

Functional Functional::dual(const Alphabet& a, Ring ring, int gen) {
  Functional f{a, zero_vector(ring, a.size())};
  f.coeffs[static_cast<std::size_t>(gen)] = Scalar::one(ring);
  return f;
}

TensorElement TensorElement::unit(Ring ring, Alphabet alphabet) {
  return pure(ring, std::move(alphabet), {}, Scalar::one(ring));
}

TensorElement TensorElement::pure(Ring ring, Alphabet alphabet, Key key, Scalar coeff) {
  TensorElement t(ring, std::move(alphabet));
  t.add(key, coeff);
  return t;
}

TensorElement TensorElement::pure(Ring ring, Alphabet alphabet, Key key) {
  return pure(ring, std::move(alphabet), std::move(key), Scalar::one(ring));
}

TensorElement TensorElement::from_functionals(Ring ring, const std::vector<Functional>& factors) {
  if (factors.empty()) throw DomainError("from_functionals needs at least one factor");
  const Alphabet& a = factors[0].alphabet;
  TensorElement acc = unit(ring, a);
  for (const auto& f : factors) {
    if (!(f.alphabet == a)) throw DomainError("functional alphabet mismatch");
    TensorElement lin(ring, a);
    for (std::size_t g = 0; g < a.size(); ++g) lin.add({static_cast<int>(g)}, f.coeffs[g]);
    acc = tensor(acc, lin);
  }
  return acc;
}

Scalar TensorElement::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

void TensorElement::add(const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  for (int g : k)
    if (g < 0 || static_cast<std::size_t>(g) >= alphabet_.size()) throw DomainError("key out of range for alphabet");
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::size_t TensorElement::weight() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

void TensorElement::check_same(const TensorElement& o) const {
  if (!(ring_ == o.ring_)) throw DomainError("ring mismatch between tensors");
  if (!(alphabet_ == o.alphabet_)) throw DomainError("alphabet mismatch between tensors");
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

TensorElement TensorElement::operator-() const {
  TensorElement r(ring_, alphabet_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

TensorElement TensorElement::operator*(const Scalar& s) const {
  TensorElement r(ring_, alphabet_);
  for (const auto& [k, c] : terms_) r.add(k, c * s);
  return r;
}

TensorElement tensor(const TensorElement& a, const TensorElement& b) {
  if (!(a.ring() == b.ring()) || !(a.alphabet() == b.alphabet())) throw DomainError("tensor: operand mismatch");
  TensorElement r(a.ring(), a.alphabet());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Key k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      r.add(k, ca * cb);
    }
  return r;
}

TensorElement leading_term(const TensorElement& t, std::size_t n) {
  TensorElement r(t.ring(), t.alphabet());
  for (const auto& [k, c] : t.terms())
    if (k.size() == n) r.add(k, c);
  return r;
}

namespace {

void accumulate(MultiTensor& m, std::vector<Key> key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

// Split the last component of every term at interior positions.
MultiTensor split_last(const MultiTensor& m) {
  MultiTensor out;
  for (const auto& [parts, c] : m) {
    const Key& last = parts.back();
    for (std::size_t i = 1; i < last.size(); ++i) {
      std::vector<Key> np(parts.begin(), parts.end() - 1);
      np.emplace_back(last.begin(), last.begin() + static_cast<std::ptrdiff_t>(i));
      np.emplace_back(last.begin() + static_cast<std::ptrdiff_t>(i), last.end());
      accumulate(out, std::move(np), c);
    }
  }
  return out;
}

}  // namespace

MultiTensor coproduct(const TensorElement& t) {
  MultiTensor out;
  for (const auto& [k, c] : t.terms())
    for (std::size_t i = 0; i <= k.size(); ++i)
      accumulate(out, {Key(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(i)),
                       Key(k.begin() + static_cast<std::ptrdiff_t>(i), k.end())}, c);
  return out;
}

MultiTensor reduced_coproduct(const TensorElement& t) { return iterated_reduced_coproduct(t, 1); }

MultiTensor iterated_reduced_coproduct(const TensorElement& t, std::size_t k) {
  MultiTensor m;
  for (const auto& [key, c] : t.terms())
    if (!key.empty()) accumulate(m, {key}, c);
  // Splitting only the rightmost component each time enumerates every
  // decomposition into nonempty consecutive parts exactly once.
  for (std::size_t i = 0; i < k && !m.empty(); ++i) m = split_last(m);
  return m;
}

std::string format_key(const Key& k, const Alphabet& a) {
  std::string out;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) out += '|';
    out += a.name(static_cast<std::size_t>(k[i]));
  }
  return out;
}

std::string format_tensor(const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::vector<std::pair<Key, Scalar>> terms(t.terms().begin(), t.terms().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  std::string out;
  for (const auto& [k, c] : terms) {
    std::string mag = c.str();
    bool neg = mag[0] == '-';
    if (neg) mag.erase(0, 1);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (k.empty())
      out += mag;
    else
      out += (mag == "1" ? "" : mag + " ") + format_key(k, t.alphabet());
  }
  return out;
}

namespace {

class TensorParser {
 public:
  TensorParser(std::string_view s, const Alphabet& a, Ring r) : s_(s), a_(a), ring_(r) {}

  TensorElement run() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty tensor expression", pos_);
    TensorElement t = expr();
    skip();
    if (pos_ < s_.size()) {
      if (s_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
      throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    }
    return t;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  TensorElement expr() {
    TensorElement acc(ring_, a_);
    bool first = true;
    for (;;) {
      skip();
      int sign = 1;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        return acc;
      }
      TensorElement t = term();
      if (sign < 0)
        acc -= t;
      else
        acc += t;
      first = false;
    }
  }

  TensorElement term() {
    TensorElement acc = factor();
    while (peek('|')) {
      ++pos_;
      acc = tensor(acc, factor());
    }
    return acc;
  }

  TensorElement factor() {
    skip();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      Scalar c = scalar();
      skip();
      if (peek('*')) {
        ++pos_;
        return primary() * c;
      }
      if (pos_ < s_.size() && (s_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        return primary() * c;
      return TensorElement::unit(ring_, a_) * c;
    }
    return primary();
  }

  Scalar scalar() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    std::string_view lit = s_.substr(start, pos_ - start);
    try {
      return Scalar::parse(ring_, lit);
    } catch (const ParseError& e) {
      throw ParseError("malformed scalar '" + std::string(lit) + "'", start);
    }
  }

  TensorElement primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("expected a generator, scalar or '('", pos_);
    std::size_t start = pos_;
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      TensorElement inner = expr();
      if (!peek(')')) throw ParseError("unbalanced '('", start);
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      int g = a_.find(name);
      if (g < 0) throw ParseError("unknown generator '" + std::string(name) + "'", start);
      return TensorElement::pure(ring_, a_, {g});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return factor();
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view s_;
  const Alphabet& a_;
  Ring ring_;
  std::size_t pos_ = 0;
};

}  // namespace

TensorElement parse_tensor(std::string_view text, const Alphabet& alphabet, Ring ring) {
  return TensorParser(text, alphabet, ring).run();
}

}  // namespace lb
