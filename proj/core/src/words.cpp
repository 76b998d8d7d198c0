#include "lb/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "lb/error.hpp"

namespace lb {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s[0]);
  if (!(std::isalpha(head) || s[0] == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Alphabet::Alphabet(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw ParseError("invalid generator name '" + n + "'", 0);
    if (!seen.insert(n).second) throw DomainError("duplicate generator '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Alphabet Alphabet::parse(std::string_view text) {
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != ',') ++j;
    std::string name(text.substr(i, j - i));
    if (!is_identifier(name)) throw ParseError("invalid generator name '" + name + "'", i);
    names.push_back(std::move(name));
    i = j;
  }
  return Alphabet(std::move(names));
}

int Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return static_cast<int>(i);
  return -1;
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (const auto& l : letters_)
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= alphabet_.size() || (l.sign != 1 && l.sign != -1))
      throw DomainError("letter out of range for alphabet");
}

bool Word::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i].gen == letters_[i - 1].gen && letters_[i].sign == -letters_[i - 1].sign) return false;
  return true;
}

bool Word::operator<(const Word& o) const {
  if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
  return letters_ < o.letters_;
}

namespace {

void check_same(const Word& u, const Word& v) {
  if (!(u.alphabet() == v.alphabet())) throw DomainError("alphabet mismatch between words");
}

class WordParser {
 public:
  WordParser(std::string_view text, const Alphabet& a) : s_(text), a_(a) {}

  Word run() {
    auto letters = product({});
    skip_ws();
    if (pos_ < s_.size()) {
      if (s_[pos_] == ')' || s_[pos_] == ']') throw ParseError("unbalanced bracket '" + std::string(1, s_[pos_]) + "'", pos_);
      throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    }
    return Word(a_, std::move(letters));
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  // Sequence of factors until a terminator in `stops` (or end of input).
  std::vector<Letter> product(std::string_view stops) {
    std::vector<Letter> out;
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size()) return out;
      char c = s_[pos_];
      if (stops.find(c) != std::string_view::npos) return out;
      if (c == '*') {
        if (out.empty()) throw ParseError("'*' without a left operand", pos_);
        ++pos_;
        skip_ws();
        if (pos_ >= s_.size() || !starts_factor(s_[pos_])) throw ParseError("'*' without a right operand", pos_);
        continue;
      }
      auto f = factor();
      out.insert(out.end(), f.begin(), f.end());
    }
  }

  static bool starts_factor(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(' || c == '[';
  }

  std::vector<Letter> factor() {
    std::vector<Letter> base = atom();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      std::size_t at = pos_++;
      skip_ws();
      std::size_t start = pos_;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string_view digits = s_.substr(start, pos_ - start);
      long k = 0;
      const char* b = digits.data();
      if (!digits.empty() && digits[0] == '+') ++b;
      auto [ptr, ec] = std::from_chars(b, digits.data() + digits.size(), k);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
        throw ParseError("malformed exponent", start == s_.size() ? at : start);
      return power(Word(a_, std::move(base)), k).letters();
    }
    return base;
  }

  std::vector<Letter> atom() {
    skip_ws();
    std::size_t start = pos_;
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = product(")");
      if (pos_ >= s_.size()) throw ParseError("unbalanced bracket '('", start);
      ++pos_;
      return inner;
    }
    if (c == '[') {
      ++pos_;
      auto u = product(",]");
      if (pos_ >= s_.size()) throw ParseError("unbalanced bracket '['", start);
      if (s_[pos_] != ',') throw ParseError("commutator needs two entries", pos_);
      ++pos_;
      auto v = product(",]");
      if (pos_ >= s_.size()) throw ParseError("unbalanced bracket '['", start);
      if (s_[pos_] != ']') throw ParseError("commutator needs exactly two entries", pos_);
      ++pos_;
      return commutator(Word(a_, std::move(u)), Word(a_, std::move(v))).letters();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      int g = a_.find(name);
      if (g < 0) throw ParseError("unknown generator '" + std::string(name) + "'", start);
      return {{g, 1}};
    }
    if (c == ')' || c == ']') throw ParseError("unbalanced bracket '" + std::string(1, c) + "'", pos_);
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view s_;
  const Alphabet& a_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) { return WordParser(text, alphabet).run(); }

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (const auto& l : w.letters()) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(w.alphabet(), std::move(out));
}

Word inverse(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (auto& l : out) l.sign = -l.sign;
  return Word(w.alphabet(), std::move(out));
}

Word concat(const Word& u, const Word& v) {
  check_same(u, v);
  std::vector<Letter> out = u.letters();
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return Word(u.alphabet(), std::move(out));
}

Word commutator(const Word& u, const Word& v) {
  return concat(concat(u, v), concat(inverse(u), inverse(v)));
}

Word power(const Word& w, long k) {
  Word base = k < 0 ? inverse(w) : w;
  std::vector<Letter> out;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.letters().begin(), base.letters().end());
  return Word(w.alphabet(), std::move(out));
}

Word substitute(const Word& w, const std::map<std::string, Word>& images, const Alphabet& target) {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    const auto& name = w.alphabet().name(static_cast<std::size_t>(l.gen));
    auto it = images.find(name);
    if (it == images.end()) throw DomainError("no image given for generator '" + name + "'");
    if (!(it->second.alphabet() == target)) throw DomainError("image of '" + name + "' is over the wrong alphabet");
    Word img = l.sign > 0 ? it->second : inverse(it->second);
    out.insert(out.end(), img.letters().begin(), img.letters().end());
  }
  return free_reduce(Word(target, std::move(out)));
}

std::string format_word(const Word& w) {
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += w.alphabet().name(static_cast<std::size_t>(l.gen));
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace lb
