#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace lb {

// Ordered list of distinct generator names. Copies share storage.
class Alphabet {
 public:
  Alphabet() : names_(std::make_shared<const std::vector<std::string>>()) {}
  // Throws ParseError on an invalid identifier, DomainError on duplicates.
  explicit Alphabet(std::vector<std::string> names);
  // Whitespace-separated names, e.g. "x y z".
  static Alphabet parse(std::string_view text);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  // Index of a name, or -1.
  int find(std::string_view name) const;

  bool operator==(const Alphabet& o) const { return names_ == o.names_ || *names_ == *o.names_; }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

bool is_identifier(std::string_view s);

struct Letter {
  int gen = 0;
  int sign = 1;
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

// A word in the free group on an Alphabet. Not reduced unless free_reduce is
// called; letter-level algorithms see the sequence as given.
class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet, std::vector<Letter> letters = {});

  static Word generator(const Alphabet& a, int gen, int sign = 1) { return Word(a, {{gen, sign}}); }

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  bool is_reduced() const;
  bool operator==(const Word& o) const { return alphabet_ == o.alphabet_ && letters_ == o.letters_; }
  // Shortlex on letters; used as a map key within one alphabet.
  bool operator<(const Word& o) const;

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

// Not freely reduced. Errors carry the byte position.
Word parse_word(std::string_view text, const Alphabet& alphabet);

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
Word commutator(const Word& u, const Word& v);
Word power(const Word& w, long k);

// Image under the homomorphism sending generator `name` to images.at(name);
// the result is freely reduced.
Word substitute(const Word& w, const std::map<std::string, Word>& images, const Alphabet& target);

// "x y x^-1"; the identity formats as the empty string.
std::string format_word(const Word& w);

}  // namespace lb
