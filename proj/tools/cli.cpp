#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "lb/braiding.hpp"
#include "lb/error.hpp"
#include "lb/finite_group.hpp"
#include "lb/johnson.hpp"
#include "lb/presented.hpp"
#include "lb/series.hpp"

namespace lb::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string ring = "z";
  std::string format = "text";
  std::string gens;
  std::string presentation;
  std::optional<std::string> word;
  std::string tensor;
  std::string endo;
  std::string table;
  std::optional<std::size_t> weight;
  std::optional<std::size_t> order;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Re-throws a ParseError with the name of the input it came from.
template <typename F>
auto parsing(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw UsageError(what + ": parse error: " + e.what());
  }
}

class Session {
 public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out) {
    ring_ = parsing("--ring", [&] { return Ring::parse(o.ring); });
    if (o.format != "text" && o.format != "json" && o.format != "latex")
      throw UsageError("--format must be text, json or latex");
  }

  bool json() const { return o_.format == "json"; }

  void no_latex(const std::string& cmd) const {
    if (o_.format == "latex") throw UsageError("--format latex is only available for 'invariants', not '" + cmd + "'");
  }

  Presentation presentation() const {
    if (!o_.presentation.empty()) {
      std::string text = read_file(o_.presentation);
      return parsing(o_.presentation, [&] { return parse_presentation(text); });
    }
    if (!o_.gens.empty()) return Presentation::free(parsing("--gens", [&] { return Alphabet::parse(o_.gens); }));
    throw UsageError("give --presentation <path> or --gens \"x y ...\"");
  }

  const std::string& need(const std::string& value, const char* flag) const {
    if (value.empty()) throw UsageError(std::string("missing required ") + flag);
    return value;
  }

  const std::string& word_text() const {
    if (!o_.word) throw UsageError("missing required --word");
    return *o_.word;
  }

  Word word(const Alphabet& a) const {
    return parsing("--word", [&] { return parse_word(word_text(), a); });
  }

  TensorElement tensor(const Alphabet& a) const {
    return parsing("--tensor", [&] { return parse_tensor(need(o_.tensor, "--tensor"), a, ring_); });
  }

  void emit(const Json& j, const std::string& text) const {
    if (json())
      out_ << j.dump(2) << "\n";
    else
      out_ << text;
  }

  void magnus() const {
    no_latex("magnus");
    Presentation p = presentation();
    Word w = word(p.alphabet);
    std::size_t order = o_.order.value_or(4);
    TruncSeries s = magnus_expand(w, order, ring_);
    std::string text;
    for (const auto& [k, c] : s.terms()) text += c.str() + "\t" + (k.empty() ? "1" : format_key(k, p.alphabet)) + "\n";
    emit(series_to_json(s), text);
  }

  void braid() const {
    no_latex("braid");
    Presentation p = presentation();
    TensorElement t = tensor(p.alphabet);
    Word w = word(p.alphabet);
    BraidPolynomial poly = braiding_polynomial(t, w);
    Scalar number = braiding_number(t, w);
    Json coeffs = Json::array();
    for (const auto& c : poly.coeffs()) coeffs.push_back(c.str());
    emit(Json{{"polynomial", coeffs}, {"number", number.str()}},
         "polynomial: " + poly.str() + "\nnumber: " + number.str() + "\n");
  }

  void pair_cmd() const {
    no_latex("pair");
    Presentation p = presentation();
    TensorElement t = tensor(p.alphabet);
    Combo combo = parsing("--word", [&] { return parse_combo(word_text(), p.alphabet, ring_); });
    std::size_t order = o_.order.value_or(t.weight() + 1);
    TruncatedQuotient q = build_truncated_quotient(p, order, ring_);
    Scalar v = pair(q, t, combo);
    emit(Json{{"value", v.str()}}, v.str() + "\n");
  }

  std::size_t invariant_order() const {
    if (o_.weight && o_.order && *o_.order != *o_.weight + 1)
      throw UsageError("--weight n and --order N must satisfy N = n + 1");
    if (o_.weight) return *o_.weight + 1;
    if (o_.order) return *o_.order;
    throw UsageError("give --weight <n> (or --order <N> = n + 1)");
  }

  void invariants() const {
    Presentation p = presentation();
    std::size_t order = invariant_order();
    InvariantBasis b = invariants_basis(p, order, ring_);
    Json elems = Json::array();
    std::string text;
    for (const auto& e : b.elements) {
      Json j = tensor_to_json(e.tensor);
      elems.push_back(Json{{"weight", e.weight}, {"tensor", format_tensor(e.tensor)}, {"terms", j["terms"]}});
      text += "[" + std::to_string(e.weight) + "] " + format_tensor(e.tensor) + "\n";
    }
    Json doc{{"ring", ring_.name()}, {"max_weight", b.max_weight}, {"invariants", elems}};
    if (ring_.kind() == RingKind::Integers) {
      Json divs = Json::array();
      for (const auto& d : b.elementary_divisors) divs.push_back(d.get_str());
      doc["elementary_divisors"] = divs;
      if (!b.elementary_divisors.empty()) {
        text += "torsion elementary divisors:";
        for (const auto& d : b.elementary_divisors) text += " " + d.get_str();
        text += "\n";
      }
    }
    if (o_.format == "latex") {
      out_ << latex_table(b);
      return;
    }
    emit(doc, text);
  }

  static std::string latex_tensor(const TensorElement& t) {
    std::string s = format_tensor(t);
    std::string out;
    for (char c : s) {
      if (c == '|')
        out += " \\mid ";
      else if (c == '_')
        out += "\\_";
      else
        out += c;
    }
    return out;
  }

  static std::string latex_table(const InvariantBasis& b) {
    std::string out = "\\begin{tabular}{rl}\n\\hline\nweight & invariant \\\\\n\\hline\n";
    for (const auto& e : b.elements)
      out += std::to_string(e.weight) + " & $" + latex_tensor(e.tensor) + "$ \\\\\n";
    out += "\\hline\n\\end{tabular}\n";
    return out;
  }

  void check() const {
    no_latex("check");
    Presentation p = presentation();
    TensorElement t = tensor(p.alphabet);
    InvarianceReport r = is_invariant(p, t);
    Json doc{{"invariant", r.invariant}};
    std::string text = r.invariant ? "invariant\n" : "not invariant\n";
    if (r.witness) {
      const auto& w = *r.witness;
      Json evals = Json::array();
      for (const auto& x : w.words) evals.push_back(format_word(x));
      Json left = Json::array(), right = Json::array();
      for (int g : w.sandwich.left) left.push_back(p.alphabet.name(static_cast<std::size_t>(g)));
      for (int g : w.sandwich.right) right.push_back(p.alphabet.name(static_cast<std::size_t>(g)));
      doc["witness"] = Json{{"left", left},
                            {"relator_index", w.sandwich.relator},
                            {"relator", format_word(p.relators[w.sandwich.relator])},
                            {"right", right},
                            {"value", w.value.str()},
                            {"multi_evaluation", evals}};
      text += "witness: multi-evaluation at (";
      for (std::size_t i = 0; i < w.words.size(); ++i) text += (i ? " | " : "") + format_word(w.words[i]);
      text += ") = " + w.value.str() + "\n";
      if (t.weight() >= 2 && leading_term(t, t.weight()) == t) {
        auto c = complete_leading_term(p, t);
        doc["completion"] = c ? Json(format_tensor(*c)) : Json(nullptr);
        text += c ? "lower-weight completion: " + format_tensor(*c) + "\n" : "not a leading term of an invariant\n";
      }
    }
    emit(doc, text);
  }

  void depth() const {
    no_latex("depth");
    Presentation p = presentation();
    Word w = word(p.alphabet);
    if (!o_.order) throw UsageError("missing required --order");
    TruncatedQuotient q = build_truncated_quotient(p, *o_.order, ring_);
    DepthReport d = dimension_depth(q, w);
    Json value = d.exact ? Json(*d.exact) : Json(d.str());
    emit(Json{{"depth", value}}, d.str() + "\n");
  }

  void pullback_cmd() const {
    no_latex("pullback");
    Presentation p = presentation();
    GroupHom h = parsing("--endo", [&] { return parse_hom(need(o_.endo, "--endo"), p.alphabet); });
    TensorElement t = tensor(p.alphabet);
    TruncatedQuotient q = build_truncated_quotient(p, o_.order.value_or(t.weight() + 1), ring_);
    TensorElement r = pullback(h, t, q);
    Json doc{{"source", h.source.names()}, {"tensor", format_tensor(r)}};
    doc["terms"] = tensor_to_json(r)["terms"];
    emit(doc, format_tensor(r) + "\n");
  }

  void johnson() const {
    no_latex("johnson");
    Presentation p = presentation();
    Endo phi = parsing("--endo", [&] { return parse_endo(need(o_.endo, "--endo"), p); });
    std::size_t order = o_.order.value_or(4);
    if (order < 2) throw UsageError("--order must be at least 2");
    JohnsonLevel lv = johnson_level(p, phi, ring_, order);
    Json doc{{"level", lv.exact ? Json(*lv.exact) : Json(lv.str())}};
    if (lv.limiting_generator) doc["limiting_generator"] = *lv.limiting_generator;
    doc["warnings"] = lv.warnings;
    std::string text = "level: " + lv.str() + "\n";
    for (const auto& w : lv.warnings) text += "warning: " + w + "\n";
    std::size_t k = o_.weight.value_or(lv.exact ? *lv.exact : order - 2);
    JohnsonReport r = johnson_tau(p, phi, k, ring_);
    Json rows = Json::array(), cols = Json::array(), images = Json::array(), matrix = Json::array();
    for (const auto& t : r.rows) rows.push_back(format_tensor(t));
    for (const auto& t : r.columns) cols.push_back(format_tensor(t));
    for (const auto& t : r.images) images.push_back(format_tensor(t));
    for (std::size_t i = 0; i < r.tau.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < r.tau.cols(); ++j) row.push_back(r.tau(i, j).str());
      matrix.push_back(row);
    }
    doc["tau"] = Json{{"k", k}, {"rows", rows}, {"columns", cols}, {"matrix", matrix}, {"images", images}};
    text += "tau at k = " + std::to_string(k) + ":\n";
    for (std::size_t i = 0; i < r.rows.size(); ++i)
      text += "  " + format_tensor(r.rows[i]) + " -> " + format_tensor(r.images[i]) + "\n";
    emit(doc, text);
  }

  void oracle() const {
    no_latex("oracle");
    std::string text = read_file(need(o_.table, "--table"));
    Json j = parsing(o_.table, [&] {
      try {
        return Json::parse(text);
      } catch (const Json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
      }
    });
    FiniteGroupTable g = table_from_json(j);
    if (!o_.order) throw UsageError("missing required --order");
    IdealPowerDims dims = ideal_power_dims(g, ring_, *o_.order);
    Json doc{{"size", g.size()}, {"ring", ring_.name()}, {"dims", dims.dims}};
    std::string out = "dims of A[G]/I^k, k = 1.." + std::to_string(*o_.order) + ":";
    for (auto d : dims.dims) out += " " + std::to_string(d);
    out += "\n";
    if (ring_.kind() == RingKind::Integers) {
      Json tors = Json::array();
      for (const auto& t : dims.torsion) {
        Json row = Json::array();
        for (const auto& d : t) row.push_back(d.get_str());
        tors.push_back(row);
      }
      doc["torsion"] = tors;
    }
    if (!o_.presentation.empty()) {
      Presentation p = presentation();
      Json counts = Json::array();
      bool agree = true;
      out += "invariant counts:";
      for (std::size_t k = 1; k <= *o_.order; ++k) {
        std::size_t c = invariants_basis(p, k, ring_).elements.size();
        counts.push_back(c);
        agree = agree && c == dims.dims[k - 1];
        out += " " + std::to_string(c);
      }
      out += agree ? "\nagree\n" : "\nDISAGREE\n";
      doc["invariant_counts"] = counts;
      doc["agree"] = agree;
    }
    emit(doc, out);
  }

 private:
  const Options& o_;
  std::ostream& out_;
  Ring ring_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Letter-braiding invariants of words in free and finitely presented groups", "lb"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--ring", o.ring, "Coefficient ring: z, q or fp:<p>");
    sub->add_option("--format", o.format, "Output format: text, json or latex");
    sub->add_option("--gens", o.gens, "Free generators, e.g. \"x y\"");
    sub->add_option("--presentation", o.presentation, "Presentation file (gens:/rel: lines)");
  };
  struct Command {
    const char* name;
    const char* help;
    void (Session::*fn)() const;
    std::vector<const char*> flags;
  };
  const std::vector<Command> commands = {
      {"magnus", "Truncated Magnus expansion of a word", &Session::magnus, {"--word", "--order"}},
      {"braid", "Letter-braiding polynomial and number", &Session::braid, {"--word", "--tensor"}},
      {"pair", "Pair a tensor with a combination of words", &Session::pair_cmd, {"--word", "--tensor", "--order"}},
      {"invariants", "Basis of invariants up to a weight", &Session::invariants, {"--weight", "--order"}},
      {"check", "Test whether a tensor is an invariant", &Session::check, {"--tensor"}},
      {"depth", "Dimension-series depth of a word", &Session::depth, {"--word", "--order"}},
      {"pullback", "Pull a tensor back along a homomorphism", &Session::pullback_cmd, {"--endo", "--tensor", "--order"}},
      {"johnson", "Johnson level and dual Johnson homomorphism", &Session::johnson, {"--endo", "--order", "--weight"}},
      {"oracle", "Augmentation-ideal dimensions of a finite group", &Session::oracle, {"--table", "--order"}},
  };
  std::map<CLI::App*, const Command*> dispatch;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    common(sub);
    for (std::string f : c.flags) {
      if (f == "--word") sub->add_option("--word", o.word, "Word, or combination of words for pair");
      if (f == "--tensor") sub->add_option("--tensor", o.tensor, "Tensor expression, e.g. \"x|y + z\"");
      if (f == "--endo") sub->add_option("--endo", o.endo, "Generator images, e.g. \"x -> x, y -> x y x^-1\"");
      if (f == "--table") sub->add_option("--table", o.table, "Group table JSON file");
      if (f == "--order") sub->add_option("--order", o.order, "Truncation order N");
      if (f == "--weight") sub->add_option("--weight", o.weight, "Weight n");
    }
    dispatch[sub] = &c;
  }

  if (!args.empty() && args[0].rfind("-", 0) != 0 && !app.get_subcommand_no_throw(args[0])) {
    err << "lb: unknown command '" << args[0] << "'\n";
    return 2;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "lb: " << e.what() << "\n";
    return 2;
  }

  try {
    Session s(o, out);
    for (const auto& [sub, cmd] : dispatch)
      if (sub->parsed()) (s.*(cmd->fn))();
    return 0;
  } catch (const UsageError& e) {
    err << "lb: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "lb: parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "lb: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    err << "lb: malformed JSON input: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lb::cli
