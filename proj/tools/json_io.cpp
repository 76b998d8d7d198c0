#include "json_io.hpp"

#include "lb/error.hpp"

namespace lb::cli {

namespace {

Json key_to_json(const Key& k, const Alphabet& a) {
  Json arr = Json::array();
  for (int g : k) arr.push_back(a.name(static_cast<std::size_t>(g)));
  return arr;
}

Json terms_to_json(const TermMap& terms, const Alphabet& a) {
  Json arr = Json::array();
  for (const auto& [k, c] : terms) arr.push_back(Json{{"key", key_to_json(k, a)}, {"coeff", c.str()}});
  return arr;
}

}  // namespace

Json tensor_to_json(const TensorElement& t) { return Json{{"terms", terms_to_json(t.terms(), t.alphabet())}}; }

TensorElement tensor_from_json(const Json& j, const Alphabet& alphabet, Ring ring) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError("tensor JSON needs a \"terms\" array", 0);
  TensorElement t(ring, alphabet);
  for (const auto& term : j["terms"]) {
    if (!term.contains("key") || !term["key"].is_array() || !term.contains("coeff") || !term["coeff"].is_string())
      throw ParseError("tensor term needs \"key\" array and \"coeff\" string", 0);
    Key k;
    for (const auto& name : term["key"]) {
      if (!name.is_string()) throw ParseError("tensor key entries must be generator names", 0);
      int g = alphabet.find(name.get<std::string>());
      if (g < 0) throw ParseError("unknown generator '" + name.get<std::string>() + "'", 0);
      k.push_back(g);
    }
    t.add(k, Scalar::parse(ring, term["coeff"].get<std::string>()));
  }
  return t;
}

Json series_to_json(const TruncSeries& s) {
  return Json{{"order", s.order()}, {"ring", s.ring().name()}, {"terms", terms_to_json(s.terms(), s.alphabet())}};
}

FiniteGroupTable table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("mul") || !j.contains("gens"))
    throw ParseError("group table JSON needs \"size\", \"mul\" and \"gens\"", 0);
  auto n = j["size"].get<std::size_t>();
  auto mul = j["mul"].get<std::vector<std::vector<std::size_t>>>();
  if (mul.size() != n) throw DomainError("group table: \"mul\" has " + std::to_string(mul.size()) + " rows, expected " + std::to_string(n));
  std::map<std::string, std::size_t> gens;
  for (const auto& [name, idx] : j["gens"].items()) gens.emplace(name, idx.get<std::size_t>());
  return FiniteGroupTable(std::move(mul), std::move(gens));
}

Json table_to_json(const FiniteGroupTable& g) {
  Json gens = Json::object();
  for (const auto& [name, idx] : g.gens()) gens[name] = idx;
  return Json{{"size", g.size()}, {"mul", g.table()}, {"gens", gens}};
}

}  // namespace lb::cli
