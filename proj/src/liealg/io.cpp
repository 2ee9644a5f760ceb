#include "liecp/liealg/io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace liecp {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail("input", std::string("malformed JSON (") + e.what() + ")");
  }
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

std::string string_field(const json& obj, const std::string& key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) fail(where + "." + key, "expected a string");
  return v.get<std::string>();
}

struct Header {
  std::string name;
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
};

Header read_header(const json& doc) {
  Header h;
  if (!doc.is_object()) fail("input", "expected a JSON object");
  if (doc.contains("name")) h.name = string_field(doc, "name", "input");
  const json& dim = field(doc, "dim", "input");
  if (!dim.is_number_unsigned()) fail("dim", "expected a non-negative integer");
  const json& basis = field(doc, "basis", "input");
  if (!basis.is_array()) fail("basis", "expected an array of labels");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_string()) fail("basis[" + std::to_string(i) + "]", "expected a string");
    const std::string l = basis[i].get<std::string>();
    if (l.empty()) fail("basis[" + std::to_string(i) + "]", "empty label");
    if (!h.index.emplace(l, i).second) {
      throw Error(ErrorKind::DuplicateLabel, "basis[" + std::to_string(i) + "]: label '" + l + "' repeated");
    }
    h.labels.push_back(l);
  }
  if (dim.get<std::size_t>() != h.labels.size()) {
    fail("dim", "declares " + std::to_string(dim.get<std::size_t>()) + " but basis lists " +
                    std::to_string(h.labels.size()) + " labels");
  }
  return h;
}

std::size_t lookup(const std::map<std::string, std::size_t>& index, const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a label string");
  auto it = index.find(v.get<std::string>());
  if (it == index.end()) fail(where, "unknown label '" + v.get<std::string>() + "'");
  return it->second;
}

SparseVec read_terms(const std::map<std::string, std::size_t>& index, const json& terms, const std::string& where) {
  if (!terms.is_object()) fail(where, "expected an object mapping labels to rationals");
  SparseVec v;
  for (const auto& [label, value] : terms.items()) {
    auto it = index.find(label);
    if (it == index.end()) fail(where, "unknown label '" + label + "'");
    if (!value.is_string()) fail(where + "." + label, "expected a rational string");
    Rat c;
    try {
      c = parse_rational(value.get<std::string>());
    } catch (const Error& e) {
      fail(where + "." + label, e.what());
    }
    if (sgn(c) != 0) v[it->second] = c;
  }
  return v;
}

json write_terms(const SparseVec& v, const std::vector<std::string>& labels) {
  json t = json::object();
  for (const auto& [k, c] : v) t[labels[k]] = to_string(c);
  return t;
}

std::vector<ProductTerm> read_products(const json& doc, const Header& h) {
  const json& products = field(doc, "product", "input");
  if (!products.is_array()) fail("product", "expected an array");
  std::vector<ProductTerm> out;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < products.size(); ++e) {
    const std::string where = "product[" + std::to_string(e) + "]";
    const std::size_t lhs = lookup(h.index, field(products[e], "lhs", where), where + ".lhs");
    const std::size_t rhs = lookup(h.index, field(products[e], "rhs", where), where + ".rhs");
    if (!seen.insert({lhs, rhs}).second) {
      throw Error(ErrorKind::DuplicatePair, where + ": product " + h.labels[lhs] + "*" + h.labels[rhs] + " given twice");
    }
    out.push_back({lhs, rhs, read_terms(h.index, field(products[e], "terms", where), where + ".terms")});
  }
  return out;
}

}  // namespace

LieAlgebra parse_algebra(std::string_view text) {
  const json doc = parse_json(text);
  Header h = read_header(doc);
  const json& brackets = field(doc, "brackets", "input");
  if (!brackets.is_array()) fail("brackets", "expected an array");
  std::vector<BracketTerm> terms;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < brackets.size(); ++e) {
    const std::string where = "brackets[" + std::to_string(e) + "]";
    const std::size_t lhs = lookup(h.index, field(brackets[e], "lhs", where), where + ".lhs");
    const std::size_t rhs = lookup(h.index, field(brackets[e], "rhs", where), where + ".rhs");
    if (lhs >= rhs) {
      throw Error(ErrorKind::InvalidPair, where + ": [" + h.labels[lhs] + ", " + h.labels[rhs] +
                                              "] must list the earlier basis element first");
    }
    if (!seen.insert({lhs, rhs}).second) {
      throw Error(ErrorKind::DuplicatePair,
                  where + ": bracket [" + h.labels[lhs] + ", " + h.labels[rhs] + "] given twice");
    }
    terms.push_back({lhs, rhs, read_terms(h.index, field(brackets[e], "terms", where), where + ".terms")});
  }
  return LieAlgebra(std::move(h.labels), terms, std::move(h.name));
}

std::string serialize_algebra(const LieAlgebra& L) {
  json doc;
  doc["name"] = L.name();
  doc["dim"] = L.dim();
  doc["basis"] = L.labels();
  json brackets = json::array();
  for (const auto& [key, value] : L.table()) {
    brackets.push_back({{"lhs", L.label(key.first)}, {"rhs", L.label(key.second)}, {"terms", write_terms(value, L.labels())}});
  }
  doc["brackets"] = std::move(brackets);
  return doc.dump(2) + "\n";
}

AssocAlgebra parse_assoc(std::string_view text) {
  const json doc = parse_json(text);
  Header h = read_header(doc);
  auto products = read_products(doc, h);
  return AssocAlgebra(std::move(h.labels), products, std::move(h.name));
}

LSAAlgebra parse_lsa(std::string_view text) {
  const json doc = parse_json(text);
  Header h = read_header(doc);
  auto products = read_products(doc, h);
  return LSAAlgebra(std::move(h.labels), products, std::move(h.name));
}

std::string serialize_bilinear(const BilinearAlgebra& A) {
  json doc;
  doc["name"] = A.name();
  doc["dim"] = A.dim();
  doc["basis"] = A.labels();
  json products = json::array();
  for (const auto& p : A.products()) {
    products.push_back({{"lhs", A.labels()[p.lhs]}, {"rhs", A.labels()[p.rhs]}, {"terms", write_terms(p.value, A.labels())}});
  }
  doc["product"] = std::move(products);
  return doc.dump(2) + "\n";
}

ModuleData parse_module(std::string_view text, const LieAlgebra& g) {
  const json doc = parse_json(text);
  Header h = read_header(doc);
  std::map<std::string, std::size_t> g_index;
  for (std::size_t i = 0; i < g.dim(); ++i) g_index[g.label(i)] = i;
  const std::size_t m = h.labels.size();
  ModuleData out{h.name, h.labels, std::vector<QMatrix>(g.dim(), QMatrix(m, m))};
  const json& action = field(doc, "action", "input");
  if (!action.is_array()) fail("action", "expected an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < action.size(); ++e) {
    const std::string where = "action[" + std::to_string(e) + "]";
    const std::size_t x = lookup(g_index, field(action[e], "element", where), where + ".element");
    const std::size_t v = lookup(h.index, field(action[e], "vector", where), where + ".vector");
    if (!seen.insert({x, v}).second) {
      throw Error(ErrorKind::DuplicatePair, where + ": action of " + g.label(x) + " on " + h.labels[v] + " given twice");
    }
    for (const auto& [k, c] : read_terms(h.index, field(action[e], "terms", where), where + ".terms")) {
      out.action[x](k, v) = c;
    }
  }
  return out;
}

std::string serialize_module(const ModuleData& m, const LieAlgebra& g) {
  json doc;
  doc["name"] = m.name;
  doc["dim"] = m.labels.size();
  doc["basis"] = m.labels;
  json action = json::array();
  for (std::size_t x = 0; x < m.action.size(); ++x) {
    for (std::size_t v = 0; v < m.labels.size(); ++v) {
      SparseVec col;
      for (std::size_t k = 0; k < m.labels.size(); ++k) {
        if (sgn(m.action[x](k, v)) != 0) col[k] = m.action[x](k, v);
      }
      if (col.empty()) continue;
      action.push_back({{"element", g.label(x)}, {"vector", m.labels[v]}, {"terms", write_terms(col, m.labels)}});
    }
  }
  doc["action"] = std::move(action);
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace liecp
