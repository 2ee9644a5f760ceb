#include "liecp/catalog/builders.hpp"

#include <initializer_list>
#include <map>

#include "liecp/liealg/constructors.hpp"

namespace liecp::algebras {

namespace {

struct Br {
  const char* lhs;
  const char* rhs;
  std::map<std::string, Rat> terms;
};

// Brackets given by label; a pair listed as (later, earlier) is flipped.
LieAlgebra from_labels(const std::string& name, const std::vector<std::string>& labels, const std::vector<Br>& brs) {
  std::map<std::string, std::size_t> at;
  for (std::size_t i = 0; i < labels.size(); ++i) at[labels[i]] = i;
  std::vector<BracketTerm> terms;
  for (const auto& b : brs) {
    std::size_t i = at.at(b.lhs), j = at.at(b.rhs);
    Rat sign(1);
    if (i > j) {
      std::swap(i, j);
      sign = -1;
    }
    SparseVec v;
    for (const auto& [l, c] : b.terms) v[at.at(l)] = sign * c;
    terms.push_back({i, j, v});
  }
  return LieAlgebra(labels, terms, name);
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

const Rat one(1);
const std::vector<std::string> seven{"a", "b", "c", "d", "e", "f", "g"};

}  // namespace

LieAlgebra abelian(std::size_t n, const std::string& prefix) {
  return LieAlgebra(numbered(prefix, n), {}, "abelian" + std::to_string(n));
}

LieAlgebra heisenberg(std::size_t m) {
  if (m == 0) throw Error(ErrorKind::PreconditionViolated, "heisenberg algebra needs m >= 1");
  std::vector<std::string> labels;
  if (m == 1) {
    labels = {"x", "y", "z"};
  } else {
    labels = numbered("x", m);
    for (auto& l : numbered("y", m)) labels.push_back(l);
    labels.push_back("z");
  }
  std::vector<BracketTerm> terms;
  for (std::size_t i = 0; i < m; ++i) terms.push_back({i, m + i, {{2 * m, one}}});
  return LieAlgebra(labels, terms, "heisenberg" + std::to_string(2 * m + 1));
}

LieAlgebra twodim_nonabelian() { return from_labels("twodim_nonabelian", {"x", "y"}, {{"x", "y", {{"y", one}}}}); }

LieAlgebra kE_plus_V(std::size_t n) {
  return derivation_extend(abelian(n, "v"), QMatrix::identity(n), "E").renamed("kE_plus_V" + std::to_string(n));
}

LieAlgebra diamond() {
  return from_labels("diamond", {"t", "x", "y", "z"},
                     {{"t", "x", {{"x", Rat(-1)}}}, {"t", "y", {{"y", one}}}, {"x", "y", {{"z", one}}}});
}

LieAlgebra g5() {
  return from_labels("g5", numbered("x", 5),
                     {{"x1", "x2", {{"x3", one}}}, {"x1", "x3", {{"x4", one}}}, {"x2", "x3", {{"x5", one}}}});
}

LieAlgebra g6() {
  return from_labels("g6", numbered("x", 6),
                     {{"x1", "x2", {{"x6", one}}}, {"x1", "x3", {{"x4", one}}}, {"x2", "x3", {{"x5", one}}}});
}

LieAlgebra h5() {
  return from_labels("h5", numbered("x", 5),
                     {{"x1", "x2", {{"x3", one}}},
                      {"x1", "x3", {{"x4", one}}},
                      {"x1", "x4", {{"x5", one}}},
                      {"x2", "x3", {{"x5", one}}}});
}

LieAlgebra j5() {
  return from_labels("j5", numbered("x", 5), {{"x1", "x2", {{"x3", one}}}, {"x1", "x3", {{"x4", one}}}});
}

LieAlgebra sl2() {
  return from_labels("sl2", {"e", "h", "f"},
                     {{"e", "h", {{"e", Rat(-2)}}}, {"e", "f", {{"h", one}}}, {"h", "f", {{"f", Rat(-2)}}}});
}

LieAlgebra sl2_w2() {
  const LieAlgebra g = sl2();
  return semidirect_product(g, adjoint_action(g), 3, {"ue", "uh", "uf"}).renamed("sl2_w2");
}

LieAlgebra morozov6(int item, const Rat& gamma) {
  const auto e = numbered("e", 6);
  const std::string name = "morozov6_" + std::to_string(item);
  switch (item) {
    case 4:
      return from_labels(name, e, {{"e1", "e2", {{"e5", one}}}, {"e1", "e3", {{"e6", one}}}, {"e2", "e4", {{"e6", one}}}});
    case 5:
      return from_labels(name, e,
                         {{"e1", "e3", {{"e5", one}}},
                          {"e1", "e4", {{"e6", one}}},
                          {"e2", "e4", {{"e5", one}}},
                          {"e2", "e3", {{"e6", gamma}}}});
    case 6:
      return from_labels(name, e,
                         {{"e1", "e2", {{"e6", one}}},
                          {"e1", "e3", {{"e4", one}}},
                          {"e1", "e4", {{"e5", one}}},
                          {"e2", "e3", {{"e5", one}}}});
    case 7:
      return from_labels(name, e, {{"e1", "e3", {{"e4", one}}}, {"e1", "e4", {{"e5", one}}}, {"e2", "e3", {{"e6", one}}}});
    case 8:
      return from_labels(name, e,
                         {{"e1", "e2", {{"e3", one}, {"e5", one}}}, {"e1", "e3", {{"e4", one}}}, {"e2", "e5", {{"e6", one}}}});
    case 9:
      return from_labels(name, e,
                         {{"e1", "e2", {{"e3", one}}},
                          {"e1", "e3", {{"e4", one}}},
                          {"e1", "e5", {{"e6", one}}},
                          {"e2", "e3", {{"e6", one}}}});
    case 10:
      return from_labels(name, e,
                         {{"e1", "e2", {{"e3", one}}},
                          {"e1", "e3", {{"e5", one}}},
                          {"e1", "e4", {{"e6", one}}},
                          {"e2", "e4", {{"e5", one}}},
                          {"e2", "e3", {{"e6", gamma}}}});
    case 11:
      return from_labels(name, e,
                         {{"e1", "e2", {{"e3", one}}},
                          {"e1", "e3", {{"e4", one}}},
                          {"e1", "e4", {{"e5", one}}},
                          {"e2", "e3", {{"e6", one}}}});
    default:
      throw Error(ErrorKind::UnknownEntry, "no six-dimensional item " + std::to_string(item));
  }
}

LieAlgebra seeley(const std::string& kind) {
  const std::string name = "seeley_" + kind;
  if (kind == "37B") {
    return from_labels(name, seven, {{"a", "b", {{"e", one}}}, {"b", "c", {{"f", one}}}, {"c", "d", {{"g", one}}}});
  }
  if (kind == "37C") {
    return from_labels(name, seven,
                       {{"a", "b", {{"e", one}}}, {"b", "c", {{"f", one}}}, {"c", "d", {{"e", one}}}, {"b", "d", {{"g", one}}}});
  }
  if (kind == "37D") {
    return from_labels(name, seven,
                       {{"a", "b", {{"e", one}}}, {"b", "d", {{"g", one}}}, {"c", "d", {{"e", one}}}, {"a", "c", {{"f", one}}}});
  }
  if (kind == "357A") {
    return from_labels(name, seven,
                       {{"a", "b", {{"c", one}}}, {"a", "c", {{"e", one}}}, {"a", "d", {{"g", one}}}, {"b", "d", {{"f", one}}}});
  }
  if (kind == "357B") {
    return from_labels(name, seven,
                       {{"a", "b", {{"c", one}}}, {"a", "c", {{"e", one}}}, {"a", "d", {{"g", one}}}, {"b", "c", {{"f", one}}}});
  }
  if (kind == "357C") {
    return from_labels(name, seven,
                       {{"a", "b", {{"c", one}}},
                        {"a", "c", {{"e", one}}},
                        {"a", "d", {{"g", one}}},
                        {"b", "c", {{"f", one}}},
                        {"b", "d", {{"e", one}}}});
  }
  throw Error(ErrorKind::UnknownEntry, "no seven-dimensional algebra '" + kind + "'");
}

LieAlgebra seeley_12457N(const Rat& xi) {
  return from_labels("seeley_12457N", seven,
                     {{"a", "b", {{"c", one}}},
                      {"a", "c", {{"d", one}}},
                      {"a", "d", {{"g", one}}},
                      {"a", "e", {{"f", one}}},
                      {"a", "f", {{"g", one}}},
                      {"b", "c", {{"e", one}}},
                      {"b", "d", {{"f", one}}},
                      {"b", "e", {{"g", xi}}},
                      {"b", "f", {{"g", one}}},
                      {"c", "d", {{"g", one}}},
                      {"c", "e", {{"g", Rat(-1)}}}});
}

LieAlgebra dim8_dl() {
  const Rat m1(-1);
  return from_labels("dim8_dl", numbered("e", 8),
                     {{"e1", "e2", {{"e5", one}}},
                      {"e1", "e3", {{"e6", one}}},
                      {"e1", "e4", {{"e7", one}}},
                      {"e1", "e5", {{"e8", m1}}},
                      {"e2", "e3", {{"e8", one}}},
                      {"e2", "e4", {{"e6", one}}},
                      {"e2", "e6", {{"e7", m1}}},
                      {"e3", "e4", {{"e5", m1}}},
                      {"e3", "e5", {{"e7", m1}}},
                      {"e4", "e6", {{"e8", m1}}}});
}

LieAlgebra wedge2(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::PreconditionViolated, "wedge2 needs n >= 2");
  auto labels = numbered("e", n);
  std::vector<BracketTerm> terms;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      labels.push_back("e" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      terms.push_back({i, j, {{labels.size() - 1, one}}});
    }
  }
  return LieAlgebra(labels, terms, "wedge2_" + std::to_string(n));
}

}  // namespace liecp::algebras
