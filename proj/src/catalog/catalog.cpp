#include "liecp/catalog/catalog.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

#include "liecp/catalog/builders.hpp"
#include "liecp/cp/cp.hpp"
#include "liecp/index/index.hpp"
#include "liecp/liealg/structure.hpp"

namespace liecp::catalog {

namespace detail {
extern const char* const kExpectationsJson;
}

namespace {

using Builder = std::function<LieAlgebra(const Params&)>;

struct Entry {
  Info info;
  Builder build;
};

std::size_t count_param(const Params& p, const char* key) { return std::stoul(p.at(key)); }
Rat rat_param(const Params& p, const char* key) { return parse_rational(p.at(key)); }

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = [] {
    std::vector<Entry> v;
    auto fixed = [&](std::string name, std::string summary, LieAlgebra (*fn)()) {
      v.push_back({{name, std::move(summary), {}}, [fn, name](const Params&) { return fn().renamed(name); }});
    };
    const ParamSpec n_required{"n", true, std::nullopt};
    v.push_back({{"abelian", "abelian algebra on x1..xn", {n_required}},
                 [](const Params& p) { return algebras::abelian(count_param(p, "n")).renamed("abelian"); }});
    v.push_back({{"heisenberg", "Heisenberg algebra of dimension 2m+1", {{"m", true, std::nullopt}}},
                 [](const Params& p) { return algebras::heisenberg(count_param(p, "m")).renamed("heisenberg"); }});
    fixed("twodim_nonabelian", "[x,y] = y", algebras::twodim_nonabelian);
    v.push_back({{"kE_plus_V", "kE + V with E the identity on V = k^n", {n_required}},
                 [](const Params& p) { return algebras::kE_plus_V(count_param(p, "n")).renamed("kE_plus_V"); }});
    fixed("diamond", "diamond algebra t, x, y, z", algebras::diamond);
    fixed("g5", "5-dimensional nilpotent, [x1,x2]=x3, [x1,x3]=x4, [x2,x3]=x5", algebras::g5);
    fixed("g6", "6-dimensional 2-step nilpotent", algebras::g6);
    fixed("sl2_w2", "sl2 with the adjoint module W2", algebras::sl2_w2);
    fixed("h5", "5-dimensional nilpotent degenerating to g5", algebras::h5);
    fixed("j5", "5-dimensional nilpotent, [x1,x2]=x3, [x1,x3]=x4", algebras::j5);
    for (int item = 4; item <= 11; ++item) {
      const std::string name = "morozov6_" + std::to_string(item);
      const std::string summary = "6-dimensional nilpotent, Morozov item " + std::to_string(item);
      if (item == 5 || item == 10) {
        v.push_back({{name, summary, {{"gamma", false, "1"}}},
                     [item, name](const Params& p) {
                       return algebras::morozov6(item, rat_param(p, "gamma")).renamed(name);
                     }});
      } else {
        v.push_back({{name, summary, {}}, [item, name](const Params&) { return algebras::morozov6(item).renamed(name); }});
      }
    }
    for (const char* kind : {"37B", "37C", "37D", "357A", "357B", "357C"}) {
      const std::string name = std::string("seeley_") + kind;
      v.push_back({{name, std::string("7-dimensional nilpotent, Seeley ") + kind, {}},
                   [kind, name](const Params&) { return algebras::seeley(kind).renamed(name); }});
    }
    v.push_back({{"seeley_12457N", "7-dimensional nilpotent family, Seeley 12457N", {{"xi", false, "2"}}},
                 [](const Params& p) { return algebras::seeley_12457N(rat_param(p, "xi")).renamed("seeley_12457N"); }});
    fixed("dim8_dl", "8-dimensional characteristically nilpotent", algebras::dim8_dl);
    v.push_back({{"wedge2", "V + wedge^2 V with [e_i, e_j] = e_i_j", {n_required}},
                 [](const Params& p) { return algebras::wedge2(count_param(p, "n")).renamed("wedge2"); }});
    return v;
  }();
  return all;
}

const Entry& entry(const std::string& name) {
  for (const auto& e : entries()) {
    if (e.info.name == name) return e;
  }
  throw Error(ErrorKind::UnknownEntry, "no catalog entry named '" + name + "'");
}

std::string normalize(const ParamSpec& spec, const std::string& value) {
  if (spec.integer) {
    if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        value.size() > 6) {
      throw Error(ErrorKind::ParseError, "parameter " + spec.name + " needs a small nonnegative integer, got '" +
                                             value + "'");
    }
    return std::to_string(std::stoul(value));
  }
  return to_string(parse_rational(value));
}

Expectation parse_record(const nlohmann::json& j) {
  Expectation e;
  e.name = j.at("name").get<std::string>();
  e.params = j.at("params").get<Params>();
  e.dim = j.at("dim").get<std::size_t>();
  e.index = j.at("index").get<std::size_t>();
  e.center_dim = j.at("center_dim").get<std::size_t>();
  e.square_integrable = j.at("square_integrable").get<bool>();
  e.frobenius = j.at("frobenius").get<bool>();
  if (!j.at("cp").is_null()) {
    e.cp = CPExpectation{j.at("cp").at("span").get<std::vector<std::string>>(), j.at("cp").at("ideal").get<bool>()};
  }
  e.no_cp = j.at("no_cp").get<std::vector<std::string>>();
  std::sort(e.no_cp.begin(), e.no_cp.end());
  if (j.contains("fsr_within")) e.fsr_within = j.at("fsr_within").get<std::vector<std::string>>();
  e.no_witness_found = j.at("no_witness_found").get<bool>();
  e.origin = j.at("origin").get<std::map<std::string, std::string>>();
  return e;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
  return out;
}

Subspace span_of(const LieAlgebra& L, const std::vector<std::string>& items) {
  std::vector<QVector> vs;
  for (const auto& s : items) vs.push_back(parse_combination(s, L.labels()));
  return Subspace::span(L.dim(), vs);
}

}  // namespace

const std::vector<Info>& list() {
  static const std::vector<Info> infos = [] {
    std::vector<Info> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const Info& info(const std::string& name) { return entry(name).info; }

Params resolve(const std::string& name, const Params& given) {
  const Info& inf = info(name);
  for (const auto& [key, value] : given) {
    const bool known = std::any_of(inf.params.begin(), inf.params.end(), [&](const auto& s) { return s.name == key; });
    if (!known) throw Error(ErrorKind::UnknownEntry, "catalog entry " + name + " has no parameter '" + key + "'");
  }
  Params out;
  for (const auto& spec : inf.params) {
    auto it = given.find(spec.name);
    if (it != given.end()) {
      out[spec.name] = normalize(spec, it->second);
    } else if (spec.default_value) {
      out[spec.name] = *spec.default_value;
    } else {
      throw Error(ErrorKind::MissingParameter, "catalog entry " + name + " needs --param " + spec.name + "=...");
    }
  }
  return out;
}

LieAlgebra get(const std::string& name, const Params& given) { return entry(name).build(resolve(name, given)); }

const std::string& expectations_text() {
  static const std::string text = detail::kExpectationsJson;
  return text;
}

const std::vector<Expectation>& expectations() {
  static const std::vector<Expectation> all = [] {
    std::vector<Expectation> v;
    const auto doc = nlohmann::json::parse(expectations_text());
    for (const auto& j : doc.at("entries")) v.push_back(parse_record(j));
    return v;
  }();
  return all;
}

std::optional<Expectation> find_expectation(const std::string& name, const Params& resolved) {
  for (const auto& e : expectations()) {
    if (e.name == name && e.params == resolved) return e;
  }
  return std::nullopt;
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

VerifyReport verify(const std::string& name, const Params& given, const RankPolicy& policy) {
  VerifyReport rep;
  rep.name = name;
  rep.params = resolve(name, given);
  rep.algebra = entry(name).build(rep.params);
  const LieAlgebra& L = rep.algebra;
  const auto exp = find_expectation(name, rep.params);
  rep.has_expectation = exp.has_value();
  auto origin = [&](const std::string& field) {
    if (!exp) return std::string();
    auto it = exp->origin.find(field);
    return it == exp->origin.end() ? std::string() : it->second;
  };
  auto check = [&](std::string what, std::string expected, std::string actual, const std::string& field = {}) {
    const bool ok = expected == actual;
    rep.checks.push_back({std::move(what), std::move(expected), std::move(actual), ok, origin(field)});
  };

  const IndexReport ir = index(L, policy);
  const std::size_t zdim = center(L).dim();
  rep.certified = ir.certified;
  check("parity", "even", (L.dim() - ir.index) % 2 == 0 ? "even" : "odd");

  std::vector<std::string> fired;
  std::vector<NoCPCertificate> certs;
  if (!L.is_abelian()) {
    certs = no_cp_certificates(L, policy);
    for (const auto& c : certs) fired.push_back(to_string(c.kind));
    std::sort(fired.begin(), fired.end());
    bool sound = true;
    for (const auto& c : certs) sound = sound && verify_certificate(L, c, policy);
    check("certificates_sound", "true", yes_no(sound));
  }

  if (!exp) return rep;

  check("dim", std::to_string(exp->dim), std::to_string(L.dim()), "dim");
  check("index", std::to_string(exp->index), std::to_string(ir.index), "index");
  check("center_dim", std::to_string(exp->center_dim), std::to_string(zdim), "center_dim");
  check("square_integrable", yes_no(exp->square_integrable), yes_no(ir.index == zdim), "square_integrable");
  check("frobenius", yes_no(exp->frobenius), yes_no(ir.index == 0), "frobenius");
  if (!L.is_abelian()) check("certificates", join(exp->no_cp), join(fired), "no_cp");

  if (exp->cp) {
    const Subspace P = span_of(L, exp->cp->span);
    const CPReport cp = is_cp(L, P, policy);
    rep.certified = rep.certified && cp.certified;
    check("cp", "true", yes_no(cp.is_cp), "cp");
    check("cp_ideal", yes_no(exp->cp->ideal), yes_no(cp.is_ideal), "cp");
    const auto f = cp.is_cp ? cp_witness_functional(L, P, policy) : std::nullopt;
    check("cp_witness", "true", yes_no(f && is_witness(L, P, *f)), "cp");
  }
  if (!exp->fsr_within.empty()) {
    const Subspace S = span_of(L, exp->fsr_within);
    const FSRReport fsr = frobenius_semiradical(L, policy);
    check("fsr_within", "true", yes_no(S.contains(fsr.subspace)), "fsr_within");
    bool pair_inside = false;
    for (const auto& c : certs) {
      if (c.kind == CertificateKind::FsrNoncommutative) pair_inside = S.contains(c.u) && S.contains(c.v);
    }
    check("fsr_pair_within", "true", yes_no(pair_inside), "fsr_within");
  }
  if (exp->no_witness_found || !exp->no_cp.empty()) {
    const auto found = search_cp(L, policy);
    check("search_cp", "none", found ? "found" : "none", exp->no_witness_found ? "no_witness_found" : "no_cp");
  }
  return rep;
}

}  // namespace liecp::catalog
