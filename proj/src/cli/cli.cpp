#include "liecp/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "liecp/catalog/catalog.hpp"
#include "liecp/constructions/constructions.hpp"
#include "liecp/cp/cp.hpp"
#include "liecp/index/index.hpp"
#include "liecp/liealg/io.hpp"
#include "liecp/liealg/structure.hpp"
#include "liecp/parabolic/parabolic.hpp"

namespace liecp::cli {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "liecp/1";

struct Outcome {
  json result = json::object();
  bool positive = true;
  bool certified = true;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

Subspace parse_span(const LieAlgebra& L, const std::string& spec) {
  std::vector<QVector> vs;
  for (const auto& item : split(spec, ',')) vs.push_back(parse_combination(item, L.labels()));
  return Subspace::span(L.dim(), vs);
}

json span_json(const Subspace& S, const std::vector<std::string>& labels) {
  json a = json::array();
  for (const auto& v : S.basis_vectors()) a.push_back(format_combination(v, labels));
  return a;
}

json vector_json(const QVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json matrix_json(const QMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.row(i)));
  return a;
}

// Functionals print in dual-basis coordinates: "2*x - y" means 2x* - y*.
std::string functional_text(const Functional& f, const std::vector<std::string>& labels) {
  return format_combination(f.coords(), labels);
}

json cp_report_json(const CPReport& r) {
  json j{{"is_cp", r.is_cp},
         {"is_ideal", r.is_ideal},
         {"abelian_subalgebra", r.abelian_subalgebra},
         {"dim_P", r.dim_P},
         {"index", r.index},
         {"target_dim", r.target_dim},
         {"rank", r.rank},
         {"certified", r.certified},
         {"rechecked", r.rechecked}};
  j["dimension_condition"] = r.dimension_condition ? json(*r.dimension_condition) : json(nullptr);
  j["rank_condition"] = r.rank_condition ? json(*r.rank_condition) : json(nullptr);
  return j;
}

LieAlgebra load_algebra(const std::string& path) { return parse_algebra(read_text_file(path)); }

void print_text(std::ostream& out, const json& j, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      print_text(out, value, name);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      for (std::size_t i = 0; i < value.size(); ++i) print_text(out, value[i], name + "[" + std::to_string(i) + "]");
    } else if (value.is_string()) {
      out << name << ": " << value.get<std::string>() << '\n';
    } else {
      out << name << ": " << value.dump() << '\n';
    }
  }
}

// ---------------------------------------------------------------- commands

Outcome cmd_index(const LieAlgebra& L, const RankPolicy& p) {
  const IndexReport r = index(L, p);
  Outcome o;
  o.result = {{"algebra", L.name()}, {"dim", L.dim()}, {"index", r.index}, {"rank", r.rank}};
  o.certified = r.certified;
  return o;
}

Outcome cmd_center(const LieAlgebra& L) {
  const Subspace Z = center(L);
  Outcome o;
  o.result = {{"algebra", L.name()}, {"center", span_json(Z, L.labels())}, {"center_dim", Z.dim()}};
  return o;
}

Outcome cmd_fsr(const LieAlgebra& L, const RankPolicy& p) {
  const FSRReport r = frobenius_semiradical(L, p);
  Outcome o;
  o.result = {{"algebra", L.name()},
              {"fsr", span_json(r.subspace, L.labels())},
              {"fsr_dim", r.subspace.dim()},
              {"converged", r.converged},
              {"samples", r.samples_used},
              {"commutative", is_abelian(L, r.subspace)},
              {"equals_L", r.subspace.dim() == L.dim()}};
  o.certified = false;
  return o;
}

Outcome cmd_invariant_form(const LieAlgebra& L, const RankPolicy& p) {
  const InvariantForms forms = invariant_symmetric_forms(L);
  const auto w = nondeg_invariant_form(L, p);
  Outcome o;
  o.result = {{"algebra", L.name()}, {"parameters", forms.params}, {"nondegenerate", w.has_value()}};
  if (w) o.result["form"] = matrix_json(w->matrix);
  o.positive = w.has_value();
  o.certified = w.has_value();
  return o;
}

Outcome cmd_cp_check(const LieAlgebra& L, const std::string& span, const RankPolicy& p) {
  const Subspace P = parse_span(L, span);
  const CPReport r = is_cp(L, P, p);
  Outcome o;
  o.result = cp_report_json(r);
  o.result["span"] = span_json(P, L.labels());
  if (r.is_cp) {
    const auto f = cp_witness_functional(L, P, p);
    o.result["witness"] = f ? json(functional_text(*f, L.labels())) : json(nullptr);
  }
  o.positive = r.is_cp;
  o.certified = r.certified;
  return o;
}

Outcome cmd_cp_find(const LieAlgebra& L, const RankPolicy& p) {
  const auto r = search_cp(L, p);
  const IndexReport ir = index(L, p);
  Outcome o;
  o.result = {{"algebra", L.name()}, {"found", r.has_value()}, {"index", ir.index},
              {"target_dim", (L.dim() + ir.index) / 2}};
  if (r) {
    o.result["span"] = span_json(r->P, L.labels());
    o.result["tier"] = r->tier;
    o.result["ideal"] = r->is_ideal;
  }
  o.positive = r.has_value();
  o.certified = ir.certified;
  return o;
}

Outcome cmd_certify(const LieAlgebra& L, const RankPolicy& p) {
  const auto certs = no_cp_certificates(L, p);
  Outcome o;
  json list = json::array();
  bool all_sound = true;
  for (const auto& c : certs) {
    const bool sound = verify_certificate(L, c, p);
    all_sound = all_sound && sound;
    json j{{"kind", to_string(c.kind)}, {"sound", sound}};
    if (c.kind == CertificateKind::FsrNoncommutative) {
      j["fsr"] = span_json(c.fsr, L.labels());
      j["u"] = format_combination(c.u, L.labels());
      j["v"] = format_combination(c.v, L.labels());
      j["bracket"] = format_combination(c.bracket, L.labels());
      json fs = json::array();
      for (const auto& f : c.functionals) fs.push_back(functional_text(f, L.labels()));
      j["functionals"] = fs;
    } else {
      j["form"] = matrix_json(c.form);
    }
    list.push_back(j);
  }
  o.result = {{"algebra", L.name()}, {"certificates", list}, {"has_cp", certs.empty() ? json(nullptr) : json(false)}};
  o.positive = !certs.empty() && all_sound;
  return o;
}

Outcome cmd_chain(const LieAlgebra& L, const std::string& spec, const RankPolicy& p) {
  std::vector<Subspace> chain;
  for (const auto& level : split(spec, ';')) chain.push_back(parse_span(L, level));
  const ChainReport r = verify_index_chain(L, chain, p);
  Outcome o;
  json levels = json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"dim", l.dim}, {"index", l.index}, {"abelian", l.abelian}, {"certified", l.certified}});
    o.certified = o.certified && l.certified;
  }
  o.result = {{"algebra", L.name()}, {"levels", levels}, {"increasing", r.increasing}, {"valid", r.valid}};
  o.result["final_cp"] = r.final_cp ? cp_report_json(*r.final_cp) : json(nullptr);
  o.positive = r.valid;
  return o;
}

Outcome cmd_quotient(const LieAlgebra& L, const std::string& ideal, const std::string& fspec,
                     const std::optional<std::string>& pspec, const RankPolicy& p) {
  const Subspace A = parse_span(L, ideal);
  const Functional f(parse_combination(fspec, L.labels()));
  std::optional<Subspace> P;
  if (pspec) P = parse_span(L, *pspec);
  const QuotientCheckReport r = quotient_cp_check(L, P, A, f, p);
  const Quotient Q = quotient(L, A);
  Outcome o;
  o.result = {{"algebra", L.name()},
              {"dim_quotient", r.dim_quotient},
              {"index_L", r.index_L},
              {"index_quotient", r.index_quotient},
              {"formula_holds", r.formula_holds},
              {"induced", functional_text(r.induced, Q.algebra.labels())}};
  o.result["p_is_witness"] = r.p_is_witness ? json(*r.p_is_witness) : json(nullptr);
  o.result["quotient_cp"] = r.quotient_cp ? cp_report_json(*r.quotient_cp) : json(nullptr);
  o.positive = r.formula_holds && r.p_is_witness.value_or(true) && (!r.quotient_cp || r.quotient_cp->is_cp);
  o.certified = r.certified;
  return o;
}

Outcome cmd_codim1(const LieAlgebra& L, const std::string& spec, const RankPolicy& p) {
  const Codim1Report r = codim1_analysis(L, parse_span(L, spec), p);
  Outcome o;
  o.result = {{"algebra", L.name()},     {"index_L", r.index_L},         {"index_M", r.index_M},
              {"delta", r.delta},        {"dichotomy", r.dichotomy},     {"fsr_in_M", r.fsr_in_M},
              {"fsr_converged", r.fsr_converged}, {"direction", to_string(r.direction)}};
  o.positive = r.dichotomy;
  o.certified = r.certified;
  return o;
}

json params_json(const catalog::Params& params) {
  json j = json::object();
  for (const auto& [k, v] : params) j[k] = v;
  return j;
}

Outcome cmd_catalog_list() {
  Outcome o;
  json entries = json::array();
  for (const auto& info : catalog::list()) {
    json params = json::array();
    for (const auto& s : info.params) {
      params.push_back({{"name", s.name},
                        {"type", s.integer ? "integer" : "rational"},
                        {"default", s.default_value ? json(*s.default_value) : json(nullptr)}});
    }
    entries.push_back({{"name", info.name}, {"summary", info.summary}, {"params", params}});
  }
  o.result = {{"entries", entries}};
  return o;
}

json verify_json(const catalog::VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"check", c.what}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok},
                      {"origin", c.origin}});
  }
  return {{"name", r.name},
          {"params", params_json(r.params)},
          {"has_expectation", r.has_expectation},
          {"certified", r.certified},
          {"ok", r.ok()},
          {"checks", checks}};
}

Outcome cmd_catalog_verify(const std::optional<std::string>& name, const catalog::Params& params,
                           const RankPolicy& p) {
  Outcome o;
  json reports = json::array();
  auto one = [&](const std::string& n, const catalog::Params& ps) {
    const auto r = catalog::verify(n, ps, p);
    o.positive = o.positive && r.ok();
    o.certified = o.certified && r.certified;
    reports.push_back(verify_json(r));
  };
  if (name) {
    one(*name, params);
  } else {
    for (const auto& e : catalog::expectations()) one(e.name, e.params);
  }
  o.result = {{"reports", reports}, {"all_ok", o.positive}};
  return o;
}

Outcome cmd_parabolic(char type, const std::string& comp, bool verify, const RankPolicy& p) {
  const auto parts = parse_composition(comp);
  Outcome o;
  o.result = {{"type", std::string(1, type)}, {"composition", format_composition(parts)}};
  if (type == 'A') {
    const CompositionA c(parts);
    o.result["n"] = c.n();
    o.result["cut"] = c.cut();
    o.result["dim_formula"] = dim_formula_A(c);
    o.result["index_formula"] = index_formula_A(c);
  } else if (type == 'C') {
    const CompositionC c(parts);
    o.result["r"] = c.r();
    o.result["r1"] = c.r1();
    o.result["dim_formula"] = dim_formula_C(c);
    o.result["index_formula"] = index_formula_C(c);
  } else {
    throw Error(ErrorKind::UnsupportedType, std::string("parabolic type '") + type + "' (expected A or C)");
  }
  if (!verify) return o;
  const ParabolicReport r = verify_parabolic(type, parts, p);
  o.result["dim_N"] = r.dim_N;
  o.result["index"] = r.index;
  o.result["cp_span"] = span_json(r.P, r.N.labels());
  o.result["f"] = functional_text(r.f, r.N.labels());
  o.result["cp"] = r.cp;
  o.result["ideal"] = r.ideal;
  o.result["witness"] = r.witness;
  o.result["regular"] = r.regular;
  o.result["failures"] = r.failures;
  o.positive = r.ok();
  o.certified = r.certified;
  return o;
}

json row_json(const Table1Row& r) {
  return {{"dim_N", r.dim_N}, {"index_N", r.index_N}, {"index_B", r.index_B}, {"half", r.half()}, {"m", r.m}};
}

Outcome cmd_table1(char type, std::size_t rank, const RankPolicy& p) {
  const Table1Report r = table1_check(type, rank, p);
  Outcome o;
  o.result = {{"type", std::string(1, type)}, {"rank", rank},        {"expected", row_json(r.expected)},
              {"computed", row_json(r.computed)}, {"sum_ok", r.sum_ok}, {"cp_expected", r.cp_expected},
              {"failures", r.failures}};
  o.result["cp_found"] = r.cp_found ? json(*r.cp_found) : json(nullptr);
  if (r.cp_found) o.result["cp_dim"] = r.cp_dim;
  o.positive = r.ok();
  o.certified = r.certified;
  return o;
}

Outcome equivalence(const EquivalenceReport& r) {
  Outcome o;
  json c = json::object();
  for (const auto& [k, v] : r.conditions) c[k] = v;
  o.result = {{"conditions", c},
              {"consistent", r.consistent},
              {"holds", r.holds()},
              {"built_dim", r.built.dim()},
              {"index", r.index}};
  o.positive = r.holds();
  o.certified = r.certified;
  return o;
}

Outcome cmd_principal(std::size_t n, const RankPolicy& p) {
  const auto r = principal_nilpotent_normalizer(n, p);
  Outcome o;
  o.result = {{"n", n},          {"dim_C", r.dim_C},       {"C_abelian", r.C_abelian}, {"dim_F", r.dim_F},
              {"index_F", r.index_F}, {"cp_ideal", r.cp_ideal}, {"failures", r.failures}};
  o.positive = r.ok();
  o.certified = r.certified;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commutative polarizations and index of finite-dimensional Lie algebras"};
  app.name("liecp");
  app.require_subcommand(1);
  app.fallthrough();

  RankPolicy policy;
  bool json_out = false;
  bool certify = false;
  bool no_certify = false;
  app.add_option("--seed", policy.seed, "seed for every random draw")->capture_default_str();
  app.add_option("--bound", policy.coeff_bound, "sample coordinates from [-B, B]")->capture_default_str();
  app.add_option("--samples", policy.samples, "specializations per generic rank")->capture_default_str();
  app.add_option("--attempts", policy.attempts, "draw cap when searching for a functional")->capture_default_str();
  auto* cflag = app.add_flag("--certify", certify, "always certify ranks symbolically");
  app.add_flag("--no-certify", no_certify, "never certify symbolically")->excludes(cflag);
  app.add_flag("--json", json_out, "emit one JSON object");

  std::string file, span, levels, ideal, fspec, pspec, action_file, comp, type, sub;
  std::optional<std::string> entry_name;
  std::vector<std::string> params;
  std::size_t rank = 0, nval = 0;
  bool verify_flag = false;

  auto file_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("FILE", file, "algebra file")->required();
    return c;
  };
  auto* c_index = file_cmd("index", "index i(L)");
  auto* c_center = file_cmd("center", "center Z(L)");
  auto* c_fsr = file_cmd("fsr", "sampled Frobenius semiradical");
  auto* c_form = file_cmd("invariant-form", "nondegenerate invariant symmetric form");
  auto* c_cpcheck = file_cmd("cp-check", "is the span a commutative polarization");
  c_cpcheck->add_option("--span", span, "comma-separated combinations of basis labels")->required();
  auto* c_cpfind = file_cmd("cp-find", "search coordinate spans for a commutative polarization");
  auto* c_cert = file_cmd("certify-no-cp", "machine-checkable evidence that no CP exists");
  auto* c_chain = file_cmd("chain", "index chain L > L1 > ...");
  c_chain->add_option("--levels", levels, "levels separated by ';', each a comma-separated span")->required();
  auto* c_quot = file_cmd("quotient", "quotient formula i(L/A) = i(L) - dim A");
  c_quot->add_option("--ideal", ideal, "comma-separated span of A")->required();
  c_quot->add_option("--f", fspec, "regular functional, e.g. e7 for e7*")->required();
  c_quot->add_option("--polarization", pspec, "optional CP-ideal P containing A");
  auto* c_codim = file_cmd("codim1", "index of a codimension-one subalgebra");
  c_codim->add_option("--subalgebra", span, "comma-separated span of M")->required();
  auto* c_assoc = file_cmd("frobenius-assoc", "Frobenius test for a unital associative algebra");
  auto* c_lsa = file_cmd("lsa-frobenius", "Frobenius test for a left-symmetric algebra");
  auto* c_semi = file_cmd("semidirect", "CP-ideal conditions for g + V");
  c_semi->add_option("--action", action_file, "module file for g")->required();

  auto* c_cat = app.add_subcommand("catalog", "named algebras");
  c_cat->add_option("ACTION", sub, "list, verify or show")->required()->check(CLI::IsMember({"list", "verify", "show"}));
  c_cat->add_option("NAME", entry_name, "catalog entry");
  c_cat->add_option("--param", params, "family parameter k=v");

  auto* c_para = app.add_subcommand("parabolic", "nilradical of a parabolic subalgebra");
  c_para->add_option("--type", type, "A or C")->required()->check(CLI::IsMember({"A", "C"}));
  c_para->add_option("--composition", comp, "block sizes, e.g. 2,3")->required();
  c_para->add_flag("--verify", verify_flag, "build N, P, f and check them");

  auto* c_t1 = app.add_subcommand("table1", "Borel nilradicals of classical types");
  c_t1->add_option("--type", type, "A, B, C or D")->required()->check(CLI::IsMember({"A", "B", "C", "D"}));
  c_t1->add_option("--rank", rank, "rank r")->required();

  auto* c_pn = app.add_subcommand("principal-nilpotent", "normalizer of C(x) for principal nilpotent x in sl_n");
  c_pn->add_option("--n", nval, "matrix size")->required();

  std::vector<std::string> argv_store{"liecp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPositive;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitError;
  }
  if (certify) policy.certify = Certify::Always;
  if (no_certify) policy.certify = Certify::Never;

  const std::string command = app.get_subcommands().front()->get_name();
  json envelope{{"schema", kSchema},
                {"command", command},
                {"seed", policy.seed},
                {"policy",
                 {{"bound", policy.coeff_bound},
                  {"samples", policy.samples},
                  {"attempts", policy.attempts},
                  {"certify", policy.certify == Certify::Always ? "always"
                              : policy.certify == Certify::Never ? "never"
                                                                 : "auto"}}}};
  try {
    policy.validate();
    Outcome o;
    auto* s = app.get_subcommands().front();
    if (s == c_index) {
      o = cmd_index(load_algebra(file), policy);
    } else if (s == c_center) {
      o = cmd_center(load_algebra(file));
    } else if (s == c_fsr) {
      o = cmd_fsr(load_algebra(file), policy);
    } else if (s == c_form) {
      o = cmd_invariant_form(load_algebra(file), policy);
    } else if (s == c_cpcheck) {
      o = cmd_cp_check(load_algebra(file), span, policy);
    } else if (s == c_cpfind) {
      o = cmd_cp_find(load_algebra(file), policy);
    } else if (s == c_cert) {
      o = cmd_certify(load_algebra(file), policy);
    } else if (s == c_chain) {
      o = cmd_chain(load_algebra(file), levels, policy);
    } else if (s == c_quot) {
      o = cmd_quotient(load_algebra(file), ideal, fspec, pspec.empty() ? std::nullopt : std::optional(pspec), policy);
    } else if (s == c_codim) {
      o = cmd_codim1(load_algebra(file), span, policy);
    } else if (s == c_assoc) {
      o = equivalence(frobenius_associative_report(parse_assoc(read_text_file(file)), policy));
    } else if (s == c_lsa) {
      o = equivalence(lsa_frobenius_report(parse_lsa(read_text_file(file)), policy));
    } else if (s == c_semi) {
      const LieAlgebra g = load_algebra(file);
      const ModuleData m = parse_module(read_text_file(action_file), g);
      o = equivalence(semidirect_cp_report(g, m.action, m.labels.size(), policy));
    } else if (s == c_cat) {
      catalog::Params ps;
      for (const auto& kv : params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::ParseError, "--param needs k=v, got '" + kv + "'");
        ps[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      if (sub == "list") {
        o = cmd_catalog_list();
      } else if (sub == "verify") {
        o = cmd_catalog_verify(entry_name, ps, policy);
      } else {
        if (!entry_name) throw Error(ErrorKind::MissingParameter, "catalog show needs an entry name");
        const LieAlgebra L = catalog::get(*entry_name, ps);
        if (!json_out) {
          out << serialize_algebra(L);
          return kExitPositive;
        }
        o.result = json::parse(serialize_algebra(L));
      }
    } else if (s == c_para) {
      o = cmd_parabolic(type[0], comp, verify_flag, policy);
    } else if (s == c_t1) {
      o = cmd_table1(type[0], rank, policy);
    } else if (s == c_pn) {
      o = cmd_principal(nval, policy);
    }
    envelope["result"] = o.result;
    envelope["status"] = o.positive ? "positive" : "negative";
    envelope["certified"] = o.certified;
    if (json_out) {
      out << envelope.dump(2) << '\n';
    } else {
      print_text(out, o.result);
      out << "status: " << (o.positive ? "positive" : "negative") << (o.certified ? " (certified)" : " (probabilistic)")
          << '\n';
    }
    return o.positive ? kExitPositive : kExitNegative;
  } catch (const Error& e) {
    if (json_out) {
      envelope["status"] = "error";
      envelope["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
      out << envelope.dump(2) << '\n';
    }
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    if (json_out) {
      envelope["status"] = "error";
      envelope["error"] = {{"kind", "Internal"}, {"message", e.what()}};
      out << envelope.dump(2) << '\n';
    }
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace liecp::cli
