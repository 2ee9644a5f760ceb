#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liecp/exactla/rank.hpp"
#include "liecp/liealg/lie_algebra.hpp"

namespace liecp::catalog {

using Params = std::map<std::string, std::string>;

struct ParamSpec {
  std::string name;
  bool integer = false;  // otherwise rational
  std::optional<std::string> default_value;
};

struct Info {
  std::string name;
  std::string summary;
  std::vector<ParamSpec> params;
};

const std::vector<Info>& list();
/// Throws Error{UnknownEntry}.
const Info& info(const std::string& name);
/// Fills defaults and normalizes values (integers in decimal, rationals in
/// lowest terms). Throws Error{MissingParameter}, Error{UnknownEntry} for an
/// unknown parameter name and Error{ParseError} for a malformed value.
Params resolve(const std::string& name, const Params& given);
LieAlgebra get(const std::string& name, const Params& given = {});

struct CPExpectation {
  std::vector<std::string> span;  // basis combinations
  bool ideal = false;
};

/// One record of the shipped expectations file.
struct Expectation {
  std::string name;
  Params params;
  std::size_t dim = 0;
  std::size_t index = 0;
  std::size_t center_dim = 0;
  bool square_integrable = false;
  bool frobenius = false;
  std::optional<CPExpectation> cp;
  std::vector<std::string> no_cp;       // certificate kinds that must fire, sorted
  std::vector<std::string> fsr_within;  // F̂ and the certificate pair lie in this span
  bool no_witness_found = false;        // search finds no CP and no certificate fires
  std::map<std::string, std::string> origin;  // field -> "literature" | "derived"
};

const std::string& expectations_text();
const std::vector<Expectation>& expectations();
/// Record for a name and resolved parameters, if shipped.
std::optional<Expectation> find_expectation(const std::string& name, const Params& resolved);

struct Check {
  std::string what;
  std::string expected;
  std::string actual;
  bool ok = false;
  std::string origin;  // empty for structural checks
};

struct VerifyReport {
  std::string name;
  Params params;
  LieAlgebra algebra;
  bool has_expectation = false;
  bool certified = false;
  std::vector<Check> checks;

  bool ok() const;
};

/// Recomputes every recorded invariant and the CP witness or no-CP evidence.
/// Without a record only structural checks are run.
VerifyReport verify(const std::string& name, const Params& given, const RankPolicy& policy);

}  // namespace liecp::catalog
