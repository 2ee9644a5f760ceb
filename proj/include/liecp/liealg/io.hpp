#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "liecp/liealg/assoc.hpp"
#include "liecp/liealg/lie_algebra.hpp"

namespace liecp {

/// JSON algebra files:
///   {"name": s, "dim": n, "basis": [labels], "brackets": [{"lhs": a, "rhs": b, "terms": {label: "p/q"}}]}
/// Errors are Error{ParseError} with the offending path, or the validation
/// errors of the LieAlgebra constructor (DuplicatePair, JacobiViolation, ...).
LieAlgebra parse_algebra(std::string_view text);
std::string serialize_algebra(const LieAlgebra& L);

/// Same layout with "product" entries (ordered pairs, no antisymmetry).
AssocAlgebra parse_assoc(std::string_view text);
LSAAlgebra parse_lsa(std::string_view text);
std::string serialize_bilinear(const BilinearAlgebra& A);

/// Module files: {"name": s, "dim": m, "basis": [labels],
///   "action": [{"element": g-label, "vector": label, "terms": {label: "p/q"}}]}
/// meaning element . vector = terms. Omitted entries are zero.
struct ModuleData {
  std::string name;
  std::vector<std::string> labels;
  std::vector<QMatrix> action;  // one matrix per basis element of g
};
ModuleData parse_module(std::string_view text, const LieAlgebra& g);
std::string serialize_module(const ModuleData& m, const LieAlgebra& g);

std::string read_text_file(const std::string& path);

}  // namespace liecp
