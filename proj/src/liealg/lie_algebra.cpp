#include "liecp/liealg/lie_algebra.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace liecp {

QVector to_dense(const SparseVec& v, std::size_t n) {
  QVector d = zero_vector(n);
  for (const auto& [k, c] : v) {
    if (k >= n) throw Error(ErrorKind::IndexOutOfRange, "sparse index " + std::to_string(k));
    d[k] = c;
  }
  return d;
}

SparseVec to_sparse(const QVector& v) {
  SparseVec s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) != 0) s.emplace(k, v[k]);
  }
  return s;
}

namespace {

void accumulate(SparseVec& acc, const Rat& s, const SparseVec& v) {
  for (const auto& [k, c] : v) {
    Rat& slot = acc[k];
    slot += s * c;
    if (sgn(slot) == 0) acc.erase(k);
  }
}

std::string format_sparse(const SparseVec& v, const std::vector<std::string>& labels) {
  QVector d = zero_vector(labels.size());
  for (const auto& [k, c] : v) d[k] = c;
  return format_combination(d, labels);
}

}  // namespace

JacobiViolation::JacobiViolation(std::size_t i, std::size_t j, std::size_t k, SparseVec defect,
                                 const std::string& message)
    : Error(ErrorKind::JacobiViolation, message), i_(i), j_(j), k_(k), defect_(std::move(defect)) {}

LieAlgebra::LieAlgebra(std::vector<std::string> labels, const std::vector<BracketTerm>& brackets,
                       std::string name)
    : name_(std::move(name)), labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error(ErrorKind::ParseError, "empty basis label");
    if (!seen.insert(l).second) throw Error(ErrorKind::DuplicateLabel, "basis label '" + l + "' repeated");
  }
  for (const auto& b : brackets) {
    if (b.lhs >= n || b.rhs >= n) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "bracket pair (" + std::to_string(b.lhs) + ", " + std::to_string(b.rhs) + ") in dimension " +
                      std::to_string(n));
    }
    if (b.lhs >= b.rhs) {
      throw Error(ErrorKind::InvalidPair, "bracket [" + labels_[b.lhs] + ", " + labels_[b.rhs] +
                                              "] must list the earlier basis element first");
    }
    if (table_.count({b.lhs, b.rhs}) != 0) {
      throw Error(ErrorKind::DuplicatePair, "bracket [" + labels_[b.lhs] + ", " + labels_[b.rhs] + "] given twice");
    }
    SparseVec value;
    for (const auto& [k, c] : b.value) {
      if (k >= n) throw Error(ErrorKind::IndexOutOfRange, "bracket term index " + std::to_string(k));
      if (sgn(c) != 0) value.emplace(k, c);
    }
    // Record the pair even when zero so duplicates are still detected.
    table_.emplace(std::make_pair(b.lhs, b.rhs), std::move(value));
  }
  std::erase_if(table_, [](const auto& entry) { return entry.second.empty(); });
  validate_jacobi();
}

LieAlgebra LieAlgebra::from_table(std::vector<std::string> labels, const Table& table, std::string name) {
  std::vector<BracketTerm> terms;
  terms.reserve(table.size());
  for (const auto& [key, value] : table) terms.push_back({key.first, key.second, value});
  return LieAlgebra(std::move(labels), terms, std::move(name));
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
  LieAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

SparseVec LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim()) throw Error(ErrorKind::IndexOutOfRange, "basis bracket index");
  if (i == j) return {};
  if (i < j) {
    auto it = table_.find({i, j});
    return it == table_.end() ? SparseVec{} : it->second;
  }
  auto it = table_.find({j, i});
  if (it == table_.end()) return {};
  SparseVec neg;
  for (const auto& [k, c] : it->second) neg.emplace(k, -c);
  return neg;
}

QVector LieAlgebra::bracket(const QVector& u, const QVector& v) const {
  const std::size_t n = dim();
  if (u.size() != n || v.size() != n) throw Error(ErrorKind::DimensionMismatch, "bracket operand length");
  QVector out = zero_vector(n);
  for (const auto& [key, value] : table_) {
    const auto [i, j] = key;
    const Rat coeff = u[i] * v[j] - u[j] * v[i];
    if (sgn(coeff) == 0) continue;
    for (const auto& [k, c] : value) out[k] += coeff * c;
  }
  return out;
}

QMatrix LieAlgebra::ad(const QVector& u) const {
  const std::size_t n = dim();
  if (u.size() != n) throw Error(ErrorKind::DimensionMismatch, "ad operand length");
  QMatrix m(n, n);
  for (const auto& [key, value] : table_) {
    const auto [i, j] = key;
    // [u, x_j] picks up u_i [x_i, x_j]; [u, x_i] picks up -u_j [x_i, x_j].
    for (const auto& [k, c] : value) {
      if (sgn(u[i]) != 0) m(k, j) += u[i] * c;
      if (sgn(u[j]) != 0) m(k, i) -= u[j] * c;
    }
  }
  return m;
}

bool LieAlgebra::operator==(const LieAlgebra& other) const {
  return labels_ == other.labels_ && table_ == other.table_;
}

void LieAlgebra::validate_jacobi() const {
  const std::size_t n = dim();
  auto bracket_with_basis = [&](const SparseVec& v, std::size_t k) {
    SparseVec out;
    for (const auto& [a, c] : v) accumulate(out, c, basis_bracket(a, k));
    return out;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        SparseVec defect = bracket_with_basis(basis_bracket(i, j), k);
        accumulate(defect, Rat(1), bracket_with_basis(basis_bracket(j, k), i));
        accumulate(defect, Rat(1), bracket_with_basis(basis_bracket(k, i), j));
        if (!defect.empty()) {
          std::ostringstream msg;
          msg << "Jacobi identity fails on (" << labels_[i] << ", " << labels_[j] << ", " << labels_[k]
              << "): defect " << format_sparse(defect, labels_);
          throw JacobiViolation(i, j, k, std::move(defect), msg.str());
        }
      }
    }
  }
}

std::string format_combination(const QVector& v, const std::vector<std::string>& labels) {
  if (v.size() != labels.size()) throw Error(ErrorKind::DimensionMismatch, "combination length");
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const int s = sgn(v[k]);
    if (s == 0) continue;
    if (s < 0) out += "-";
    else if (!out.empty()) out += "+";
    const Rat a = abs(v[k]);
    if (a != 1) out += to_string(a) + "*";
    out += labels[k];
  }
  return out.empty() ? "0" : out;
}

QVector parse_combination(std::string_view text, const std::vector<std::string>& labels) {
  auto find_label = [&](std::string_view name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == name) return i;
    }
    return std::nullopt;
  };
  std::string compact;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') compact += ch;
  }
  if (compact.empty()) throw Error(ErrorKind::ParseError, "empty combination");
  QVector v = zero_vector(labels.size());
  if (compact == "0") return v;

  std::size_t pos = 0;
  while (pos < compact.size()) {
    bool negative = false;
    if (compact[pos] == '+' || compact[pos] == '-') {
      negative = compact[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw Error(ErrorKind::ParseError, "expected + or - in '" + compact + "'");
    }
    std::size_t end = compact.find_first_of("+-", pos);
    if (end == std::string::npos) end = compact.size();
    const std::string_view term = std::string_view(compact).substr(pos, end - pos);
    if (term.empty()) throw Error(ErrorKind::ParseError, "empty term in '" + compact + "'");

    Rat coeff(1);
    std::optional<std::size_t> index = find_label(term);
    if (!index) {
      std::size_t k = 0;
      while (k < term.size() && (std::isdigit(static_cast<unsigned char>(term[k])) || term[k] == '/')) ++k;
      if (k == 0) throw Error(ErrorKind::ParseError, "unknown label '" + std::string(term) + "'");
      coeff = parse_rational(term.substr(0, k));
      std::string_view rest = term.substr(k);
      if (!rest.empty() && rest.front() == '*') rest.remove_prefix(1);
      index = find_label(rest);
      if (!index) throw Error(ErrorKind::ParseError, "unknown label '" + std::string(rest) + "'");
    }
    v[*index] += negative ? Rat(-coeff) : coeff;
    pos = end;
  }
  return v;
}

}  // namespace liecp
