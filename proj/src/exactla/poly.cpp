#include "liecp/exactla/poly.hpp"

#include <sstream>

#include "liecp/error.hpp"

namespace liecp {

namespace {

void check_vars(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorKind::DimensionMismatch, "polynomials over " + std::to_string(a.nvars()) + " and " +
                                                  std::to_string(b.nvars()) + " variables");
  }
}

Monomial mul_monomial(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
  return m;
}

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > m[i]) return false;
  }
  return true;
}

Monomial div_monomial(const Monomial& m, const Monomial& d) {
  Monomial q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) q[i] = m[i] - d[i];
  return q;
}

}  // namespace

Poly Poly::constant(std::size_t nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw Error(ErrorKind::IndexOutOfRange, "variable index " + std::to_string(index));
  Monomial m(nvars, 0);
  m[index] = 1;
  Poly p(nvars);
  p.add_term(m, Rat(1));
  return p;
}

Poly Poly::from_linear(std::size_t nvars, const LinForm& form) {
  Poly p(nvars);
  for (const auto& [var, coeff] : form) {
    if (var >= nvars) throw Error(ErrorKind::IndexOutOfRange, "variable index " + std::to_string(var));
    Monomial m(nvars, 0);
    m[var] = 1;
    p.add_term(m, coeff);
  }
  return p;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t best = 0;
  for (const auto& [m, c] : terms_) {
    std::uint32_t d = 0;
    for (auto e : m) d += e;
    if (d > best) best = d;
  }
  return best;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& other) const {
  check_vars(*this, other);
  Poly r = *this;
  for (const auto& [m, c] : other.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& other) const {
  check_vars(*this, other);
  Poly r = *this;
  for (const auto& [m, c] : other.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
  return r;
}

Poly Poly::operator*(const Poly& other) const {
  check_vars(*this, other);
  Poly r(nvars_);
  if (is_zero() || other.is_zero()) return r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) r.add_term(mul_monomial(ma, mb), ca * cb);
  }
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r(nvars_);
  if (sgn(c) == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, v * c);
  return r;
}

Rat Poly::evaluate(const QVector& point) const {
  if (point.size() != nvars_) {
    throw Error(ErrorKind::DimensionMismatch, "point has length " + std::to_string(point.size()) +
                                                  ", polynomial has " + std::to_string(nvars_) + " variables");
  }
  Rat total(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::uint32_t e = 0; e < m[i]; ++e) t *= point[i];
    }
    total += t;
  }
  return total;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat mag = abs(c);
    out << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit_monomial = true;
    for (auto e : m) unit_monomial = unit_monomial && e == 0;
    if (mag != 1 || unit_monomial) out << liecp::to_string(mag);
    bool need_sep = mag != 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      out << (need_sep ? "*" : "") << "t" << (i + 1);
      if (m[i] > 1) out << "^" << m[i];
      need_sep = true;
    }
    first = false;
  }
  return out.str();
}

Poly exact_divide(const Poly& num, const Poly& den) {
  check_vars(num, den);
  if (den.is_zero()) throw Error(ErrorKind::DimensionMismatch, "division by the zero polynomial");
  Poly quotient(num.nvars());
  if (num.is_zero()) return quotient;

  const auto& [lead_m, lead_c] = *den.terms().rbegin();
  if (den.term_count() == 1) {
    for (const auto& [m, c] : num.terms()) {
      if (!divides(lead_m, m)) throw Error(ErrorKind::NotExact, "monomial does not divide term");
      quotient.add_term(div_monomial(m, lead_m), c / lead_c);
    }
    return quotient;
  }

  Poly rem = num;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms().rbegin();
    if (!divides(lead_m, rm)) throw Error(ErrorKind::NotExact, "leading term not divisible");
    const Monomial qm = div_monomial(rm, lead_m);
    const Rat qc = rc / lead_c;
    quotient.add_term(qm, qc);
    for (const auto& [dm, dc] : den.terms()) rem.add_term(mul_monomial(qm, dm), -(qc * dc));
  }
  return quotient;
}

}  // namespace liecp
