#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liecp/exactla/rational.hpp"

namespace liecp {

/// Exponent vector; length equals the variable count of the owning Poly.
using Monomial = std::vector<std::uint32_t>;

/// Linear form: variable index -> coefficient, no constant term.
using LinForm = std::map<std::size_t, Rat>;

/// Sparse multivariate polynomial over Q. Terms are kept in lexicographic
/// monomial order (x0 > x1 > ...); the leading term is the last map entry.
/// Zero coefficients are never stored.
class Poly {
 public:
  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rat& c);
  static Poly variable(std::size_t nvars, std::size_t index);
  static Poly from_linear(std::size_t nvars, const LinForm& form);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Monomial, Rat>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::uint32_t total_degree() const;

  /// Adds c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rat& c);

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator-() const;
  Poly operator*(const Poly& other) const;
  Poly scaled(const Rat& c) const;
  bool operator==(const Poly& other) const = default;

  Rat evaluate(const QVector& point) const;
  std::string to_string() const;

 private:
  std::size_t nvars_;
  std::map<Monomial, Rat> terms_;
};

/// Quotient of an exact division; throws Error{NotExact} when den does not
/// divide num, Error{DimensionMismatch} on a zero divisor.
Poly exact_divide(const Poly& num, const Poly& den);

}  // namespace liecp
