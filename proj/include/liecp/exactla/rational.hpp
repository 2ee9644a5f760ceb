#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace liecp {

// GMP rationals are kept canonical by every arithmetic operation: reduced,
// positive denominator, zero as 0/1.
using Integer = mpz_class;
using Rat = mpq_class;
using QVector = std::vector<Rat>;

/// Strict parse of "p" or "p/q" (optional leading '-', q > 0). The result is
/// canonicalized. Throws Error{ParseError}.
Rat parse_rational(std::string_view text);

/// Canonical "p" or "p/q".
std::string to_string(const Rat& value);

QVector zero_vector(std::size_t n);
QVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const QVector& v);

QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scale(const Rat& s, const QVector& v);
/// a += s * b
void axpy(QVector& a, const Rat& s, const QVector& b);
Rat dot(const QVector& a, const QVector& b);

}  // namespace liecp
