#pragma once

#include <cstdint>
#include <random>

#include "liecp/exactla/rational.hpp"

namespace liecp {

/// Seeded generator with platform-independent output: mt19937_64 is fully
/// specified by the standard and the bounded draw below avoids the
/// implementation-defined std::uniform_int_distribution.
class Rng {
 public:
  /// Streams let independent consumers share one user seed without
  /// replaying each other's draws.
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Uniform point of [-bound, bound]^n.
  QVector integer_point(std::size_t n, std::int64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Purpose tags for Rng streams.
namespace stream {
inline constexpr std::uint64_t kRank = 1;
inline constexpr std::uint64_t kRegular = 2;
inline constexpr std::uint64_t kSemiradical = 3;
inline constexpr std::uint64_t kWitness = 4;
inline constexpr std::uint64_t kForm = 5;
inline constexpr std::uint64_t kStabilizer = 6;
}  // namespace stream

}  // namespace liecp
