#pragma once

// Census of associative binary operations on a set of size m.

#include <cstdint>
#include <functional>
#include <vector>

#include "cubal/semigroup.hpp"

namespace cubal {

/// Default enumeration budget.
inline constexpr int kDefaultMaxEnumeration = 5;
/// Nothing beyond this is ever enumerated, whatever the override.
inline constexpr int kHardMaxEnumeration = 6;
/// Largest m for which a full orbit pass is run.
inline constexpr int kMaxOrbitCensus = 4;

struct EnumOptions {
  /// Worker threads; the search tree is split on a prefix of cells.
  int jobs = 1;
  /// Upper bound on m; clamped to kHardMaxEnumeration.
  int max_m = kDefaultMaxEnumeration;
};

/// Throws CapacityError if m is outside 1..min(options.max_m, kHardMaxEnumeration).
void check_enumeration_budget(int m, const EnumOptions& options = {});

/// Calls `visit` once for every associative table, in canonical order.
/// The order and contents do not depend on options.jobs.
void enumerate_operations(int m, const std::function<void(const Operation&)>& visit,
                          const EnumOptions& options = {});

std::vector<Operation> all_operations(int m, const EnumOptions& options = {});

/// tau(m), without materialising tables.
std::uint64_t count_operations(int m, const EnumOptions& options = {});

/// Lexicographic minimum of orbit(a).
Operation canonical_representative(const Operation& a);

struct OrbitSummary {
  Operation representative;
  std::uint64_t size = 0;
};

struct CensusResult {
  int m = 0;
  std::uint64_t total = 0;
  /// Sorted by representative.
  std::vector<OrbitSummary> orbits;

  std::size_t orbit_count() const { return orbits.size(); }
};

/// Requires m <= kMaxOrbitCensus.
CensusResult orbit_census(int m, const EnumOptions& options = {});

}  // namespace cubal
