#ifndef MVQ_BUDGET_HPP
#define MVQ_BUDGET_HPP

#include <cstddef>
#include <cstdint>

namespace mvq {

/// Search budgets for the enumeration-heavy operations. Closed-form decision
/// procedures never consult these; only brute-force searches do.
struct Budget {
  /// Largest carrier for which operation tables are materialised
  /// (subuniverse lattices, homomorphism search, the criticality oracle).
  std::uint64_t carrier_cap = 64;

  /// Cap on |A|^{number of variables} in exhaustive quasiequation checks.
  std::uint64_t assignment_cap = 10'000'000;

  /// Cap on the number of critical generators in lattice enumeration.
  std::size_t criticals_cap = 20;

  /// Defaults overridden by MVQ_BUDGET_CARRIER / MVQ_BUDGET_ASSIGN.
  static Budget from_env();
};

}  // namespace mvq

#endif  // MVQ_BUDGET_HPP
