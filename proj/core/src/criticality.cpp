#include "mvq/criticality.hpp"

#include <algorithm>
#include <stdexcept>

#include "mvq/hom.hpp"
#include "mvq/table.hpp"

namespace mvq {

CriticalityBreakdown criticality_breakdown(const Signature& s) {
  if (s.empty()) {
    throw std::invalid_argument(
        "criticality criterion does not apply to the trivial (empty) signature");
  }
  const auto& m = s.moduli();

  CriticalityBreakdown b;
  b.distinct = std::adjacent_find(m.begin(), m.end()) == m.end();  // sorted, so this suffices
  for (std::size_t j = 0; j < m.size(); ++j) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != j && m[j] % m[i] == 0) {
        b.divisible_entries.push_back(m[j]);
        break;
      }
    }
  }
  b.critical = b.distinct && b.divisible_entries.size() <= 1;
  return b;
}

bool check_critical_signature(const Signature& s) { return criticality_breakdown(s).critical; }

bool is_critical(const Signature& s) { return !s.empty() && check_critical_signature(s); }

bool is_critical(const ProductAlgebra& algebra) { return is_critical(algebra.signature()); }

bool critical_oracle(const ProductAlgebra& algebra, const Budget& budget) {
  const TableAlgebra t = make_table(algebra, budget);

  std::vector<std::vector<std::uint32_t>> non_surjective;
  for (const Homomorphism& h : enumerate_homomorphisms(t, t)) {
    if (!is_surjective(t, h.map)) non_surjective.push_back(h.map);
  }

  // A lies in the quasivariety of its proper subalgebras iff every pair of
  // distinct points is separated by some map into a proper subalgebra.
  for (std::uint32_t a = 0; a < t.size; ++a) {
    for (std::uint32_t b = a + 1; b < t.size; ++b) {
      bool separated = false;
      for (const auto& map : non_surjective) {
        if (map[a] != map[b]) {
          separated = true;
          break;
        }
      }
      if (!separated) return true;  // witness pair: A is critical
    }
  }
  return false;
}

std::vector<Signature> enumerate_criticals(const Signature& variety) {
  if (variety.empty()) throw std::invalid_argument("variety signature must be nonempty");
  const std::vector<int> divisors = chain_divisors(variety);

  std::vector<std::vector<int>> antichains;
  std::vector<int> chosen;
  // Divisibility antichains of the divisor set; `divisors` is strictly
  // ascending, so only smaller-divides-larger can occur.
  auto recurse = [&](auto&& self, std::size_t at) -> void {
    if (at == divisors.size()) {
      if (!chosen.empty()) antichains.push_back(chosen);
      return;
    }
    self(self, at + 1);
    for (int x : chosen) {
      if (divisors[at] % x == 0) return;
    }
    chosen.push_back(divisors[at]);
    self(self, at + 1);
    chosen.pop_back();
  };
  recurse(recurse, 0);

  std::vector<Signature> out;
  for (const auto& antichain : antichains) {
    out.emplace_back(antichain);
    // Extensions by one element that is a multiple of some member and
    // divides none: exactly the signatures with a unique divisible entry.
    for (int m : divisors) {
      if (std::find(antichain.begin(), antichain.end(), m) != antichain.end()) continue;
      bool multiple_of_some = false;
      bool divides_some = false;
      for (int x : antichain) {
        if (m % x == 0) multiple_of_some = true;
        if (x % m == 0) divides_some = true;
      }
      if (multiple_of_some && !divides_some) {
        std::vector<int> extended = antichain;
        extended.push_back(m);
        out.emplace_back(std::move(extended));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mvq
