#include "mvq/quasivariety.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mvq/criticality.hpp"
#include "mvq/errors.hpp"
#include "mvq/hom.hpp"
#include "mvq/table.hpp"

namespace mvq {

namespace {

void require_nonempty_members(const std::vector<Signature>& family, const char* side) {
  for (const Signature& s : family) {
    if (s.empty()) {
      throw std::invalid_argument(std::string("the ") + side +
                                  " family must not contain the empty signature");
    }
  }
}

/// Right generator j is admissible for left generator i when every factor of
/// j is divisible by some factor of i (condition 2 of the inclusion test).
bool admissible(const Signature& i, const Signature& j) {
  for (int m : j.moduli()) {
    bool divisible = false;
    for (int n : i.moduli()) {
      if (m % n == 0) {
        divisible = true;
        break;
      }
    }
    if (!divisible) return false;
  }
  return true;
}

}  // namespace

InclusionReport qv_leq_explain(const std::vector<Signature>& left,
                               const std::vector<Signature>& right) {
  require_nonempty_members(left, "left");
  require_nonempty_members(right, "right");

  InclusionReport report;
  report.leq = true;
  for (const Signature& gen : left) {
    GeneratorInclusion row;
    row.generator = gen;

    for (const Signature& j : right) {
      if (admissible(gen, j)) row.witness_h.push_back(j);
    }

    if (row.witness_h.empty()) {
      // No right generator qualifies; point at the first offending factor.
      row.ok = false;
      row.failed_condition = 2;
      row.failing_factor = 0;
      if (!right.empty()) {
        for (int m : right.front().moduli()) {
          bool divisible = false;
          for (int n : gen.moduli()) {
            if (m % n == 0) divisible = true;
          }
          if (!divisible) {
            row.failing_factor = m;
            break;
          }
        }
      }
    } else {
      row.ok = true;
      for (int n : gen.moduli()) {
        bool covered = false;
        for (const Signature& j : row.witness_h) {
          for (int m : j.moduli()) {
            if (m % n == 0) covered = true;
          }
        }
        if (!covered) {
          row.ok = false;
          row.failed_condition = 1;
          row.failing_factor = n;
          row.witness_h.clear();
          break;
        }
      }
    }

    report.leq = report.leq && row.ok;
    report.rows.push_back(std::move(row));
  }
  return report;
}

bool qv_leq(const std::vector<Signature>& left, const std::vector<Signature>& right) {
  require_nonempty_members(left, "left");
  require_nonempty_members(right, "right");

  for (const Signature& gen : left) {
    for (int n : gen.moduli()) {
      bool covered = false;
      for (const Signature& j : right) {
        if (!admissible(gen, j)) continue;
        for (int m : j.moduli()) {
          if (m % n == 0) {
            covered = true;
            break;
          }
        }
        if (covered) break;
      }
      if (!covered) return false;
    }
  }
  return true;
}

bool qv_equal(const std::vector<Signature>& left, const std::vector<Signature>& right) {
  return qv_leq(left, right) && qv_leq(right, left);
}

bool operator<(const QuasivarietySpec& a, const QuasivarietySpec& b) {
  return std::lexicographical_compare(a.generators_.begin(), a.generators_.end(),
                                      b.generators_.begin(), b.generators_.end());
}

QuasivarietySpec canonicalize(std::vector<Signature> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  for (const Signature& s : family) {
    if (!is_critical(s)) {
      throw std::invalid_argument("generator " + (s.empty() ? std::string("()") : s.str()) +
                                  " is not a critical signature");
    }
  }

  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t i = 0; i < family.size(); ++i) {
      std::vector<Signature> rest;
      rest.reserve(family.size() - 1);
      for (std::size_t j = 0; j < family.size(); ++j) {
        if (j != i) rest.push_back(family[j]);
      }
      if (qv_leq({family[i]}, rest)) {
        family.erase(family.begin() + static_cast<std::ptrdiff_t>(i));
        removed = true;
        break;
      }
    }
  }
  return QuasivarietySpec(std::move(family));
}

bool variety_membership(const Signature& s, const Signature& variety) {
  if (variety.empty()) throw std::invalid_argument("variety signature must be nonempty");
  for (int n : s.moduli()) {
    bool divides_some = false;
    for (int m : variety.moduli()) {
      if (m % n == 0) {
        divides_some = true;
        break;
      }
    }
    if (!divides_some) return false;
  }
  return true;
}

bool isp_member_oracle(const Signature& algebra, const std::vector<Signature>& family,
                       const Budget& budget) {
  const ProductAlgebra a(algebra.moduli());
  const TableAlgebra at = make_table(a, budget);
  if (at.size == 1) return true;  // the trivial algebra is the empty product

  std::vector<std::vector<std::uint32_t>> separating_maps;
  for (const Signature& member : family) {
    const TableAlgebra bt = make_table(ProductAlgebra(member.moduli()), budget);
    for (const Homomorphism& h : enumerate_homomorphisms(at, bt)) {
      separating_maps.push_back(h.map);
    }
  }

  for (std::uint32_t x = 0; x < at.size; ++x) {
    for (std::uint32_t y = x + 1; y < at.size; ++y) {
      bool separated = false;
      for (const auto& map : separating_maps) {
        if (map[x] != map[y]) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
    }
  }
  return true;
}

namespace {

/// Precomputed divisibility data for closures inside a fixed critical
/// universe: admissible\[c\] has bit j set when criticals[j] qualifies for
/// condition (2) against criticals[c]; cover\[c\]\[j\] has factor-bit f set
/// when factor f of criticals[c] divides some factor of criticals[j].
struct ClosureTables {
  std::vector<std::uint32_t> admissible;
  std::vector<std::vector<std::uint32_t>> cover;
  std::vector<std::uint32_t> full_factor_mask;

  explicit ClosureTables(const std::vector<Signature>& criticals) {
    const std::size_t k = criticals.size();
    admissible.assign(k, 0);
    cover.assign(k, std::vector<std::uint32_t>(k, 0));
    full_factor_mask.assign(k, 0);
    for (std::size_t c = 0; c < k; ++c) {
      const auto& factors = criticals[c].moduli();
      full_factor_mask[c] = (factors.size() >= 32)
                                ? ~std::uint32_t{0}
                                : ((std::uint32_t{1} << factors.size()) - 1);
      for (std::size_t j = 0; j < k; ++j) {
        bool adm = true;
        for (int m : criticals[j].moduli()) {
          bool divisible = false;
          for (int n : factors) {
            if (m % n == 0) divisible = true;
          }
          if (!divisible) {
            adm = false;
            break;
          }
        }
        if (!adm) continue;
        admissible[c] |= std::uint32_t{1} << j;
        for (std::size_t f = 0; f < factors.size(); ++f) {
          for (int m : criticals[j].moduli()) {
            if (m % factors[f] == 0) cover[c][j] |= std::uint32_t{1} << f;
          }
        }
      }
    }
  }

  std::uint32_t closure(std::uint32_t subset) const {
    std::uint32_t closed = 0;
    for (std::size_t c = 0; c < admissible.size(); ++c) {
      std::uint32_t reached = 0;
      std::uint32_t h = subset & admissible[c];
      while (h != 0) {
        const int j = __builtin_ctz(h);
        h &= h - 1;
        reached |= cover[c][static_cast<std::size_t>(j)];
        if (reached == full_factor_mask[c]) break;
      }
      if (reached == full_factor_mask[c]) closed |= std::uint32_t{1} << c;
    }
    return closed;
  }
};

}  // namespace

QvLattice enumerate_subquasivarieties(const Signature& variety, const Budget& budget) {
  QvLattice lattice;
  lattice.ambient = variety;
  lattice.criticals = enumerate_criticals(variety);

  const std::size_t k = lattice.criticals.size();
  const std::size_t cap = std::min<std::size_t>(budget.criticals_cap, 25);
  if (k > cap) {
    throw budget_exceeded("critical generator count exceeds the lattice budget", k, cap);
  }

  const ClosureTables tables(lattice.criticals);

  std::vector<std::uint32_t> masks;
  {
    std::map<std::uint32_t, bool> seen;
    for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << k); ++subset) {
      seen.emplace(tables.closure(subset), true);
    }
    for (const auto& [mask, unused] : seen) masks.push_back(mask);
  }

  // Canonical node order: by generator list.
  std::vector<std::pair<QuasivarietySpec, std::uint32_t>> entries;
  for (std::uint32_t mask : masks) {
    std::vector<Signature> members;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::uint32_t{1} << i)) members.push_back(lattice.criticals[i]);
    }
    entries.emplace_back(canonicalize(std::move(members)), mask);
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  for (auto& [spec, mask] : entries) {
    lattice.nodes.push_back(spec);
    lattice.closure_masks.push_back(mask);
  }

  const int n = static_cast<int>(lattice.nodes.size());
  for (int i = 0; i < n; ++i) {
    if (lattice.closure_masks[static_cast<std::size_t>(i)] == 0) lattice.bottom = i;
    if (lattice.closure_masks[static_cast<std::size_t>(i)] ==
        ((k == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << k) - 1))) {
      lattice.top = i;
    }
  }

  // Transitive reduction of the inclusion order.
  for (int lower = 0; lower < n; ++lower) {
    for (int upper = 0; upper < n; ++upper) {
      if (lower == upper || !lattice.leq(lower, upper)) continue;
      bool direct = true;
      for (int mid = 0; mid < n; ++mid) {
        if (mid == lower || mid == upper) continue;
        if (lattice.leq(lower, mid) && lattice.leq(mid, upper)) {
          direct = false;
          break;
        }
      }
      if (direct) lattice.cover_edges.emplace_back(lower, upper);
    }
  }
  std::sort(lattice.cover_edges.begin(), lattice.cover_edges.end());
  return lattice;
}

}  // namespace mvq
