#ifndef MVQ_QUASIVARIETY_HPP
#define MVQ_QUASIVARIETY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "mvq/algebra.hpp"
#include "mvq/budget.hpp"
#include "mvq/signature.hpp"

namespace mvq {

/// Inclusion between quasivarieties generated by finite families of products
/// of chains, decided by divisibility: Q(left) ⊆ Q(right) iff every left
/// generator admits a nonempty H ⊆ right such that (1) each of its factors
/// divides a factor of some member of H and (2) every factor of every member
/// of H is divisible by one of its factors. The empty family is the trivial
/// quasivariety: below everything, above only itself.
bool qv_leq(const std::vector<Signature>& left, const std::vector<Signature>& right);
bool qv_equal(const std::vector<Signature>& left, const std::vector<Signature>& right);

/// Per-generator account of a qv_leq decision, for diagnostics.
struct GeneratorInclusion {
  Signature generator;
  bool ok = false;
  std::vector<Signature> witness_h;  // admissible right generators, when ok
  int failed_condition = 0;          // 1 or 2, when not ok
  int failing_factor = 0;
};

struct InclusionReport {
  bool leq = false;
  std::vector<GeneratorInclusion> rows;
};

InclusionReport qv_leq_explain(const std::vector<Signature>& left,
                               const std::vector<Signature>& right);

/// A finite family of critical signatures in canonical form: no generator
/// lies in the quasivariety of the others. Empty = trivial quasivariety.
class QuasivarietySpec {
 public:
  QuasivarietySpec() = default;

  const std::vector<Signature>& generators() const noexcept { return generators_; }
  bool trivial() const noexcept { return generators_.empty(); }

  friend bool operator==(const QuasivarietySpec&, const QuasivarietySpec&) = default;
  friend bool operator<(const QuasivarietySpec& a, const QuasivarietySpec& b);

 private:
  friend QuasivarietySpec canonicalize(std::vector<Signature> family);
  explicit QuasivarietySpec(std::vector<Signature> canonical)
      : generators_(std::move(canonical)) {}

  std::vector<Signature> generators_;
};

/// Greedily removes generators lying in the quasivariety of the rest, until
/// none does; the result does not depend on removal order. Rejects members
/// that are not critical signatures.
QuasivarietySpec canonicalize(std::vector<Signature> family);

/// A finite algebra lies in the variety of the given chains iff every factor
/// of its signature divides some modulus of the variety.
bool variety_membership(const Signature& s, const Signature& variety);

/// Brute-force membership oracle for A ∈ Q(family), independent of the
/// divisibility logic above: homomorphisms from A into single family members
/// must separate all pairs of points of A.
bool isp_member_oracle(const Signature& algebra, const std::vector<Signature>& family,
                       const Budget& budget = {});

/// The lattice of all subquasivarieties of the variety generated by chains.
struct QvLattice {
  Signature ambient;
  std::vector<Signature> criticals;             // of the ambient variety, canonical order
  std::vector<QuasivarietySpec> nodes;          // node id = position
  std::vector<std::uint32_t> closure_masks;     // bit i set iff criticals[i] in the node
  std::vector<std::pair<int, int>> cover_edges; // (lower, upper), transitive reduction
  int bottom = -1;
  int top = -1;

  std::size_t node_count() const noexcept { return nodes.size(); }
  bool leq(int a, int b) const {
    return (closure_masks[a] & ~closure_masks[b]) == 0;
  }
};

/// Distinct closures of all subsets of the ambient variety's criticals,
/// ordered by inclusion; covers by transitive reduction; bottom is the
/// trivial quasivariety. Refuses ambient varieties with more criticals than
/// the budget allows rather than approximating.
QvLattice enumerate_subquasivarieties(const Signature& variety, const Budget& budget = {});

}  // namespace mvq

#endif  // MVQ_QUASIVARIETY_HPP
