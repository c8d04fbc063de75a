#ifndef MVQ_SCHEMAS_HPP
#define MVQ_SCHEMAS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mvq/budget.hpp"
#include "mvq/eval.hpp"
#include "mvq/quasivariety.hpp"
#include "mvq/signature.hpp"
#include "mvq/term.hpp"

namespace mvq {

/// The chain L_n embeds into a finite product exactly when n divides every
/// factor (the defining fixed point (n-1)(¬a) = a must solve in each
/// coordinate); nothing embeds into the trivial algebra.
bool chain_embeds_in(int n, const Signature& s);

/// The quasiequation (n-1)(¬x0) = x0 => x0 = 1, which holds in an algebra
/// exactly when it contains no copy of L_n.
Quasiequation excludes_chain_qe(int n);

/// Premise-free variety axiom with the given chains, "=> V[n_1,...](x0)".
Quasiequation variety_axiom(const std::vector<int>& moduli);

/// K : L_n — the members of K containing no copy of L_n, presented by its
/// critical generators inside the ambient variety.
QuasivarietySpec k_colon_ln(const QuasivarietySpec& spec, int n, const Signature& ambient);

struct AxiomatizationRow {
  Signature algebra;           // empty = the trivial algebra
  bool in_quasivariety = false;
  bool satisfies_axioms = false;
  int failing_axiom = -1;      // index into the axiom list, when not satisfied
  SatisfactionResult failure;  // witness for the failing axiom

  bool consistent() const noexcept { return in_quasivariety == satisfies_axioms; }
};

struct AxiomatizationReport {
  bool pass = false;
  std::vector<AxiomatizationRow> rows;  // trivial algebra first, then criticals

  const AxiomatizationRow* first_counterexample() const;
};

/// Checks, over every critical algebra of the ambient variety and the
/// trivial algebra, that membership in the quasivariety spanned by `spec`
/// coincides with satisfying all axioms. Since every subquasivariety of the
/// ambient variety is generated by its criticals, this is the strongest
/// finite check available at this level.
AxiomatizationReport verify_axiomatization(const QuasivarietySpec& spec,
                                           const std::vector<Quasiequation>& axioms,
                                           const Signature& ambient, const Budget& budget = {});

/// A named quasivariety with its axiom list, for the built-in verification
/// families.
struct NamedAxiomatization {
  std::string name;
  QuasivarietySpec spec;
  std::vector<Quasiequation> axioms;
};

/// The eight axiomatized subquasivarieties of V(L_p, L_q) for distinct
/// primes p, q (family "3.1").
std::vector<NamedAxiomatization> two_primes_family(int p, int q);

/// Classification of a subquasivariety of V(L_{p^r}) by its canonical
/// generators: a single chain Q(L_{p^s}); an antichain of two-factor
/// products with strictly increasing n_i and strictly decreasing m_i; the
/// same plus one chain strictly between all pairs; or the trivial bottom.
enum class PrimePowerNodeType { Bottom, Chain, ProductFamily, ProductFamilyWithChain };

struct PrimePowerClassification {
  PrimePowerNodeType type = PrimePowerNodeType::Bottom;
  int chain_exponent = -1;                             // s, when a chain is present
  std::vector<std::pair<int, int>> product_exponents;  // (n_i, m_i), n_i ascending
};

std::optional<PrimePowerClassification> classify_prime_power_node(const QuasivarietySpec& spec,
                                                                  int p, int r);

/// The axiom schema attached to each classification (family "3.2"); the
/// bottom is axiomatized by the premise-free equation x0 = 1.
std::vector<Quasiequation> prime_power_node_axioms(const PrimePowerClassification& node, int p);

std::string describe(const PrimePowerClassification& node, int p);

}  // namespace mvq

#endif  // MVQ_SCHEMAS_HPP
