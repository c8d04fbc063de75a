#include "mvq/schemas.hpp"

#include <algorithm>
#include <stdexcept>

#include "mvq/criticality.hpp"

namespace mvq {

bool chain_embeds_in(int n, const Signature& s) {
  if (n < 1) throw std::invalid_argument("chain modulus must be positive");
  if (s.empty()) return false;
  for (int m : s.moduli()) {
    if (m % n != 0) return false;
  }
  return true;
}

Quasiequation excludes_chain_qe(int n) {
  if (n < 1) throw std::invalid_argument("chain modulus must be positive");
  Quasiequation q;
  q.premises.push_back({t_scalar(static_cast<unsigned>(n - 1), t_neg(t_var(0))), t_var(0)});
  q.conclusion = Equation{t_var(0), t_one()};
  return q;
}

Quasiequation variety_axiom(const std::vector<int>& moduli) {
  Quasiequation q;
  VarietyAtom atom;
  atom.moduli = moduli;
  std::sort(atom.moduli.begin(), atom.moduli.end());
  atom.var = 0;
  q.conclusion = std::move(atom);
  return q;
}

QuasivarietySpec k_colon_ln(const QuasivarietySpec& spec, int n, const Signature& ambient) {
  for (const Signature& g : spec.generators()) {
    if (!variety_membership(g, ambient)) {
      throw std::invalid_argument("generator " + g.str() + " lies outside the ambient variety " +
                                  ambient.str());
    }
  }
  std::vector<Signature> retained;
  for (const Signature& c : enumerate_criticals(ambient)) {
    if (!qv_leq({c}, spec.generators())) continue;
    if (!chain_embeds_in(n, c)) retained.push_back(c);
  }
  return canonicalize(std::move(retained));
}

const AxiomatizationRow* AxiomatizationReport::first_counterexample() const {
  for (const AxiomatizationRow& row : rows) {
    if (!row.consistent()) return &row;
  }
  return nullptr;
}

AxiomatizationReport verify_axiomatization(const QuasivarietySpec& spec,
                                           const std::vector<Quasiequation>& axioms,
                                           const Signature& ambient, const Budget& budget) {
  std::vector<Signature> algebras;
  algebras.push_back(Signature{});  // the trivial algebra
  for (const Signature& c : enumerate_criticals(ambient)) algebras.push_back(c);

  AxiomatizationReport report;
  report.pass = true;
  for (const Signature& s : algebras) {
    AxiomatizationRow row;
    row.algebra = s;
    row.in_quasivariety = s.empty() ? true : qv_leq({s}, spec.generators());

    const ProductAlgebra a(s.moduli());
    row.satisfies_axioms = true;
    for (std::size_t i = 0; i < axioms.size(); ++i) {
      SatisfactionResult r = satisfies(a, axioms[i], budget);
      if (!r.satisfied) {
        row.satisfies_axioms = false;
        row.failing_axiom = static_cast<int>(i);
        row.failure = std::move(r);
        break;
      }
    }

    report.pass = report.pass && row.consistent();
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

std::string chain_name(int modulus) { return "L_" + std::to_string(modulus); }

std::string product_name(const Signature& s) {
  std::string out;
  for (std::size_t i = 0; i < s.moduli().size(); ++i) {
    if (i > 0) out += "x";
    out += chain_name(s.moduli()[i]);
  }
  return out;
}

std::string family_name(const std::vector<Signature>& gens) {
  std::string out = "Q(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += ", ";
    out += product_name(gens[i]);
  }
  return out + ")";
}

}  // namespace

std::vector<NamedAxiomatization> two_primes_family(int p, int q) {
  if (p == q) throw std::invalid_argument("the two primes must be distinct");
  const int r = std::max(p, q);

  const Quasiequation ambient_axiom = variety_axiom({p, q});
  const std::vector<Equation> unit_premises = {
      {t_scalar(static_cast<unsigned>(r), t_var(0)), t_one()},
      {t_scalar(static_cast<unsigned>(r), t_neg(t_var(0))), t_one()}};

  auto with_premises = [&unit_premises](std::variant<Equation, VarietyAtom> conclusion) {
    Quasiequation qe;
    qe.premises = unit_premises;
    qe.conclusion = std::move(conclusion);
    return qe;
  };

  const Signature sig_p({p});
  const Signature sig_q({q});
  const Signature sig_pq({p, q});
  const Signature sig_1p({1, p});
  const Signature sig_1q({1, q});

  std::vector<NamedAxiomatization> items;
  items.push_back({family_name({sig_p, sig_pq}),
                   canonicalize({sig_p, sig_pq}),
                   {ambient_axiom, excludes_chain_qe(q)}});
  items.push_back({family_name({sig_q, sig_pq}),
                   canonicalize({sig_q, sig_pq}),
                   {ambient_axiom, excludes_chain_qe(p)}});
  items.push_back({family_name({sig_pq}),
                   canonicalize({sig_pq}),
                   {ambient_axiom, excludes_chain_qe(p), excludes_chain_qe(q)}});
  items.push_back({family_name({sig_1p}),
                   canonicalize({sig_1p}),
                   {variety_axiom({p}), excludes_chain_qe(p)}});
  items.push_back({family_name({sig_1q}),
                   canonicalize({sig_1q}),
                   {variety_axiom({q}), excludes_chain_qe(q)}});
  items.push_back({family_name({sig_p, sig_1q}),
                   canonicalize({sig_p, sig_1q}),
                   {ambient_axiom, excludes_chain_qe(q),
                    with_premises(VarietyAtom{{p}, 1})}});
  items.push_back({family_name({sig_q, sig_1p}),
                   canonicalize({sig_q, sig_1p}),
                   {ambient_axiom, excludes_chain_qe(p),
                    with_premises(VarietyAtom{{q}, 1})}});
  items.push_back({family_name({sig_1p, sig_1q}),
                   canonicalize({sig_1p, sig_1q}),
                   {ambient_axiom, excludes_chain_qe(q), excludes_chain_qe(p),
                    with_premises(Equation{t_var(0), t_one()})}});
  return items;
}

namespace {

/// Exact exponent s with value = p^s, or -1.
int exponent_of(int value, int p) {
  int s = 0;
  while (value % p == 0) {
    value /= p;
    ++s;
  }
  return value == 1 ? s : -1;
}

std::int64_t power(int p, int e) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) out *= p;
  return out;
}

}  // namespace

std::optional<PrimePowerClassification> classify_prime_power_node(const QuasivarietySpec& spec,
                                                                  int p, int r) {
  PrimePowerClassification node;
  if (spec.trivial()) {
    node.type = PrimePowerNodeType::Bottom;
    return node;
  }

  std::vector<int> chains;
  for (const Signature& g : spec.generators()) {
    if (g.size() == 1) {
      const int s = exponent_of(g.moduli()[0], p);
      if (s < 0 || s > r) return std::nullopt;
      chains.push_back(s);
    } else if (g.size() == 2) {
      const int n = exponent_of(g.moduli()[0], p);
      const int m = exponent_of(g.moduli()[1], p);
      if (n < 0 || m < 0 || n >= m || m > r) return std::nullopt;
      node.product_exponents.emplace_back(n, m);
    } else {
      return std::nullopt;
    }
  }
  std::sort(node.product_exponents.begin(), node.product_exponents.end());

  // Antichain shape: n_i strictly increasing forces m_i strictly decreasing.
  for (std::size_t i = 1; i < node.product_exponents.size(); ++i) {
    if (node.product_exponents[i].first <= node.product_exponents[i - 1].first ||
        node.product_exponents[i].second >= node.product_exponents[i - 1].second) {
      return std::nullopt;
    }
  }

  if (chains.size() > 1) return std::nullopt;
  if (chains.empty()) {
    node.type = PrimePowerNodeType::ProductFamily;
    return node;
  }
  node.chain_exponent = chains.front();
  if (node.product_exponents.empty()) {
    node.type = PrimePowerNodeType::Chain;
    return node;
  }
  node.type = PrimePowerNodeType::ProductFamilyWithChain;
  for (const auto& [n, m] : node.product_exponents) {
    if (!(n < node.chain_exponent && node.chain_exponent < m)) return std::nullopt;
  }
  return node;
}

std::vector<Quasiequation> prime_power_node_axioms(const PrimePowerClassification& node, int p) {
  std::vector<Quasiequation> axioms;

  auto divisibility_premise = [&](int exponent) {
    // (p^{exponent} - 1)(¬x0) = x0, the premise selecting copies of the chain.
    return Equation{
        t_scalar(static_cast<unsigned>(power(p, exponent) - 1), t_neg(t_var(0))), t_var(0)};
  };

  switch (node.type) {
    case PrimePowerNodeType::Bottom: {
      Quasiequation only_unit;
      only_unit.conclusion = Equation{t_var(0), t_one()};
      axioms.push_back(std::move(only_unit));
      break;
    }
    case PrimePowerNodeType::Chain: {
      axioms.push_back(variety_axiom({static_cast<int>(power(p, node.chain_exponent))}));
      break;
    }
    case PrimePowerNodeType::ProductFamily:
    case PrimePowerNodeType::ProductFamilyWithChain: {
      const auto& pairs = node.product_exponents;
      const int m1 = pairs.front().second;
      const int nk = pairs.back().first;
      axioms.push_back(variety_axiom({static_cast<int>(power(p, m1))}));

      const int exclusion_exponent =
          node.type == PrimePowerNodeType::ProductFamilyWithChain ? node.chain_exponent + 1
                                                                  : nk + 1;
      axioms.push_back(excludes_chain_qe(static_cast<int>(power(p, exclusion_exponent))));

      for (std::size_t j = 1; j < pairs.size(); ++j) {
        Quasiequation qe;
        qe.premises.push_back(divisibility_premise(pairs[j - 1].first + 1));
        qe.conclusion = VarietyAtom{{static_cast<int>(power(p, pairs[j].second))}, 1};
        axioms.push_back(std::move(qe));
      }
      if (node.type == PrimePowerNodeType::ProductFamilyWithChain) {
        Quasiequation qe;
        qe.premises.push_back(divisibility_premise(nk + 1));
        qe.conclusion = VarietyAtom{{static_cast<int>(power(p, node.chain_exponent))}, 1};
        axioms.push_back(std::move(qe));
      }
      break;
    }
  }
  return axioms;
}

std::string describe(const PrimePowerClassification& node, int p) {
  switch (node.type) {
    case PrimePowerNodeType::Bottom:
      return "bottom (trivial quasivariety)";
    case PrimePowerNodeType::Chain:
      return "type 1: Q(" + chain_name(static_cast<int>(power(p, node.chain_exponent))) +
             ") = V(" + chain_name(static_cast<int>(power(p, node.chain_exponent))) + ")";
    case PrimePowerNodeType::ProductFamily:
    case PrimePowerNodeType::ProductFamilyWithChain: {
      std::string out = node.type == PrimePowerNodeType::ProductFamily ? "type 2: Q(" : "type 3: Q(";
      for (std::size_t i = 0; i < node.product_exponents.size(); ++i) {
        if (i > 0) out += ", ";
        out += chain_name(static_cast<int>(power(p, node.product_exponents[i].first))) + "x" +
               chain_name(static_cast<int>(power(p, node.product_exponents[i].second)));
      }
      if (node.type == PrimePowerNodeType::ProductFamilyWithChain) {
        out += ", " + chain_name(static_cast<int>(power(p, node.chain_exponent)));
      }
      return out + ")";
    }
  }
  return {};
}

}  // namespace mvq
