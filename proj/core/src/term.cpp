#include "mvq/term.hpp"

#include <map>
#include <stdexcept>

namespace mvq {

namespace {

Term make(TermNode node) { return std::make_shared<const TermNode>(std::move(node)); }

}  // namespace

Term t_zero() {
  TermNode n{};
  n.kind = TermKind::Zero;
  static const Term zero = make(std::move(n));
  return zero;
}

Term t_one() {
  TermNode n{};
  n.kind = TermKind::One;
  static const Term one = make(std::move(n));
  return one;
}

Term t_var(int index) {
  if (index < 0) throw std::invalid_argument("variable index must be nonnegative");
  TermNode n{};
  n.kind = TermKind::Var;
  n.var = index;
  return make(std::move(n));
}

Term t_neg(Term t) {
  TermNode n{};
  n.kind = TermKind::Neg;
  n.lhs = std::move(t);
  return make(std::move(n));
}

Term t_add(Term lhs, Term rhs) {
  TermNode n{};
  n.kind = TermKind::Add;
  n.lhs = std::move(lhs);
  n.rhs = std::move(rhs);
  return make(std::move(n));
}

Term t_scalar(unsigned coeff, Term t) {
  TermNode n{};
  n.kind = TermKind::Scalar;
  n.coeff = coeff;
  n.lhs = std::move(t);
  return make(std::move(n));
}

Term t_odot(Term lhs, Term rhs) { return t_neg(t_add(t_neg(std::move(lhs)), t_neg(std::move(rhs)))); }

Term t_join(Term lhs, Term rhs) { return t_add(t_neg(t_add(t_neg(lhs), rhs)), rhs); }

Term t_meet(Term lhs, Term rhs) { return t_neg(t_join(t_neg(std::move(lhs)), t_neg(std::move(rhs)))); }

bool term_equal(const Term& a, const Term& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Zero:
    case TermKind::One:
      return true;
    case TermKind::Var:
      return a->var == b->var;
    case TermKind::Neg:
      return term_equal(a->lhs, b->lhs);
    case TermKind::Scalar:
      return a->coeff == b->coeff && term_equal(a->lhs, b->lhs);
    case TermKind::Add:
      return term_equal(a->lhs, b->lhs) && term_equal(a->rhs, b->rhs);
  }
  return false;
}

void collect_variables(const Term& t, std::set<int>& out) {
  switch (t->kind) {
    case TermKind::Zero:
    case TermKind::One:
      return;
    case TermKind::Var:
      out.insert(t->var);
      return;
    case TermKind::Neg:
    case TermKind::Scalar:
      collect_variables(t->lhs, out);
      return;
    case TermKind::Add:
      collect_variables(t->lhs, out);
      collect_variables(t->rhs, out);
      return;
  }
}

Term desugar(const Term& t) {
  switch (t->kind) {
    case TermKind::Zero:
    case TermKind::Var:
      return t;
    case TermKind::One:
      return t_neg(t_zero());
    case TermKind::Neg:
      return t_neg(desugar(t->lhs));
    case TermKind::Add:
      return t_add(desugar(t->lhs), desugar(t->rhs));
    case TermKind::Scalar: {
      if (t->coeff == 0) return t_zero();
      const Term core = desugar(t->lhs);
      Term sum = core;
      for (unsigned i = 1; i < t->coeff; ++i) sum = t_add(core, sum);
      return sum;
    }
  }
  return t;
}

namespace {

// Grammar precedence: '+' at term level, '~' and scalar at factor level.
// A factor-level child that is a sum needs parentheses; so does the right
// operand of '+' when it is itself a sum (printing is left-associative).
std::string print(const Term& t, bool factor_position) {
  switch (t->kind) {
    case TermKind::Zero:
      return "0";
    case TermKind::One:
      return "1";
    case TermKind::Var:
      return "x" + std::to_string(t->var);
    case TermKind::Neg:
      return "~" + print(t->lhs, true);
    case TermKind::Scalar:
      return std::to_string(t->coeff) + "*" + print(t->lhs, true);
    case TermKind::Add: {
      const std::string lhs = print(t->lhs, false);
      std::string rhs = print(t->rhs, false);
      if (t->rhs->kind == TermKind::Add) rhs = "(" + rhs + ")";
      const std::string sum = lhs + " + " + rhs;
      return factor_position ? "(" + sum + ")" : sum;
    }
  }
  return {};
}

}  // namespace

std::string to_string(const Term& t) { return print(t, false); }

bool quasiequation_equal(const Quasiequation& a, const Quasiequation& b) {
  if (a.premises.size() != b.premises.size()) return false;
  for (std::size_t i = 0; i < a.premises.size(); ++i) {
    if (!term_equal(a.premises[i].lhs, b.premises[i].lhs) ||
        !term_equal(a.premises[i].rhs, b.premises[i].rhs)) {
      return false;
    }
  }
  if (a.conclusion.index() != b.conclusion.index()) return false;
  if (std::holds_alternative<Equation>(a.conclusion)) {
    const auto& ca = std::get<Equation>(a.conclusion);
    const auto& cb = std::get<Equation>(b.conclusion);
    return term_equal(ca.lhs, cb.lhs) && term_equal(ca.rhs, cb.rhs);
  }
  const auto& va = std::get<VarietyAtom>(a.conclusion);
  const auto& vb = std::get<VarietyAtom>(b.conclusion);
  return va.moduli == vb.moduli && va.var == vb.var;
}

std::string to_string(const Quasiequation& q) {
  std::string out;
  for (std::size_t i = 0; i < q.premises.size(); ++i) {
    if (i > 0) out += " & ";
    out += to_string(q.premises[i].lhs) + " = " + to_string(q.premises[i].rhs);
  }
  if (!q.premises.empty()) out += " ";
  out += "=> ";
  if (std::holds_alternative<Equation>(q.conclusion)) {
    const auto& eq = std::get<Equation>(q.conclusion);
    out += to_string(eq.lhs) + " = " + to_string(eq.rhs);
  } else {
    const auto& atom = std::get<VarietyAtom>(q.conclusion);
    out += "V[";
    for (std::size_t i = 0; i < atom.moduli.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(atom.moduli[i]);
    }
    out += "](x" + std::to_string(atom.var) + ")";
  }
  return out;
}

std::vector<int> quasiequation_variables(const Quasiequation& q) {
  std::set<int> vars;
  for (const Equation& eq : q.premises) {
    collect_variables(eq.lhs, vars);
    collect_variables(eq.rhs, vars);
  }
  if (std::holds_alternative<Equation>(q.conclusion)) {
    const auto& eq = std::get<Equation>(q.conclusion);
    collect_variables(eq.lhs, vars);
    collect_variables(eq.rhs, vars);
  } else {
    vars.insert(std::get<VarietyAtom>(q.conclusion).var);
  }
  return std::vector<int>(vars.begin(), vars.end());
}

namespace {

Term remap(const Term& t, std::map<int, int>& table) {
  switch (t->kind) {
    case TermKind::Zero:
    case TermKind::One:
      return t;
    case TermKind::Var: {
      const auto it = table.emplace(t->var, static_cast<int>(table.size())).first;
      return t_var(it->second);
    }
    case TermKind::Neg:
      return t_neg(remap(t->lhs, table));
    case TermKind::Scalar:
      return t_scalar(t->coeff, remap(t->lhs, table));
    case TermKind::Add: {
      Term lhs = remap(t->lhs, table);
      return t_add(std::move(lhs), remap(t->rhs, table));
    }
  }
  return t;
}

}  // namespace

Quasiequation normalize_variables(const Quasiequation& q) {
  std::map<int, int> table;
  Quasiequation out;
  for (const Equation& eq : q.premises) {
    Term lhs = remap(eq.lhs, table);
    Term rhs = remap(eq.rhs, table);
    out.premises.push_back({std::move(lhs), std::move(rhs)});
  }
  if (std::holds_alternative<Equation>(q.conclusion)) {
    const auto& eq = std::get<Equation>(q.conclusion);
    Term lhs = remap(eq.lhs, table);
    Term rhs = remap(eq.rhs, table);
    out.conclusion = Equation{std::move(lhs), std::move(rhs)};
  } else {
    VarietyAtom atom = std::get<VarietyAtom>(q.conclusion);
    atom.var = table.emplace(atom.var, static_cast<int>(table.size())).first->second;
    out.conclusion = std::move(atom);
  }
  return out;
}

}  // namespace mvq
