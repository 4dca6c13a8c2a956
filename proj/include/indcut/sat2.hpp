#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indcut/graph.hpp"

namespace indcut {

struct Literal {
  int var = 0;
  bool positive = true;

  Literal operator!() const { return {var, !positive}; }
  bool operator==(const Literal&) const = default;
};

/// A disjunction of two literals; a unit clause repeats its literal.
struct Clause {
  Literal a;
  Literal b;

  bool operator==(const Clause&) const = default;
};

class TwoSatFormula {
 public:
  explicit TwoSatFormula(int var_count = 0) : var_count_(var_count) {}

  int var_count() const { return var_count_; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  void add_unit(Literal x) { add_clause(x, x); }
  /// Throws ContractViolation for an out-of-range variable.
  void add_clause(Literal x, Literal y);

  bool satisfied_by(const std::vector<bool>& assignment) const;
  /// "p cnf r m" followed by one clause per line, variables numbered from 1.
  std::string to_dimacs() const;

 private:
  int var_count_;
  std::vector<Clause> clauses_;
};

/// Satisfying assignment via strongly connected components of the implication graph, or nullopt.
/// A variable nothing forces comes out false.
std::optional<std::vector<bool>> solve_2sat(const TwoSatFormula& f);

struct SeparationComponent {
  VertexSet na;
  VertexSet nb;
};

/// G' with independent A, B and their disjoint neighbourhoods. `components` are the components
/// of the bipartite graph H formed by the N_A-N_B edges, ordered by minimum vertex.
struct SeparationContext {
  Graph gp;
  VertexSet a;
  VertexSet b;
  VertexSet na;
  VertexSet nb;
  std::vector<SeparationComponent> components;
};

/// Computes N_A, N_B and H. Throws ContractViolation if A or B is empty, A ∪ B is not
/// independent, N(A) meets N(B), or a vertex lies outside A ∪ B ∪ N_A ∪ N_B.
SeparationContext make_separation_context(Graph gp, const VertexSet& a, const VertexSet& b);

TwoSatFormula build_separation_formula(const SeparationContext& ctx);

/// Component i contributes N_{A,i} when x_i is false and N_{B,i} when it is true. The result is
/// checked for independence and A-B separation; a failed check throws InternalError.
VertexSet extract_cutset(const SeparationContext& ctx, const std::vector<bool>& assignment);

}  // namespace indcut
