#include "indcut/outcome.hpp"

#include "indcut/errors.hpp"

namespace indcut {

void accept_witness(SolveOutcome& out, const Graph& g, const VertexSet& witness) {
  if (!is_independent(g, witness))
    throw InternalError(out.algorithm + ": witness " + format_vertices(g, witness) + " is not independent");
  if (!is_cutset(g, witness))
    throw InternalError(out.algorithm + ": witness " + format_vertices(g, witness) + " is not a cutset");
  out.answer = Answer::yes;
  out.witness = witness;
}

}  // namespace indcut
