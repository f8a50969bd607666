#pragma once

#include "cproof/proof.hpp"

#include <stdexcept>
#include <vector>

namespace cproof
{

class MissingDeclaredTracePairs : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Trace relation of the inference at `node` towards its premise at
// `premise_position`, as (conclusion index, premise index, progressing)
// triples sorted ascending.
//
//   L.Unf   target -> each production premise atom (progressing), target ->
//           retained instance (not progressing), identity elsewhere
//   R.Unf   identity
//   Weaken  the retained pairs
//   Subst   each premise atom to its instance in the conclusion
//   Generic the declared pairs
//
// Throws std::out_of_range if the premise does not exist and
// MissingDeclaredTracePairs for a generic rule without declarations.
[[nodiscard]] std::vector< TracePair > step_trace_pairs( const PreProof& proof, NodeId node,
                                                         std::size_t premise_position );

// Identity relation between a bud and its companion.
[[nodiscard]] std::vector< TracePair > backlink_trace_pairs( const Sequent& bud );

} // namespace cproof
