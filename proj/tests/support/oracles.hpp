#pragma once

#include "cproof/analysis.hpp"
#include "cproof/proof.hpp"

#include <set>
#include <vector>

namespace cproof::reference
{

using Walk = std::vector< NodeId >;

// Walks of exactly `length` vertices from the root of the input pre-proof,
// following premise edges and bud-to-companion edges.
std::set< Walk > preproof_walks( const PreProof& proof, std::size_t length );

// Walks from the original root of the normalized digraph, projected onto
// input node ids: each vertex becomes its origin and synthetic buds are
// skipped (they duplicate the root copy they link to).
std::set< Walk > normalized_walks( const NormalizedDigraph& digraph, std::size_t length );

// Strongly connected components from the transitive closure, as sorted
// member lists.
std::set< std::vector< NodeId > > closure_components( const RootDigraph& graph );

} // namespace cproof::reference

#include "cproof/ordering.hpp"

#include <functional>

namespace cproof::reference
{

// B <mul A by definition: some nonempty sub-multiset X of A and some Y with
// B = (A - X) + Y and every y in Y below some x in X.
bool definitional_multiset_less( const std::vector< int >& b, const std::vector< int >& a,
                                 const std::function< bool( int, int ) >& less );

// Trace-based comparison by enumerating every item-level cancellation.
bool exhaustive_pairing( const TraceSummary& summary, const Measure& root_side, const Measure& bud_side );

} // namespace cproof::reference
