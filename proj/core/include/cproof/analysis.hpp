#pragma once

#include "cproof/normalize.hpp"

#include <map>
#include <vector>

namespace cproof
{

struct SccPartition
{
    std::vector< std::vector< NodeId > > components; // reverse topological order, members ascending
    std::map< NodeId, std::size_t > component_of;
    std::vector< bool > cyclic; // size >= 2, or a self-loop

    [[nodiscard]] bool same_cyclic_component( NodeId a, NodeId b ) const;
    [[nodiscard]] std::size_t cyclic_count() const;

    friend bool operator==( const SccPartition&, const SccPartition& ) = default;
};

// Tarjan's algorithm, iterative so that long chains do not exhaust the stack.
[[nodiscard]] SccPartition sccs( const RootDigraph& graph );

struct RBPath
{
    NodeId root = 0;
    NodeId bud = 0;
    NodeId companion = 0;
    std::vector< NodeId > nodes; // root, ..., bud along premise edges

    friend bool operator==( const RBPath&, const RBPath& ) = default;
};

// Root-to-bud tree paths whose root and bud share a cyclic component,
// ordered by root then bud.
[[nodiscard]] std::vector< RBPath > rb_paths( const NormalizedDigraph& digraph, const SccPartition& partition );

} // namespace cproof
