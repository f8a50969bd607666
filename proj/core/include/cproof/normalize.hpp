#pragma once

#include "cproof/proof.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace cproof
{

// A node of the normalized digraph. Every vertex copies an input node
// (`origin`); the sequent and the per-child trace relations are carried
// along so that later stages never consult the input pre-proof again.
struct NormalizedVertex
{
    NodeId origin = 0;
    Sequent sequent;
    std::vector< NodeId > children;
    std::vector< std::vector< TracePair > > steps; // parallel to children
    std::optional< NodeId > link;                  // set on buds: the root linked to
    bool synthetic = false;                        // bud created by splitting a companion

    friend bool operator==( const NormalizedVertex&, const NormalizedVertex& ) = default;
};

// A set of derivation trees with an induction function mapping every bud to
// a root. Companions of the input are all roots here.
struct NormalizedDigraph
{
    std::map< NodeId, NormalizedVertex > vertices;
    std::map< NodeId, NodeId > induction; // bud -> root
    std::vector< NodeId > roots;          // ascending; contains original_root
    NodeId original_root = 0;

    [[nodiscard]] const NormalizedVertex& vertex( NodeId id ) const { return vertices.at( id ); }
    [[nodiscard]] bool is_bud( NodeId id ) const { return induction.contains( id ); }
    [[nodiscard]] bool is_root( NodeId id ) const;

    // Vertices of the tree rooted at `root`, in preorder.
    [[nodiscard]] std::vector< NodeId > tree( NodeId root ) const;

    friend bool operator==( const NormalizedDigraph&, const NormalizedDigraph& ) = default;
};

// Splits internal companions, deepest first. Each split companion keeps its
// place as a synthetic bud linked to a fresh root that receives its subtree;
// buds of that companion are retargeted to the fresh root. Fresh ids start
// above the largest input id.
//
// Requires a pre-proof accepted by validate_preproof.
[[nodiscard]] NormalizedDigraph normalize( const PreProof& proof );

// Node-level digraph: premise edges plus one back-link edge per bud.
struct RootDigraph
{
    std::vector< NodeId > vertices;                    // ascending
    std::vector< std::pair< NodeId, NodeId > > edges;  // premise edges first, then back-links
    std::map< NodeId, std::vector< NodeId > > successors;
    std::size_t backlinks = 0;
};

[[nodiscard]] RootDigraph root_digraph( const NormalizedDigraph& digraph );

} // namespace cproof
