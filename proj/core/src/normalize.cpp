#include "cproof/normalize.hpp"

#include "cproof/steps.hpp"

#include <algorithm>

namespace cproof
{

bool NormalizedDigraph::is_root( NodeId id ) const
{
    return std::binary_search( roots.begin(), roots.end(), id );
}

std::vector< NodeId > NormalizedDigraph::tree( NodeId root ) const
{
    std::vector< NodeId > order;
    std::vector< NodeId > stack{ root };
    while ( !stack.empty() )
    {
        const auto id = stack.back();
        stack.pop_back();
        order.push_back( id );
        const auto& children = vertex( id ).children;
        for ( auto it = children.rbegin(); it != children.rend(); ++it )
            stack.push_back( *it );
    }
    return order;
}

namespace
{

std::map< NodeId, std::size_t > depths( const PreProof& proof )
{
    std::map< NodeId, std::size_t > depth;
    std::vector< NodeId > stack{ proof.root };
    depth[ proof.root ] = 0;
    while ( !stack.empty() )
    {
        const auto id = stack.back();
        stack.pop_back();
        for ( const auto child : proof.node( id ).rule.premises )
        {
            depth[ child ] = depth[ id ] + 1;
            stack.push_back( child );
        }
    }
    return depth;
}

} // namespace

NormalizedDigraph normalize( const PreProof& proof )
{
    NormalizedDigraph out;
    out.original_root = proof.root;

    for ( const auto& [ id, node ] : proof.nodes )
    {
        NormalizedVertex vertex;
        vertex.origin = id;
        vertex.sequent = node.sequent;
        vertex.children = node.rule.premises;
        for ( std::size_t i = 0; i < node.rule.premises.size(); ++i )
            vertex.steps.push_back( step_trace_pairs( proof, id, i ) );
        out.vertices.emplace( id, std::move( vertex ) );
    }
    for ( const auto& [ bud, companion ] : proof.induction )
    {
        out.induction[ bud ] = companion;
        out.vertices.at( bud ).link = companion;
    }

    const auto depth = depths( proof );
    std::vector< NodeId > internal;
    for ( const auto& [ bud, companion ] : proof.induction )
        if ( companion != proof.root )
            internal.push_back( companion );
    std::sort( internal.begin(), internal.end() );
    internal.erase( std::unique( internal.begin(), internal.end() ), internal.end() );
    std::stable_sort( internal.begin(), internal.end(),
                      [ & ]( NodeId a, NodeId b ) { return depth.at( a ) > depth.at( b ); } );

    NodeId next = proof.nodes.empty() ? 0 : proof.nodes.rbegin()->first + 1;
    std::vector< NodeId > roots{ proof.root };
    for ( const auto companion : internal )
    {
        const auto fresh = next++;
        auto& occurrence = out.vertices.at( companion );

        NormalizedVertex copy;
        copy.origin = occurrence.origin;
        copy.sequent = occurrence.sequent;
        copy.children = std::move( occurrence.children );
        copy.steps = std::move( occurrence.steps );

        occurrence.children.clear();
        occurrence.steps.clear();
        occurrence.synthetic = true;

        for ( auto& [ bud, target ] : out.induction )
            if ( target == companion )
            {
                target = fresh;
                out.vertices.at( bud ).link = fresh;
            }
        out.induction[ companion ] = fresh;
        occurrence.link = fresh;

        out.vertices.emplace( fresh, std::move( copy ) );
        roots.push_back( fresh );
    }

    std::sort( roots.begin(), roots.end() );
    out.roots = std::move( roots );
    return out;
}

RootDigraph root_digraph( const NormalizedDigraph& digraph )
{
    RootDigraph graph;
    std::vector< std::pair< NodeId, NodeId > > links;
    for ( const auto& [ id, vertex ] : digraph.vertices )
    {
        graph.vertices.push_back( id );
        auto& next = graph.successors[ id ];
        for ( const auto child : vertex.children )
        {
            graph.edges.emplace_back( id, child );
            next.push_back( child );
        }
        if ( vertex.link )
        {
            links.emplace_back( id, *vertex.link );
            next.push_back( *vertex.link );
        }
    }
    graph.backlinks = links.size();
    graph.edges.insert( graph.edges.end(), links.begin(), links.end() );
    return graph;
}

} // namespace cproof
