#include "cproof/analysis.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace cproof
{

bool SccPartition::same_cyclic_component( NodeId a, NodeId b ) const
{
    const auto ia = component_of.find( a );
    const auto ib = component_of.find( b );
    if ( ia == component_of.end() || ib == component_of.end() )
        return false;
    return ia->second == ib->second && cyclic[ ia->second ];
}

std::size_t SccPartition::cyclic_count() const
{
    return static_cast< std::size_t >( std::count( cyclic.begin(), cyclic.end(), true ) );
}

SccPartition sccs( const RootDigraph& graph )
{
    constexpr auto unvisited = std::numeric_limits< std::size_t >::max();

    std::map< NodeId, std::size_t > index_of;
    std::vector< NodeId > vertices = graph.vertices;
    for ( std::size_t i = 0; i < vertices.size(); ++i )
        index_of[ vertices[ i ] ] = i;

    std::vector< std::vector< std::size_t > > adjacency( vertices.size() );
    for ( const auto& [ from, to ] : graph.edges )
        adjacency[ index_of.at( from ) ].push_back( index_of.at( to ) );

    std::vector< std::size_t > index( vertices.size(), unvisited ), low( vertices.size(), 0 );
    std::vector< bool > on_stack( vertices.size(), false );
    std::vector< std::size_t > stack;
    std::size_t counter = 0;

    SccPartition partition;

    // Frames of (vertex, next edge position).
    std::vector< std::pair< std::size_t, std::size_t > > frames;
    for ( std::size_t start = 0; start < vertices.size(); ++start )
    {
        if ( index[ start ] != unvisited )
            continue;
        frames.emplace_back( start, 0 );
        index[ start ] = low[ start ] = counter++;
        stack.push_back( start );
        on_stack[ start ] = true;

        while ( !frames.empty() )
        {
            auto& [ v, edge ] = frames.back();
            if ( edge < adjacency[ v ].size() )
            {
                const auto w = adjacency[ v ][ edge++ ];
                if ( index[ w ] == unvisited )
                {
                    index[ w ] = low[ w ] = counter++;
                    stack.push_back( w );
                    on_stack[ w ] = true;
                    frames.emplace_back( w, 0 );
                }
                else if ( on_stack[ w ] )
                {
                    low[ v ] = std::min( low[ v ], index[ w ] );
                }
                continue;
            }

            const auto done = v;
            frames.pop_back();
            if ( !frames.empty() )
                low[ frames.back().first ] = std::min( low[ frames.back().first ], low[ done ] );

            if ( low[ done ] != index[ done ] )
                continue;

            std::vector< NodeId > component;
            std::size_t w = 0;
            do
            {
                w = stack.back();
                stack.pop_back();
                on_stack[ w ] = false;
                component.push_back( vertices[ w ] );
            } while ( w != done );
            std::sort( component.begin(), component.end() );

            bool cyclic = component.size() >= 2;
            if ( !cyclic )
            {
                const auto& next = adjacency[ done ];
                cyclic = std::find( next.begin(), next.end(), done ) != next.end();
            }

            const auto id = partition.components.size();
            for ( const auto member : component )
                partition.component_of[ member ] = id;
            partition.components.push_back( std::move( component ) );
            partition.cyclic.push_back( cyclic );
        }
    }
    return partition;
}

std::vector< RBPath > rb_paths( const NormalizedDigraph& digraph, const SccPartition& partition )
{
    std::vector< RBPath > paths;
    for ( const auto root : digraph.roots )
    {
        if ( !partition.component_of.contains( root ) )
            continue;

        // Depth-first walk keeping the current branch.
        std::vector< NodeId > branch;
        std::vector< std::pair< NodeId, std::size_t > > frames{ { root, 0 } };
        branch.push_back( root );
        while ( !frames.empty() )
        {
            auto& [ id, next ] = frames.back();
            const auto& vertex = digraph.vertex( id );
            if ( next == 0 && vertex.link && partition.same_cyclic_component( root, id ) )
                paths.push_back( RBPath{ root, id, *vertex.link, branch } );

            if ( next < vertex.children.size() )
            {
                const auto child = vertex.children[ next++ ];
                frames.emplace_back( child, 0 );
                branch.push_back( child );
                continue;
            }
            frames.pop_back();
            branch.pop_back();
        }
    }
    std::sort( paths.begin(), paths.end(),
               []( const RBPath& a, const RBPath& b ) { return std::tie( a.root, a.bud ) < std::tie( b.root, b.bud ); } );
    return paths;
}

} // namespace cproof
