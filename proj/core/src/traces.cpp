#include "cproof/traces.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace cproof
{

bool Trace::progressing() const
{
    return std::find( progress.begin(), progress.end(), true ) != progress.end();
}

const std::vector< TracePair >& path_step( const NormalizedDigraph& digraph, const RBPath& path, std::size_t i )
{
    const auto& vertex = digraph.vertex( path.nodes.at( i ) );
    const auto next = path.nodes.at( i + 1 );
    const auto it = std::find( vertex.children.begin(), vertex.children.end(), next );
    if ( it == vertex.children.end() )
        throw std::invalid_argument( "path leaves the tree at node " + std::to_string( path.nodes[ i ] ) );
    return vertex.steps[ static_cast< std::size_t >( it - vertex.children.begin() ) ];
}

std::vector< Trace > traces_along( const NormalizedDigraph& digraph, const RBPath& path )
{
    std::vector< Trace > partial;
    for ( const auto& iaa : digraph.vertex( path.root ).sequent.antecedent )
        partial.push_back( Trace{ { iaa.index }, {} } );

    for ( std::size_t i = 0; i + 1 < path.nodes.size(); ++i )
    {
        const auto& pairs = path_step( digraph, path, i );
        std::vector< Trace > extended;
        for ( const auto& trace : partial )
            for ( const auto& pair : pairs )
                if ( pair.conclusion_index == trace.indices.back() )
                {
                    auto next = trace;
                    next.indices.push_back( pair.premise_index );
                    next.progress.push_back( pair.progressing );
                    extended.push_back( std::move( next ) );
                }
        partial = std::move( extended );
    }

    std::sort( partial.begin(), partial.end() );
    partial.erase( std::unique( partial.begin(), partial.end() ), partial.end() );
    return partial;
}

namespace
{

// State after a prefix of the path: (root index, current index, progressed).
using State = std::tuple< IaaIndex, IaaIndex, bool >;

// layers[i] maps each state reachable at path position i to one
// predecessor state (absent at position 0).
std::vector< std::map< State, State > > sweep( const NormalizedDigraph& digraph, const RBPath& path )
{
    std::vector< std::map< State, State > > layers( path.nodes.size() );
    for ( const auto& iaa : digraph.vertex( path.root ).sequent.antecedent )
        layers[ 0 ].emplace( State{ iaa.index, iaa.index, false }, State{ iaa.index, iaa.index, false } );

    for ( std::size_t i = 0; i + 1 < path.nodes.size(); ++i )
    {
        const auto& pairs = path_step( digraph, path, i );
        for ( const auto& [ state, ignored ] : layers[ i ] )
        {
            const auto [ origin, current, progressed ] = state;
            for ( const auto& pair : pairs )
                if ( pair.conclusion_index == current )
                    layers[ i + 1 ].try_emplace( State{ origin, pair.premise_index, progressed || pair.progressing },
                                                 state );
        }
    }
    return layers;
}

} // namespace

TraceSummary trace_summary( const NormalizedDigraph& digraph, const RBPath& path )
{
    const auto layers = sweep( digraph, path );
    std::map< std::pair< IaaIndex, IaaIndex >, TraceLink > links;
    for ( const auto& [ state, ignored ] : layers.back() )
    {
        const auto [ origin, current, progressed ] = state;
        auto& link = links[ { origin, current } ];
        link.root_index = origin;
        link.bud_index = current;
        ( progressed ? link.progressing : link.stalling ) = true;
    }

    TraceSummary summary;
    for ( const auto& [ key, link ] : links )
        summary.push_back( link );
    return summary;
}

std::optional< Trace > witness_trace( const NormalizedDigraph& digraph, const RBPath& path, IaaIndex root_index,
                                      IaaIndex bud_index, bool progressing )
{
    const auto layers = sweep( digraph, path );
    State state{ root_index, bud_index, progressing };
    if ( !layers.back().contains( state ) )
        return std::nullopt;

    Trace trace;
    trace.indices.resize( path.nodes.size() );
    trace.progress.resize( path.nodes.size() - 1 );
    for ( std::size_t i = path.nodes.size(); i-- > 0; )
    {
        trace.indices[ i ] = std::get< 1 >( state );
        if ( i == 0 )
            break;
        const auto previous = layers[ i ].at( state );
        trace.progress[ i - 1 ] = std::get< 2 >( state ) && !std::get< 2 >( previous );
        state = previous;
    }

    // Once the trace has progressed the state no longer tells which flag a
    // later step used; take whichever pair the inference actually has.
    for ( std::size_t i = 0; i + 1 < path.nodes.size(); ++i )
    {
        const auto& pairs = path_step( digraph, path, i );
        const bool flagged = trace.progress[ i ];
        const auto has = [ & ]( bool p ) {
            return std::find( pairs.begin(), pairs.end(), TracePair{ trace.indices[ i ], trace.indices[ i + 1 ], p } )
                   != pairs.end();
        };
        if ( !has( flagged ) )
            trace.progress[ i ] = !flagged;
    }
    return trace;
}

bool replay_trace( const NormalizedDigraph& digraph, const RBPath& path, const Trace& trace )
{
    if ( path.nodes.empty() || trace.indices.size() != path.nodes.size()
         || trace.progress.size() + 1 != path.nodes.size() )
        return false;
    if ( !digraph.vertices.contains( path.root ) || !digraph.vertex( path.root ).sequent.find( trace.root_index() ) )
        return false;
    for ( std::size_t i = 0; i + 1 < path.nodes.size(); ++i )
    {
        const auto& pairs = path_step( digraph, path, i );
        const TracePair wanted{ trace.indices[ i ], trace.indices[ i + 1 ], trace.progress[ i ] };
        if ( std::find( pairs.begin(), pairs.end(), wanted ) == pairs.end() )
            return false;
    }
    return true;
}

std::vector< std::string > trace_occurrences( const NormalizedDigraph& digraph, const RBPath& path,
                                              const Trace& trace )
{
    std::vector< std::string > out;
    for ( std::size_t i = 0; i < path.nodes.size(); ++i )
    {
        const auto* iaa = digraph.vertex( path.nodes[ i ] ).sequent.find( trace.indices[ i ] );
        auto text = iaa ? to_string( *iaa ) : "?" + std::to_string( trace.indices[ i ] );
        if ( i > 0 && trace.progress[ i - 1 ] )
            text += "*";
        out.push_back( std::move( text ) );
    }
    return out;
}

} // namespace cproof
