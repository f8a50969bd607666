#include "support/oracles.hpp"

#include <algorithm>
#include <map>

namespace cproof::reference
{

namespace
{

void extend( const std::map< NodeId, std::vector< NodeId > >& next, Walk& walk, std::size_t length,
             std::set< Walk >& out )
{
    if ( walk.size() == length )
    {
        out.insert( walk );
        return;
    }
    const auto it = next.find( walk.back() );
    if ( it == next.end() )
        return;
    for ( const auto successor : it->second )
    {
        walk.push_back( successor );
        extend( next, walk, length, out );
        walk.pop_back();
    }
}

void extend_projected( const NormalizedDigraph& digraph, const std::map< NodeId, std::vector< NodeId > >& next,
                       NodeId at, Walk& walk, std::size_t length, std::set< Walk >& out )
{
    const auto& vertex = digraph.vertex( at );
    const bool counted = !vertex.synthetic;
    if ( counted )
        walk.push_back( vertex.origin );
    if ( walk.size() == length )
        out.insert( walk );
    else
        for ( const auto successor : next.at( at ) )
            extend_projected( digraph, next, successor, walk, length, out );
    if ( counted )
        walk.pop_back();
}

} // namespace

std::set< Walk > preproof_walks( const PreProof& proof, std::size_t length )
{
    std::map< NodeId, std::vector< NodeId > > next;
    for ( const auto& [ id, node ] : proof.nodes )
    {
        next[ id ] = node.rule.premises;
        if ( const auto it = proof.induction.find( id ); it != proof.induction.end() )
            next[ id ].push_back( it->second );
    }
    std::set< Walk > out;
    Walk walk{ proof.root };
    if ( length > 0 )
        extend( next, walk, length, out );
    return out;
}

std::set< Walk > normalized_walks( const NormalizedDigraph& digraph, std::size_t length )
{
    const auto graph = root_digraph( digraph );
    std::set< Walk > out;
    Walk walk;
    if ( length > 0 )
        extend_projected( digraph, graph.successors, digraph.original_root, walk, length, out );
    return out;
}

std::set< std::vector< NodeId > > closure_components( const RootDigraph& graph )
{
    const auto n = graph.vertices.size();
    std::map< NodeId, std::size_t > at;
    for ( std::size_t i = 0; i < n; ++i )
        at[ graph.vertices[ i ] ] = i;

    std::vector< std::vector< bool > > reach( n, std::vector< bool >( n, false ) );
    for ( std::size_t i = 0; i < n; ++i )
        reach[ i ][ i ] = true;
    for ( const auto& [ a, b ] : graph.edges )
        reach[ at.at( a ) ][ at.at( b ) ] = true;
    for ( std::size_t k = 0; k < n; ++k )
        for ( std::size_t i = 0; i < n; ++i )
            if ( reach[ i ][ k ] )
                for ( std::size_t j = 0; j < n; ++j )
                    if ( reach[ k ][ j ] )
                        reach[ i ][ j ] = true;

    std::set< std::vector< NodeId > > components;
    for ( std::size_t i = 0; i < n; ++i )
    {
        std::vector< NodeId > component;
        for ( std::size_t j = 0; j < n; ++j )
            if ( reach[ i ][ j ] && reach[ j ][ i ] )
                component.push_back( graph.vertices[ j ] );
        components.insert( component );
    }
    return components;
}

} // namespace cproof::reference

namespace cproof::reference
{

namespace
{

std::vector< int > minus( std::vector< int > a, const std::vector< int >& x )
{
    for ( const auto v : x )
    {
        const auto it = std::find( a.begin(), a.end(), v );
        if ( it == a.end() )
            return {};
        a.erase( it );
    }
    return a;
}

bool contains_all( std::vector< int > big, const std::vector< int >& small )
{
    for ( const auto v : small )
    {
        const auto it = std::find( big.begin(), big.end(), v );
        if ( it == big.end() )
            return false;
        big.erase( it );
    }
    return true;
}

const TraceLink* link_of( const TraceSummary& summary, IaaIndex r, IaaIndex b )
{
    for ( const auto& l : summary )
        if ( l.root_index == r && l.bud_index == b )
            return &l;
    return nullptr;
}

bool residue_ok( const TraceSummary& summary, const Measure& root_side, const Measure& bud_side,
                 const std::vector< bool >& root_used, const std::vector< bool >& bud_used )
{
    std::vector< IaaIndex > x;
    for ( std::size_t i = 0; i < root_side.size(); ++i )
        if ( !root_used[ i ] )
            x.push_back( root_side[ i ] );
    if ( x.empty() )
        return false;
    for ( std::size_t j = 0; j < bud_side.size(); ++j )
    {
        if ( bud_used[ j ] )
            continue;
        const bool covered = std::any_of( x.begin(), x.end(), [ & ]( IaaIndex r ) {
            const auto* l = link_of( summary, r, bud_side[ j ] );
            return l && l->progressing;
        } );
        if ( !covered )
            return false;
    }
    return true;
}

bool search( const TraceSummary& summary, const Measure& root_side, const Measure& bud_side, std::size_t j,
             std::vector< bool >& root_used, std::vector< bool >& bud_used )
{
    if ( j == bud_side.size() )
        return residue_ok( summary, root_side, bud_side, root_used, bud_used );
    if ( search( summary, root_side, bud_side, j + 1, root_used, bud_used ) )
        return true;
    for ( std::size_t i = 0; i < root_side.size(); ++i )
    {
        const auto* l = link_of( summary, root_side[ i ], bud_side[ j ] );
        if ( root_used[ i ] || !l || !l->stalling )
            continue;
        root_used[ i ] = bud_used[ j ] = true;
        const bool ok = search( summary, root_side, bud_side, j + 1, root_used, bud_used );
        root_used[ i ] = bud_used[ j ] = false;
        if ( ok )
            return true;
    }
    return false;
}

} // namespace

bool definitional_multiset_less( const std::vector< int >& b, const std::vector< int >& a,
                                 const std::function< bool( int, int ) >& less )
{
    // Every sub-multiset X of A via bitmask over positions.
    const auto n = a.size();
    for ( std::size_t mask = 1; mask < ( std::size_t{ 1 } << n ); ++mask )
    {
        std::vector< int > x, kept;
        for ( std::size_t i = 0; i < n; ++i )
            ( mask >> i & 1 ? x : kept ).push_back( a[ i ] );
        if ( !contains_all( b, kept ) )
            continue;
        const auto y = minus( b, kept );
        const bool dominated = std::all_of( y.begin(), y.end(), [ & ]( int v ) {
            return std::any_of( x.begin(), x.end(), [ & ]( int u ) { return less( v, u ); } );
        } );
        if ( dominated )
            return true;
    }
    return false;
}

bool exhaustive_pairing( const TraceSummary& summary, const Measure& root_side, const Measure& bud_side )
{
    std::vector< bool > root_used( root_side.size(), false ), bud_used( bud_side.size(), false );
    return search( summary, root_side, bud_side, 0, root_used, bud_used );
}

} // namespace cproof::reference
