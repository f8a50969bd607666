#include "cproof/ordering.hpp"


namespace cproof
{

namespace
{

const TraceLink* find_link( const TraceSummary& summary, IaaIndex root_index, IaaIndex bud_index )
{
    for ( const auto& link : summary )
        if ( link.root_index == root_index && link.bud_index == bud_index )
            return &link;
    return nullptr;
}

bool stalls( const TraceSummary& summary, IaaIndex root_index, IaaIndex bud_index )
{
    const auto* link = find_link( summary, root_index, bud_index );
    return link && link->stalling;
}

bool progresses( const TraceSummary& summary, IaaIndex root_index, IaaIndex bud_index )
{
    const auto* link = find_link( summary, root_index, bud_index );
    return link && link->progressing;
}

// Item-level bipartite matching (Kuhn): every demanded bud item must be
// matched to a distinct root slot along a non-progressing link.
class canceller
{
    const std::vector< IaaIndex >& _demand;
    const std::vector< IaaIndex >& _slots;
    const TraceSummary& _summary;
    std::vector< int > _owner; // slot -> demand position, or -1
    std::vector< bool > _seen;

    bool augment( std::size_t d )
    {
        for ( std::size_t s = 0; s < _slots.size(); ++s )
        {
            if ( _seen[ s ] || !stalls( _summary, _slots[ s ], _demand[ d ] ) )
                continue;
            _seen[ s ] = true;
            if ( _owner[ s ] < 0 || augment( static_cast< std::size_t >( _owner[ s ] ) ) )
            {
                _owner[ s ] = static_cast< int >( d );
                return true;
            }
        }
        return false;
    }

public:
    canceller( const std::vector< IaaIndex >& demand, const std::vector< IaaIndex >& slots, const TraceSummary& summary )
        : _demand( demand ), _slots( slots ), _summary( summary ), _owner( slots.size(), -1 )
    {
    }

    bool run()
    {
        for ( std::size_t d = 0; d < _demand.size(); ++d )
        {
            _seen.assign( _slots.size(), false );
            if ( !augment( d ) )
                return false;
        }
        return true;
    }

    std::vector< MatchEntry > pairs() const
    {
        std::vector< MatchEntry > out;
        for ( std::size_t s = 0; s < _slots.size(); ++s )
            if ( _owner[ s ] >= 0 )
                out.push_back( { _demand[ static_cast< std::size_t >( _owner[ s ] ) ], _slots[ s ], false } );
        std::sort( out.begin(), out.end() );
        return out;
    }
};

void erase_one( std::vector< IaaIndex >& items, IaaIndex index )
{
    items.erase( std::find( items.begin(), items.end(), index ) );
}

} // namespace

PathComparison trace_multiset_less( const RBPath& path, const TraceSummary& summary, const Measure& root_side,
                                    const Measure& bud_side )
{
    PathComparison result;
    result.path = path;
    result.root_side = root_side;
    result.bud_side = bud_side;
    std::sort( result.root_side.begin(), result.root_side.end() );
    std::sort( result.bud_side.begin(), result.bud_side.end() );

    std::vector< IaaIndex > distinct_roots = result.root_side;
    distinct_roots.erase( std::unique( distinct_roots.begin(), distinct_roots.end() ), distinct_roots.end() );
    if ( distinct_roots.empty() || distinct_roots.size() >= 8 * sizeof( unsigned long ) )
        return result;

    // Choose the set S of root indices that keep at least one item. Bud
    // items not reachable by a progressing trace from S must all be
    // cancelled; items outside S may be spent freely.
    const unsigned long full = ( 1UL << distinct_roots.size() ) - 1;
    for ( unsigned long mask = full; mask > 0; --mask )
    {
        std::vector< IaaIndex > demand;
        for ( const auto b : result.bud_side )
        {
            bool reachable = false;
            for ( std::size_t i = 0; i < distinct_roots.size() && !reachable; ++i )
                reachable = ( mask >> i & 1UL ) && progresses( summary, distinct_roots[ i ], b );
            if ( !reachable )
                demand.push_back( b );
        }

        std::vector< IaaIndex > slots = result.root_side;
        for ( std::size_t i = 0; i < distinct_roots.size(); ++i )
            if ( mask >> i & 1UL )
                erase_one( slots, distinct_roots[ i ] );

        canceller matcher( demand, slots, summary );
        if ( !matcher.run() )
            continue;

        result.cancelled = matcher.pairs();
        auto residue_root = result.root_side;
        auto residue_bud = result.bud_side;
        for ( const auto& pair : result.cancelled )
        {
            erase_one( residue_root, pair.root_index );
            erase_one( residue_bud, pair.bud_index );
        }
        for ( const auto b : residue_bud )
            for ( const auto a : distinct_roots )
                if ( std::find( residue_root.begin(), residue_root.end(), a ) != residue_root.end()
                     && progresses( summary, a, b ) )
                {
                    result.covered.push_back( { b, a, true } );
                    break;
                }
        result.valid = true;
        return result;
    }
    return result;
}

bool comparison_holds( const PathComparison& comparison, const TraceSummary& summary )
{
    auto residue_root = comparison.root_side;
    auto residue_bud = comparison.bud_side;
    for ( const auto& pair : comparison.cancelled )
    {
        if ( pair.progressing || !stalls( summary, pair.root_index, pair.bud_index ) )
            return false;
        const auto r = std::find( residue_root.begin(), residue_root.end(), pair.root_index );
        const auto b = std::find( residue_bud.begin(), residue_bud.end(), pair.bud_index );
        if ( r == residue_root.end() || b == residue_bud.end() )
            return false;
        residue_root.erase( r );
        residue_bud.erase( b );
    }
    if ( residue_root.empty() )
        return false;

    std::sort( residue_bud.begin(), residue_bud.end() );
    auto claimed = std::vector< IaaIndex >{};
    for ( const auto& cover : comparison.covered )
    {
        if ( !cover.progressing || !progresses( summary, cover.root_index, cover.bud_index ) )
            return false;
        if ( std::find( residue_root.begin(), residue_root.end(), cover.root_index ) == residue_root.end() )
            return false;
        claimed.push_back( cover.bud_index );
    }
    std::sort( claimed.begin(), claimed.end() );
    return claimed == residue_bud;
}

} // namespace cproof
