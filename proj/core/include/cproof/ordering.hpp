#pragma once

#include "cproof/analysis.hpp"
#include "cproof/traces.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

namespace cproof
{

// Multiset extension of a strict order `less`: B <mul A iff B != A and every
// element with more copies in B than in A is dominated by an element with
// more copies in A than in B (Huet and Oppen's characterization).
template < class T, class Less = std::less< T > >
[[nodiscard]] bool multiset_less( const std::vector< T >& b, const std::vector< T >& a, Less less = {} )
{
    const auto count = []( const std::vector< T >& m, const T& x ) {
        return static_cast< std::size_t >( std::count( m.begin(), m.end(), x ) );
    };

    std::vector< T > excess_a, excess_b;
    for ( const auto& x : a )
        if ( count( a, x ) > count( b, x ) && std::find( excess_a.begin(), excess_a.end(), x ) == excess_a.end() )
            excess_a.push_back( x );
    for ( const auto& y : b )
        if ( count( b, y ) > count( a, y ) && std::find( excess_b.begin(), excess_b.end(), y ) == excess_b.end() )
            excess_b.push_back( y );

    if ( excess_a.empty() && excess_b.empty() )
        return false;
    return std::all_of( excess_b.begin(), excess_b.end(), [ & ]( const T& y ) {
        return std::any_of( excess_a.begin(), excess_a.end(), [ & ]( const T& x ) { return less( y, x ); } );
    } );
}

// Sorted multiset of IAA indices of a root sequent.
using Measure = std::vector< IaaIndex >;

struct MatchEntry
{
    IaaIndex bud_index = 0;
    IaaIndex root_index = 0;
    bool progressing = false;

    friend bool operator==( const MatchEntry&, const MatchEntry& ) = default;
    friend auto operator<=>( const MatchEntry&, const MatchEntry& ) = default;
};

// Outcome of comparing M(companion) against M(root) along one rb-path.
// `cancelled` pairs bud and root items through non-progressing traces, one
// item each; `covered` assigns every remaining bud item a remaining root item
// with a progressing trace to it.
struct PathComparison
{
    RBPath path;
    Measure bud_side;
    Measure root_side;
    std::vector< MatchEntry > cancelled;
    std::vector< MatchEntry > covered;
    bool valid = false;

    friend bool operator==( const PathComparison&, const PathComparison& ) = default;
};

// Trace-based multiset extension: valid iff some cancellation through
// non-progressing traces leaves a nonempty root residue that covers the bud
// residue through progressing traces.
[[nodiscard]] PathComparison trace_multiset_less( const RBPath& path, const TraceSummary& summary,
                                                  const Measure& root_side, const Measure& bud_side );

// Checks a comparison's cancellations and coverage against the definition.
[[nodiscard]] bool comparison_holds( const PathComparison& comparison, const TraceSummary& summary );

} // namespace cproof
