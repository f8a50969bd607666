#include "cproof/measures.hpp"

#include <algorithm>
#include <deque>

namespace cproof
{

namespace
{

void add_once( Measure& measure, IaaIndex index )
{
    const auto it = std::lower_bound( measure.begin(), measure.end(), index );
    if ( it == measure.end() || *it != index )
        measure.insert( it, index );
}

void add( Measure& measure, IaaIndex index )
{
    measure.insert( std::upper_bound( measure.begin(), measure.end(), index ), index );
}

std::size_t multiplicity( const Measure& measure, IaaIndex index )
{
    const auto [ lo, hi ] = std::equal_range( measure.begin(), measure.end(), index );
    return static_cast< std::size_t >( hi - lo );
}

bool passes( const RBPath& path, const TraceSummary& summary, const MeasureAssignment& assignment )
{
    return trace_multiset_less( path, summary, assignment.at( path.root ), assignment.at( path.companion ) ).valid;
}

} // namespace

MeasureAssignment gen_ord( const NormalizedDigraph& digraph, const std::vector< RBPath >& paths,
                           const std::vector< TraceSummary >& summaries )
{
    MeasureAssignment assignment;
    for ( const auto root : digraph.roots )
        assignment.per_root[ root ];

    for ( std::size_t i = 0; i < paths.size(); ++i )
        for ( const auto& link : summaries.at( i ) )
        {
            add_once( assignment.per_root[ paths[ i ].root ], link.root_index );
            add_once( assignment.per_root[ paths[ i ].companion ], link.bud_index );
        }
    return assignment;
}

std::vector< PathComparison > compare_paths( const std::vector< RBPath >& paths,
                                             const std::vector< TraceSummary >& summaries,
                                             const MeasureAssignment& assignment )
{
    std::vector< PathComparison > out;
    out.reserve( paths.size() );
    for ( std::size_t i = 0; i < paths.size(); ++i )
        out.push_back( trace_multiset_less( paths[ i ], summaries.at( i ), assignment.at( paths[ i ].root ),
                                            assignment.at( paths[ i ].companion ) ) );
    return out;
}

RefineResult refine( const NormalizedDigraph& digraph, const std::vector< RBPath >& paths,
                     const std::vector< TraceSummary >& summaries, MeasureAssignment assignment,
                     const RefineOptions& options )
{
    RefineResult result;

    const auto cap_of = [ & ]( NodeId root ) {
        return options.cap.value_or( 2 * digraph.vertex( root ).sequent.antecedent.size() );
    };
    const auto failing = [ & ]() -> std::optional< std::size_t > {
        for ( std::size_t i = 0; i < paths.size(); ++i )
            if ( !passes( paths[ i ], summaries[ i ], assignment ) )
                return i;
        return std::nullopt;
    };

    struct request
    {
        NodeId root;
        IaaIndex index;
        std::size_t path;
        bool propagated;
    };

    for ( std::size_t round = 0; round < options.max_rounds; ++round )
    {
        const auto failed = failing();
        if ( !failed )
            break;

        const auto root = paths[ *failed ].root;
        auto& measure = assignment.per_root.at( root );
        std::optional< IaaIndex > candidate;
        std::vector< IaaIndex > indices;
        for ( const auto& iaa : digraph.vertex( root ).sequent.antecedent )
            indices.push_back( iaa.index );
        std::sort( indices.begin(), indices.end() );
        for ( const auto index : indices )
            if ( multiplicity( measure, index ) == 0 )
            {
                candidate = index;
                break;
            }
        if ( !candidate )
            for ( const auto index : indices )
                if ( multiplicity( measure, index ) < cap_of( root ) )
                {
                    candidate = index;
                    break;
                }
        if ( !candidate )
            break;

        std::deque< request > queue{ { root, *candidate, *failed, false } };
        while ( !queue.empty() )
        {
            const auto next = queue.front();
            queue.pop_front();
            auto& target = assignment.per_root.at( next.root );
            if ( multiplicity( target, next.index ) >= cap_of( next.root ) )
                continue;
            add( target, next.index );
            result.steps.push_back( { next.root, next.index, next.path, next.propagated } );

            for ( std::size_t i = 0; i < paths.size(); ++i )
            {
                if ( paths[ i ].companion != next.root || passes( paths[ i ], summaries[ i ], assignment ) )
                    continue;
                const auto& incoming_root = assignment.at( paths[ i ].root );
                std::optional< IaaIndex > stalling, progressing;
                for ( const auto& link : summaries[ i ] )
                {
                    if ( link.bud_index != next.index )
                        continue;
                    if ( link.stalling && !stalling )
                        stalling = link.root_index;
                    if ( link.progressing && !progressing && multiplicity( incoming_root, link.root_index ) == 0 )
                        progressing = link.root_index;
                }
                if ( stalling )
                    queue.push_back( { paths[ i ].root, *stalling, i, true } );
                else if ( progressing )
                    queue.push_back( { paths[ i ].root, *progressing, i, true } );
            }
        }
    }

    result.all_valid = !failing();
    result.assignment = std::move( assignment );
    return result;
}

} // namespace cproof
