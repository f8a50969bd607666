#include "cproof/corpus.hpp"
#include "cproof/generate.hpp"
#include "cproof/traces.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace cproof;

namespace
{

struct Fixture
{
    NormalizedDigraph nd;
    std::vector< RBPath > paths;

    explicit Fixture( const PreProof& proof ) : nd( normalize( proof ) ), paths( rb_paths( nd, sccs( root_digraph( nd ) ) ) ) {}

    const RBPath& to( NodeId bud ) const
    {
        for ( const auto& p : paths )
            if ( p.bud == bud )
                return p;
        throw std::out_of_range( "no rb-path" );
    }
};

using Occurrences = std::vector< std::string >;

std::set< Occurrences > rendered( const Fixture& f, const RBPath& path )
{
    std::set< Occurrences > out;
    for ( const auto& t : traces_along( f.nd, path ) )
        out.insert( trace_occurrences( f.nd, path, t ) );
    return out;
}

// Summary computed directly from the enumerated traces.
TraceSummary summary_from_traces( const std::vector< Trace >& traces )
{
    std::map< std::pair< IaaIndex, IaaIndex >, TraceLink > links;
    for ( const auto& t : traces )
    {
        auto& link = links[ { t.root_index(), t.bud_index() } ];
        link.root_index = t.root_index();
        link.bud_index = t.bud_index();
        ( t.progressing() ? link.progressing : link.stalling ) = true;
    }
    TraceSummary out;
    for ( const auto& [ k, v ] : links )
        out.push_back( v );
    return out;
}

} // namespace

TEST( Traces, HydraPathTo13 )
{
    const Fixture f( corpus_entry( "2-hydra" )->preproof );
    const auto& path = f.to( 13 );
    EXPECT_EQ( rendered( f, path ),
               ( std::set< Occurrences >{
                       { "N1(x)", "N1(x)", "N1(y)*", "N1(y)", "N1(s(z))", "N1(s(z))", "N1(s(z))", "N1(x)" },
                       { "N1(x)", "N1(x)", "N4(s(y))", "N4(y)*", "N4(z)*", "N4(z)", "N4(z)", "N2(y)" } } ) );
    EXPECT_EQ( trace_summary( f.nd, path ), ( TraceSummary{ { 1, 1, true, false }, { 1, 2, true, false } } ) );
}

TEST( Traces, HydraPathTo21 )
{
    const Fixture f( corpus_entry( "2-hydra" )->preproof );
    const auto& path = f.to( 21 );
    EXPECT_EQ( rendered( f, path ),
               ( std::set< Occurrences >{
                       { "N2(y)", "N2(z)*", "N2(z)", "N2(y)*", "N2(y)", "N2(y)", "N2(y)" },
                       { "N2(y)", "N2(z)*", "N2(z)", "N5(s(y))", "N5(s(y))", "N1(s(y))", "N1(x)" } } ) );
    EXPECT_EQ( trace_summary( f.nd, path ), ( TraceSummary{ { 2, 1, true, false }, { 2, 2, true, false } } ) );
}

TEST( Traces, HydraPathTo27 )
{
    const Fixture f( corpus_entry( "2-hydra" )->preproof );
    const auto& path = f.to( 27 );
    EXPECT_EQ( rendered( f, path ),
               ( std::set< Occurrences >{ { "N1(x)", "N1(x)", "N1(y)*", "N1(y)", "N1(y)", "N1(y)", "N1(x)" },
                                          { "N2(y)", "N2(z)*", "N2(z)", "N2(w)*", "N2(w)", "N2(w)", "N2(y)" } } ) );
    EXPECT_EQ( trace_summary( f.nd, path ), ( TraceSummary{ { 1, 1, true, false }, { 2, 2, true, false } } ) );
}

TEST( Traces, UnoptimisedVariantLastPath )
{
    const Fixture f( corpus_entry( "2-hydra-unoptimised" )->preproof );
    EXPECT_EQ( f.paths.size(), 3u );
    EXPECT_EQ( trace_summary( f.nd, f.to( 28 ) ), ( TraceSummary{ { 1, 1, true, false }, { 2, 2, true, false } } ) );
}

TEST( Traces, StutteringIsNonProgressing )
{
    const Fixture f( corpus_entry( "stuttering" )->preproof );
    ASSERT_EQ( f.paths.size(), 1u );
    EXPECT_EQ( trace_summary( f.nd, f.paths[ 0 ] ), ( TraceSummary{ { 1, 1, false, true } } ) );
}

TEST( Traces, WeakeningChainIsIdentity )
{
    ProofShape shape;
    shape.children = { { 0, { 1 } }, { 1, { 2 } }, { 2, { 3 } } };
    shape.buds = { { 3, 0 } };
    shape.antecedents = { { 0, { 1, 2 } }, { 1, { 1, 2 } }, { 2, { 1, 2 } } };
    const Fixture f( shaped_document( shape, "chain" ).preproof );
    ASSERT_EQ( f.paths.size(), 1u );
    EXPECT_EQ( trace_summary( f.nd, f.paths[ 0 ] ), ( TraceSummary{ { 1, 1, false, true }, { 2, 2, false, true } } ) );
}

TEST( Traces, DroppedAntecedentGivesEmptySummary )
{
    ProofShape shape;
    shape.children = { { 0, { 1 } }, { 1, { 2 } } };
    shape.buds = { { 2, 0 } };
    shape.antecedents = { { 0, { 1 } }, { 1, {} } };
    const Fixture f( shaped_document( shape, "drop" ).preproof );
    ASSERT_EQ( f.paths.size(), 1u );
    EXPECT_TRUE( trace_summary( f.nd, f.paths[ 0 ] ).empty() );
    EXPECT_TRUE( traces_along( f.nd, f.paths[ 0 ] ).empty() );
}

TEST( Traces, MixedFlagsKeepBoth )
{
    ProofShape shape;
    shape.children = { { 0, { 1, 3 } }, { 1, { 2 } } };
    shape.buds = { { 2, 0 } };
    shape.antecedents = { { 0, { 1, 2 } }, { 1, { 1, 2 } } };
    shape.pairs[ { 0, 1 } ] = { { 1, 1, true }, { 1, 2, false } };
    shape.pairs[ { 1, 2 } ] = { { 1, 1, false }, { 2, 1, false } };
    const Fixture f( shaped_document( shape, "mixed" ).preproof );
    ASSERT_EQ( f.paths.size(), 1u );
    EXPECT_EQ( trace_summary( f.nd, f.paths[ 0 ] ), ( TraceSummary{ { 1, 1, true, true } } ) );
    EXPECT_EQ( traces_along( f.nd, f.paths[ 0 ] ).size(), 2u );
}

TEST( Traces, SummaryAgreesWithEnumerationAndWitnessesReplay )
{
    std::mt19937_64 rng( 17 );
    RandomOptions options;
    options.max_nodes = 10;
    for ( int i = 0; i < 300; ++i )
    {
        const Fixture f( random_preproof( rng, options ).preproof );
        for ( const auto& path : f.paths )
        {
            const auto traces = traces_along( f.nd, path );
            for ( const auto& t : traces )
                ASSERT_TRUE( replay_trace( f.nd, path, t ) );

            const auto summary = trace_summary( f.nd, path );
            ASSERT_EQ( summary, summary_from_traces( traces ) );

            for ( const auto& link : summary )
                for ( const bool flag : { true, false } )
                {
                    const auto witness = witness_trace( f.nd, path, link.root_index, link.bud_index, flag );
                    ASSERT_EQ( witness.has_value(), flag ? link.progressing : link.stalling );
                    if ( witness )
                    {
                        EXPECT_TRUE( replay_trace( f.nd, path, *witness ) );
                        EXPECT_EQ( witness->progressing(), flag );
                        EXPECT_EQ( witness->root_index(), link.root_index );
                        EXPECT_EQ( witness->bud_index(), link.bud_index );
                    }
                }
        }
    }
}

TEST( Traces, CompositionOverSplitPoints )
{
    // Joining the traces of a prefix with the traces of the matching suffix
    // gives the traces of the whole path.
    const Fixture f( corpus_entry( "2-hydra" )->preproof );
    for ( const auto& path : f.paths )
    {
        const auto whole = traces_along( f.nd, path );
        for ( std::size_t cut = 1; cut + 1 < path.nodes.size(); ++cut )
        {
            std::set< Trace > joined;
            for ( const auto& t : whole )
            {
                Trace head{ { t.indices.begin(), t.indices.begin() + cut + 1 },
                            { t.progress.begin(), t.progress.begin() + cut } };
                Trace tail{ { t.indices.begin() + cut, t.indices.end() }, { t.progress.begin() + cut, t.progress.end() } };
                ASSERT_EQ( head.indices.back(), tail.indices.front() );
                auto indices = head.indices;
                indices.insert( indices.end(), tail.indices.begin() + 1, tail.indices.end() );
                auto progress = head.progress;
                progress.insert( progress.end(), tail.progress.begin(), tail.progress.end() );
                joined.insert( Trace{ indices, progress } );
            }
            EXPECT_EQ( joined, std::set< Trace >( whole.begin(), whole.end() ) );
        }
    }
}

TEST( Traces, ReplayRejectsBrokenTrace )
{
    const Fixture f( corpus_entry( "2-hydra" )->preproof );
    const auto& path = f.to( 21 );
    auto t = traces_along( f.nd, path ).front();
    t.progress[ 0 ] = !t.progress[ 0 ];
    EXPECT_FALSE( replay_trace( f.nd, path, t ) );
    t.progress[ 0 ] = !t.progress[ 0 ];
    t.indices[ 3 ] = 9;
    EXPECT_FALSE( replay_trace( f.nd, path, t ) );
}
