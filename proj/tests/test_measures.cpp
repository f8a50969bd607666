#include "cproof/corpus.hpp"
#include "cproof/generate.hpp"
#include "cproof/measures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cproof;

namespace
{

struct Analysed
{
    NormalizedDigraph nd;
    std::vector< RBPath > paths;
    std::vector< TraceSummary > summaries;

    explicit Analysed( const PreProof& proof ) : nd( normalize( proof ) ), paths( rb_paths( nd, sccs( root_digraph( nd ) ) ) )
    {
        for ( const auto& p : paths )
            summaries.push_back( trace_summary( nd, p ) );
    }

    bool all_pass( const MeasureAssignment& ma ) const
    {
        for ( const auto& c : compare_paths( paths, summaries, ma ) )
            if ( !c.valid )
                return false;
        return true;
    }
};

// 0 -> {1 -> bud 2 back to 0, bud 4 to 1}; only the step 1 -> 2
// progresses. Node 1 becomes root 5, so both paths out of root 0 stall and
// the path out of root 5 progresses.
ProofDocument two_root_cycle()
{
    ProofShape shape;
    shape.children = { { 0, { 1 } }, { 1, { 2 } } };
    shape.buds = { { 2, 0 }, { 4, 1 } };
    shape.children[ 0 ].push_back( 4 );
    shape.pairs[ { 1, 2 } ] = { { 1, 1, true } };
    return shaped_document( shape, "two-root-cycle" );
}

std::size_t total( const MeasureAssignment& ma )
{
    std::size_t n = 0;
    for ( const auto& [ root, m ] : ma.per_root )
        n += m.size();
    return n;
}

} // namespace

TEST( GenOrd, HydraRootMeasure )
{
    const Analysed s( corpus_entry( "2-hydra" )->preproof );
    const auto ma = gen_ord( s.nd, s.paths, s.summaries );
    EXPECT_EQ( ma.at( 0 ), ( Measure{ 1, 2 } ) );
    EXPECT_TRUE( s.all_pass( ma ) );
}

TEST( GenOrd, AcyclicIsEmpty )
{
    const Analysed s( corpus_entry( "acyclic" )->preproof );
    const auto ma = gen_ord( s.nd, s.paths, s.summaries );
    EXPECT_EQ( ma.per_root.size(), 1u );
    EXPECT_TRUE( ma.at( 0 ).empty() );
}

TEST( GenOrd, Stuttering )
{
    const Analysed s( corpus_entry( "stuttering" )->preproof );
    const auto ma = gen_ord( s.nd, s.paths, s.summaries );
    EXPECT_EQ( ma.at( 0 ), Measure{ 1 } );
    EXPECT_FALSE( s.all_pass( ma ) );
}

TEST( GenOrd, OrderIndependent )
{
    std::mt19937_64 rng( 23 );
    for ( int i = 0; i < 200; ++i )
    {
        Analysed s( random_preproof( rng ).preproof );
        const auto forward = gen_ord( s.nd, s.paths, s.summaries );
        std::reverse( s.paths.begin(), s.paths.end() );
        std::reverse( s.summaries.begin(), s.summaries.end() );
        EXPECT_EQ( gen_ord( s.nd, s.paths, s.summaries ), forward );
    }
}

TEST( Refine, PassingAssignmentUnchanged )
{
    const Analysed s( corpus_entry( "2-hydra-unoptimised" )->preproof );
    const auto ma = gen_ord( s.nd, s.paths, s.summaries );
    const auto refined = refine( s.nd, s.paths, s.summaries, ma );
    EXPECT_TRUE( refined.all_valid );
    EXPECT_EQ( refined.assignment, ma );
    EXPECT_TRUE( refined.steps.empty() );
}

TEST( Refine, TwoRootCycleDuplicatesUnderfilledRoot )
{
    const Analysed s( two_root_cycle().preproof );
    ASSERT_EQ( s.nd.roots, ( std::vector< NodeId >{ 0, 5 } ) );
    ASSERT_EQ( s.paths.size(), 3u );

    const auto ma = gen_ord( s.nd, s.paths, s.summaries );
    EXPECT_FALSE( s.all_pass( ma ) );

    const auto refined = refine( s.nd, s.paths, s.summaries, ma );
    EXPECT_TRUE( refined.all_valid );
    EXPECT_EQ( refined.assignment.at( 0 ), ( Measure{ 1, 1 } ) );
    EXPECT_EQ( refined.assignment.at( 5 ), ( Measure{ 1 } ) );

    // Exhaustive search over assignments with multiplicity up to 2 confirms
    // that three items is the least any passing assignment needs.
    std::size_t best = 99;
    for ( std::size_t a = 0; a <= 2; ++a )
        for ( std::size_t b = 0; b <= 2; ++b )
        {
            MeasureAssignment candidate;
            candidate.per_root[ 0 ] = Measure( a, 1 );
            candidate.per_root[ 5 ] = Measure( b, 1 );
            if ( s.all_pass( candidate ) )
                best = std::min( best, a + b );
        }
    EXPECT_EQ( best, total( refined.assignment ) );
}

TEST( Refine, StutteringHitsCap )
{
    const Analysed s( corpus_entry( "stuttering" )->preproof );
    const auto refined = refine( s.nd, s.paths, s.summaries, gen_ord( s.nd, s.paths, s.summaries ) );
    EXPECT_FALSE( refined.all_valid );
    EXPECT_EQ( refined.assignment.at( 0 ), ( Measure{ 1, 1 } ) );
}

TEST( Refine, MonotoneAndBounded )
{
    std::mt19937_64 rng( 41 );
    for ( int i = 0; i < 300; ++i )
    {
        const Analysed s( random_preproof( rng ).preproof );
        const auto ma = gen_ord( s.nd, s.paths, s.summaries );
        const auto refined = refine( s.nd, s.paths, s.summaries, ma );

        std::size_t bound = 0;
        for ( const auto& [ root, before ] : ma.per_root )
        {
            const auto& after = refined.assignment.at( root );
            EXPECT_TRUE( std::includes( after.begin(), after.end(), before.begin(), before.end() ) );
            const auto width = s.nd.vertex( root ).sequent.antecedent.size();
            bound += 2 * width * width;
            for ( const auto index : after )
                EXPECT_NE( s.nd.vertex( root ).sequent.find( index ), nullptr );
        }
        EXPECT_LE( refined.steps.size(), bound );
        EXPECT_EQ( total( refined.assignment ), total( ma ) + refined.steps.size() );
        EXPECT_EQ( refined.all_valid, s.all_pass( refined.assignment ) );
    }
}
