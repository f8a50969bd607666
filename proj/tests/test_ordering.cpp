#include "cproof/corpus.hpp"
#include "cproof/ordering.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cproof;

namespace
{

// All multisets over {0, 1, 2} with multiplicity at most 2.
std::vector< std::vector< int > > small_multisets()
{
    std::vector< std::vector< int > > out;
    for ( int c0 = 0; c0 <= 2; ++c0 )
        for ( int c1 = 0; c1 <= 2; ++c1 )
            for ( int c2 = 0; c2 <= 2; ++c2 )
            {
                std::vector< int > m;
                m.insert( m.end(), c0, 0 );
                m.insert( m.end(), c1, 1 );
                m.insert( m.end(), c2, 2 );
                out.push_back( m );
            }
    return out;
}

RBPath dummy_path() { return RBPath{ 0, 1, 0, { 0, 1 } }; }

} // namespace

TEST( MultisetLess, SmallCases )
{
    EXPECT_TRUE( multiset_less( std::vector< int >{}, std::vector< int >{ 1 } ) );
    EXPECT_FALSE( multiset_less( std::vector< int >{ 1 }, std::vector< int >{} ) );
    EXPECT_FALSE( multiset_less( std::vector< int >{ 1, 2 }, std::vector< int >{ 2, 1 } ) );
    EXPECT_TRUE( multiset_less( std::vector< int >{ 1, 1, 1 }, std::vector< int >{ 2 } ) );
    EXPECT_FALSE( multiset_less( std::vector< int >{ 3 }, std::vector< int >{ 2, 2 } ) );
}

TEST( MultisetLess, AgreesWithDefinitionOnChain )
{
    const auto less = []( int a, int b ) { return a < b; };
    const auto all = small_multisets();
    for ( const auto& b : all )
        for ( const auto& a : all )
            EXPECT_EQ( multiset_less( b, a ), reference::definitional_multiset_less( b, a, less ) );
}

TEST( MultisetLess, AgreesWithDefinitionOnPartialOrder )
{
    // 0 < 2 and 1 < 2, with 0 and 1 incomparable.
    const auto less = []( int a, int b ) { return b == 2 && a != 2; };
    const auto all = small_multisets();
    for ( const auto& b : all )
        for ( const auto& a : all )
            EXPECT_EQ( multiset_less( b, a, less ), reference::definitional_multiset_less( b, a, less ) );
}

TEST( MultisetLess, IrreflexiveAndTransitive )
{
    const auto all = small_multisets();
    for ( const auto& a : all )
    {
        EXPECT_FALSE( multiset_less( a, a ) );
        for ( const auto& b : all )
            for ( const auto& c : all )
                if ( multiset_less( a, b ) && multiset_less( b, c ) )
                    EXPECT_TRUE( multiset_less( a, c ) );
    }
}

TEST( TraceMultisetLess, HydraPathWithFullMeasure )
{
    const TraceSummary summary{ { 2, 1, true, false }, { 2, 2, true, false } };
    const auto result = trace_multiset_less( dummy_path(), summary, { 1, 2 }, { 1, 2 } );
    EXPECT_TRUE( result.valid );
    EXPECT_TRUE( result.cancelled.empty() );
    EXPECT_EQ( result.covered, ( std::vector< MatchEntry >{ { 1, 2, true }, { 2, 2, true } } ) );
    EXPECT_TRUE( comparison_holds( result, summary ) );
}

TEST( TraceMultisetLess, StutteringFails )
{
    const TraceSummary summary{ { 1, 1, false, true } };
    EXPECT_FALSE( trace_multiset_less( dummy_path(), summary, { 1 }, { 1 } ).valid );
}

TEST( TraceMultisetLess, EmptyRootSideFails )
{
    EXPECT_FALSE( trace_multiset_less( dummy_path(), {}, {}, {} ).valid );
}

TEST( TraceMultisetLess, CancellationThenCoverage )
{
    // Root {1, 2}, bud {1, 3}: 1 stalls to 1, 2 progresses to 3.
    const TraceSummary summary{ { 1, 1, false, true }, { 2, 3, true, false } };
    const auto result = trace_multiset_less( dummy_path(), summary, { 1, 2 }, { 1, 3 } );
    EXPECT_TRUE( result.valid );
    EXPECT_EQ( result.cancelled, ( std::vector< MatchEntry >{ { 1, 1, false } } ) );
    EXPECT_EQ( result.covered, ( std::vector< MatchEntry >{ { 3, 2, true } } ) );
}

TEST( TraceMultisetLess, MixedLinkMayCancelOrCover )
{
    // Only index 1 on both sides, linked both ways: cancellation would empty
    // the root side, so coverage must be used.
    const TraceSummary summary{ { 1, 1, true, true } };
    const auto result = trace_multiset_less( dummy_path(), summary, { 1 }, { 1 } );
    EXPECT_TRUE( result.valid );
    EXPECT_TRUE( result.cancelled.empty() );
}

TEST( TraceMultisetLess, DegeneratesToNonEmptiness )
{
    // Every link progressing and index-preserving: valid iff both sides
    // are nonempty over the linked indices.
    const TraceSummary summary{ { 1, 1, true, false }, { 2, 2, true, false }, { 3, 3, true, false } };
    for ( const auto& root : std::vector< Measure >{ {}, { 1 }, { 1, 2 }, { 1, 2, 3 } } )
        for ( const auto& bud : std::vector< Measure >{ {}, { 1 }, { 2, 3 } } )
        {
            bool covered = true;
            for ( const auto b : bud )
                covered = covered && std::find( root.begin(), root.end(), b ) != root.end();
            EXPECT_EQ( trace_multiset_less( dummy_path(), summary, root, bud ).valid, !root.empty() && covered );
        }
}

TEST( TraceMultisetLess, AgreesWithExhaustivePairing )
{
    std::mt19937_64 rng( 99 );
    std::uniform_int_distribution< int > index( 1, 3 ), size( 0, 4 ), coin( 0, 2 );
    for ( int round = 0; round < 2000; ++round )
    {
        TraceSummary summary;
        for ( IaaIndex r = 1; r <= 3; ++r )
            for ( IaaIndex b = 1; b <= 3; ++b )
            {
                const bool p = coin( rng ) == 0, s = coin( rng ) == 0;
                if ( p || s )
                    summary.push_back( { r, b, p, s } );
            }
        Measure root, bud;
        for ( int i = size( rng ); i > 0; --i )
            root.push_back( index( rng ) );
        for ( int i = size( rng ); i > 0; --i )
            bud.push_back( index( rng ) );

        const auto result = trace_multiset_less( dummy_path(), summary, root, bud );
        std::sort( root.begin(), root.end() );
        std::sort( bud.begin(), bud.end() );
        ASSERT_EQ( result.valid, reference::exhaustive_pairing( summary, root, bud ) ) << round;
        if ( result.valid )
            ASSERT_TRUE( comparison_holds( result, summary ) );
    }
}

TEST( TraceMultisetLess, RootInflationKeepsValidity )
{
    std::mt19937_64 rng( 5 );
    std::uniform_int_distribution< int > index( 1, 3 ), size( 1, 3 ), coin( 0, 2 );
    for ( int round = 0; round < 1000; ++round )
    {
        TraceSummary summary;
        for ( IaaIndex r = 1; r <= 3; ++r )
            for ( IaaIndex b = 1; b <= 3; ++b )
                if ( const bool p = coin( rng ) == 0, s = coin( rng ) == 0; p || s )
                    summary.push_back( { r, b, p, s } );
        Measure root, bud;
        for ( int i = size( rng ); i > 0; --i )
            root.push_back( index( rng ) );
        for ( int i = size( rng ); i > 0; --i )
            bud.push_back( index( rng ) );

        if ( !trace_multiset_less( dummy_path(), summary, root, bud ).valid )
            continue;
        for ( IaaIndex extra = 1; extra <= 3; ++extra )
        {
            auto inflated = root;
            inflated.push_back( extra );
            EXPECT_TRUE( trace_multiset_less( dummy_path(), summary, inflated, bud ).valid );
        }
    }
}

TEST( TraceMultisetLess, ReplayRejectsTamperedComparison )
{
    const TraceSummary summary{ { 1, 1, false, true }, { 2, 3, true, false } };
    const auto good = trace_multiset_less( dummy_path(), summary, { 1, 2 }, { 1, 3 } );
    ASSERT_TRUE( comparison_holds( good, summary ) );

    auto dropped = good;
    dropped.covered.clear();
    EXPECT_FALSE( comparison_holds( dropped, summary ) );

    auto flipped = good;
    flipped.cancelled[ 0 ].progressing = true;
    EXPECT_FALSE( comparison_holds( flipped, summary ) );

    auto emptied = good;
    emptied.root_side = { 1 };
    EXPECT_FALSE( comparison_holds( emptied, summary ) );
}
