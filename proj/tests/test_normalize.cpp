#include "cproof/corpus.hpp"
#include "cproof/generate.hpp"
#include "cproof/normalize.hpp"
#include "cproof/validate.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace cproof;

namespace
{

NormalizedDigraph normalized( const char* name ) { return normalize( corpus_entry( name )->preproof ); }

} // namespace

TEST( Normalize, HydraIsAlreadyNormalized )
{
    const auto doc = *corpus_entry( "2-hydra" );
    const auto nd = normalize( doc.preproof );
    EXPECT_EQ( nd.roots, std::vector< NodeId >{ 0 } );
    EXPECT_EQ( nd.vertices.size(), 28u );
    EXPECT_EQ( nd.induction, doc.preproof.induction );
    for ( const auto& [ id, vertex ] : nd.vertices )
    {
        EXPECT_EQ( vertex.origin, id );
        EXPECT_FALSE( vertex.synthetic );
        EXPECT_EQ( vertex.children, doc.preproof.node( id ).rule.premises );
    }
}

TEST( Normalize, AcyclicIsOneTree )
{
    const auto nd = normalized( "acyclic" );
    EXPECT_EQ( nd.roots, std::vector< NodeId >{ 0 } );
    EXPECT_TRUE( nd.induction.empty() );
}

TEST( Normalize, InternalCompanionBecomesRoot )
{
    const auto nd = normalized( "nested-companion" );
    ASSERT_EQ( nd.roots, ( std::vector< NodeId >{ 0, 7 } ) );
    EXPECT_EQ( nd.vertex( 7 ).origin, 2u );
    EXPECT_TRUE( nd.vertex( 2 ).synthetic );
    EXPECT_TRUE( nd.vertex( 2 ).children.empty() );
    EXPECT_EQ( nd.induction.at( 2 ), 7u );
    EXPECT_EQ( nd.induction.at( 6 ), 7u );
    EXPECT_EQ( nd.tree( 0 ), ( std::vector< NodeId >{ 0, 1, 2 } ) );
    EXPECT_EQ( nd.tree( 7 ), ( std::vector< NodeId >{ 7, 3, 4, 5, 6 } ) );
}

TEST( Normalize, SharedCompanionYieldsOneRoot )
{
    ProofShape shape;
    shape.children = { { 0, { 1 } }, { 1, { 2, 3 } } };
    shape.buds = { { 2, 1 }, { 3, 1 } };
    const auto nd = normalize( shaped_document( shape, "shared" ).preproof );
    EXPECT_EQ( nd.roots, ( std::vector< NodeId >{ 0, 4 } ) );
    EXPECT_EQ( nd.induction.at( 2 ), 4u );
    EXPECT_EQ( nd.induction.at( 3 ), 4u );
    EXPECT_EQ( nd.induction.at( 1 ), 4u );
}

TEST( Normalize, NestedCompanionsSplitDeepestFirst )
{
    // 0 -> 1 -> 2 -> {3 -> 1, 4 -> 2}
    ProofShape shape;
    shape.children = { { 0, { 1 } }, { 1, { 2 } }, { 2, { 3, 4 } } };
    shape.buds = { { 3, 1 }, { 4, 2 } };
    const auto nd = normalize( shaped_document( shape, "nested" ).preproof );
    EXPECT_EQ( nd.roots, ( std::vector< NodeId >{ 0, 5, 6 } ) );
    EXPECT_EQ( nd.vertex( 5 ).origin, 2u );
    EXPECT_EQ( nd.vertex( 6 ).origin, 1u );
    EXPECT_EQ( nd.tree( 6 ), ( std::vector< NodeId >{ 6, 2 } ) );
    EXPECT_EQ( nd.tree( 5 ), ( std::vector< NodeId >{ 5, 3, 4 } ) );
    EXPECT_EQ( nd.induction.at( 3 ), 6u );
    EXPECT_EQ( nd.induction.at( 4 ), 5u );
}

TEST( Normalize, CompanionsAreRootsAndTreesPartitionVertices )
{
    std::mt19937_64 rng( 7 );
    for ( int i = 0; i < 200; ++i )
    {
        const auto doc = random_preproof( rng );
        ASSERT_TRUE( validate_preproof( doc.preproof, doc.system ).empty() );
        const auto nd = normalize( doc.preproof );

        for ( const auto& [ bud, root ] : nd.induction )
        {
            EXPECT_TRUE( nd.is_root( root ) );
            EXPECT_TRUE( nd.vertex( bud ).children.empty() );
        }
        std::size_t covered = 0;
        for ( const auto root : nd.roots )
            covered += nd.tree( root ).size();
        EXPECT_EQ( covered, nd.vertices.size() );

        for ( const auto& [ id, vertex ] : nd.vertices )
            EXPECT_EQ( vertex.sequent, doc.preproof.node( vertex.origin ).sequent );
    }
}

TEST( Normalize, PathEquivalenceOnCorpus )
{
    for ( const auto& doc : builtin_corpus() )
    {
        const auto nd = normalize( doc.preproof );
        for ( std::size_t k = 1; k <= 8; ++k )
            EXPECT_EQ( reference::preproof_walks( doc.preproof, k ), reference::normalized_walks( nd, k ) )
                    << doc.name() << " k=" << k;
    }
}

TEST( Normalize, PathEquivalenceOnRandomPreproofs )
{
    std::mt19937_64 rng( 11 );
    for ( int i = 0; i < 200; ++i )
    {
        const auto doc = random_preproof( rng );
        const auto nd = normalize( doc.preproof );
        for ( std::size_t k = 1; k <= 8; ++k )
            ASSERT_EQ( reference::preproof_walks( doc.preproof, k ), reference::normalized_walks( nd, k ) )
                    << serialize_document( doc );
    }
}

TEST( RootDigraph, HydraEdgeCounts )
{
    const auto graph = root_digraph( normalized( "2-hydra" ) );
    EXPECT_EQ( graph.vertices.size(), 28u );
    EXPECT_EQ( graph.edges.size(), 30u );
    EXPECT_EQ( graph.backlinks, 3u );
}

TEST( RootDigraph, SingleClosedNode )
{
    const auto graph = root_digraph( normalized( "acyclic" ) );
    EXPECT_EQ( graph.vertices.size(), 2u );
    EXPECT_EQ( graph.backlinks, 0u );

    ProofShape single;
    const auto lone = root_digraph( normalize( shaped_document( single, "lone" ).preproof ) );
    EXPECT_EQ( lone.vertices.size(), 1u );
    EXPECT_TRUE( lone.edges.empty() );
}

TEST( RootDigraph, StutteringIsTwoCycle )
{
    const auto graph = root_digraph( normalized( "stuttering" ) );
    EXPECT_EQ( graph.edges, ( std::vector< std::pair< NodeId, NodeId > >{ { 0, 1 }, { 1, 0 } } ) );
}

TEST( RootDigraph, BudsHaveOutDegreeOne )
{
    const auto nd = normalize( chained_cycles( 4 ).preproof );
    const auto graph = root_digraph( nd );
    for ( const auto& [ bud, root ] : nd.induction )
        EXPECT_EQ( graph.successors.at( bud ), std::vector< NodeId >{ root } );
}

TEST( ChainedCycles, NormalizesToFiveVertexTrees )
{
    for ( std::size_t n : { 1u, 2u, 5u } )
    {
        const auto doc = chained_cycles( n );
        ASSERT_TRUE( validate_preproof( doc.preproof, doc.system ).empty() ) << n;
        const auto nd = normalize( doc.preproof );
        EXPECT_EQ( nd.roots.size(), n );
        for ( const auto root : nd.roots )
            EXPECT_EQ( nd.tree( root ).size(), 5u );
    }
}
