#include "cproof/corpus.hpp"
#include "cproof/format.hpp"
#include "cproof/validate.hpp"

#include <gtest/gtest.h>

using namespace cproof;

TEST( Corpus, EveryEntryValidates )
{
    for ( const auto& doc : builtin_corpus() )
    {
        const auto errors = validate_preproof( doc.preproof, doc.system );
        for ( const auto& e : errors )
            ADD_FAILURE() << doc.name() << ": " << to_string( e.kind ) << " at " << ( e.node ? std::to_string( *e.node ) : "-" )
                          << ": " << e.message;
    }
}

TEST( Corpus, EveryEntryRoundTrips )
{
    for ( const auto& doc : builtin_corpus() )
    {
        const auto text = serialize_document( doc );
        const auto back = parse_document( text );
        EXPECT_EQ( back, doc ) << doc.name();
        EXPECT_EQ( serialize_document( back ), text ) << doc.name();
    }
}

TEST( Corpus, HydraStatistics )
{
    const auto hydra = corpus_entry( "2-hydra" );
    ASSERT_TRUE( hydra );
    const auto stats = compute_stats( hydra->preproof );
    EXPECT_EQ( stats.nodes, 28u );
    EXPECT_EQ( stats.depth, 4u );
    EXPECT_EQ( stats.backlinks, 3u );

    const auto unoptimised = corpus_entry( "2-hydra-unoptimised" );
    ASSERT_TRUE( unoptimised );
    EXPECT_EQ( compute_stats( unoptimised->preproof ).nodes, 29u );
    EXPECT_TRUE( unoptimised->preproof.is_bud( 28 ) );
}

TEST( Corpus, SmallEntryStatistics )
{
    const auto o = corpus_entry( "o-implies-n" );
    ASSERT_TRUE( o );
    EXPECT_EQ( compute_stats( o->preproof ), ( ProofStats{ 9, 1, 2 } ) );

    const auto add = corpus_entry( "n-add-zero" );
    ASSERT_TRUE( add );
    EXPECT_EQ( compute_stats( add->preproof ), ( ProofStats{ 7, 1, 1 } ) );

    EXPECT_FALSE( corpus_entry( "missing" ) );
}
