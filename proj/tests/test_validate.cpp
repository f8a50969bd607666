#include "cproof/corpus.hpp"
#include "cproof/validate.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace cproof;

namespace
{

ProofDocument hydra() { return *corpus_entry( "2-hydra" ); }

bool has_kind( const std::vector< WellFormednessError >& errors, WellFormednessError::Kind kind )
{
    return std::any_of( errors.begin(), errors.end(), [ & ]( const auto& e ) { return e.kind == kind; } );
}

Term s( Term t ) { return app( "s", { std::move( t ) } ); }

} // namespace

TEST( Validate, DanglingCompanion )
{
    auto doc = hydra();
    doc.preproof.induction[ 13 ] = 99;
    std::get< rules::Backlink >( doc.preproof.nodes.at( 13 ).rule.rule ).companion = 99;
    EXPECT_TRUE( has_kind( validate_preproof( doc.preproof, doc.system ), WellFormednessError::Kind::dangling_companion ) );
}

TEST( Validate, BudLabelMismatch )
{
    auto doc = hydra();
    doc.preproof.nodes.at( 13 ).sequent.antecedent[ 0 ].index = 7;
    EXPECT_TRUE(
            has_kind( validate_preproof( doc.preproof, doc.system ), WellFormednessError::Kind::sequent_mismatch_at_bud ) );
}

TEST( Validate, BudWithPremises )
{
    auto doc = hydra();
    doc.preproof.nodes.at( 13 ).rule.premises.push_back( 4 );
    EXPECT_FALSE( validate_preproof( doc.preproof, doc.system ).empty() );
}

TEST( Validate, ArityError )
{
    auto doc = hydra();
    doc.preproof.nodes.at( 4 ).sequent.consequent[ 0 ].args.pop_back();
    EXPECT_TRUE( has_kind( validate_preproof( doc.preproof, doc.system ), WellFormednessError::Kind::arity_error ) );
}

TEST( Validate, WrongUnfoldInstance )
{
    auto doc = hydra();
    // Node 6 unfolds N4 y; claim the successor premise carries N4 s(z).
    doc.preproof.nodes.at( 10 ).sequent.antecedent[ 2 ].atom.args[ 0 ] = s( var( "z" ) );
    EXPECT_TRUE(
            has_kind( validate_preproof( doc.preproof, doc.system ), WellFormednessError::Kind::illegal_rule_instance ) );
}

TEST( Validate, NonExhaustiveUnfold )
{
    auto doc = hydra();
    auto& unfold = std::get< rules::LeftUnfold >( doc.preproof.nodes.at( 0 ).rule.rule );
    unfold.cases.pop_back();
    doc.preproof.nodes.at( 0 ).rule.premises.pop_back();
    EXPECT_FALSE( validate_preproof( doc.preproof, doc.system ).empty() );
}

TEST( Validate, WrongRightUnfold )
{
    auto doc = hydra();
    std::get< rules::RightUnfold >( doc.preproof.nodes.at( 10 ).rule.rule ).production = 5;
    EXPECT_TRUE(
            has_kind( validate_preproof( doc.preproof, doc.system ), WellFormednessError::Kind::illegal_rule_instance ) );
}

TEST( Validate, DuplicateIndex )
{
    auto doc = hydra();
    doc.preproof.nodes.at( 5 ).sequent.antecedent[ 2 ].index = 1;
    EXPECT_TRUE( has_kind( validate_preproof( doc.preproof, doc.system ), WellFormednessError::Kind::duplicate_index ) );
}

TEST( Validate, UnreachableNode )
{
    auto doc = hydra();
    doc.preproof.nodes[ 100 ] = doc.preproof.nodes.at( 4 );
    EXPECT_TRUE( has_kind( validate_preproof( doc.preproof, doc.system ), WellFormednessError::Kind::malformed_tree ) );
}

TEST( Validate, SharedChild )
{
    auto doc = hydra();
    doc.preproof.nodes.at( 16 ).rule.premises = { 4 };
    EXPECT_TRUE( has_kind( validate_preproof( doc.preproof, doc.system ), WellFormednessError::Kind::malformed_tree ) );
}

TEST( Validate, BadSubstitution )
{
    auto doc = hydra();
    std::get< rules::Subst >( doc.preproof.nodes.at( 26 ).rule.rule ).theta[ "y" ] = var( "y" );
    EXPECT_TRUE(
            has_kind( validate_preproof( doc.preproof, doc.system ), WellFormednessError::Kind::illegal_rule_instance ) );
}

TEST( Validate, BadWeakening )
{
    auto doc = hydra();
    std::get< rules::Weaken >( doc.preproof.nodes.at( 25 ).rule.rule ).retained = { { 1, 1 }, { 4, 2 } };
    EXPECT_TRUE(
            has_kind( validate_preproof( doc.preproof, doc.system ), WellFormednessError::Kind::illegal_rule_instance ) );
}

TEST( Validate, UnknownPredicate )
{
    auto doc = hydra();
    doc.preproof.nodes.at( 4 ).sequent.consequent[ 0 ].predicate = "q";
    EXPECT_TRUE( has_kind( validate_preproof( doc.preproof, doc.system ), WellFormednessError::Kind::unknown_symbol ) );
}

TEST( Validate, ErrorsAreDeterministic )
{
    auto doc = hydra();
    doc.preproof.nodes.at( 4 ).sequent.consequent[ 0 ].predicate = "q";
    doc.preproof.nodes.at( 5 ).sequent.antecedent[ 2 ].index = 1;
    EXPECT_EQ( validate_preproof( doc.preproof, doc.system ), validate_preproof( doc.preproof, doc.system ) );
}
