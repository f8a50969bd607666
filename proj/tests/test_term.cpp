#include "cproof/term.hpp"

#include <gtest/gtest.h>

using namespace cproof;

namespace
{
Term s( Term t ) { return app( "s", { std::move( t ) } ); }
Term zero() { return app( "0" ); }
} // namespace

TEST( Term, SubstituteReplacesVariables )
{
    const Atom a{ "p", { var( "x" ), s( var( "y" ) ) } };
    const auto b = substitute( { { "y", zero() } }, a );
    EXPECT_EQ( to_string( b ), "p(x,s(0))" );
}

TEST( Term, UnifyComputesResolvedMgu )
{
    const Atom a{ "p", { var( "x" ), s( var( "y" ) ) } };
    const Atom b{ "p", { s( var( "z" ) ), var( "x" ) } };
    const auto mgu = unify( a, b );
    ASSERT_TRUE( mgu );
    EXPECT_EQ( substitute( *mgu, a ), substitute( *mgu, b ) );
}

TEST( Term, UnifyRejectsOccursCheck )
{
    const Atom a{ "N", { var( "x" ) } };
    const Atom b{ "N", { s( var( "x" ) ) } };
    EXPECT_FALSE( unify( a, b ) );
}

TEST( Term, UnifyRejectsClash )
{
    EXPECT_FALSE( unify( Atom{ "N", { zero() } }, Atom{ "N", { s( var( "x" ) ) } } ) );
    EXPECT_FALSE( unify( Atom{ "N", { zero() } }, Atom{ "E", { zero() } } ) );
}

TEST( Term, MatchIsOneWay )
{
    Substitution subst;
    EXPECT_TRUE( match( Atom{ "N", { s( var( "x" ) ) } }, Atom{ "N", { s( s( var( "y" ) ) ) } }, subst ) );
    EXPECT_EQ( subst.at( "x" ), s( var( "y" ) ) );

    Substitution other;
    EXPECT_FALSE( match( Atom{ "N", { s( s( var( "y" ) ) ) } }, Atom{ "N", { s( var( "x" ) ) } }, other ) );
}

TEST( Term, VariantNeedsBijection )
{
    const Atom pxy{ "p", { var( "x" ), var( "y" ) } };
    const Atom pab{ "p", { var( "a" ), var( "b" ) } };
    const Atom paa{ "p", { var( "a" ), var( "a" ) } };
    EXPECT_TRUE( is_variant( pxy, pab ) );
    EXPECT_FALSE( is_variant( pxy, paa ) );
    EXPECT_FALSE( is_variant( paa, pxy ) );
}

TEST( Term, RenameApartPrefixesEveryVariable )
{
    const auto renamed = rename_apart( Atom{ "p", { var( "x" ), s( var( "y" ) ) } }, "#" );
    std::set< std::string > vars;
    collect_vars( renamed, vars );
    EXPECT_EQ( vars, ( std::set< std::string >{ "#x", "#y" } ) );
}

TEST( Term, OrderingIsTotal )
{
    const Term a = s( zero() );
    const Term b = s( var( "x" ) );
    EXPECT_TRUE( ( a < b ) != ( b < a ) );
    EXPECT_EQ( a <=> a, std::strong_ordering::equal );
}
