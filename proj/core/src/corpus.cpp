#include "cproof/corpus.hpp"

#include <functional>

namespace cproof
{

namespace
{

Term v( const char* name ) { return var( name ); }
Term zero() { return app( "0" ); }
Term s( Term t ) { return app( "s", { std::move( t ) } ); }

Atom atom( const char* predicate, std::vector< Term > args ) { return Atom{ predicate, std::move( args ) }; }
Atom N( Term t ) { return atom( "N", { std::move( t ) } ); }
Atom E( Term t ) { return atom( "E", { std::move( t ) } ); }
Atom O( Term t ) { return atom( "O", { std::move( t ) } ); }
Atom p( Term a, Term b ) { return atom( "p", { std::move( a ), std::move( b ) } ); }
Atom add( Term a, Term b, Term c ) { return atom( "Add", { std::move( a ), std::move( b ), std::move( c ) } ); }

Iaa ia( IaaIndex index, Atom a ) { return Iaa{ std::move( a ), index }; }

Sequent seq( std::vector< Iaa > lhs, std::vector< Atom > rhs ) { return Sequent{ std::move( lhs ), std::move( rhs ) }; }

rules::UnfoldCase unfold_case( std::size_t production, Substitution theta, Substitution sigma,
                               std::vector< IaaIndex > indices, std::optional< IaaIndex > retain = std::nullopt )
{
    return rules::UnfoldCase{ production, std::move( theta ), std::move( sigma ), std::move( indices ), retain };
}

class builder
{
    ProofDocument _doc;

public:
    builder( std::string name, InductiveSystem system )
    {
        _doc.system = std::move( system );
        _doc.metadata[ "name" ] = std::move( name );
    }

    builder& meta( const std::string& key, std::string value )
    {
        _doc.metadata[ key ] = std::move( value );
        return *this;
    }

    builder& node( NodeId id, Sequent sequent, Rule rule, std::vector< NodeId > premises = {} )
    {
        _doc.preproof.nodes[ id ] = ProofNode{ std::move( sequent ), RuleApplication{ std::move( rule ), std::move( premises ) } };
        return *this;
    }

    builder& bud( NodeId id, Sequent sequent, NodeId companion )
    {
        _doc.preproof.induction[ id ] = companion;
        return node( id, std::move( sequent ), rules::Backlink{ companion } );
    }

    ProofDocument build( NodeId root = 0 )
    {
        _doc.preproof.root = root;
        return std::move( _doc );
    }
};

// N: 0 ⇒ N(0), 1 N(x) ⇒ N(s(x)); p: productions 2-7.
InductiveSystem hydra_system()
{
    InductiveSystem system;
    system.predicates = { { "N", 1 }, { "p", 2 } };
    system.constructors = builtin_constructors();
    system.productions = {
        { {}, N( zero() ) },
        { { N( v( "x" ) ) }, N( s( v( "x" ) ) ) },
        { {}, p( zero(), zero() ) },
        { {}, p( s( zero() ), zero() ) },
        { {}, p( v( "x" ), s( zero() ) ) },
        { { p( v( "x" ), v( "y" ) ) }, p( s( v( "x" ) ), s( s( v( "y" ) ) ) ) },
        { { p( s( v( "y" ) ), v( "y" ) ) }, p( zero(), s( s( v( "y" ) ) ) ) },
        { { p( s( v( "x" ) ), v( "x" ) ) }, p( s( s( v( "x" ) ) ), zero() ) },
    };
    return system;
}

// N: 0-1, E: 2-3, O: 4.
InductiveSystem parity_system()
{
    InductiveSystem system;
    system.predicates = { { "N", 1 }, { "E", 1 }, { "O", 1 } };
    system.constructors = builtin_constructors();
    system.productions = {
        { {}, N( zero() ) },
        { { N( v( "x" ) ) }, N( s( v( "x" ) ) ) },
        { {}, E( zero() ) },
        { { O( v( "x" ) ) }, E( s( v( "x" ) ) ) },
        { { E( v( "x" ) ) }, O( s( v( "x" ) ) ) },
    };
    return system;
}

// N: 0-1, Add: 2-3.
InductiveSystem addition_system()
{
    InductiveSystem system;
    system.predicates = { { "N", 1 }, { "Add", 3 } };
    system.constructors = builtin_constructors();
    system.productions = {
        { {}, N( zero() ) },
        { { N( v( "x" ) ) }, N( s( v( "x" ) ) ) },
        { {}, add( zero(), v( "y" ), v( "y" ) ) },
        { { add( v( "x" ), v( "y" ), v( "z" ) ) }, add( s( v( "x" ) ), v( "y" ), s( v( "z" ) ) ) },
    };
    return system;
}

// `extra_leaf` inserts one weakening before the axiom closing node 23, which
// renumbers the last branch 25-28 as in the non-optimised listing.
ProofDocument two_hydra( bool extra_leaf )
{
    const auto x = v( "x" ), y = v( "y" ), z = v( "z" ), w = v( "w" );
    const auto goal = seq( { ia( 1, N( x ) ), ia( 2, N( y ) ) }, { p( x, y ) } );
    const NodeId shift = extra_leaf ? 1 : 0;

    builder b( extra_leaf ? "2-hydra-unoptimised" : "2-hydra", hydra_system() );
    b.meta( "source", "2-Hydra pre-proof over the N and p definitions" )
            .meta( "sequent", "N1 x /\\ N2 y |- p(x,y)" );
    if ( extra_leaf )
        b.meta( "alias", "non-optimised variant; bud 27 of 2-hydra appears as 28" );
    else
        b.meta( "nodes", "28" ).meta( "depth", "4" ).meta( "backlinks", "3" );

    // Root: case analysis on N2 y.
    b.node( 0, goal,
            rules::LeftUnfold{ 2, { unfold_case( 0, { { "y", zero() } }, {}, {}, 2 ),
                                    unfold_case( 1, { { "y", s( z ) } }, { { "x", z } }, { 2 } ) } },
            { 1, 14 } );

    // y = 0
    b.node( 1, seq( { ia( 1, N( x ) ), ia( 2, N( zero() ) ) }, { p( x, zero() ) } ),
            rules::LeftUnfold{ 1, { unfold_case( 0, { { "x", zero() } }, {}, {}, 1 ),
                                    unfold_case( 1, { { "x", s( y ) } }, { { "x", y } }, { 1 }, 4 ) } },
            { 2, 5 } );
    b.node( 2, seq( { ia( 1, N( zero() ) ), ia( 2, N( zero() ) ) }, { p( zero(), zero() ) } ),
            rules::Weaken{ { { 2, 2 } } }, { 3 } );
    b.node( 3, seq( { ia( 2, N( zero() ) ) }, { p( zero(), zero() ) } ), rules::Weaken{}, { 4 } );
    b.node( 4, seq( {}, { p( zero(), zero() ) } ), rules::Axiom{ 0, 2 } );
    b.node( 5, seq( { ia( 1, N( y ) ), ia( 2, N( zero() ) ), ia( 4, N( s( y ) ) ) }, { p( s( y ), zero() ) } ),
            rules::LeftUnfold{ 4, { unfold_case( 1, {}, { { "x", y } }, { 4 } ) } }, { 6 } );
    b.node( 6, seq( { ia( 1, N( y ) ), ia( 2, N( zero() ) ), ia( 4, N( y ) ) }, { p( s( y ), zero() ) } ),
            rules::LeftUnfold{ 4, { unfold_case( 0, { { "y", zero() } }, {}, {}, 4 ),
                                    unfold_case( 1, { { "y", s( z ) } }, { { "x", z } }, { 4 } ) } },
            { 7, 10 } );
    b.node( 7, seq( { ia( 1, N( zero() ) ), ia( 2, N( zero() ) ), ia( 4, N( zero() ) ) }, { p( s( zero() ), zero() ) } ),
            rules::Weaken{ { { 2, 2 }, { 4, 4 } } }, { 8 } );
    b.node( 8, seq( { ia( 2, N( zero() ) ), ia( 4, N( zero() ) ) }, { p( s( zero() ), zero() ) } ),
            rules::Weaken{ { { 4, 4 } } }, { 9 } );
    b.node( 9, seq( { ia( 4, N( zero() ) ) }, { p( s( zero() ), zero() ) } ), rules::Axiom{ 0, 3 } );
    b.node( 10, seq( { ia( 1, N( s( z ) ) ), ia( 2, N( zero() ) ), ia( 4, N( z ) ) }, { p( s( s( z ) ), zero() ) } ),
            rules::RightUnfold{ 0, 7, {} }, { 11 } );
    b.node( 11, seq( { ia( 1, N( s( z ) ) ), ia( 2, N( zero() ) ), ia( 4, N( z ) ) }, { p( s( z ), z ) } ),
            rules::Weaken{ { { 1, 1 }, { 4, 4 } } }, { 12 } );
    b.node( 12, seq( { ia( 1, N( s( z ) ) ), ia( 4, N( z ) ) }, { p( s( z ), z ) } ),
            rules::Subst{ { { "x", s( z ) }, { "y", z } }, { { 1, 1 }, { 2, 4 } } }, { 13 } );
    b.bud( 13, goal, 0 );

    // y = s(z)
    b.node( 14, seq( { ia( 1, N( x ) ), ia( 2, N( z ) ) }, { p( x, s( z ) ) } ),
            rules::LeftUnfold{ 1, { unfold_case( 0, { { "x", zero() } }, {}, {}, 1 ),
                                    unfold_case( 1, { { "x", s( y ) } }, { { "x", y } }, { 1 }, 4 ) } },
            { 15, 22 } );

    // x = 0
    b.node( 15, seq( { ia( 1, N( zero() ) ), ia( 2, N( z ) ) }, { p( zero(), s( z ) ) } ),
            rules::LeftUnfold{ 2, { unfold_case( 0, { { "z", zero() } }, {}, {}, 2 ),
                                    unfold_case( 1, { { "z", s( y ) } }, { { "x", y } }, { 2 }, 5 ) } },
            { 16, 18 } );
    b.node( 16, seq( { ia( 1, N( zero() ) ), ia( 2, N( zero() ) ) }, { p( zero(), s( zero() ) ) } ), rules::Weaken{},
            { 17 } );
    b.node( 17, seq( {}, { p( zero(), s( zero() ) ) } ), rules::Axiom{ 0, 4 } );
    b.node( 18, seq( { ia( 1, N( zero() ) ), ia( 2, N( y ) ), ia( 5, N( s( y ) ) ) }, { p( zero(), s( s( y ) ) ) } ),
            rules::RightUnfold{ 0, 6, {} }, { 19 } );
    b.node( 19, seq( { ia( 1, N( zero() ) ), ia( 2, N( y ) ), ia( 5, N( s( y ) ) ) }, { p( s( y ), y ) } ),
            rules::Weaken{ { { 2, 2 }, { 5, 1 } } }, { 20 } );
    b.node( 20, seq( { ia( 1, N( s( y ) ) ), ia( 2, N( y ) ) }, { p( s( y ), y ) } ),
            rules::Subst{ { { "x", s( y ) } }, { { 1, 1 }, { 2, 2 } } }, { 21 } );
    b.bud( 21, goal, 0 );

    // x = s(y)
    const NodeId n24 = 24 + shift, n25 = 25 + shift, n26 = 26 + shift, n27 = 27 + shift;
    b.node( 22, seq( { ia( 1, N( y ) ), ia( 2, N( z ) ), ia( 4, N( s( y ) ) ) }, { p( s( y ), s( z ) ) } ),
            rules::LeftUnfold{ 2, { unfold_case( 0, { { "z", zero() } }, {}, {}, 2 ),
                                    unfold_case( 1, { { "z", s( w ) } }, { { "x", w } }, { 2 }, 5 ) } },
            { 23, n24 } );
    const auto leaf = seq( { ia( 1, N( y ) ), ia( 2, N( zero() ) ), ia( 4, N( s( y ) ) ) }, { p( s( y ), s( zero() ) ) } );
    if ( extra_leaf )
    {
        b.node( 23, leaf, rules::Weaken{}, { 24 } );
        b.node( 24, seq( {}, { p( s( y ), s( zero() ) ) } ), rules::Axiom{ 0, 4 } );
    }
    else
    {
        b.node( 23, leaf, rules::Axiom{ 0, 4 } );
    }
    const auto branch = std::vector< Iaa >{ ia( 1, N( y ) ), ia( 2, N( w ) ), ia( 4, N( s( y ) ) ), ia( 5, N( s( w ) ) ) };
    b.node( n24, seq( branch, { p( s( y ), s( s( w ) ) ) } ), rules::RightUnfold{ 0, 5, {} }, { n25 } );
    b.node( n25, seq( branch, { p( y, w ) } ), rules::Weaken{ { { 1, 1 }, { 2, 2 } } }, { n26 } );
    b.node( n26, seq( { ia( 1, N( y ) ), ia( 2, N( w ) ) }, { p( y, w ) } ),
            rules::Subst{ { { "x", y }, { "y", w } }, { { 1, 1 }, { 2, 2 } } }, { n27 } );
    b.bud( n27, goal, 0 );

    return b.build();
}

ProofDocument o_implies_n()
{
    const auto x = v( "x" ), y = v( "y" ), z = v( "z" );
    builder b( "o-implies-n", parity_system() );
    b.meta( "source", "O1 x |- N2 x" ).meta( "nodes", "9" ).meta( "depth", "2" ).meta( "backlinks", "1" );

    const auto goal = seq( { ia( 1, O( x ) ) }, { N( x ) } );
    b.node( 0, goal, rules::LeftUnfold{ 1, { unfold_case( 4, { { "x", s( y ) } }, { { "x", y } }, { 1 } ) } }, { 1 } );
    b.node( 1, seq( { ia( 1, E( y ) ) }, { N( s( y ) ) } ), rules::RightUnfold{ 0, 1, {} }, { 2 } );
    b.node( 2, seq( { ia( 1, E( y ) ) }, { N( y ) } ),
            rules::LeftUnfold{ 1, { unfold_case( 2, { { "y", zero() } }, {}, {}, 1 ),
                                    unfold_case( 3, { { "y", s( z ) } }, { { "x", z } }, { 1 }, 2 ) } },
            { 3, 5 } );
    b.node( 3, seq( { ia( 1, E( zero() ) ) }, { N( zero() ) } ), rules::Weaken{}, { 4 } );
    b.node( 4, seq( {}, { N( zero() ) } ), rules::Axiom{ 0, 0 } );
    b.node( 5, seq( { ia( 1, O( z ) ), ia( 2, E( s( z ) ) ) }, { N( s( z ) ) } ), rules::RightUnfold{ 0, 1, {} }, { 6 } );
    b.node( 6, seq( { ia( 1, O( z ) ), ia( 2, E( s( z ) ) ) }, { N( z ) } ), rules::Weaken{ { { 1, 1 } } }, { 7 } );
    b.node( 7, seq( { ia( 1, O( z ) ) }, { N( z ) } ), rules::Subst{ { { "x", z } }, { { 1, 1 } } }, { 8 } );
    b.bud( 8, goal, 0 );
    return b.build();
}

ProofDocument n_add_zero()
{
    const auto x = v( "x" ), y = v( "y" );
    builder b( "n-add-zero", addition_system() );
    b.meta( "source", "N1 x |- Add1(x,0,x)" ).meta( "nodes", "7" ).meta( "depth", "1" ).meta( "backlinks", "1" );

    const auto goal = seq( { ia( 1, N( x ) ) }, { add( x, zero(), x ) } );
    b.node( 0, goal,
            rules::LeftUnfold{ 1, { unfold_case( 0, { { "x", zero() } }, {}, {}, 1 ),
                                    unfold_case( 1, { { "x", s( y ) } }, { { "x", y } }, { 1 }, 2 ) } },
            { 1, 3 } );
    b.node( 1, seq( { ia( 1, N( zero() ) ) }, { add( zero(), zero(), zero() ) } ), rules::Weaken{}, { 2 } );
    b.node( 2, seq( {}, { add( zero(), zero(), zero() ) } ), rules::Axiom{ 0, 2 } );
    b.node( 3, seq( { ia( 1, N( y ) ), ia( 2, N( s( y ) ) ) }, { add( s( y ), zero(), s( y ) ) } ),
            rules::RightUnfold{ 0, 3, {} }, { 4 } );
    b.node( 4, seq( { ia( 1, N( y ) ), ia( 2, N( s( y ) ) ) }, { add( y, zero(), y ) } ), rules::Weaken{ { { 1, 1 } } },
            { 5 } );
    b.node( 5, seq( { ia( 1, N( y ) ) }, { add( y, zero(), y ) } ), rules::Subst{ { { "x", y } }, { { 1, 1 } } }, { 6 } );
    b.bud( 6, goal, 0 );
    return b.build();
}

// N1 x |- N(x) proved below two weakenings, so the companion is internal.
ProofDocument nested_companion()
{
    const auto x = v( "x" ), y = v( "y" );
    builder b( "nested-companion", parity_system() );
    b.meta( "source", "companion two levels below the root" );

    const auto goal = seq( { ia( 1, N( x ) ) }, { N( x ) } );
    b.node( 0, seq( { ia( 1, N( x ) ), ia( 2, E( x ) ) }, { N( x ) } ), rules::Weaken{ { { 1, 1 } } }, { 1 } );
    b.node( 1, goal, rules::Weaken{ { { 1, 1 } } }, { 2 } );
    b.node( 2, goal,
            rules::LeftUnfold{ 1, { unfold_case( 0, { { "x", zero() } }, {}, {} ),
                                    unfold_case( 1, { { "x", s( y ) } }, { { "x", y } }, { 1 } ) } },
            { 3, 4 } );
    b.node( 3, seq( {}, { N( zero() ) } ), rules::Axiom{ 0, 0 } );
    b.node( 4, seq( { ia( 1, N( y ) ) }, { N( s( y ) ) } ), rules::RightUnfold{ 0, 1, {} }, { 5 } );
    b.node( 5, seq( { ia( 1, N( y ) ) }, { N( y ) } ), rules::Subst{ { { "x", y } }, { { 1, 1 } } }, { 6 } );
    b.bud( 6, goal, 2 );
    return b.build();
}

ProofDocument stuttering()
{
    const auto x = v( "x" );
    builder b( "stuttering", parity_system() );
    b.meta( "source", "back-link over a stuttering step; not a proof" ).meta( "nodes", "2" ).meta( "backlinks", "1" );

    const auto goal = seq( { ia( 1, N( x ) ) }, { E( x ) } );
    b.node( 0, goal, rules::Weaken{ { { 1, 1 } } }, { 1 } );
    b.bud( 1, goal, 0 );
    return b.build();
}

ProofDocument acyclic()
{
    builder b( "acyclic", parity_system() );
    b.meta( "source", "N1 0 |- N(s(0)) without cycles" ).meta( "nodes", "2" ).meta( "backlinks", "0" );

    b.node( 0, seq( { ia( 1, N( zero() ) ) }, { N( s( zero() ) ) } ), rules::RightUnfold{ 0, 1, {} }, { 1 } );
    b.node( 1, seq( { ia( 1, N( zero() ) ) }, { N( zero() ) } ), rules::Axiom{ 0, 0 } );
    return b.build();
}

} // namespace

std::vector< ProofDocument > builtin_corpus()
{
    return { two_hydra( false ), two_hydra( true ), o_implies_n(), n_add_zero(),
             nested_companion(), stuttering(), acyclic() };
}

std::optional< ProofDocument > corpus_entry( std::string_view name )
{
    for ( auto& doc : builtin_corpus() )
        if ( doc.name() == name )
            return std::move( doc );
    return std::nullopt;
}

} // namespace cproof
