#include "cproof/generate.hpp"

#include <algorithm>
#include <set>

namespace cproof
{

namespace
{

InductiveSystem nat_system()
{
    InductiveSystem system;
    system.predicates = { { "N", 1 } };
    system.constructors = builtin_constructors();
    system.productions = { { {}, Atom{ "N", { app( "0" ) } } },
                           { { Atom{ "N", { var( "x" ) } } }, Atom{ "N", { app( "s", { var( "x" ) } ) } } } };
    return system;
}

Sequent sequent_of( const std::vector< IaaIndex >& indices )
{
    Sequent sequent;
    for ( const auto index : indices )
        sequent.antecedent.push_back( Iaa{ Atom{ "N", { var( "x" + std::to_string( index ) ) } }, index } );
    sequent.consequent.push_back( Atom{ "N", { var( "y" ) } } );
    return sequent;
}

std::vector< TracePair > identity_pairs( const std::vector< IaaIndex >& from, const std::vector< IaaIndex >& to )
{
    std::vector< TracePair > pairs;
    for ( const auto index : from )
        if ( std::find( to.begin(), to.end(), index ) != to.end() )
            pairs.push_back( { index, index, false } );
    return pairs;
}

} // namespace

ProofDocument shaped_document( const ProofShape& shape, const std::string& name )
{
    std::set< NodeId > ids{ shape.root };
    for ( const auto& [ parent, kids ] : shape.children )
    {
        ids.insert( parent );
        ids.insert( kids.begin(), kids.end() );
    }
    for ( const auto& [ bud, companion ] : shape.buds )
        ids.insert( bud );

    const auto antecedent = [ & ]( NodeId id ) {
        if ( const auto bud = shape.buds.find( id ); bud != shape.buds.end() )
            id = bud->second;
        const auto it = shape.antecedents.find( id );
        return it == shape.antecedents.end() ? std::vector< IaaIndex >{ 1 } : it->second;
    };

    ProofDocument doc;
    doc.system = nat_system();
    doc.metadata[ "name" ] = name;
    doc.preproof.root = shape.root;
    for ( const auto id : ids )
    {
        ProofNode node;
        node.sequent = sequent_of( antecedent( id ) );
        if ( const auto bud = shape.buds.find( id ); bud != shape.buds.end() )
        {
            node.rule.rule = rules::Backlink{ bud->second };
            doc.preproof.induction[ id ] = bud->second;
        }
        else
        {
            rules::Generic generic{ "G", std::vector< std::vector< TracePair > >{} };
            if ( const auto it = shape.children.find( id ); it != shape.children.end() )
            {
                node.rule.premises = it->second;
                for ( const auto child : it->second )
                {
                    const auto declared = shape.pairs.find( { id, child } );
                    generic.pairs->push_back( declared != shape.pairs.end()
                                                      ? declared->second
                                                      : identity_pairs( antecedent( id ), antecedent( child ) ) );
                }
            }
            node.rule.rule = std::move( generic );
        }
        doc.preproof.nodes.emplace( id, std::move( node ) );
    }
    return doc;
}

ProofDocument chained_cycles( std::size_t n )
{
    ProofShape shape;
    const auto r = []( std::size_t i ) { return static_cast< NodeId >( 4 * i ); };
    for ( std::size_t i = 0; i < n; ++i )
    {
        const auto root = r( i ), a = root + 1, leaf = root + 2, bud = root + 3;
        shape.children[ root ] = { a, leaf };
        shape.pairs[ { root, a } ] = { { 1, 1, true } };
        shape.buds[ bud ] = i + 1 < n ? r( i + 1 ) : r( 0 );
        if ( i + 1 < n )
        {
            shape.children[ a ] = { bud, r( i + 1 ) };
        }
        else
        {
            const auto closing = static_cast< NodeId >( 4 * n );
            shape.buds[ closing ] = r( 0 );
            shape.children[ a ] = { bud, closing };
        }
    }
    return shaped_document( shape, "chained-cycles-" + std::to_string( n ) );
}

ProofDocument random_preproof( std::mt19937_64& rng, const RandomOptions& options )
{
    const auto coin = [ & ]( double p ) { return std::bernoulli_distribution( p )( rng ); };
    const auto pick = [ & ]( std::size_t lo, std::size_t hi ) {
        return std::uniform_int_distribution< std::size_t >( lo, hi )( rng );
    };

    const auto count = pick( 1, std::max< std::size_t >( options.max_nodes, 1 ) );
    ProofShape shape;
    std::vector< std::size_t > arity( count, 0 );
    for ( NodeId id = 1; id < count; ++id )
    {
        std::vector< NodeId > open;
        for ( NodeId p = 0; p < id; ++p )
            if ( arity[ p ] < 2 )
                open.push_back( p );
        const auto parent = open[ pick( 0, open.size() - 1 ) ];
        shape.children[ parent ].push_back( id );
        ++arity[ parent ];
    }

    std::vector< NodeId > internal, leaves;
    for ( NodeId id = 0; id < count; ++id )
        ( arity[ id ] > 0 ? internal : leaves ).push_back( id );

    for ( NodeId id = 0; id < count; ++id )
    {
        std::vector< IaaIndex > indices;
        for ( std::size_t i = 1; i <= options.max_iaas; ++i )
            if ( coin( 0.6 ) )
                indices.push_back( static_cast< IaaIndex >( i ) );
        shape.antecedents[ id ] = indices;
    }

    for ( const auto leaf : leaves )
        if ( leaf != shape.root && !internal.empty() && coin( options.bud_probability ) )
            shape.buds[ leaf ] = internal[ pick( 0, internal.size() - 1 ) ];

    const auto antecedent = [ & ]( NodeId id ) {
        const auto bud = shape.buds.find( id );
        return shape.antecedents.at( bud == shape.buds.end() ? id : bud->second );
    };
    for ( const auto& [ parent, kids ] : shape.children )
        for ( const auto child : kids )
        {
            auto& pairs = shape.pairs[ { parent, child } ];
            for ( const auto from : antecedent( parent ) )
                for ( const auto to : antecedent( child ) )
                    if ( coin( options.pair_probability ) )
                        pairs.push_back( { from, to, coin( options.progress_probability ) } );
        }

    return shaped_document( shape, "random" );
}

} // namespace cproof
