#include "cproof/steps.hpp"

#include <algorithm>

namespace cproof
{

namespace
{

std::vector< TracePair > identity_pairs( const Sequent& sequent, std::optional< IaaIndex > except = std::nullopt )
{
    std::vector< TracePair > pairs;
    for ( const auto& iaa : sequent.antecedent )
        if ( iaa.index != except )
            pairs.push_back( { iaa.index, iaa.index, false } );
    return pairs;
}

} // namespace

std::vector< TracePair > step_trace_pairs( const PreProof& proof, NodeId node, std::size_t premise_position )
{
    const auto& here = proof.node( node );
    if ( premise_position >= here.rule.premises.size() )
        throw std::out_of_range( "node " + std::to_string( node ) + " has no premise at position "
                                 + std::to_string( premise_position ) );

    std::vector< TracePair > pairs;

    if ( const auto* unfold = std::get_if< rules::LeftUnfold >( &here.rule.rule ) )
    {
        const auto& unfold_case = unfold->cases.at( premise_position );
        pairs = identity_pairs( here.sequent, unfold->target );
        if ( unfold_case.retain )
            pairs.push_back( { unfold->target, *unfold_case.retain, false } );
        for ( const auto index : unfold_case.premise_indices )
            pairs.push_back( { unfold->target, index, true } );
    }
    else if ( std::holds_alternative< rules::RightUnfold >( here.rule.rule ) )
    {
        pairs = identity_pairs( here.sequent );
    }
    else if ( const auto* weaken = std::get_if< rules::Weaken >( &here.rule.rule ) )
    {
        for ( const auto& [ from, to ] : weaken->retained )
            pairs.push_back( { from, to, false } );
    }
    else if ( const auto* subst = std::get_if< rules::Subst >( &here.rule.rule ) )
    {
        for ( const auto& [ premise_index, conclusion_index ] : subst->indices )
            pairs.push_back( { conclusion_index, premise_index, false } );
    }
    else if ( const auto* generic = std::get_if< rules::Generic >( &here.rule.rule ) )
    {
        if ( !generic->pairs || premise_position >= generic->pairs->size() )
            throw MissingDeclaredTracePairs( "generic rule at node " + std::to_string( node )
                                             + " declares no trace pairs" );
        pairs = ( *generic->pairs )[ premise_position ];
    }

    std::sort( pairs.begin(), pairs.end() );
    pairs.erase( std::unique( pairs.begin(), pairs.end() ), pairs.end() );
    return pairs;
}

std::vector< TracePair > backlink_trace_pairs( const Sequent& bud )
{
    auto pairs = identity_pairs( bud );
    std::sort( pairs.begin(), pairs.end() );
    return pairs;
}

} // namespace cproof
