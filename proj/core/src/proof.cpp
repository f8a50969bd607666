#include "cproof/proof.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cproof
{

const Iaa* Sequent::find( IaaIndex index ) const
{
    for ( const auto& iaa : antecedent )
        if ( iaa.index == index )
            return &iaa;
    return nullptr;
}

bool same_label( const Sequent& a, const Sequent& b )
{
    if ( a.antecedent.size() != b.antecedent.size() || a.consequent.size() != b.consequent.size() )
        return false;

    auto lhs_a = a.antecedent;
    auto lhs_b = b.antecedent;
    std::sort( lhs_a.begin(), lhs_a.end() );
    std::sort( lhs_b.begin(), lhs_b.end() );

    auto rhs_a = a.consequent;
    auto rhs_b = b.consequent;
    std::sort( rhs_a.begin(), rhs_a.end() );
    std::sort( rhs_b.begin(), rhs_b.end() );

    return lhs_a == lhs_b && rhs_a == rhs_b;
}

std::string to_string( const Iaa& iaa )
{
    const auto atom = to_string( iaa.atom );
    const auto paren = atom.find( '(' );
    const auto tag = std::to_string( iaa.index );
    if ( paren == std::string::npos )
        return atom + tag;
    return atom.substr( 0, paren ) + tag + atom.substr( paren );
}

std::string to_string( const Sequent& sequent )
{
    std::string out;
    for ( std::size_t i = 0; i < sequent.antecedent.size(); ++i )
    {
        if ( i > 0 )
            out += " /\\ ";
        out += to_string( sequent.antecedent[ i ] );
    }
    out += out.empty() ? "|-" : " |-";
    for ( std::size_t i = 0; i < sequent.consequent.size(); ++i )
    {
        out += i > 0 ? " \\/ " : " ";
        out += to_string( sequent.consequent[ i ] );
    }
    return out;
}

const PredicateDecl* InductiveSystem::predicate( const std::string& name ) const
{
    for ( const auto& decl : predicates )
        if ( decl.name == name )
            return &decl;
    return nullptr;
}

const ConstructorDecl* InductiveSystem::constructor( const std::string& name ) const
{
    for ( const auto& decl : constructors )
        if ( decl.name == name )
            return &decl;
    return nullptr;
}

std::vector< ConstructorDecl > builtin_constructors()
{
    return { { "0", 0 }, { "s", 1 } };
}

std::string rule_name( const Rule& rule )
{
    struct visitor
    {
        std::string operator()( const rules::LeftUnfold& ) const { return "L.Unf"; }
        std::string operator()( const rules::RightUnfold& ) const { return "R.Unf"; }
        std::string operator()( const rules::Axiom& ) const { return "Axiom"; }
        std::string operator()( const rules::Identity& ) const { return "Id"; }
        std::string operator()( const rules::ExFalso& ) const { return "Ex Falso"; }
        std::string operator()( const rules::Weaken& ) const { return "Weaken"; }
        std::string operator()( const rules::Subst& ) const { return "Subst"; }
        std::string operator()( const rules::Backlink& ) const { return "Backl"; }
        std::string operator()( const rules::Generic& g ) const { return g.name.empty() ? "Generic" : g.name; }
    };
    return std::visit( visitor{}, rule );
}

ProofStats compute_stats( const PreProof& proof )
{
    ProofStats stats;
    stats.nodes = proof.nodes.size();
    stats.backlinks = proof.induction.size();

    if ( !proof.nodes.contains( proof.root ) )
        return stats;

    // Premise edges form a tree under validation; the visited set keeps
    // this total on malformed input.
    std::vector< std::pair< NodeId, std::size_t > > stack{ { proof.root, 0 } };
    std::set< NodeId > seen;
    while ( !stack.empty() )
    {
        const auto [ id, depth ] = stack.back();
        stack.pop_back();
        if ( !seen.insert( id ).second )
            continue;
        const auto& node = proof.node( id );
        const auto here = depth + ( std::holds_alternative< rules::LeftUnfold >( node.rule.rule ) ? 1 : 0 );
        stats.depth = std::max( stats.depth, here );
        for ( const auto child : node.rule.premises )
            if ( proof.nodes.contains( child ) )
                stack.emplace_back( child, here );
    }
    return stats;
}

} // namespace cproof
