#include "cproof/validate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace cproof
{

std::string to_string( WellFormednessError::Kind kind )
{
    using K = WellFormednessError::Kind;
    switch ( kind )
    {
    case K::dangling_companion: return "DanglingCompanion";
    case K::sequent_mismatch_at_bud: return "SequentMismatchAtBud";
    case K::non_terminal_bud: return "NonTerminalBud";
    case K::arity_error: return "ArityError";
    case K::illegal_rule_instance: return "IllegalRuleInstance";
    case K::duplicate_index: return "DuplicateIndex";
    case K::unknown_symbol: return "UnknownSymbol";
    case K::malformed_tree: return "MalformedTree";
    }
    return "Unknown";
}

std::string to_string( const WellFormednessError& error )
{
    std::string out = to_string( error.kind );
    if ( error.node )
        out += " at node " + std::to_string( *error.node );
    return out + ": " + error.message;
}

namespace
{

using Kind = WellFormednessError::Kind;
using IndexedAtoms = std::map< IaaIndex, Atom >;

std::optional< IndexedAtoms > indexed( const std::vector< Iaa >& antecedent )
{
    IndexedAtoms out;
    for ( const auto& iaa : antecedent )
        if ( !out.emplace( iaa.index, iaa.atom ).second )
            return std::nullopt;
    return out;
}

std::set< std::string > sequent_vars( const Sequent& sequent )
{
    std::set< std::string > out;
    for ( const auto& iaa : sequent.antecedent )
        collect_vars( iaa.atom, out );
    for ( const auto& atom : sequent.consequent )
        collect_vars( atom, out );
    return out;
}

bool is_submultiset( std::vector< Atom > small, std::vector< Atom > large )
{
    std::sort( small.begin(), small.end() );
    std::sort( large.begin(), large.end() );
    return std::includes( large.begin(), large.end(), small.begin(), small.end() );
}

std::string describe( const IndexedAtoms& atoms )
{
    std::string out = "{";
    bool first = true;
    for ( const auto& [ index, atom ] : atoms )
    {
        out += first ? "" : ", ";
        out += to_string( Iaa{ atom, index } );
        first = false;
    }
    return out + "}";
}

class validator
{
    const PreProof& _proof;
    const InductiveSystem& _system;
    std::vector< WellFormednessError > _errors;

public:
    validator( const PreProof& proof, const InductiveSystem& system ) : _proof{ proof }, _system{ system } {}

    std::vector< WellFormednessError > run()
    {
        check_structure();
        for ( const auto& [ id, node ] : _proof.nodes )
        {
            check_sequent( id, node.sequent );
            check_rule( id, node );
        }
        check_buds();

        std::sort( _errors.begin(), _errors.end() );
        _errors.erase( std::unique( _errors.begin(), _errors.end() ), _errors.end() );
        return std::move( _errors );
    }

private:
    void report( Kind kind, std::optional< NodeId > node, std::string message )
    {
        _errors.push_back( { kind, node, std::move( message ) } );
    }

    void illegal( NodeId node, std::string message )
    {
        report( Kind::illegal_rule_instance, node, std::move( message ) );
    }

    void check_term( NodeId node, const Term& term )
    {
        if ( term.is_variable() )
        {
            if ( term.symbol.empty() )
                report( Kind::unknown_symbol, node, "empty variable name" );
            else if ( _system.constructor( term.symbol ) )
                report( Kind::unknown_symbol, node, "variable '" + term.symbol + "' shadows a constructor" );
            return;
        }

        const auto* decl = _system.constructor( term.symbol );
        if ( !decl )
            report( Kind::unknown_symbol, node, "undeclared constructor '" + term.symbol + "'" );
        else if ( decl->arity != term.args.size() )
            report( Kind::arity_error, node,
                    "constructor '" + term.symbol + "' expects " + std::to_string( decl->arity ) + " arguments" );
        for ( const auto& arg : term.args )
            check_term( node, arg );
    }

    void check_atom( NodeId node, const Atom& atom )
    {
        const auto* decl = _system.predicate( atom.predicate );
        if ( !decl )
            report( Kind::unknown_symbol, node, "undeclared predicate '" + atom.predicate + "'" );
        else if ( decl->arity != atom.args.size() )
            report( Kind::arity_error, node,
                    "predicate '" + atom.predicate + "' expects " + std::to_string( decl->arity ) + " arguments" );
        for ( const auto& arg : atom.args )
            check_term( node, arg );
    }

    void check_sequent( NodeId node, const Sequent& sequent )
    {
        std::set< IaaIndex > seen;
        for ( const auto& iaa : sequent.antecedent )
        {
            if ( iaa.index <= 0 )
                report( Kind::duplicate_index, node, "IAA index " + std::to_string( iaa.index ) + " is not positive" );
            else if ( !seen.insert( iaa.index ).second )
                report( Kind::duplicate_index, node, "IAA index " + std::to_string( iaa.index ) + " used twice" );
            check_atom( node, iaa.atom );
        }
        for ( const auto& atom : sequent.consequent )
            check_atom( node, atom );
    }

    void check_structure()
    {
        if ( !_proof.nodes.contains( _proof.root ) )
        {
            report( Kind::malformed_tree, std::nullopt, "root " + std::to_string( _proof.root ) + " does not exist" );
            return;
        }

        std::map< NodeId, std::size_t > parents;
        for ( const auto& [ id, node ] : _proof.nodes )
            for ( const auto child : node.rule.premises )
            {
                if ( !_proof.nodes.contains( child ) )
                    report( Kind::malformed_tree, id, "premise " + std::to_string( child ) + " does not exist" );
                else if ( ++parents[ child ] == 2 )
                    report( Kind::malformed_tree, child, "node has more than one parent" );
            }

        if ( parents.contains( _proof.root ) )
            report( Kind::malformed_tree, _proof.root, "root occurs as a premise" );

        std::set< NodeId > reached;
        std::vector< NodeId > stack{ _proof.root };
        while ( !stack.empty() )
        {
            const auto id = stack.back();
            stack.pop_back();
            if ( !reached.insert( id ).second )
                continue;
            for ( const auto child : _proof.node( id ).rule.premises )
                if ( _proof.nodes.contains( child ) )
                    stack.push_back( child );
        }
        for ( const auto& [ id, node ] : _proof.nodes )
            if ( !reached.contains( id ) )
                report( Kind::malformed_tree, id, "node is not reachable from the root" );
    }

    void check_buds()
    {
        for ( const auto& [ bud, companion ] : _proof.induction )
        {
            if ( !_proof.nodes.contains( bud ) )
            {
                report( Kind::malformed_tree, bud, "bud does not exist" );
                continue;
            }
            const auto& node = _proof.node( bud );
            if ( !node.rule.premises.empty() )
                report( Kind::non_terminal_bud, bud, "bud has premises" );
            if ( !std::holds_alternative< rules::Backlink >( node.rule.rule ) )
                report( Kind::non_terminal_bud, bud, "bud is not closed by a back-link" );

            if ( !_proof.nodes.contains( companion ) )
            {
                report( Kind::dangling_companion, bud, "companion " + std::to_string( companion ) + " does not exist" );
                continue;
            }
            if ( _proof.is_bud( companion ) )
            {
                report( Kind::dangling_companion, bud, "companion " + std::to_string( companion ) + " is itself a bud" );
                continue;
            }
            if ( !same_label( node.sequent, _proof.node( companion ).sequent ) )
                report( Kind::sequent_mismatch_at_bud, bud,
                        "bud sequent differs from companion " + std::to_string( companion ) );
        }
    }

    bool expect_premises( NodeId id, const ProofNode& node, std::size_t count )
    {
        if ( node.rule.premises.size() == count )
            return true;
        illegal( id, rule_name( node.rule.rule ) + " expects " + std::to_string( count ) + " premises, has "
                         + std::to_string( node.rule.premises.size() ) );
        return false;
    }

    const ProofNode* premise( const ProofNode& node, std::size_t position ) const
    {
        if ( position >= node.rule.premises.size() )
            return nullptr;
        const auto it = _proof.nodes.find( node.rule.premises[ position ] );
        return it == _proof.nodes.end() ? nullptr : &it->second;
    }

    const Production* production( NodeId id, std::size_t index )
    {
        if ( index < _system.productions.size() )
            return &_system.productions[ index ];
        illegal( id, "production " + std::to_string( index ) + " does not exist" );
        return nullptr;
    }

    void check_rule( NodeId id, const ProofNode& node )
    {
        std::visit( [ & ]( const auto& rule ) { check( id, node, rule ); }, node.rule.rule );
    }

    void check( NodeId id, const ProofNode& node, const rules::LeftUnfold& rule )
    {
        const auto* target = node.sequent.find( rule.target );
        if ( !target )
        {
            illegal( id, "unfolding target " + std::to_string( rule.target ) + " is not in the antecedent" );
            return;
        }
        if ( !expect_premises( id, node, rule.cases.size() ) )
            return;

        const auto conclusion_vars = sequent_vars( node.sequent );

        std::set< std::size_t > covered;
        for ( std::size_t i = 0; i < rule.cases.size(); ++i )
        {
            const auto& unfold_case = rule.cases[ i ];
            const auto* prod = production( id, unfold_case.production );
            if ( !prod )
                continue;
            if ( !covered.insert( unfold_case.production ).second )
                illegal( id, "production " + std::to_string( unfold_case.production ) + " unfolded twice" );
            check_unfold_case( id, node, *target, unfold_case, *prod, conclusion_vars, premise( node, i ) );
        }

        for ( std::size_t p = 0; p < _system.productions.size(); ++p )
        {
            const auto& prod = _system.productions[ p ];
            if ( prod.conclusion.predicate != target->atom.predicate || covered.contains( p ) )
                continue;
            if ( unify( target->atom, rename_apart( prod.conclusion, "#" ) ) )
                illegal( id, "case analysis misses production " + std::to_string( p ) );
        }
    }

    void check_unfold_case( NodeId id, const ProofNode& node, const Iaa& target, const rules::UnfoldCase& unfold_case,
                            const Production& prod, const std::set< std::string >& conclusion_vars,
                            const ProofNode* next )
    {
        const auto tag = "case " + std::to_string( unfold_case.production ) + ": ";

        if ( prod.conclusion.predicate != target.atom.predicate )
        {
            illegal( id, tag + "production does not define " + target.atom.predicate );
            return;
        }

        std::set< std::string > target_vars;
        collect_vars( target.atom, target_vars );
        for ( const auto& [ name, term ] : unfold_case.theta )
        {
            if ( !target_vars.contains( name ) )
                illegal( id, tag + "instantiates '" + name + "' which is not a variable of the target" );
            std::set< std::string > introduced;
            collect_vars( term, introduced );
            for ( const auto& v : introduced )
                if ( conclusion_vars.contains( v ) )
                    illegal( id, tag + "variable '" + v + "' is not fresh" );
        }

        const auto instance = substitute( unfold_case.theta, target.atom );
        if ( instance != substitute( unfold_case.sigma, prod.conclusion ) )
        {
            illegal( id, tag + to_string( instance ) + " is not the production conclusion instance" );
            return;
        }
        const auto mgu = unify( target.atom, rename_apart( prod.conclusion, "#" ) );
        if ( !mgu || !is_variant( instance, substitute( *mgu, target.atom ) ) )
        {
            illegal( id, tag + "instantiation is not a most general unifier" );
            return;
        }

        if ( unfold_case.premise_indices.size() != prod.premises.size() )
        {
            illegal( id, tag + "needs one index per production premise" );
            return;
        }

        const auto conclusion = indexed( node.sequent.antecedent );
        if ( !conclusion || !next )
            return;

        Sequent instantiated;
        for ( const auto& atom : node.sequent.consequent )
            instantiated.consequent.push_back( substitute( unfold_case.theta, atom ) );

        // Existential production variables must be renamed to fresh names.
        std::set< std::string > head_vars, body_vars;
        collect_vars( prod.conclusion, head_vars );
        for ( const auto& atom : prod.premises )
            collect_vars( atom, body_vars );
        std::set< std::string > instance_vars;
        for ( const auto& [ index, atom ] : *conclusion )
            collect_vars( substitute( unfold_case.theta, atom ), instance_vars );
        for ( const auto& atom : instantiated.consequent )
            collect_vars( atom, instance_vars );
        for ( const auto& v : body_vars )
        {
            if ( head_vars.contains( v ) )
                continue;
            const auto it = unfold_case.sigma.find( v );
            if ( it == unfold_case.sigma.end() || !it->second.is_variable() || instance_vars.contains( it->second.symbol ) )
                illegal( id, tag + "existential variable '" + v + "' needs a fresh name" );
        }

        IndexedAtoms expected;
        bool clash = false;
        const auto put = [ & ]( IaaIndex index, Atom atom ) {
            if ( !expected.emplace( index, std::move( atom ) ).second )
                clash = true;
        };
        for ( const auto& [ index, atom ] : *conclusion )
            if ( index != target.index )
                put( index, substitute( unfold_case.theta, atom ) );
        if ( unfold_case.retain )
            put( *unfold_case.retain, instance );
        for ( std::size_t k = 0; k < prod.premises.size(); ++k )
            put( unfold_case.premise_indices[ k ], substitute( unfold_case.sigma, prod.premises[ k ] ) );

        if ( clash )
        {
            illegal( id, tag + "premise indices collide" );
            return;
        }

        const auto actual = indexed( next->sequent.antecedent );
        if ( actual && *actual != expected )
            illegal( id, tag + "premise antecedent should be " + describe( expected ) );
        if ( next->sequent.consequent != instantiated.consequent )
            illegal( id, tag + "premise consequent is not the instantiated consequent" );
    }

    void check( NodeId id, const ProofNode& node, const rules::RightUnfold& rule )
    {
        if ( !expect_premises( id, node, 1 ) )
            return;
        if ( rule.position >= node.sequent.consequent.size() )
        {
            illegal( id, "consequent position " + std::to_string( rule.position ) + " does not exist" );
            return;
        }
        const auto* prod = production( id, rule.production );
        if ( !prod )
            return;
        if ( prod->premises.size() != 1 )
        {
            illegal( id, "right unfolding needs a production with exactly one premise" );
            return;
        }

        auto sigma = rule.sigma;
        if ( !match( prod->conclusion, node.sequent.consequent[ rule.position ], sigma ) )
        {
            illegal( id, "production conclusion does not match " + to_string( node.sequent.consequent[ rule.position ] ) );
            return;
        }

        const auto* next = premise( node, 0 );
        if ( !next )
            return;

        auto expected = node.sequent.consequent;
        expected[ rule.position ] = substitute( sigma, prod->premises.front() );
        if ( next->sequent.consequent != expected )
            illegal( id, "premise consequent is not the unfolded consequent" );
        if ( indexed( next->sequent.antecedent ) != indexed( node.sequent.antecedent ) )
            illegal( id, "right unfolding must keep the antecedent" );
    }

    void check( NodeId id, const ProofNode& node, const rules::Axiom& rule )
    {
        if ( !expect_premises( id, node, 0 ) )
            return;
        if ( rule.position >= node.sequent.consequent.size() )
        {
            illegal( id, "consequent position " + std::to_string( rule.position ) + " does not exist" );
            return;
        }
        const auto* prod = production( id, rule.production );
        if ( !prod )
            return;
        Substitution sigma;
        if ( !prod->premises.empty() )
            illegal( id, "axiom production has premises" );
        else if ( !match( prod->conclusion, node.sequent.consequent[ rule.position ], sigma ) )
            illegal( id, "consequent is not an instance of the axiom" );
    }

    void check( NodeId id, const ProofNode& node, const rules::Identity& )
    {
        if ( !expect_premises( id, node, 0 ) )
            return;
        for ( const auto& iaa : node.sequent.antecedent )
            for ( const auto& atom : node.sequent.consequent )
                if ( iaa.atom == atom )
                    return;
        illegal( id, "no antecedent atom occurs in the consequent" );
    }

    void check( NodeId id, const ProofNode& node, const rules::ExFalso& rule )
    {
        if ( !expect_premises( id, node, 0 ) )
            return;
        const auto* iaa = node.sequent.find( rule.index );
        if ( !iaa )
        {
            illegal( id, "index " + std::to_string( rule.index ) + " is not in the antecedent" );
            return;
        }
        for ( const auto& prod : _system.productions )
            if ( unify( iaa->atom, rename_apart( prod.conclusion, "#" ) ) )
            {
                illegal( id, to_string( *iaa ) + " is not unsatisfiable" );
                return;
            }
    }

    void check( NodeId id, const ProofNode& node, const rules::Weaken& rule )
    {
        if ( !expect_premises( id, node, 1 ) )
            return;
        IndexedAtoms expected;
        for ( const auto& [ from, to ] : rule.retained )
        {
            const auto* iaa = node.sequent.find( from );
            if ( !iaa )
            {
                illegal( id, "retained index " + std::to_string( from ) + " is not in the antecedent" );
                return;
            }
            if ( !expected.emplace( to, iaa->atom ).second )
            {
                illegal( id, "premise index " + std::to_string( to ) + " retained twice" );
                return;
            }
        }
        std::set< IaaIndex > sources;
        for ( const auto& [ from, to ] : rule.retained )
            if ( !sources.insert( from ).second )
                illegal( id, "index " + std::to_string( from ) + " retained twice" );

        const auto* next = premise( node, 0 );
        if ( !next )
            return;
        const auto actual = indexed( next->sequent.antecedent );
        if ( actual && *actual != expected )
            illegal( id, "premise antecedent should be " + describe( expected ) );
        if ( !is_submultiset( next->sequent.consequent, node.sequent.consequent ) )
            illegal( id, "weakening cannot add consequent atoms" );
    }

    void check( NodeId id, const ProofNode& node, const rules::Subst& rule )
    {
        if ( !expect_premises( id, node, 1 ) )
            return;
        const auto* next = premise( node, 0 );
        if ( !next )
            return;

        std::set< IaaIndex > sources;
        IndexedAtoms expected;
        for ( const auto& [ from, to ] : rule.indices )
        {
            const auto* iaa = next->sequent.find( from );
            if ( !iaa )
            {
                illegal( id, "premise index " + std::to_string( from ) + " does not exist" );
                return;
            }
            if ( !sources.insert( from ).second || !expected.emplace( to, substitute( rule.theta, iaa->atom ) ).second )
            {
                illegal( id, "substitution index map is not injective" );
                return;
            }
        }
        if ( sources.size() != next->sequent.antecedent.size() )
            illegal( id, "substitution index map must cover the premise antecedent" );

        const auto actual = indexed( node.sequent.antecedent );
        if ( actual && *actual != expected )
            illegal( id, "conclusion antecedent should be " + describe( expected ) );

        std::vector< Atom > consequent;
        for ( const auto& atom : next->sequent.consequent )
            consequent.push_back( substitute( rule.theta, atom ) );
        if ( consequent != node.sequent.consequent )
            illegal( id, "conclusion consequent is not the substituted premise consequent" );
    }

    void check( NodeId id, const ProofNode& node, const rules::Backlink& rule )
    {
        if ( !node.rule.premises.empty() )
            return; // reported by check_buds
        const auto it = _proof.induction.find( id );
        if ( it == _proof.induction.end() )
            report( Kind::dangling_companion, id, "back-link is missing from the induction function" );
        else if ( it->second != rule.companion )
            report( Kind::dangling_companion, id, "back-link target disagrees with the induction function" );
    }

    void check( NodeId id, const ProofNode& node, const rules::Generic& rule )
    {
        if ( !rule.pairs )
        {
            if ( !node.rule.premises.empty() )
                illegal( id, "generic rule declares no trace pairs" );
            return;
        }
        if ( rule.pairs->size() != node.rule.premises.size() )
        {
            illegal( id, "generic rule needs one trace-pair list per premise" );
            return;
        }
        for ( std::size_t i = 0; i < rule.pairs->size(); ++i )
        {
            const auto* next = premise( node, i );
            for ( const auto& pair : ( *rule.pairs )[ i ] )
            {
                if ( !node.sequent.find( pair.conclusion_index ) )
                    illegal( id, "trace pair source " + std::to_string( pair.conclusion_index ) + " does not exist" );
                if ( next && !next->sequent.find( pair.premise_index ) )
                    illegal( id, "trace pair target " + std::to_string( pair.premise_index ) + " does not exist" );
            }
        }
    }
};

} // namespace

std::vector< WellFormednessError > validate_preproof( const PreProof& proof, const InductiveSystem& system )
{
    return validator{ proof, system }.run();
}

std::vector< WellFormednessError > validate_system( const InductiveSystem& system )
{
    std::vector< WellFormednessError > errors;
    const auto report = [ & ]( Kind kind, std::string message ) {
        errors.push_back( { kind, std::nullopt, std::move( message ) } );
    };

    std::set< std::string > names;
    for ( const auto& decl : system.predicates )
        if ( !names.insert( decl.name ).second )
            report( Kind::unknown_symbol, "predicate '" + decl.name + "' declared twice" );
    names.clear();
    for ( const auto& decl : system.constructors )
        if ( !names.insert( decl.name ).second )
            report( Kind::unknown_symbol, "constructor '" + decl.name + "' declared twice" );

    const std::function< void( const Term& ) > check_term = [ & ]( const Term& term ) {
        if ( term.is_variable() )
        {
            if ( system.constructor( term.symbol ) )
                report( Kind::unknown_symbol, "variable '" + term.symbol + "' shadows a constructor" );
            return;
        }
        const auto* decl = system.constructor( term.symbol );
        if ( !decl )
            report( Kind::unknown_symbol, "undeclared constructor '" + term.symbol + "'" );
        else if ( decl->arity != term.args.size() )
            report( Kind::arity_error, "constructor '" + term.symbol + "' arity mismatch" );
        for ( const auto& arg : term.args )
            check_term( arg );
    };
    const auto check_atom = [ & ]( const Atom& atom ) {
        const auto* decl = system.predicate( atom.predicate );
        if ( !decl )
            report( Kind::unknown_symbol, "undeclared predicate '" + atom.predicate + "'" );
        else if ( decl->arity != atom.args.size() )
            report( Kind::arity_error, "predicate '" + atom.predicate + "' arity mismatch" );
        for ( const auto& arg : atom.args )
            check_term( arg );
    };

    for ( const auto& prod : system.productions )
    {
        check_atom( prod.conclusion );
        for ( const auto& atom : prod.premises )
            check_atom( atom );
    }

    std::sort( errors.begin(), errors.end() );
    return errors;
}

} // namespace cproof
