#include "cproof/term.hpp"

#include <algorithm>

namespace cproof
{

Term var( std::string name )
{
    return Term{ Term::Kind::variable, std::move( name ), {} };
}

Term app( std::string symbol, std::vector< Term > args )
{
    return Term{ Term::Kind::application, std::move( symbol ), std::move( args ) };
}

bool operator==( const Term& a, const Term& b )
{
    return a.kind == b.kind && a.symbol == b.symbol && a.args == b.args;
}

std::strong_ordering operator<=>( const Term& a, const Term& b )
{
    if ( const auto c = a.kind <=> b.kind; c != 0 )
        return c;
    if ( const auto c = a.symbol <=> b.symbol; c != 0 )
        return c;
    return std::lexicographical_compare_three_way( a.args.begin(), a.args.end(), b.args.begin(), b.args.end() );
}

bool operator==( const Atom& a, const Atom& b )
{
    return a.predicate == b.predicate && a.args == b.args;
}

std::strong_ordering operator<=>( const Atom& a, const Atom& b )
{
    if ( const auto c = a.predicate <=> b.predicate; c != 0 )
        return c;
    return std::lexicographical_compare_three_way( a.args.begin(), a.args.end(), b.args.begin(), b.args.end() );
}

Term substitute( const Substitution& subst, const Term& term )
{
    if ( term.is_variable() )
    {
        const auto it = subst.find( term.symbol );
        return it == subst.end() ? term : it->second;
    }

    Term result{ term.kind, term.symbol, {} };
    result.args.reserve( term.args.size() );
    for ( const auto& arg : term.args )
        result.args.push_back( substitute( subst, arg ) );
    return result;
}

Atom substitute( const Substitution& subst, const Atom& atom )
{
    Atom result{ atom.predicate, {} };
    result.args.reserve( atom.args.size() );
    for ( const auto& arg : atom.args )
        result.args.push_back( substitute( subst, arg ) );
    return result;
}

void collect_vars( const Term& term, std::set< std::string >& out )
{
    if ( term.is_variable() )
    {
        out.insert( term.symbol );
        return;
    }
    for ( const auto& arg : term.args )
        collect_vars( arg, out );
}

void collect_vars( const Atom& atom, std::set< std::string >& out )
{
    for ( const auto& arg : atom.args )
        collect_vars( arg, out );
}

bool match( const Term& pattern, const Term& target, Substitution& subst )
{
    if ( pattern.is_variable() )
    {
        const auto [ it, inserted ] = subst.emplace( pattern.symbol, target );
        return inserted || it->second == target;
    }
    if ( target.is_variable() || target.symbol != pattern.symbol || target.args.size() != pattern.args.size() )
        return false;
    for ( std::size_t i = 0; i < pattern.args.size(); ++i )
        if ( !match( pattern.args[ i ], target.args[ i ], subst ) )
            return false;
    return true;
}

bool match( const Atom& pattern, const Atom& target, Substitution& subst )
{
    if ( pattern.predicate != target.predicate || pattern.args.size() != target.args.size() )
        return false;
    for ( std::size_t i = 0; i < pattern.args.size(); ++i )
        if ( !match( pattern.args[ i ], target.args[ i ], subst ) )
            return false;
    return true;
}

namespace
{

Term resolve( const Term& term, const Substitution& subst )
{
    Term current = term;
    while ( current.is_variable() )
    {
        const auto it = subst.find( current.symbol );
        if ( it == subst.end() )
            break;
        current = it->second;
    }
    return current;
}

bool occurs( const std::string& name, const Term& term, const Substitution& subst )
{
    const auto t = resolve( term, subst );
    if ( t.is_variable() )
        return t.symbol == name;
    for ( const auto& arg : t.args )
        if ( occurs( name, arg, subst ) )
            return true;
    return false;
}

bool unify_terms( const Term& a, const Term& b, Substitution& subst )
{
    const auto x = resolve( a, subst );
    const auto y = resolve( b, subst );

    if ( x.is_variable() && y.is_variable() && x.symbol == y.symbol )
        return true;
    if ( x.is_variable() )
    {
        if ( occurs( x.symbol, y, subst ) )
            return false;
        subst[ x.symbol ] = y;
        return true;
    }
    if ( y.is_variable() )
        return unify_terms( y, x, subst );
    if ( x.symbol != y.symbol || x.args.size() != y.args.size() )
        return false;
    for ( std::size_t i = 0; i < x.args.size(); ++i )
        if ( !unify_terms( x.args[ i ], y.args[ i ], subst ) )
            return false;
    return true;
}

Term fully_apply( const Term& term, const Substitution& subst )
{
    const auto t = resolve( term, subst );
    if ( t.is_variable() )
        return t;
    Term result{ t.kind, t.symbol, {} };
    for ( const auto& arg : t.args )
        result.args.push_back( fully_apply( arg, subst ) );
    return result;
}

bool variant_terms( const Term& a, const Term& b, std::map< std::string, std::string >& fwd,
                    std::map< std::string, std::string >& bwd )
{
    if ( a.kind != b.kind )
        return false;
    if ( a.is_variable() )
    {
        const auto [ f, f_new ] = fwd.emplace( a.symbol, b.symbol );
        const auto [ g, g_new ] = bwd.emplace( b.symbol, a.symbol );
        return f->second == b.symbol && g->second == a.symbol;
    }
    if ( a.symbol != b.symbol || a.args.size() != b.args.size() )
        return false;
    for ( std::size_t i = 0; i < a.args.size(); ++i )
        if ( !variant_terms( a.args[ i ], b.args[ i ], fwd, bwd ) )
            return false;
    return true;
}

Term prefix_vars( const Term& term, const std::string& prefix )
{
    if ( term.is_variable() )
        return var( prefix + term.symbol );
    Term result{ term.kind, term.symbol, {} };
    for ( const auto& arg : term.args )
        result.args.push_back( prefix_vars( arg, prefix ) );
    return result;
}

} // namespace

std::optional< Substitution > unify( const Atom& a, const Atom& b )
{
    if ( a.predicate != b.predicate || a.args.size() != b.args.size() )
        return std::nullopt;

    Substitution subst;
    for ( std::size_t i = 0; i < a.args.size(); ++i )
        if ( !unify_terms( a.args[ i ], b.args[ i ], subst ) )
            return std::nullopt;

    Substitution solved;
    for ( const auto& [ name, term ] : subst )
        solved.emplace( name, fully_apply( term, subst ) );
    return solved;
}

bool is_variant( const Atom& a, const Atom& b )
{
    if ( a.predicate != b.predicate || a.args.size() != b.args.size() )
        return false;
    std::map< std::string, std::string > fwd, bwd;
    for ( std::size_t i = 0; i < a.args.size(); ++i )
        if ( !variant_terms( a.args[ i ], b.args[ i ], fwd, bwd ) )
            return false;
    return true;
}

Atom rename_apart( const Atom& atom, const std::string& prefix )
{
    Atom result{ atom.predicate, {} };
    for ( const auto& arg : atom.args )
        result.args.push_back( prefix_vars( arg, prefix ) );
    return result;
}

std::string to_string( const Term& term )
{
    if ( term.is_variable() || term.args.empty() )
        return term.symbol;
    std::string out = term.symbol + "(";
    for ( std::size_t i = 0; i < term.args.size(); ++i )
    {
        if ( i > 0 )
            out += ",";
        out += to_string( term.args[ i ] );
    }
    return out + ")";
}

std::string to_string( const Atom& atom )
{
    if ( atom.args.empty() )
        return atom.predicate;
    std::string out = atom.predicate + "(";
    for ( std::size_t i = 0; i < atom.args.size(); ++i )
    {
        if ( i > 0 )
            out += ",";
        out += to_string( atom.args[ i ] );
    }
    return out + ")";
}

} // namespace cproof
