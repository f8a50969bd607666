#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cproof
{

// First-order term over a constructor signature. Variables carry no
// arguments; constants are zero-argument applications.
struct Term
{
    enum class Kind { variable, application };

    Kind kind = Kind::variable;
    std::string symbol;
    std::vector< Term > args;

    [[nodiscard]] bool is_variable() const { return kind == Kind::variable; }

    friend bool operator==( const Term& a, const Term& b );
    friend std::strong_ordering operator<=>( const Term& a, const Term& b );
};

[[nodiscard]] Term var( std::string name );
[[nodiscard]] Term app( std::string symbol, std::vector< Term > args = {} );

struct Atom
{
    std::string predicate;
    std::vector< Term > args;

    friend bool operator==( const Atom& a, const Atom& b );
    friend std::strong_ordering operator<=>( const Atom& a, const Atom& b );
};

using Substitution = std::map< std::string, Term >;

[[nodiscard]] Term substitute( const Substitution& subst, const Term& term );
[[nodiscard]] Atom substitute( const Substitution& subst, const Atom& atom );

void collect_vars( const Term& term, std::set< std::string >& out );
void collect_vars( const Atom& atom, std::set< std::string >& out );

// One-way matching: extends `subst` so that substitute(subst, pattern) == target.
[[nodiscard]] bool match( const Term& pattern, const Term& target, Substitution& subst );
[[nodiscard]] bool match( const Atom& pattern, const Atom& target, Substitution& subst );

// Syntactic unification with occurs check. The result is idempotent.
[[nodiscard]] std::optional< Substitution > unify( const Atom& a, const Atom& b );

// True iff the two atoms are equal up to a bijective renaming of variables.
[[nodiscard]] bool is_variant( const Atom& a, const Atom& b );

// Prefixes every variable; used to rename production variables apart from
// sequent variables.
[[nodiscard]] Atom rename_apart( const Atom& atom, const std::string& prefix );

[[nodiscard]] std::string to_string( const Term& term );
[[nodiscard]] std::string to_string( const Atom& atom );

} // namespace cproof
