#pragma once

#include "cproof/term.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cproof
{

using NodeId = std::uint32_t;
using IaaIndex = int;

// Inductive antecedent atom: an inductive atom on the left of a sequent,
// tagged with an index that is unique within its sequent.
struct Iaa
{
    Atom atom;
    IaaIndex index = 0;

    friend bool operator==( const Iaa&, const Iaa& ) = default;
    friend std::strong_ordering operator<=>( const Iaa& a, const Iaa& b )
    {
        if ( const auto c = a.atom <=> b.atom; c != 0 )
            return c;
        return a.index <=> b.index;
    }
};

// Antecedent is a conjunction of IAAs, consequent a disjunction of atoms.
struct Sequent
{
    std::vector< Iaa > antecedent;
    std::vector< Atom > consequent;

    [[nodiscard]] const Iaa* find( IaaIndex index ) const;

    friend bool operator==( const Sequent&, const Sequent& ) = default;
};

// Label equality used at buds: same indexed antecedent atoms and same
// consequent, irrespective of listing order.
[[nodiscard]] bool same_label( const Sequent& a, const Sequent& b );

[[nodiscard]] std::string to_string( const Iaa& iaa );
[[nodiscard]] std::string to_string( const Sequent& sequent );

struct PredicateDecl
{
    std::string name;
    std::size_t arity = 0;

    friend bool operator==( const PredicateDecl&, const PredicateDecl& ) = default;
};

struct ConstructorDecl
{
    std::string name;
    std::size_t arity = 0;

    friend bool operator==( const ConstructorDecl&, const ConstructorDecl& ) = default;
};

struct Production
{
    std::vector< Atom > premises;
    Atom conclusion;

    friend bool operator==( const Production&, const Production& ) = default;
};

struct InductiveSystem
{
    std::vector< PredicateDecl > predicates;
    std::vector< ConstructorDecl > constructors;
    std::vector< Production > productions;

    [[nodiscard]] const PredicateDecl* predicate( const std::string& name ) const;
    [[nodiscard]] const ConstructorDecl* constructor( const std::string& name ) const;

    friend bool operator==( const InductiveSystem&, const InductiveSystem& ) = default;
};

// 0 and s, the arithmetic signature every system gets unless it declares
// its own constructors.
[[nodiscard]] std::vector< ConstructorDecl > builtin_constructors();

struct TracePair
{
    IaaIndex conclusion_index = 0;
    IaaIndex premise_index = 0;
    bool progressing = false;

    friend bool operator==( const TracePair&, const TracePair& ) = default;
    friend auto operator<=>( const TracePair&, const TracePair& ) = default;
};

namespace rules
{

// One case of a left unfolding: the target atom is instantiated by `theta`
// to match the conclusion of `production` (instantiated by `sigma`). The
// production premises enter the premise sequent under `premise_indices`;
// the instantiated target is kept under `retain` when present.
struct UnfoldCase
{
    std::size_t production = 0;
    Substitution theta;
    Substitution sigma;
    std::vector< IaaIndex > premise_indices;
    std::optional< IaaIndex > retain;

    friend bool operator==( const UnfoldCase&, const UnfoldCase& ) = default;
};

struct LeftUnfold
{
    IaaIndex target = 0;
    std::vector< UnfoldCase > cases;

    friend bool operator==( const LeftUnfold&, const LeftUnfold& ) = default;
};

struct RightUnfold
{
    std::size_t position = 0;
    std::size_t production = 0;
    Substitution sigma;

    friend bool operator==( const RightUnfold&, const RightUnfold& ) = default;
};

struct Axiom
{
    std::size_t position = 0;
    std::size_t production = 0;

    friend bool operator==( const Axiom&, const Axiom& ) = default;
};

struct Identity
{
    friend bool operator==( const Identity&, const Identity& ) = default;
};

struct ExFalso
{
    IaaIndex index = 0;

    friend bool operator==( const ExFalso&, const ExFalso& ) = default;
};

// Pairs are (conclusion index, premise index); a pair may rename.
struct Weaken
{
    std::vector< std::pair< IaaIndex, IaaIndex > > retained;

    friend bool operator==( const Weaken&, const Weaken& ) = default;
};

// The conclusion is the premise instantiated by `theta`. Pairs are
// (premise index, conclusion index).
struct Subst
{
    Substitution theta;
    std::vector< std::pair< IaaIndex, IaaIndex > > indices;

    friend bool operator==( const Subst&, const Subst& ) = default;
};

struct Backlink
{
    NodeId companion = 0;

    friend bool operator==( const Backlink&, const Backlink& ) = default;
};

// An externally justified rule; its trace relation must be declared.
struct Generic
{
    std::string name;
    std::optional< std::vector< std::vector< TracePair > > > pairs;

    friend bool operator==( const Generic&, const Generic& ) = default;
};

} // namespace rules

using Rule = std::variant< rules::LeftUnfold, rules::RightUnfold, rules::Axiom, rules::Identity, rules::ExFalso,
                           rules::Weaken, rules::Subst, rules::Backlink, rules::Generic >;

[[nodiscard]] std::string rule_name( const Rule& rule );

struct RuleApplication
{
    Rule rule;
    std::vector< NodeId > premises;

    friend bool operator==( const RuleApplication&, const RuleApplication& ) = default;
};

struct ProofNode
{
    Sequent sequent;
    RuleApplication rule;

    friend bool operator==( const ProofNode&, const ProofNode& ) = default;
};

struct PreProof
{
    std::map< NodeId, ProofNode > nodes;
    NodeId root = 0;
    std::map< NodeId, NodeId > induction; // bud -> companion

    [[nodiscard]] const ProofNode& node( NodeId id ) const { return nodes.at( id ); }
    [[nodiscard]] bool is_bud( NodeId id ) const { return induction.contains( id ); }

    friend bool operator==( const PreProof&, const PreProof& ) = default;
};

// Structural statistics in the sense of the usual proof tables: depth is
// the largest number of left unfoldings on a root-to-leaf path.
struct ProofStats
{
    std::size_t nodes = 0;
    std::size_t backlinks = 0;
    std::size_t depth = 0;

    friend bool operator==( const ProofStats&, const ProofStats& ) = default;
};

[[nodiscard]] ProofStats compute_stats( const PreProof& proof );

} // namespace cproof
