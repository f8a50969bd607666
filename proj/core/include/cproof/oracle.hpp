#pragma once

#include "cproof/format.hpp"
#include "cproof/normalize.hpp"

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cproof
{

using StateId = std::size_t;
using Letter = NodeId;

struct BuchiAutomaton
{
    std::size_t states = 0;
    std::vector< Letter > alphabet; // ascending
    std::vector< StateId > initial;
    std::map< std::pair< StateId, Letter >, std::vector< StateId > > transitions;
    std::vector< bool > accepting; // one flag per state

    void add_transition( StateId from, Letter letter, StateId to );
    [[nodiscard]] const std::vector< StateId >& successors( StateId from, Letter letter ) const;
};

// Ultimately periodic word stem . loop^omega.
struct Lasso
{
    std::vector< Letter > stem;
    std::vector< Letter > loop;

    friend bool operator==( const Lasso&, const Lasso& ) = default;
};

// "0 1 | 2 3" for stem 0 1 and loop 2 3.
[[nodiscard]] std::string to_string( const Lasso& lasso );

// Reads node ids along the paths of the digraph that start at the original
// root: one state per vertex plus an initial state, all vertex states
// accepting.
[[nodiscard]] BuchiAutomaton path_automaton( const NormalizedDigraph& digraph );

// Accepts the same paths when, from some point on, a trace follows them
// and progresses infinitely often. States: an initial state, watch(v) for
// every vertex (the trace has not started yet) and (v, index, progressed)
// for every IAA of every vertex; the progressed copies are accepting.
[[nodiscard]] BuchiAutomaton trace_automaton( const NormalizedDigraph& digraph );

// Decides whether the automaton accepts the lasso word.
[[nodiscard]] bool accepts( const BuchiAutomaton& automaton, const Lasso& lasso );

class BoundExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct InclusionLimits
{
    std::size_t state_bound = 400;    // combined states of both automata
    std::size_t profile_bound = 200000;
    std::optional< std::chrono::steady_clock::time_point > deadline;
};

struct InclusionResult
{
    bool included = true;
    std::optional< Lasso > counterexample; // in L(A) but not in L(B)
    std::size_t profiles = 0;
};

// L(A) included in L(B), decided over the monoid of transition profiles:
// a counterexample exists iff some profiles g = [u], h = [v] with h.h = h
// and g.h = g make A accept u.v^omega while B rejects it. Throws
// BoundExceeded when a limit trips.
[[nodiscard]] InclusionResult buchi_inclusion( const BuchiAutomaton& a, const BuchiAutomaton& b,
                                               const InclusionLimits& limits = {} );

struct GtcResult
{
    enum class Status { valid, invalid, bound_exceeded };

    Status status = Status::valid;
    std::optional< Lasso > lasso; // an infinite path without an infinitely progressing trace
    std::size_t states = 0;       // combined automaton states
    std::string detail;
};

// StateId bound from CPROOF_ORACLE_BOUND when set to a positive integer,
// otherwise 400.
[[nodiscard]] std::size_t default_state_bound();

// Global trace condition: every infinite path of the normalized digraph
// carries an infinitely progressing trace. Throws SemanticError on a
// malformed document.
[[nodiscard]] GtcResult check_gtc( const ProofDocument& document, InclusionLimits limits );
[[nodiscard]] GtcResult check_gtc( const ProofDocument& document );

} // namespace cproof
