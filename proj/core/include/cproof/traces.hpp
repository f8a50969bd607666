#pragma once

#include "cproof/analysis.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cproof
{

// A trace spanning an rb-path: one IAA index per path node; progress[i]
// flags the step from nodes[i] to nodes[i + 1].
struct Trace
{
    std::vector< IaaIndex > indices;
    std::vector< bool > progress;

    [[nodiscard]] IaaIndex root_index() const { return indices.front(); }
    [[nodiscard]] IaaIndex bud_index() const { return indices.back(); }
    [[nodiscard]] bool progressing() const;

    friend bool operator==( const Trace&, const Trace& ) = default;
    friend auto operator<=>( const Trace&, const Trace& ) = default;
};

// Root/bud endpoints connected by at least one spanning trace. `progressing`
// records that some connecting trace progresses, `stalling` that some
// connecting trace does not.
struct TraceLink
{
    IaaIndex root_index = 0;
    IaaIndex bud_index = 0;
    bool progressing = false;
    bool stalling = false;

    friend bool operator==( const TraceLink&, const TraceLink& ) = default;
    friend auto operator<=>( const TraceLink&, const TraceLink& ) = default;
};

using TraceSummary = std::vector< TraceLink >; // sorted by (root_index, bud_index)

// Trace pairs of the step from path.nodes[i] to path.nodes[i + 1].
[[nodiscard]] const std::vector< TracePair >& path_step( const NormalizedDigraph& digraph, const RBPath& path,
                                                         std::size_t i );

// Every spanning trace, sorted. Exponential in the worst case; meant for
// display and testing.
[[nodiscard]] std::vector< Trace > traces_along( const NormalizedDigraph& digraph, const RBPath& path );

// Endpoint summary computed by a forward sweep over (index, progressed)
// states, polynomial in path length and antecedent size.
[[nodiscard]] TraceSummary trace_summary( const NormalizedDigraph& digraph, const RBPath& path );

// A spanning trace between the two indices that progresses (or, when
// `progressing` is false, never progresses).
[[nodiscard]] std::optional< Trace > witness_trace( const NormalizedDigraph& digraph, const RBPath& path,
                                                    IaaIndex root_index, IaaIndex bud_index, bool progressing );

// True iff every step of `trace` is a trace pair of the corresponding
// inference with the recorded progress flag.
[[nodiscard]] bool replay_trace( const NormalizedDigraph& digraph, const RBPath& path, const Trace& trace );

// Occurrence rendering such as "N1x, N1x, N1y*, ..." where a star marks an
// occurrence reached by a progressing step.
[[nodiscard]] std::vector< std::string > trace_occurrences( const NormalizedDigraph& digraph, const RBPath& path,
                                                            const Trace& trace );

} // namespace cproof
