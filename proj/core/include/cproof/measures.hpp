#pragma once

#include "cproof/ordering.hpp"

#include <map>
#include <optional>
#include <vector>

namespace cproof
{

struct MeasureAssignment
{
    std::map< NodeId, Measure > per_root; // every root of the digraph, sorted items

    [[nodiscard]] const Measure& at( NodeId root ) const { return per_root.at( root ); }

    friend bool operator==( const MeasureAssignment&, const MeasureAssignment& ) = default;
};

// Algorithm GenOrd: starting from empty measures, every summary link of an
// rb-path r -> b adds its root index to M(r) and its bud index to M(rc),
// where rc is the companion of b. Additions are set-like.
//
// `summaries` is parallel to `paths`.
[[nodiscard]] MeasureAssignment gen_ord( const NormalizedDigraph& digraph, const std::vector< RBPath >& paths,
                                         const std::vector< TraceSummary >& summaries );

// Compares every rb-path under `assignment`.
[[nodiscard]] std::vector< PathComparison > compare_paths( const std::vector< RBPath >& paths,
                                                           const std::vector< TraceSummary >& summaries,
                                                           const MeasureAssignment& assignment );

struct RefineOptions
{
    std::optional< std::size_t > cap; // per-index multiplicity; default 2 x |antecedent|
    std::size_t max_rounds = 10000;
};

// One item added by refinement: `path` is the position of the rb-path that
// failed (or, when `propagated`, the incoming path the addition repairs).
struct Refinement
{
    NodeId root = 0;
    IaaIndex index = 0;
    std::size_t path = 0;
    bool propagated = false;

    friend bool operator==( const Refinement&, const Refinement& ) = default;
};

struct RefineResult
{
    MeasureAssignment assignment;
    std::vector< Refinement > steps;
    bool all_valid = false;
};

// Incremental completion. While some rb-path r -> b fails, the lowest index
// of S(r) absent from M(r) is added (or, when none is absent, the lowest
// index still below the cap is duplicated). Each addition to M(r) puts a new
// item on the bud side of every path whose companion is r; a failing such
// path asks its own root for an index linked to the new item, preferring a
// non-progressing link, and those requests are processed first-in first-out.
[[nodiscard]] RefineResult refine( const NormalizedDigraph& digraph, const std::vector< RBPath >& paths,
                                   const std::vector< TraceSummary >& summaries, MeasureAssignment assignment,
                                   const RefineOptions& options = {} );

} // namespace cproof
