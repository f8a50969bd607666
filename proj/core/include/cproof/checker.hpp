#pragma once

#include "cproof/format.hpp"
#include "cproof/measures.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cproof
{

// A cancellation or coverage entry together with a trace that justifies it.
struct CertifiedMatch
{
    MatchEntry entry;
    Trace witness;

    friend bool operator==( const CertifiedMatch&, const CertifiedMatch& ) = default;
};

struct CertifiedPath
{
    RBPath path;
    Measure root_side;
    Measure bud_side;
    std::vector< CertifiedMatch > cancelled;
    std::vector< CertifiedMatch > covered;

    friend bool operator==( const CertifiedPath&, const CertifiedPath& ) = default;
};

// Everything needed to re-establish a Valid verdict without re-running
// measure inference.
struct Certificate
{
    std::string document;
    std::vector< NodeId > roots;
    std::map< NodeId, NodeId > induction;
    std::map< NodeId, NodeId > origins;
    std::vector< std::vector< NodeId > > cyclic_components;
    MeasureAssignment measures;
    std::vector< Refinement > refinements;
    std::vector< CertifiedPath > paths;

    friend bool operator==( const Certificate&, const Certificate& ) = default;
};

struct CheckConfig
{
    bool refine = true;
    RefineOptions refine_options;
    // Test hook: swaps the progressing and stalling flags of every summary
    // link before comparison. Breaks soundness on purpose.
    bool flip_progress = false;
};

// Intermediate results of the polynomial check, kept for reporting.
struct PolyAnalysis
{
    NormalizedDigraph digraph;
    SccPartition partition;
    std::vector< RBPath > paths;
    std::vector< TraceSummary > summaries;
    MeasureAssignment gen_ord;
    MeasureAssignment measures; // after refinement, if any
    std::vector< Refinement > refinements;
    std::vector< PathComparison > comparisons;
};

struct Verdict
{
    enum class Status { valid, unknown };

    Status status = Status::unknown;
    std::optional< Certificate > certificate;
    std::optional< std::string > reason;
    PolyAnalysis analysis;

    [[nodiscard]] bool valid() const { return status == Status::valid; }
};

// Normalize, find rb-paths, summarize traces, infer measures (refining on
// failure) and compare along every rb-path. Throws SemanticError when the
// document is not a well-formed pre-proof.
[[nodiscard]] Verdict check_poly( const ProofDocument& document, const CheckConfig& config = {} );

struct CertificateCheck
{
    bool ok = false;
    std::string failure; // first failed claim

    explicit operator bool() const { return ok; }
};

// Replays every claim of `certificate` against `document`: digraph shape,
// rb-path set, measure membership, witness traces, cancellation accounting,
// nonempty root residue and coverage.
[[nodiscard]] CertificateCheck verify_certificate( const ProofDocument& document, const Certificate& certificate );

// Canonical JSON, same layout conventions as proof documents.
[[nodiscard]] std::string serialize_certificate( const Certificate& certificate );
[[nodiscard]] Certificate parse_certificate( std::string_view text );

} // namespace cproof
