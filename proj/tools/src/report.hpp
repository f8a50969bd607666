#pragma once

#include "cproof/checker.hpp"
#include "cproof/oracle.hpp"

#include <optional>
#include <string>

namespace cproof::cli
{

enum class Method { poly, buchi, both };

struct RunReport
{
    std::string document;
    Method method = Method::poly;
    ProofStats stats;
    std::optional< Verdict > poly;
    double poly_ms = 0;
    std::optional< GtcResult > oracle;
    double oracle_ms = 0;
};

[[nodiscard]] std::string method_name( Method method );

// 0 when the selected method(s) say Valid, 3 when the oracle ran out of
// budget, 1 otherwise.
[[nodiscard]] int exit_code( const RunReport& report );

[[nodiscard]] std::string render_text( const RunReport& report );
[[nodiscard]] std::string render_json( const RunReport& report );

// Per-rb-path trace summaries and comparisons: "i -> j [true ]" lines give
// the bud index i, the root index j and the progress flag, and each block
// ends with "===> true" or "===> false".
[[nodiscard]] std::string render_explain( const ProofDocument& document, const Verdict& verdict );

// Normalized digraph: tree edges solid, back-links dashed, steps carrying a
// progressing trace pair bold.
[[nodiscard]] std::string render_dot( const ProofDocument& document );

} // namespace cproof::cli
