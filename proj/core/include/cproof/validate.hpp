#pragma once

#include "cproof/proof.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cproof
{

struct WellFormednessError
{
    enum class Kind
    {
        dangling_companion,
        sequent_mismatch_at_bud,
        non_terminal_bud,
        arity_error,
        illegal_rule_instance,
        duplicate_index,
        unknown_symbol,
        malformed_tree,
    };

    Kind kind;
    std::optional< NodeId > node;
    std::string message;

    friend bool operator==( const WellFormednessError&, const WellFormednessError& ) = default;
    friend auto operator<=>( const WellFormednessError&, const WellFormednessError& ) = default;
};

[[nodiscard]] std::string to_string( WellFormednessError::Kind kind );
[[nodiscard]] std::string to_string( const WellFormednessError& error );

// Checks the structural invariants of a pre-proof and that every rule
// application is a legal instance with respect to the inductive system.
// Never throws; the result is sorted, so it does not depend on the order
// in which nodes were inserted.
[[nodiscard]] std::vector< WellFormednessError > validate_preproof( const PreProof& proof,
                                                                    const InductiveSystem& system );

// Checks declarations of the system itself (arities, unknown predicates).
[[nodiscard]] std::vector< WellFormednessError > validate_system( const InductiveSystem& system );

} // namespace cproof
