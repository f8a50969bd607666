#pragma once

#include "cproof/format.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace cproof
{

// Hand-encoded pre-proofs shipped with the library:
//
//   2-hydra             the 2-Hydra pre-proof, nodes 0-27, buds 13, 21, 27
//   2-hydra-unoptimised the non-optimised variant whose last bud is 28
//   o-implies-n         O1 x |- N x
//   n-add-zero          N1 x |- Add(x,0,x)
//   nested-companion    companion two levels below the root
//   stuttering          a single back-link over an identity step (unsound)
//   acyclic             no back-links
[[nodiscard]] std::vector< ProofDocument > builtin_corpus();

[[nodiscard]] std::optional< ProofDocument > corpus_entry( std::string_view name );

} // namespace cproof
