#pragma once

#include "cproof/format.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace cproof
{

// A pre-proof given by its tree shape. Every sequent is built from atoms
// N(x<i>) for the listed indices with consequent N(y); inferences are generic
// rules whose trace pairs default to the non-progressing identity on shared
// indices. Buds copy their companion's antecedent.
struct ProofShape
{
    NodeId root = 0;
    std::map< NodeId, std::vector< NodeId > > children;
    std::map< NodeId, NodeId > buds;
    std::map< NodeId, std::vector< IaaIndex > > antecedents; // default {1}
    std::map< std::pair< NodeId, NodeId >, std::vector< TracePair > > pairs;
};

[[nodiscard]] ProofDocument shaped_document( const ProofShape& shape, const std::string& name );

// n segments r_i -> a_i -> {bud to r_(i+1), r_(i+1)} plus a closed leaf under
// each r_i; the last segment links back to r_0 twice. The step r_i -> a_i
// progresses on index 1. Normalizes to n trees of five vertices.
[[nodiscard]] ProofDocument chained_cycles( std::size_t n );

struct RandomOptions
{
    std::size_t max_nodes = 8;
    std::size_t max_iaas = 3;
    double bud_probability = 0.7;
    double pair_probability = 0.5;
    double progress_probability = 0.35;
};

// A random well-formed pre-proof; the same generator state yields the same
// document.
[[nodiscard]] ProofDocument random_preproof( std::mt19937_64& rng, const RandomOptions& options = {} );

} // namespace cproof
