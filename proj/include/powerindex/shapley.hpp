#ifndef POWERINDEX_SHAPLEY_HPP
#define POWERINDEX_SHAPLEY_HPP

#include <vector>

#include "powerindex/rational.hpp"

namespace powerindex {

/// Classic Shapley-Shubik index of a one-voter-one-vote quota game, by
/// walking all voters! roll-call orders and crediting the pivotal voter
/// (the one whose vote brings the tally to `quota`).
/// Requires 2 <= voters <= 10 and 1 <= quota <= voters; throws
/// InvalidSizeError otherwise.
std::vector<Rational> shapley_shubik_uniform(int voters, int quota);

}  // namespace powerindex

#endif  // POWERINDEX_SHAPLEY_HPP
