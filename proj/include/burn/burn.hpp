#ifndef BURN_BURN_HPP
#define BURN_BURN_HPP

// Umbrella header for the graph-burning toolkit.

#include "burn/bounds.hpp"
#include "burn/decompose.hpp"
#include "burn/errors.hpp"
#include "burn/exact.hpp"
#include "burn/gen.hpp"
#include "burn/graph.hpp"
#include "burn/rooted_tree.hpp"
#include "burn/schedule.hpp"
#include "burn/simulate.hpp"

#endif // BURN_BURN_HPP
