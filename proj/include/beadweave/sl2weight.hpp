#pragma once

// The sl2 weight system on closed trivalent diagrams: a loop is worth 3,
// an internal edge resolves into parallel minus crossed.

#include "beadweave/diagram.hpp"

#include <map>
#include <string>

namespace beadweave {

// Memo store for sl2 evaluation, keyed on canonical encodings. Passing the
// same cache across calls reuses subdiagram values; results do not depend
// on cache contents.
struct Sl2Cache {
    std::map<std::string, Int> values;
};

// Requires a closed diagram (no univalent vertices) with beads all 1.
// loop_value is the value of a disjoint circle; 3 = dim sl2 everywhere it
// matters, exposed for experimentation only.
Int sl2_eval(const Diagram& d, Sl2Cache& cache, const Int& loop_value = 3);

// Same evaluation, but the first resolved edge is forced (must connect two
// distinct vertices). Used to exercise edge-choice independence.
Int sl2_eval_resolving_first(const Diagram& d, int edge_index, Sl2Cache& cache,
                             const Int& loop_value = 3);

// Linear extension over a sum.
Rational sl2_eval_sum(const DiagramSum& s, Sl2Cache& cache, const Int& loop_value = 3);

} // namespace beadweave
