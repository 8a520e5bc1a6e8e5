#pragma once

// The hair map: expand each bead p(t) as p(exp(h)) and realize h^k on an
// edge as k hairs placed along it, truncated by Vassiliev degree.

#include "beadweave/diagram.hpp"

#include <string>
#include <vector>

namespace beadweave {

// Expands every term of s edge by edge (free loops included): a monomial
// h^k on a locus becomes the k-hair placement of that locus, weighted by the
// exp-series coefficient; products over loci distribute. Terms of Vassiliev
// degree above d_max are dropped and the result is simplified, so in
// particular every single-hair term dies.
DiagramSum hair_expand(const DiagramSum& s, int d_max);

struct A2hReport {
    bool pass = true;
    std::vector<std::string> violations;
};

// Extracts the Vassiliev-degree-(n+1) part of s and verifies the two-hairs-
// on-a-single-edge shape: each term connected, exactly two univalent
// vertices, and their subdivision vertices adjacent.
DiagramSum leading_term(const DiagramSum& s, int n, A2hReport* report = nullptr);

} // namespace beadweave
