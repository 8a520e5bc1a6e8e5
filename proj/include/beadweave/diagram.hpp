#pragma once

// Beaded uni/trivalent diagrams: the data model, canonical forms with
// antisymmetry sign tracking, and formal rational linear sums.

#include "beadweave/laurent.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace beadweave {

// One end of an edge: a vertex together with the slot it occupies there.
// Slots 0,1,2 at a trivalent vertex give the cyclic order 0 -> 1 -> 2 -> 0;
// univalent vertices use slot 0 only.
struct HalfEnd {
    int vertex = 0;
    int slot = 0;

    friend auto operator<=>(const HalfEnd&, const HalfEnd&) = default;
};

struct DiagramEdge {
    HalfEnd a;
    HalfEnd b;
    LaurentPoly bead = LaurentPoly(1);
};

// Uni/trivalent graph with a Laurent bead per edge. Vertices are numbered
// with the trivalent ones first: 0..trivalent-1, then univalent ones
// trivalent..trivalent+univalent-1. Free loops (closed curves through no
// vertex) are kept separately in `circles`, one bead each.
struct Diagram {
    int trivalent = 0;
    int univalent = 0;
    std::vector<DiagramEdge> edges;
    std::vector<LaurentPoly> circles;

    int vertex_count() const { return trivalent + univalent; }
    bool is_trivalent(int v) const { return v < trivalent; }
    int degree_of(int v) const { return is_trivalent(v) ? 3 : 1; }

    // Checks the half-end incidence: every (vertex, slot) pair covered
    // exactly once. Throws StructuralError otherwise.
    void validate() const;

    bool has_tadpole() const;
    bool all_beads_one() const;

    // Single closed curve, optionally beaded.
    static Diagram circle(const LaurentPoly& bead = LaurentPoly(1));
    // Two trivalent vertices joined by three parallel edges, with the
    // planar cyclic orders (opposite orientations at the two vertices).
    static Diagram theta();
};

// Exact text serialization of a diagram as labeled data (no relabeling).
// Edges are listed with the lexicographically smaller half-end first and
// sorted; parse/print round-trips exactly.
std::string print_diagram(const Diagram& d);
Diagram parse_diagram(const std::string& text);

// Canonical form of the isomorphism class of a diagram.
//
// encoding: minimal serialization over all relabelings and cyclic-order
// rotations. sign: +1 or -1 relating the input to the representative via
// the antisymmetry relation (one factor of -1 per trivalent vertex whose
// cyclic order had to be reversed), or 0 when the diagram dies: it has a
// tadpole, or some automorphism reverses an odd number of cyclic orders.
struct SignedCanonical {
    std::string encoding;
    int sign = 0;
    Diagram representative;
};

SignedCanonical canonicalize(const Diagram& d);

int euler_degree(const Diagram& d);      // number of trivalent vertices
int vassiliev_degree(const Diagram& d);  // half the total vertex count

// Either a real edge (index into edges) or a free loop (index into circles).
struct EdgeRef {
    enum Kind { Edge, Circle } kind = Edge;
    int index = 0;

    static EdgeRef edge(int i) { return {Edge, i}; }
    static EdgeRef circle(int i) { return {Circle, i}; }
};

enum class HairSide { Forward, Reverse };

// Subdivides the referenced edge at a new trivalent vertex and hangs a new
// univalent vertex off it. The cyclic order at the new vertex is
// (incoming arc, outgoing arc, hair), the edge oriented from its
// lexicographically smaller half-end (HairSide::Reverse flips that).
// The original bead stays on the arc at the smaller half-end; for a circle
// the bead stays on the loop arc.
Diagram attach_hair(const Diagram& d, EdgeRef where, HairSide side = HairSide::Forward);

// Places k hairs along one edge or circle, i.e. the k-hair operator on that
// locus: a chain of k subdivision vertices, each cyclic order
// (incoming, outgoing, hair) along a consistent orientation. All k! ordered
// placements of the hairs give this one diagram, so no extra coefficient is
// owed by the caller. The locus bead is replaced by 1; callers account for
// it separately.
Diagram place_hairs(const Diagram& d, EdgeRef where, int k);

// Requires exactly two univalent vertices and beads all 1. Deletes both
// hairs and welds the freed slots into a single edge (a strut becomes a
// circle).
Diagram join_hairs(const Diagram& d);

Diagram disjoint_union(const Diagram& a, const Diagram& b);

bool is_connected(const Diagram& d);

// Formal Q-linear combination of canonical diagrams. Terms killed by the
// relations (tadpole, odd-symmetry, a single univalent vertex) are dropped
// on insertion, so a stored sum is always fully simplified.
class DiagramSum {
public:
    struct Term {
        Diagram representative;
        Rational coeff;
    };

    void add(const Diagram& d, const Rational& coeff);
    void add(const SignedCanonical& sc, const Rational& coeff);
    DiagramSum& operator+=(const DiagramSum& rhs);
    friend DiagramSum operator+(DiagramSum lhs, const DiagramSum& rhs);
    DiagramSum operator*(const Rational& scalar) const;

    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<std::string, Term>& terms() const { return terms_; }
    Rational coeff(const std::string& encoding) const;

    friend bool operator==(const DiagramSum& lhs, const DiagramSum& rhs);

    std::string str() const;

private:
    std::map<std::string, Term> terms_;
};

// Re-normalizes a sum: merges isomorphic terms with signs, drops terms with
// zero canonical sign or exactly one univalent vertex, prunes zero
// coefficients. Sums built through DiagramSum::add are already in this
// form, so simplify is idempotent.
DiagramSum simplify(const DiagramSum& s);

// Sum text format: a `term: <rational>` line followed by the diagram block,
// repeated. Round-trips exactly (terms print in encoding order).
std::string print_sum(const DiagramSum& s);
DiagramSum parse_sum(const std::string& text);

} // namespace beadweave
