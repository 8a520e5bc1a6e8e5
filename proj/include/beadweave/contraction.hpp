#pragma once

// Tree claspers with labeled leaves, equivariant linking data, and the
// complete contraction producing beaded diagram sums.

#include "beadweave/diagram.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace beadweave {

// Unitrivalent forest whose univalent vertices are leaves labeled 1..L.
// Beads are all 1.
struct Clasper {
    Diagram diagram;
    std::map<int, int> leaf_labels;  // univalent vertex -> label

    int leaf_count() const { return diagram.univalent; }
    // Forest shape, bead triviality, label bijection with 1..L.
    void validate() const;
    int vertex_of_label(int label) const;
};

// Symmetric matrix of Laurent linking values indexed by leaf label (1-based).
// Diagonal entries are framings; they are accepted but never used by the
// contraction (no self-pairings).
class LinkingData {
public:
    explicit LinkingData(int size);

    int size() const { return size_; }
    const LaurentPoly& at(int i, int j) const;
    void set(int i, int j, const LaurentPoly& value);

    friend bool operator==(const LinkingData&, const LinkingData&) = default;

private:
    int size_ = 0;
    std::vector<LaurentPoly> entries_;
};

// Sum over perfect matchings of the leaves: each matched pair is glued, the
// fused edge beaded with the linking entry. Matchings hitting a zero entry
// vanish; an odd leaf count gives the empty sum. The result is simplified.
DiagramSum complete_contraction(const Clasper& c, const LinkingData& lk);

// Multilinear normal form: every bead is split into its monomials, the
// integer coefficients pulled into the rational coefficient of the term.
DiagramSum expand_beads(const DiagramSum& s);

struct GropeSpec {
    int n = 1;                       // grope class 2n
    std::string generator_id = "ellipse";
    std::vector<int> edge_cut_set;   // override of the default chord cuts (n >= 2)
};

// Closed ellipse graph with n-1 parallel interior edges (2n-2 trivalent
// vertices; the n=1 case is a bare circle).
Diagram ellipse_closed(int n);

// The two-hair generator family: ellipse_closed(n) with two hairs placed on
// the closing edge (on the circle itself for n=1).
Diagram grope_generator(int n);

// Cuts the given edges of a closed connected diagram into pairs of new
// leaves; cut k produces labels (2k+1, 2k+2). Returns the clasper and the
// label pairs.
Clasper cut_closed_diagram(const Diagram& g, const std::vector<EdgeRef>& cuts,
                           std::vector<std::pair<int, int>>* pairs_out = nullptr);

// The tree clasper of the grope family: the closed generator graph with the
// closing (root) edge cut at the surviving hair's position, plus one hopf
// cut per interior edge. Linking: t-1 between the root pair, 1 within each
// hopf pair, 0 elsewhere.
std::pair<Clasper, LinkingData> build_grope_clasper(const GropeSpec& spec);

struct ContractionShapeReport {
    struct TermCheck {
        std::string encoding;
        bool connected = false;
        int euler = 0;
        bool euler_ok = false;
        bool beads_ok = false;  // exactly one bead +-(t-1), all others 1
        bool pass = false;
    };
    int n = 0;
    bool vacuous = false;  // empty sum: vacuous pass with a warning
    bool pass = true;
    std::vector<TermCheck> terms;
    std::vector<std::string> violations;
};

// Verifies that every term is connected, of Euler degree exactly 2n-2, and
// carries exactly one bead equal to +-(t-1) with all other beads 1.
ContractionShapeReport check_contraction_shape(const DiagramSum& s, int n);

// Clasper file: diagram block plus trailing `leaf <vertex>: <label>` lines.
std::string print_clasper(const Clasper& c);
Clasper parse_clasper(const std::string& text);

// Linking file: `leaves: L` then `lk <i> <j>: <laurent>` for nonzero entries.
std::string print_linking(const LinkingData& lk);
LinkingData parse_linking(const std::string& text);

} // namespace beadweave
