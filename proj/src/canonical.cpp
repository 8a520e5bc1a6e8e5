#include "beadweave/diagram.hpp"
#include "beadweave/errors.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <vector>

// Canonical labeling of beaded uni/trivalent diagrams.
//
// A diagram with cyclic orders is a combinatorial map, so each connected
// component is canonicalized by a dart traversal: pick a start dart and an
// orientation of its base vertex, then breadth-first label vertices in the
// order darts are popped, emitting one token per pop. Rotations at a vertex
// are absorbed by putting the arrival dart first; the only free choice left
// is the orientation (order of the remaining two darts) at each trivalent
// vertex, which costs one antisymmetry sign per reversal relative to the
// stored cyclic order. All seeds and orientation choices race in lockstep,
// keeping only the candidates with the minimal token stream; the survivors
// all describe the same relabeled component, and the set of their reversal
// parities decides the sign (both parities present means the diagram has an
// odd automorphism and dies).

namespace beadweave {

namespace {

struct Token {
    int kind = 0;  // 0 = new vertex, 1 = known vertex, 2 = edge already traversed
    int a = -1;    // new: vertex kind (0 trivalent, 1 univalent); known: label
    int b = -1;    // known: position of the far dart in its vertex's chosen order
    int bead = -1; // index into the sorted bead-string table, -1 for kind 2

    friend auto operator<=>(const Token&, const Token&) = default;
};

struct Candidate {
    std::vector<int> label;                    // vertex -> label, -1 if unseen
    std::vector<int> order;                    // label -> vertex
    std::vector<std::array<int, 3>> darts;     // label -> darts in chosen order
    std::vector<char> edge_done;
    std::deque<int> queue;                     // darts pending traversal
    int flips = 0;
};

struct ComponentResult {
    std::vector<Token> stream;
    bool plus_seen = false;
    bool minus_seen = false;
    std::vector<int> order;
    std::vector<std::array<int, 3>> darts;
};

class Canonicalizer {
public:
    explicit Canonicalizer(const Diagram& d) : d_(d) {
        d_.validate();
        build_incidence();
        index_beads();
    }

    SignedCanonical run() {
        split_components();
        std::vector<ComponentResult> results;
        results.reserve(components_.size());
        for (const auto& comp : components_) results.push_back(canonicalize_component(comp));

        std::vector<int> comp_order(results.size());
        std::iota(comp_order.begin(), comp_order.end(), 0);
        std::sort(comp_order.begin(), comp_order.end(),
                  [&](int x, int y) { return results[x].stream < results[y].stream; });

        SignedCanonical sc;
        sc.representative = assemble(results, comp_order);
        sc.encoding = print_diagram(sc.representative);
        sc.sign = d_.has_tadpole() ? 0 : 1;
        for (const auto& res : results) {
            if (res.plus_seen && res.minus_seen) sc.sign = 0;
            if (!res.plus_seen && res.minus_seen) sc.sign = -sc.sign;
        }
        return sc;
    }

private:
    static int dart_edge(int dart) { return dart >> 1; }
    int dart_vertex(int dart) const {
        const DiagramEdge& e = d_.edges[dart_edge(dart)];
        return (dart & 1) ? e.b.vertex : e.a.vertex;
    }
    int dart_slot(int dart) const {
        const DiagramEdge& e = d_.edges[dart_edge(dart)];
        return (dart & 1) ? e.b.slot : e.a.slot;
    }

    void build_incidence() {
        incidence_.assign(d_.vertex_count(), {-1, -1, -1});
        for (size_t i = 0; i < d_.edges.size(); ++i) {
            int da = static_cast<int>(2 * i);
            incidence_[dart_vertex(da)][dart_slot(da)] = da;
            incidence_[dart_vertex(da + 1)][dart_slot(da + 1)] = da + 1;
        }
    }

    void index_beads() {
        std::vector<std::string> strs;
        strs.reserve(d_.edges.size());
        for (const auto& e : d_.edges) strs.push_back(e.bead.str());
        std::vector<std::string> sorted = strs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        bead_index_.reserve(strs.size());
        for (const auto& s : strs)
            bead_index_.push_back(static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), s) - sorted.begin()));
    }

    void split_components() {
        int n = d_.vertex_count();
        std::vector<int> comp(n, -1);
        int count = 0;
        for (int v0 = 0; v0 < n; ++v0) {
            if (comp[v0] != -1) continue;
            std::vector<int> stack{v0};
            comp[v0] = count;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int s = 0; s < d_.degree_of(v); ++s) {
                    int w = dart_vertex(incidence_[v][s] ^ 1);
                    if (comp[w] == -1) {
                        comp[w] = count;
                        stack.push_back(w);
                    }
                }
            }
            ++count;
        }
        components_.assign(count, {});
        for (int v = 0; v < n; ++v) components_[comp[v]].push_back(v);
    }

    Candidate seed(int d0, bool reversed) const {
        Candidate c;
        c.label.assign(d_.vertex_count(), -1);
        c.edge_done.assign(d_.edges.size(), 0);
        int v = dart_vertex(d0);
        c.label[v] = 0;
        c.order.push_back(v);
        if (d_.is_trivalent(v)) {
            int s = dart_slot(d0);
            int x = incidence_[v][(s + 1) % 3];
            int y = incidence_[v][(s + 2) % 3];
            if (reversed) std::swap(x, y);
            c.darts.push_back({d0, x, y});
            c.queue = {d0, x, y};
            c.flips = reversed ? 1 : 0;
        } else {
            c.darts.push_back({d0, -1, -1});
            c.queue = {d0};
        }
        return c;
    }

    Token peek(const Candidate& c) const {
        int h = c.queue.front();
        int e = dart_edge(h);
        if (c.edge_done[e]) return Token{2, -1, -1, -1};
        int w = dart_vertex(h ^ 1);
        if (c.label[w] == -1)
            return Token{0, d_.is_trivalent(w) ? 0 : 1, -1, bead_index_[e]};
        const auto& dw = c.darts[c.label[w]];
        int pos = 0;
        while (dw[pos] != (h ^ 1)) ++pos;
        // Higher positions first: this makes the planar theta (opposite
        // orientations at its two vertices) the canonical representative.
        return Token{1, c.label[w], -pos, bead_index_[e]};
    }

    // Applies the front pop. May fork: the sibling takes the reversed
    // orientation at a newly labeled trivalent vertex.
    bool commit(Candidate& c, Candidate& fork_out) {
        int h = c.queue.front();
        c.queue.pop_front();
        int e = dart_edge(h);
        if (c.edge_done[e]) return false;
        c.edge_done[e] = 1;
        int h2 = h ^ 1;
        int w = dart_vertex(h2);
        if (c.label[w] != -1) return false;
        c.label[w] = static_cast<int>(c.order.size());
        c.order.push_back(w);
        if (!d_.is_trivalent(w)) {
            c.darts.push_back({h2, -1, -1});
            return false;
        }
        int s = dart_slot(h2);
        int x = incidence_[w][(s + 1) % 3];
        int y = incidence_[w][(s + 2) % 3];
        fork_out = c;
        c.darts.push_back({h2, x, y});
        c.queue.push_back(x);
        c.queue.push_back(y);
        fork_out.darts.push_back({h2, y, x});
        fork_out.queue.push_back(y);
        fork_out.queue.push_back(x);
        fork_out.flips += 1;
        return true;
    }

    ComponentResult canonicalize_component(const std::vector<int>& comp_vertices) {
        int tri = 0;
        for (int v : comp_vertices)
            if (d_.is_trivalent(v)) ++tri;

        std::vector<Candidate> cands;
        for (int v : comp_vertices) {
            for (int s = 0; s < d_.degree_of(v); ++s) {
                int d0 = incidence_[v][s];
                cands.push_back(seed(d0, false));
                if (d_.is_trivalent(v)) cands.push_back(seed(d0, true));
            }
        }

        ComponentResult res;
        int steps = 2 * tri + 1;
        for (int step = 0; step < steps; ++step) {
            Token best = peek(cands[0]);
            for (size_t i = 1; i < cands.size(); ++i) {
                Token t = peek(cands[i]);
                if (t < best) best = t;
            }
            res.stream.push_back(best);

            std::vector<Candidate> next;
            for (auto& c : cands) {
                if (!(peek(c) == best)) continue;
                Candidate fork;
                bool forked = commit(c, fork);
                next.push_back(std::move(c));
                if (forked) next.push_back(std::move(fork));
            }
            cands = std::move(next);
            if (cands.size() > 200000)
                throw StructuralError("canonicalization candidate blowup");
        }

        for (const auto& c : cands)
            (c.flips % 2 == 0 ? res.plus_seen : res.minus_seen) = true;
        res.order = cands.front().order;
        res.darts = cands.front().darts;
        return res;
    }

    Diagram assemble(const std::vector<ComponentResult>& results,
                     const std::vector<int>& comp_order) {
        Diagram rep;
        rep.trivalent = d_.trivalent;
        rep.univalent = d_.univalent;

        // Global ids: trivalent vertices first, in component order then
        // traversal order; univalent vertices after, same rule.
        std::vector<int> global(d_.vertex_count(), -1);
        int next_tri = 0;
        for (int ci : comp_order)
            for (int v : results[ci].order)
                if (d_.is_trivalent(v)) global[v] = next_tri++;
        int next_uni = d_.trivalent;
        for (int ci : comp_order)
            for (int v : results[ci].order)
                if (!d_.is_trivalent(v)) global[v] = next_uni++;

        // Slot of a dart = its position in the chosen order at its vertex.
        std::vector<int> comp_of(d_.vertex_count(), -1);
        for (size_t ci = 0; ci < components_.size(); ++ci)
            for (int v : components_[ci]) comp_of[v] = static_cast<int>(ci);
        auto new_half_end = [&](int dart) {
            int v = dart_vertex(dart);
            const ComponentResult& res = results[comp_of[v]];
            int lab = -1;
            for (size_t i = 0; i < res.order.size(); ++i)
                if (res.order[i] == v) lab = static_cast<int>(i);
            const auto& dw = res.darts[lab];
            int pos = 0;
            while (dw[pos] != dart) ++pos;
            return HalfEnd{global[v], pos};
        };

        for (size_t i = 0; i < d_.edges.size(); ++i) {
            int da = static_cast<int>(2 * i);
            rep.edges.push_back({new_half_end(da), new_half_end(da + 1), d_.edges[i].bead});
        }
        rep.circles = d_.circles;
        std::sort(rep.circles.begin(), rep.circles.end(),
                  [](const LaurentPoly& x, const LaurentPoly& y) { return x.str() < y.str(); });
        return rep;
    }

    Diagram d_;
    std::vector<std::array<int, 3>> incidence_;
    std::vector<int> bead_index_;
    std::vector<std::vector<int>> components_;
};

} // namespace

SignedCanonical canonicalize(const Diagram& d) {
    return Canonicalizer(d).run();
}

} // namespace beadweave
