#include "beadweave/sl2weight.hpp"
#include "beadweave/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <vector>

namespace beadweave {

namespace {

void check_preconditions(const Diagram& d) {
    if (d.univalent != 0)
        throw PreconditionError("sl2_eval: diagram must be closed (no univalent vertices)");
    if (!d.all_beads_one())
        throw PreconditionError("sl2_eval: beads must all be 1");
}

// Removes the edge e = (u, v) together with both endpoints and welds the four
// loose arc ends. With cyclic orders (e, a, b) at u and (e, c, d) at v, the
// parallel resolution joins a-d and b-c, the crossed one a-c and b-d.
// Welded chains that close up entirely among the four arcs become circles.
Diagram resolve_edge(const Diagram& d, int edge_index, bool crossed) {
    const DiagramEdge& e = d.edges[edge_index];
    int u = e.a.vertex, v = e.b.vertex;
    if (u == v) throw PreconditionError("resolve_edge: edge must join distinct vertices");

    // incidence darts: dart id = 2*edge + end
    std::vector<std::array<int, 3>> inc(d.vertex_count(), {-1, -1, -1});
    auto dart_half = [&](int dart) -> const HalfEnd& {
        const DiagramEdge& de = d.edges[dart >> 1];
        return (dart & 1) ? de.b : de.a;
    };
    for (size_t i = 0; i < d.edges.size(); ++i) {
        inc[d.edges[i].a.vertex][d.edges[i].a.slot] = static_cast<int>(2 * i);
        inc[d.edges[i].b.vertex][d.edges[i].b.slot] = static_cast<int>(2 * i + 1);
    }

    int a = inc[u][(e.a.slot + 1) % 3];
    int b = inc[u][(e.a.slot + 2) % 3];
    int c = inc[v][(e.b.slot + 1) % 3];
    int dd = inc[v][(e.b.slot + 2) % 3];

    std::map<int, int> partner;
    if (!crossed) {
        partner[a] = dd; partner[dd] = a;
        partner[b] = c;  partner[c] = b;
    } else {
        partner[a] = c;  partner[c] = a;
        partner[b] = dd; partner[dd] = b;
    }

    auto is_stub = [&](int dart) { return partner.count(dart) > 0; };

    Diagram r;
    r.trivalent = d.trivalent - 2;
    r.univalent = d.univalent;
    r.circles = d.circles;
    auto map_vertex = [&](int w) {
        int shift = (w > u ? 1 : 0) + (w > v ? 1 : 0);
        return w - shift;
    };

    std::set<int> stub_edges;
    for (int dart : {a, b, c, dd}) stub_edges.insert(dart >> 1);
    for (size_t i = 0; i < d.edges.size(); ++i) {
        if (static_cast<int>(i) == edge_index || stub_edges.count(static_cast<int>(i)))
            continue;
        const DiagramEdge& de = d.edges[i];
        r.edges.push_back({{map_vertex(de.a.vertex), de.a.slot},
                           {map_vertex(de.b.vertex), de.b.slot},
                           de.bead});
    }

    std::set<int> visited;
    // Chains anchored outside {u, v}.
    for (int s0 : {a, b, c, dd}) {
        if (is_stub(s0 ^ 1)) continue;        // both ends loose: maybe a pure cycle
        if (visited.count(s0 >> 1)) continue;
        const HalfEnd& start = dart_half(s0 ^ 1);
        visited.insert(s0 >> 1);
        int s = s0;
        while (true) {
            int q = partner.at(s);
            visited.insert(q >> 1);
            int o = q ^ 1;
            if (!is_stub(o)) {
                const HalfEnd& finish = dart_half(o);
                r.edges.push_back({{map_vertex(start.vertex), start.slot},
                                   {map_vertex(finish.vertex), finish.slot},
                                   LaurentPoly(1)});
                break;
            }
            s = o;
        }
    }
    // Leftovers close into circles.
    for (int s0 : {a, b, c, dd}) {
        if (visited.count(s0 >> 1)) continue;
        visited.insert(s0 >> 1);
        int s = s0;
        while (true) {
            int q = partner.at(s);
            if ((q >> 1) == (s0 >> 1)) break;  // back on the starting edge
            visited.insert(q >> 1);
            s = q ^ 1;
        }
        r.circles.push_back(LaurentPoly(1));
    }
    return r;
}

int pick_edge_on_shortest_cycle(const Diagram& d) {
    int best = -1;
    int best_len = -1;
    int n = d.vertex_count();
    for (size_t ei = 0; ei < d.edges.size(); ++ei) {
        const DiagramEdge& e = d.edges[ei];
        if (e.a.vertex == e.b.vertex) continue;
        // shortest alternative path between the endpoints avoiding this edge
        std::vector<int> dist(n, -1);
        std::deque<int> queue{e.a.vertex};
        dist[e.a.vertex] = 0;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (size_t fi = 0; fi < d.edges.size(); ++fi) {
                if (fi == ei) continue;
                const DiagramEdge& f = d.edges[fi];
                for (int y : {f.a.vertex, f.b.vertex}) {
                    int z = y == f.a.vertex ? f.b.vertex : f.a.vertex;
                    if (y == x && dist[z] == -1) {
                        dist[z] = dist[x] + 1;
                        queue.push_back(z);
                    }
                }
            }
        }
        int len = dist[e.b.vertex] == -1 ? std::numeric_limits<int>::max()
                                         : dist[e.b.vertex] + 1;
        if (best == -1 || len < best_len) {
            best = static_cast<int>(ei);
            best_len = len;
        }
    }
    return best;
}

Int pow_int(const Int& base, int exp) {
    Int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

Int eval_rec(const Diagram& d, Sl2Cache& cache, const Int& loop_value) {
    SignedCanonical sc = canonicalize(d);
    if (sc.sign == 0) return 0;
    auto it = cache.values.find(sc.encoding);
    if (it != cache.values.end()) return sc.sign * it->second;

    const Diagram& rep = sc.representative;
    Int value;
    if (rep.trivalent == 0) {
        value = pow_int(loop_value, static_cast<int>(rep.circles.size()));
    } else {
        int e = pick_edge_on_shortest_cycle(rep);
        value = eval_rec(resolve_edge(rep, e, false), cache, loop_value) -
                eval_rec(resolve_edge(rep, e, true), cache, loop_value);
    }
    cache.values.emplace(sc.encoding, value);
    return sc.sign * value;
}

} // namespace

Int sl2_eval(const Diagram& d, Sl2Cache& cache, const Int& loop_value) {
    check_preconditions(d);
    return eval_rec(d, cache, loop_value);
}

Int sl2_eval_resolving_first(const Diagram& d, int edge_index, Sl2Cache& cache,
                             const Int& loop_value) {
    check_preconditions(d);
    if (edge_index < 0 || edge_index >= static_cast<int>(d.edges.size()))
        throw PreconditionError("sl2_eval_resolving_first: no such edge");
    if (d.has_tadpole() && d.edges[edge_index].a.vertex == d.edges[edge_index].b.vertex)
        throw PreconditionError("sl2_eval_resolving_first: cannot resolve a tadpole edge");
    return eval_rec(resolve_edge(d, edge_index, false), cache, loop_value) -
           eval_rec(resolve_edge(d, edge_index, true), cache, loop_value);
}

Rational sl2_eval_sum(const DiagramSum& s, Sl2Cache& cache, const Int& loop_value) {
    Rational total = 0;
    for (const auto& [enc, term] : s.terms())
        total += term.coeff * Rational(sl2_eval(term.representative, cache, loop_value));
    return total;
}

} // namespace beadweave
