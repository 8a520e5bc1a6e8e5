#include "beadweave/diagram.hpp"
#include "beadweave/errors.hpp"

#include <algorithm>
#include <numeric>

namespace beadweave {

void Diagram::validate() const {
    if (trivalent < 0 || univalent < 0)
        throw StructuralError("negative vertex count");
    // occupancy[v][slot]
    std::vector<std::array<int, 3>> occupancy(vertex_count(), {0, 0, 0});
    for (const auto& e : edges) {
        for (const HalfEnd& h : {e.a, e.b}) {
            if (h.vertex < 0 || h.vertex >= vertex_count())
                throw StructuralError("edge references vertex " + std::to_string(h.vertex) +
                                      " out of range");
            int max_slot = is_trivalent(h.vertex) ? 2 : 0;
            if (h.slot < 0 || h.slot > max_slot)
                throw StructuralError("bad slot " + std::to_string(h.slot) + " at vertex " +
                                      std::to_string(h.vertex));
            occupancy[h.vertex][h.slot] += 1;
        }
    }
    for (int v = 0; v < vertex_count(); ++v) {
        int need = degree_of(v);
        for (int s = 0; s < 3; ++s) {
            int want = s < need ? 1 : 0;
            if (occupancy[v][s] != want)
                throw StructuralError("vertex " + std::to_string(v) + " slot " +
                                      std::to_string(s) + " covered " +
                                      std::to_string(occupancy[v][s]) + " times");
        }
    }
}

bool Diagram::has_tadpole() const {
    for (const auto& e : edges)
        if (e.a.vertex == e.b.vertex) return true;
    return false;
}

bool Diagram::all_beads_one() const {
    for (const auto& e : edges)
        if (!e.bead.is_one()) return false;
    for (const auto& c : circles)
        if (!c.is_one()) return false;
    return true;
}

Diagram Diagram::circle(const LaurentPoly& bead) {
    Diagram d;
    d.circles.push_back(bead);
    return d;
}

Diagram Diagram::theta() {
    Diagram d;
    d.trivalent = 2;
    d.edges.push_back({{0, 0}, {1, 0}, LaurentPoly(1)});
    d.edges.push_back({{0, 1}, {1, 2}, LaurentPoly(1)});
    d.edges.push_back({{0, 2}, {1, 1}, LaurentPoly(1)});
    return d;
}

int euler_degree(const Diagram& d) {
    return d.trivalent;
}

int vassiliev_degree(const Diagram& d) {
    int total = d.vertex_count();
    if (total % 2 != 0)
        throw StructuralError("vassiliev_degree: odd total vertex count " +
                              std::to_string(total));
    return total / 2;
}

namespace {

// Renumbering that inserts `added_trivalent` new trivalent vertices (ids
// old_trivalent..) before the univalent block.
int shifted_vertex(int v, int old_trivalent, int added_trivalent) {
    return v < old_trivalent ? v : v + added_trivalent;
}

void shift_univalents(Diagram& d, int old_trivalent, int added_trivalent) {
    for (auto& e : d.edges) {
        e.a.vertex = shifted_vertex(e.a.vertex, old_trivalent, added_trivalent);
        e.b.vertex = shifted_vertex(e.b.vertex, old_trivalent, added_trivalent);
    }
}

} // namespace

Diagram attach_hair(const Diagram& d, EdgeRef where, HairSide side) {
    Diagram r = d;
    int w = d.trivalent;  // new trivalent vertex
    if (where.kind == EdgeRef::Edge) {
        if (where.index < 0 || where.index >= static_cast<int>(d.edges.size()))
            throw PreconditionError("attach_hair: no such edge");
        shift_univalents(r, d.trivalent, 1);
        r.trivalent += 1;
        int hair = r.vertex_count();  // new univalent vertex, highest id
        r.univalent += 1;

        DiagramEdge e = r.edges[where.index];
        HalfEnd from = std::min(e.a, e.b);
        HalfEnd to = std::max(e.a, e.b);
        if (side == HairSide::Reverse) std::swap(from, to);
        bool bead_on_in_arc = from < to;  // bead follows the smaller half-end
        r.edges[where.index] = {from, {w, 0}, bead_on_in_arc ? e.bead : LaurentPoly(1)};
        r.edges.push_back({{w, 1}, to, bead_on_in_arc ? LaurentPoly(1) : e.bead});
        r.edges.push_back({{w, 2}, {hair, 0}, LaurentPoly(1)});
    } else {
        if (where.index < 0 || where.index >= static_cast<int>(d.circles.size()))
            throw PreconditionError("attach_hair: no such circle");
        LaurentPoly bead = r.circles[where.index];
        r.circles.erase(r.circles.begin() + where.index);
        shift_univalents(r, d.trivalent, 1);
        r.trivalent += 1;
        int hair = r.vertex_count();
        r.univalent += 1;
        r.edges.push_back({{w, 0}, {w, 1}, bead});
        r.edges.push_back({{w, 2}, {hair, 0}, LaurentPoly(1)});
    }
    return r;
}

Diagram place_hairs(const Diagram& d, EdgeRef where, int k) {
    if (k < 0) throw PreconditionError("place_hairs: negative hair count");
    Diagram r = d;
    if (k == 0) {
        if (where.kind == EdgeRef::Edge) {
            if (where.index < 0 || where.index >= static_cast<int>(d.edges.size()))
                throw PreconditionError("place_hairs: no such edge");
            r.edges[where.index].bead = LaurentPoly(1);
        } else {
            if (where.index < 0 || where.index >= static_cast<int>(d.circles.size()))
                throw PreconditionError("place_hairs: no such circle");
            r.circles[where.index] = LaurentPoly(1);
        }
        return r;
    }

    int first_w = d.trivalent;  // new trivalent vertices first_w..first_w+k-1
    auto subdiv = [&](int j) { return first_w + j; };        // j = 0..k-1
    auto hair_tip = [&](int j) { return d.trivalent + k + d.univalent + j; };

    if (where.kind == EdgeRef::Edge) {
        if (where.index < 0 || where.index >= static_cast<int>(d.edges.size()))
            throw PreconditionError("place_hairs: no such edge");
        shift_univalents(r, d.trivalent, k);
        r.trivalent += k;
        r.univalent += k;
        DiagramEdge e = r.edges[where.index];
        HalfEnd from = std::min(e.a, e.b);
        HalfEnd to = std::max(e.a, e.b);
        r.edges[where.index] = {from, {subdiv(0), 0}, LaurentPoly(1)};
        for (int j = 0; j + 1 < k; ++j)
            r.edges.push_back({{subdiv(j), 1}, {subdiv(j + 1), 0}, LaurentPoly(1)});
        r.edges.push_back({{subdiv(k - 1), 1}, to, LaurentPoly(1)});
    } else {
        if (where.index < 0 || where.index >= static_cast<int>(d.circles.size()))
            throw PreconditionError("place_hairs: no such circle");
        r.circles.erase(r.circles.begin() + where.index);
        shift_univalents(r, d.trivalent, k);
        r.trivalent += k;
        r.univalent += k;
        for (int j = 0; j + 1 < k; ++j)
            r.edges.push_back({{subdiv(j), 1}, {subdiv(j + 1), 0}, LaurentPoly(1)});
        r.edges.push_back({{subdiv(k - 1), 1}, {subdiv(0), 0}, LaurentPoly(1)});
    }
    for (int j = 0; j < k; ++j)
        r.edges.push_back({{subdiv(j), 2}, {hair_tip(j), 0}, LaurentPoly(1)});
    return r;
}

Diagram join_hairs(const Diagram& d) {
    if (d.univalent != 2)
        throw PreconditionError("join_hairs: need exactly 2 univalent vertices, have " +
                                std::to_string(d.univalent));
    if (!d.all_beads_one())
        throw PreconditionError("join_hairs: beads must all be 1");
    int u1 = d.trivalent;
    int u2 = d.trivalent + 1;
    int e1 = -1, e2 = -1;
    for (size_t i = 0; i < d.edges.size(); ++i) {
        if (d.edges[i].a.vertex == u1 || d.edges[i].b.vertex == u1) e1 = static_cast<int>(i);
        if (d.edges[i].a.vertex == u2 || d.edges[i].b.vertex == u2) e2 = static_cast<int>(i);
    }
    Diagram r;
    r.trivalent = d.trivalent;
    r.circles = d.circles;
    if (e1 == e2) {
        // A bare strut closes up into a circle.
        for (size_t i = 0; i < d.edges.size(); ++i)
            if (static_cast<int>(i) != e1) r.edges.push_back(d.edges[i]);
        r.circles.push_back(LaurentPoly(1));
        return r;
    }
    auto far_end = [&](int ei, int u) {
        return d.edges[ei].a.vertex == u ? d.edges[ei].b : d.edges[ei].a;
    };
    HalfEnd a = far_end(e1, u1);
    HalfEnd b = far_end(e2, u2);
    for (size_t i = 0; i < d.edges.size(); ++i)
        if (static_cast<int>(i) != e1 && static_cast<int>(i) != e2)
            r.edges.push_back(d.edges[i]);
    r.edges.push_back({a, b, LaurentPoly(1)});
    return r;
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
    Diagram r;
    r.trivalent = a.trivalent + b.trivalent;
    r.univalent = a.univalent + b.univalent;
    auto map_a = [&](int v) { return v < a.trivalent ? v : v + b.trivalent; };
    auto map_b = [&](int v) {
        return v < b.trivalent ? a.trivalent + v : a.trivalent + a.univalent + v;
    };
    for (const auto& e : a.edges)
        r.edges.push_back({{map_a(e.a.vertex), e.a.slot}, {map_a(e.b.vertex), e.b.slot}, e.bead});
    for (const auto& e : b.edges)
        r.edges.push_back({{map_b(e.a.vertex), e.a.slot}, {map_b(e.b.vertex), e.b.slot}, e.bead});
    r.circles = a.circles;
    r.circles.insert(r.circles.end(), b.circles.begin(), b.circles.end());
    return r;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

} // namespace

bool is_connected(const Diagram& d) {
    UnionFind uf(d.vertex_count());
    for (const auto& e : d.edges) uf.unite(e.a.vertex, e.b.vertex);
    int vertex_components = 0;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (uf.find(v) == v) ++vertex_components;
    return vertex_components + static_cast<int>(d.circles.size()) == 1;
}

void DiagramSum::add(const Diagram& d, const Rational& coeff) {
    if (coeff == 0) return;
    add(canonicalize(d), coeff);
}

void DiagramSum::add(const SignedCanonical& sc, const Rational& coeff) {
    if (coeff == 0 || sc.sign == 0) return;
    if (sc.representative.univalent == 1) return;  // trivial in A(*)
    auto it = terms_.find(sc.encoding);
    if (it == terms_.end()) {
        terms_.emplace(sc.encoding, Term{sc.representative, coeff * sc.sign});
    } else {
        it->second.coeff += coeff * sc.sign;
        if (it->second.coeff == 0) terms_.erase(it);
    }
}

DiagramSum& DiagramSum::operator+=(const DiagramSum& rhs) {
    for (const auto& [enc, term] : rhs.terms_) {
        auto it = terms_.find(enc);
        if (it == terms_.end()) {
            terms_.emplace(enc, term);
        } else {
            it->second.coeff += term.coeff;
            if (it->second.coeff == 0) terms_.erase(it);
        }
    }
    return *this;
}

DiagramSum operator+(DiagramSum lhs, const DiagramSum& rhs) {
    lhs += rhs;
    return lhs;
}

DiagramSum DiagramSum::operator*(const Rational& scalar) const {
    DiagramSum r;
    if (scalar == 0) return r;
    for (const auto& [enc, term] : terms_)
        r.terms_.emplace(enc, Term{term.representative, term.coeff * scalar});
    return r;
}

Rational DiagramSum::coeff(const std::string& encoding) const {
    auto it = terms_.find(encoding);
    return it == terms_.end() ? Rational(0) : it->second.coeff;
}

bool operator==(const DiagramSum& lhs, const DiagramSum& rhs) {
    if (lhs.terms_.size() != rhs.terms_.size()) return false;
    for (auto lit = lhs.terms_.begin(), rit = rhs.terms_.begin(); lit != lhs.terms_.end();
         ++lit, ++rit) {
        if (lit->first != rit->first || lit->second.coeff != rit->second.coeff) return false;
    }
    return true;
}

std::string DiagramSum::str() const {
    return print_sum(*this);
}

DiagramSum simplify(const DiagramSum& s) {
    DiagramSum out;
    for (const auto& [enc, term] : s.terms()) out.add(term.representative, term.coeff);
    return out;
}

} // namespace beadweave
