#include "beadweave/contraction.hpp"
#include "beadweave/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace beadweave {

void Clasper::validate() const {
    diagram.validate();
    if (!diagram.all_beads_one())
        throw StructuralError("clasper beads must all be 1");
    if (!diagram.circles.empty())
        throw StructuralError("clasper cannot contain free loops");

    // Forest: every component is a tree.
    std::vector<int> parent(diagram.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : diagram.edges) {
        int ra = find(e.a.vertex), rb = find(e.b.vertex);
        if (ra == rb) throw StructuralError("clasper contains a cycle");
        parent[ra] = rb;
    }

    int L = diagram.univalent;
    std::set<int> seen;
    for (const auto& [v, label] : leaf_labels) {
        if (v < diagram.trivalent || v >= diagram.vertex_count())
            throw StructuralError("leaf label on non-univalent vertex " + std::to_string(v));
        if (label < 1 || label > L || !seen.insert(label).second)
            throw StructuralError("leaf labels must be a bijection with 1.." +
                                  std::to_string(L));
    }
    if (static_cast<int>(leaf_labels.size()) != L)
        throw StructuralError("every univalent vertex needs a leaf label");
}

int Clasper::vertex_of_label(int label) const {
    for (const auto& [v, l] : leaf_labels)
        if (l == label) return v;
    throw PreconditionError("no leaf with label " + std::to_string(label));
}

LinkingData::LinkingData(int size) : size_(size) {
    if (size < 0) throw PreconditionError("linking matrix size must be >= 0");
    entries_.assign(static_cast<size_t>(size) * size, LaurentPoly());
}

const LaurentPoly& LinkingData::at(int i, int j) const {
    if (i < 1 || i > size_ || j < 1 || j > size_)
        throw PreconditionError("linking index out of range");
    return entries_[static_cast<size_t>(i - 1) * size_ + (j - 1)];
}

void LinkingData::set(int i, int j, const LaurentPoly& value) {
    if (i < 1 || i > size_ || j < 1 || j > size_)
        throw PreconditionError("linking index out of range");
    entries_[static_cast<size_t>(i - 1) * size_ + (j - 1)] = value;
    entries_[static_cast<size_t>(j - 1) * size_ + (i - 1)] = value;
}

namespace {

// Glues matched leaves: each pair (a, b, bead) is a bridge between the two
// leaf vertices; leaves become 2-valent points and each maximal path through
// them fuses into a single edge carrying the product of its bridge beads.
// Pure leaf cycles close into beaded circles.
Diagram glue_matching(const Diagram& d,
                      const std::vector<std::tuple<int, int, LaurentPoly>>& bridges) {
    Diagram r;
    r.trivalent = d.trivalent;
    r.univalent = 0;
    r.circles = d.circles;

    std::vector<int> pendant_edge(d.vertex_count(), -1);
    for (size_t i = 0; i < d.edges.size(); ++i) {
        for (const HalfEnd& h : {d.edges[i].a, d.edges[i].b})
            if (!d.is_trivalent(h.vertex)) pendant_edge[h.vertex] = static_cast<int>(i);
    }
    std::vector<int> partner(d.vertex_count(), -1);
    std::vector<const LaurentPoly*> bridge_bead(d.vertex_count(), nullptr);
    for (const auto& [a, b, bead] : bridges) {
        partner[a] = b;
        partner[b] = a;
        bridge_bead[a] = bridge_bead[b] = &bead;
    }

    std::vector<char> edge_used(d.edges.size(), 0);
    for (size_t i = 0; i < d.edges.size(); ++i) {
        const auto& e = d.edges[i];
        bool a_leaf = !d.is_trivalent(e.a.vertex);
        bool b_leaf = !d.is_trivalent(e.b.vertex);
        if (!a_leaf && !b_leaf) {
            r.edges.push_back(e);
            edge_used[i] = 1;
        }
    }

    // Chains that start at a trivalent anchor.
    auto walk_from = [&](int start_edge, HalfEnd anchor, int first_leaf) {
        LaurentPoly bead(1);
        edge_used[start_edge] = 1;
        int leaf = first_leaf;
        while (true) {
            bead = bead * (*bridge_bead[leaf]);
            int next_leaf = partner[leaf];
            int pe = pendant_edge[next_leaf];
            edge_used[pe] = 1;
            const auto& e = d.edges[pe];
            HalfEnd far = e.a.vertex == next_leaf ? e.b : e.a;
            if (d.is_trivalent(far.vertex)) {
                r.edges.push_back({anchor, far, bead});
                return;
            }
            leaf = far.vertex;  // strut pass-through
        }
    };
    for (size_t i = 0; i < d.edges.size(); ++i) {
        if (edge_used[i]) continue;
        const auto& e = d.edges[i];
        bool a_leaf = !d.is_trivalent(e.a.vertex);
        bool b_leaf = !d.is_trivalent(e.b.vertex);
        if (a_leaf && b_leaf) continue;  // strut: handled by a chain or a cycle
        if (a_leaf)
            walk_from(static_cast<int>(i), e.b, e.a.vertex);
        else
            walk_from(static_cast<int>(i), e.a, e.b.vertex);
    }

    // Remaining pendant edges lie on pure leaf cycles.
    for (size_t i = 0; i < d.edges.size(); ++i) {
        if (edge_used[i]) continue;
        edge_used[i] = 1;
        LaurentPoly bead(1);
        int start_leaf = d.edges[i].a.vertex;
        int leaf = d.edges[i].b.vertex;
        while (true) {
            bead = bead * (*bridge_bead[leaf]);
            int next_leaf = partner[leaf];
            if (next_leaf == start_leaf) break;
            int pe = pendant_edge[next_leaf];
            edge_used[pe] = 1;
            const auto& e = d.edges[pe];
            leaf = e.a.vertex == next_leaf ? e.b.vertex : e.a.vertex;
        }
        r.circles.push_back(bead);
    }
    return r;
}

void enumerate_matchings(const Clasper& c, const LinkingData& lk, std::vector<int>& label_of,
                         std::vector<char>& matched,
                         std::vector<std::tuple<int, int, LaurentPoly>>& bridges,
                         DiagramSum& out) {
    int L = lk.size();
    int i = 1;
    while (i <= L && matched[i]) ++i;
    if (i > L) {
        out.add(glue_matching(c.diagram, bridges), 1);
        return;
    }
    matched[i] = 1;
    for (int j = i + 1; j <= L; ++j) {
        if (matched[j]) continue;
        const LaurentPoly& bead = lk.at(i, j);
        if (bead.is_zero()) continue;  // the whole matching vanishes
        matched[j] = 1;
        bridges.emplace_back(label_of[i], label_of[j], bead);
        enumerate_matchings(c, lk, label_of, matched, bridges, out);
        bridges.pop_back();
        matched[j] = 0;
    }
    matched[i] = 0;
}

} // namespace

DiagramSum complete_contraction(const Clasper& c, const LinkingData& lk) {
    c.validate();
    int L = c.leaf_count();
    if (lk.size() != L)
        throw PreconditionError("linking matrix size " + std::to_string(lk.size()) +
                                " does not match leaf count " + std::to_string(L));
    DiagramSum out;
    if (L % 2 != 0) return out;  // no perfect matchings

    std::vector<int> label_of(L + 1, -1);
    for (const auto& [v, label] : c.leaf_labels) label_of[label] = v;
    std::vector<char> matched(L + 1, 0);
    std::vector<std::tuple<int, int, LaurentPoly>> bridges;
    enumerate_matchings(c, lk, label_of, matched, bridges, out);
    return out;
}

DiagramSum expand_beads(const DiagramSum& s) {
    DiagramSum out;
    for (const auto& [enc, term] : s.terms()) {
        const Diagram& rep = term.representative;
        // Distribute every bead into its monomials.
        std::vector<std::pair<EdgeRef, LaurentPoly>> loci;
        for (int i = static_cast<int>(rep.circles.size()) - 1; i >= 0; --i)
            loci.emplace_back(EdgeRef::circle(i), rep.circles[i]);
        for (int i = static_cast<int>(rep.edges.size()) - 1; i >= 0; --i)
            loci.emplace_back(EdgeRef::edge(i), rep.edges[i].bead);

        std::function<void(size_t, Diagram, Rational)> rec = [&](size_t idx, Diagram cur,
                                                                 Rational mult) {
            if (idx == loci.size()) {
                out.add(cur, term.coeff * mult);
                return;
            }
            const auto& [where, bead] = loci[idx];
            for (const auto& [k, coeff] : bead.terms()) {
                Diagram next = cur;
                if (where.kind == EdgeRef::Edge)
                    next.edges[where.index].bead = LaurentPoly::monomial(1, k);
                else
                    next.circles[where.index] = LaurentPoly::monomial(1, k);
                rec(idx + 1, std::move(next), mult * Rational(coeff));
            }
        };
        rec(0, rep, Rational(1));
    }
    return out;
}

namespace {

struct EllipseParts {
    Diagram g;
    EdgeRef cap;              // the closing edge (the circle itself for n=1)
    std::vector<int> chords;  // interior edge indices
};

// Vertices: top row t_0..t_{n-2} = 0..n-2, bottom row b_0..b_{n-2} = n-1..2n-4.
// The outer ellipse runs t_0 .. t_{n-2}, caps to b_{n-2}, runs back to b_0 and
// caps to t_0; the chords t_i - b_i are the parallel interior edges. Cyclic
// orders follow the planar picture.
EllipseParts ellipse_parts(int n) {
    if (n < 1) throw PreconditionError("ellipse family needs n >= 1");
    EllipseParts parts;
    if (n == 1) {
        parts.g = Diagram::circle();
        parts.cap = EdgeRef::circle(0);
        return parts;
    }
    int m = n - 1;  // chord count
    Diagram& g = parts.g;
    g.trivalent = 2 * m;
    auto top = [&](int i) { return i; };
    auto bot = [&](int i) { return m + i; };
    // Slots: at t_i, 0 = toward t_{i-1} (left cap at i=0), 1 = toward t_{i+1}
    // (right cap at i=m-1), 2 = chord. At b_i the mirror image: 0 = toward
    // b_{i+1} (right cap at i=m-1), 1 = toward b_{i-1} (left cap at i=0),
    // 2 = chord.
    for (int i = 0; i + 1 < m; ++i) {
        g.edges.push_back({{top(i), 1}, {top(i + 1), 0}, LaurentPoly(1)});
        g.edges.push_back({{bot(i + 1), 1}, {bot(i), 0}, LaurentPoly(1)});
    }
    g.edges.push_back({{bot(0), 1}, {top(0), 0}, LaurentPoly(1)});  // left cap
    int cap_index = static_cast<int>(g.edges.size());
    g.edges.push_back({{top(m - 1), 1}, {bot(m - 1), 0}, LaurentPoly(1)});  // right cap
    parts.cap = EdgeRef::edge(cap_index);
    for (int i = 0; i < m; ++i) {
        parts.chords.push_back(static_cast<int>(g.edges.size()));
        g.edges.push_back({{top(i), 2}, {bot(i), 2}, LaurentPoly(1)});
    }
    g.validate();
    return parts;
}

} // namespace

Diagram ellipse_closed(int n) {
    return ellipse_parts(n).g;
}

Diagram grope_generator(int n) {
    EllipseParts parts = ellipse_parts(n);
    return place_hairs(parts.g, parts.cap, 2);
}

Clasper cut_closed_diagram(const Diagram& g, const std::vector<EdgeRef>& cuts,
                           std::vector<std::pair<int, int>>* pairs_out) {
    g.validate();
    if (g.univalent != 0)
        throw PreconditionError("cut_closed_diagram: diagram must be closed");
    if (!g.all_beads_one())
        throw PreconditionError("cut_closed_diagram: beads must all be 1");

    std::set<int> cut_edges;
    std::set<int> cut_circles;
    for (const auto& c : cuts) {
        bool fresh = c.kind == EdgeRef::Edge
                         ? cut_edges.insert(c.index).second
                         : cut_circles.insert(c.index).second;
        if (!fresh) throw StructuralError("edge cut set has a repeated entry");
        int limit = c.kind == EdgeRef::Edge ? static_cast<int>(g.edges.size())
                                            : static_cast<int>(g.circles.size());
        if (c.index < 0 || c.index >= limit)
            throw StructuralError("edge cut set references a missing edge");
    }

    Clasper clasper;
    Diagram& d = clasper.diagram;
    d.trivalent = g.trivalent;
    for (size_t i = 0; i < g.edges.size(); ++i)
        if (!cut_edges.count(static_cast<int>(i))) d.edges.push_back(g.edges[i]);
    for (size_t i = 0; i < g.circles.size(); ++i)
        if (!cut_circles.count(static_cast<int>(i))) d.circles.push_back(g.circles[i]);

    int next_label = 1;
    std::vector<std::pair<int, int>> pairs;
    for (const auto& c : cuts) {
        int la = d.vertex_count();
        d.univalent += 1;
        int lb = d.vertex_count();
        d.univalent += 1;
        if (c.kind == EdgeRef::Edge) {
            const DiagramEdge& e = g.edges[c.index];
            HalfEnd first = std::min(e.a, e.b);
            HalfEnd second = std::max(e.a, e.b);
            d.edges.push_back({first, {la, 0}, LaurentPoly(1)});
            d.edges.push_back({second, {lb, 0}, LaurentPoly(1)});
        } else {
            d.edges.push_back({{la, 0}, {lb, 0}, LaurentPoly(1)});  // circle cuts to a strut
        }
        clasper.leaf_labels[la] = next_label;
        clasper.leaf_labels[lb] = next_label + 1;
        pairs.emplace_back(next_label, next_label + 1);
        next_label += 2;
    }
    clasper.validate();
    if (pairs_out) *pairs_out = pairs;
    return clasper;
}

std::pair<Clasper, LinkingData> build_grope_clasper(const GropeSpec& spec) {
    if (spec.n < 1) throw PreconditionError("grope class 2n requires n >= 1");
    if (spec.generator_id != "ellipse")
        throw PreconditionError("unknown generator family: " + spec.generator_id);

    EllipseParts parts = ellipse_parts(spec.n);
    std::vector<EdgeRef> cuts{parts.cap};
    if (spec.edge_cut_set.empty()) {
        for (int chord : parts.chords) cuts.push_back(EdgeRef::edge(chord));
    } else {
        for (int idx : spec.edge_cut_set) cuts.push_back(EdgeRef::edge(idx));
    }

    std::vector<std::pair<int, int>> pairs;
    Clasper clasper = cut_closed_diagram(parts.g, cuts, &pairs);

    const Diagram& d = clasper.diagram;
    bool tree = is_connected(d) &&
                d.edges.size() == static_cast<size_t>(d.vertex_count()) - 1;
    if (!tree) throw StructuralError("edge cut set does not yield a tree");

    LinkingData lk(clasper.leaf_count());
    lk.set(pairs[0].first, pairs[0].second, LaurentPoly::t_minus_one());
    for (size_t k = 1; k < pairs.size(); ++k)
        lk.set(pairs[k].first, pairs[k].second, LaurentPoly(1));
    return {std::move(clasper), std::move(lk)};
}

ContractionShapeReport check_contraction_shape(const DiagramSum& s, int n) {
    ContractionShapeReport report;
    report.n = n;
    if (s.empty()) {
        report.vacuous = true;
        report.violations.push_back("empty sum: shape check is vacuous");
        return report;
    }
    LaurentPoly special = LaurentPoly::t_minus_one();
    for (const auto& [enc, term] : s.terms()) {
        ContractionShapeReport::TermCheck check;
        check.encoding = enc;
        const Diagram& rep = term.representative;
        check.connected = is_connected(rep);
        check.euler = euler_degree(rep);
        check.euler_ok = check.euler == 2 * n - 2;
        int special_count = 0;
        bool others_one = true;
        auto classify = [&](const LaurentPoly& bead) {
            if (bead == special || bead == -special)
                ++special_count;
            else if (!bead.is_one())
                others_one = false;
        };
        for (const auto& e : rep.edges) classify(e.bead);
        for (const auto& c : rep.circles) classify(c);
        check.beads_ok = special_count == 1 && others_one;
        check.pass = check.connected && check.euler_ok && check.beads_ok;
        if (!check.connected)
            report.violations.push_back("term not connected: " + enc);
        if (!check.euler_ok)
            report.violations.push_back("term has Euler degree " + std::to_string(check.euler) +
                                        ", expected " + std::to_string(2 * n - 2));
        if (!check.beads_ok)
            report.violations.push_back("term needs exactly one +-(t-1) bead and 1s elsewhere (found " +
                                        std::to_string(special_count) + " special): " + enc);
        report.pass = report.pass && check.pass;
        report.terms.push_back(std::move(check));
    }
    return report;
}

std::string print_clasper(const Clasper& c) {
    std::ostringstream out;
    out << print_diagram(c.diagram);
    for (const auto& [v, label] : c.leaf_labels) out << "leaf " << v << ": " << label << "\n";
    return out.str();
}

Clasper parse_clasper(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::ostringstream diagram_text;
    Clasper c;
    while (std::getline(in, line)) {
        std::string probe = line.substr(0, line.find('#'));
        size_t b = probe.find_first_not_of(" \t\r\n");
        if (b != std::string::npos && probe.compare(b, 5, "leaf ") == 0) {
            std::istringstream ls(probe.substr(b + 5));
            int v = 0, label = 0;
            char colon = 0;
            ls >> v >> colon >> label;
            if (ls.fail() || colon != ':') throw ParseError("malformed leaf line: " + line);
            if (c.leaf_labels.count(v)) throw ParseError("duplicate leaf line for vertex " +
                                                         std::to_string(v));
            c.leaf_labels[v] = label;
        } else {
            diagram_text << line << "\n";
        }
    }
    c.diagram = parse_diagram(diagram_text.str());
    c.validate();
    return c;
}

std::string print_linking(const LinkingData& lk) {
    std::ostringstream out;
    out << "leaves: " << lk.size() << "\n";
    for (int i = 1; i <= lk.size(); ++i)
        for (int j = i; j <= lk.size(); ++j)
            if (!lk.at(i, j).is_zero())
                out << "lk " << i << " " << j << ": " << lk.at(i, j).str() << "\n";
    return out.str();
}

LinkingData parse_linking(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    LinkingData lk(0);
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, line)) {
        std::string s = line.substr(0, line.find('#'));
        size_t b = s.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        size_t e = s.find_last_not_of(" \t\r\n");
        s = s.substr(b, e - b + 1);
        std::istringstream ls(s);
        std::string kw;
        ls >> kw;
        if (!have_header) {
            int size = 0;
            if (kw != "leaves:" || !(ls >> size))
                throw ParseError("expected 'leaves: <L>', got: " + s);
            lk = LinkingData(size);
            have_header = true;
        } else {
            int i = 0, j = 0;
            char colon = 0;
            std::string value;
            if (kw != "lk" || !(ls >> i >> j >> colon) || colon != ':')
                throw ParseError("expected 'lk <i> <j>: <laurent>', got: " + s);
            std::getline(ls, value);
            if (!seen.insert({std::min(i, j), std::max(i, j)}).second)
                throw ParseError("duplicate linking entry for pair " + std::to_string(i) + "," +
                                 std::to_string(j));
            lk.set(i, j, LaurentPoly::parse(value));
        }
    }
    if (!have_header) throw ParseError("missing 'leaves:' header");
    return lk;
}

} // namespace beadweave
