#include "beadweave/hairmap.hpp"
#include "beadweave/errors.hpp"

#include <functional>
#include <vector>

namespace beadweave {

DiagramSum hair_expand(const DiagramSum& s, int d_max) {
    if (d_max < 0) throw PreconditionError("hair_expand: d_max must be >= 0");
    DiagramSum out;
    for (const auto& [enc, term] : s.terms()) {
        const Diagram& rep = term.representative;
        int budget = d_max - vassiliev_degree(rep);
        if (budget < 0) continue;

        // Loci with circles first in descending index order: placing hairs
        // erases the circle it expands, so later circle indices must already
        // be done; edge indices are stable under the edits.
        std::vector<EdgeRef> loci;
        std::vector<HairSeries> series;
        for (int i = static_cast<int>(rep.circles.size()) - 1; i >= 0; --i) {
            loci.push_back(EdgeRef::circle(i));
            series.push_back(lp_exp_substitute(rep.circles[i], budget));
        }
        for (int i = static_cast<int>(rep.edges.size()) - 1; i >= 0; --i) {
            loci.push_back(EdgeRef::edge(i));
            series.push_back(lp_exp_substitute(rep.edges[i].bead, budget));
        }

        std::function<void(size_t, const Diagram&, const Rational&, int)> rec =
            [&](size_t idx, const Diagram& cur, const Rational& mult, int left) {
                if (idx == loci.size()) {
                    out.add(cur, term.coeff * mult);
                    return;
                }
                for (int k = 0; k <= left; ++k) {
                    Rational c = series[idx].coeff(k);
                    if (c == 0) continue;
                    rec(idx + 1, place_hairs(cur, loci[idx], k), mult * c, left - k);
                }
            };
        rec(0, rep, Rational(1), budget);
    }
    return out;
}

DiagramSum leading_term(const DiagramSum& s, int n, A2hReport* report) {
    A2hReport local;
    A2hReport& rep_out = report ? *report : local;
    DiagramSum out;
    for (const auto& [enc, term] : s.terms()) {
        const Diagram& d = term.representative;
        if (vassiliev_degree(d) != n + 1) continue;
        out.add(d, term.coeff);

        if (!is_connected(d)) {
            rep_out.pass = false;
            rep_out.violations.push_back("term not connected: " + enc);
        }
        if (d.univalent != 2) {
            rep_out.pass = false;
            rep_out.violations.push_back("term does not have exactly two hairs: " + enc);
            continue;
        }
        // Both hairs on a single edge: the two subdivision vertices must be
        // adjacent (consecutive on the formerly beaded edge).
        int u1 = d.trivalent, u2 = d.trivalent + 1;
        int n1 = -1, n2 = -1;
        for (const auto& e : d.edges) {
            if (e.a.vertex == u1) n1 = e.b.vertex;
            if (e.b.vertex == u1) n1 = e.a.vertex;
            if (e.a.vertex == u2) n2 = e.b.vertex;
            if (e.b.vertex == u2) n2 = e.a.vertex;
        }
        bool adjacent = false;
        for (const auto& e : d.edges) {
            if ((e.a.vertex == n1 && e.b.vertex == n2) ||
                (e.a.vertex == n2 && e.b.vertex == n1))
                adjacent = true;
        }
        if (n1 < 0 || n2 < 0 || n1 == n2 || !d.is_trivalent(n1) || !d.is_trivalent(n2) ||
            !adjacent) {
            rep_out.pass = false;
            rep_out.violations.push_back("hairs are not on a single edge: " + enc);
        }
    }
    return out;
}

} // namespace beadweave
