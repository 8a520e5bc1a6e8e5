#include "beadweave/diagram.hpp"
#include "beadweave/errors.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace beadweave {

namespace {

std::string strip(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string s = strip(line);
        if (!s.empty()) lines.push_back(s);
    }
    return lines;
}

} // namespace

std::string print_diagram(const Diagram& d) {
    std::ostringstream out;
    out << "vertices: T " << d.trivalent << " U " << d.univalent << "\n";
    for (const auto& c : d.circles) out << "circle: " << c.str() << "\n";

    struct Line {
        HalfEnd a, b;
        std::string bead;
    };
    std::vector<Line> lines;
    lines.reserve(d.edges.size());
    for (const auto& e : d.edges) {
        Line l{std::min(e.a, e.b), std::max(e.a, e.b), e.bead.str()};
        lines.push_back(std::move(l));
    }
    std::sort(lines.begin(), lines.end(), [](const Line& x, const Line& y) {
        return std::tie(x.a, x.b, x.bead) < std::tie(y.a, y.b, y.bead);
    });
    for (size_t i = 0; i < lines.size(); ++i) {
        out << "edge " << i << ": " << lines[i].a.vertex << '.' << lines[i].a.slot << " -- "
            << lines[i].b.vertex << '.' << lines[i].b.slot << " bead " << lines[i].bead << "\n";
    }
    return out.str();
}

Diagram parse_diagram(const std::string& text) {
    std::vector<std::string> lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty diagram text");

    Diagram d;
    {
        std::istringstream in(lines[0]);
        std::string kw, t_kw, u_kw;
        in >> kw >> t_kw >> d.trivalent >> u_kw >> d.univalent;
        if (in.fail() || kw != "vertices:" || t_kw != "T" || u_kw != "U")
            throw ParseError("expected 'vertices: T <k> U <m>', got: " + lines[0]);
    }

    std::vector<std::pair<int, DiagramEdge>> numbered;
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream in(lines[i]);
        std::string kw;
        in >> kw;
        if (kw == "circle:") {
            std::string rest;
            std::getline(in, rest);
            d.circles.push_back(LaurentPoly::parse(rest));
        } else if (kw == "edge") {
            int id = 0;
            char colon = 0, dot1 = 0, dot2 = 0;
            std::string dashes, bead_kw, bead_text;
            DiagramEdge e;
            in >> id >> colon >> e.a.vertex >> dot1 >> e.a.slot >> dashes >> e.b.vertex >>
                dot2 >> e.b.slot >> bead_kw;
            std::getline(in, bead_text);
            if (in.fail() || colon != ':' || dot1 != '.' || dot2 != '.' || dashes != "--" ||
                bead_kw != "bead")
                throw ParseError("malformed edge line: " + lines[i]);
            e.bead = LaurentPoly::parse(bead_text);
            numbered.emplace_back(id, e);
        } else {
            throw ParseError("unrecognized diagram line: " + lines[i]);
        }
    }
    std::sort(numbered.begin(), numbered.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (size_t i = 0; i < numbered.size(); ++i) {
        if (numbered[i].first != static_cast<int>(i))
            throw ParseError("edge ids must be 0..E-1 without repeats");
        d.edges.push_back(numbered[i].second);
    }
    d.validate();
    return d;
}

std::string print_sum(const DiagramSum& s) {
    std::ostringstream out;
    for (const auto& [enc, term] : s.terms()) {
        out << "term: " << term.coeff << "\n";
        out << print_diagram(term.representative);
    }
    return out.str();
}

DiagramSum parse_sum(const std::string& text) {
    DiagramSum sum;
    std::vector<std::string> lines = content_lines(text);
    size_t i = 0;
    while (i < lines.size()) {
        if (lines[i].rfind("term:", 0) != 0)
            throw ParseError("expected 'term: <rational>', got: " + lines[i]);
        Rational coeff;
        try {
            coeff = Rational(strip(lines[i].substr(5)));
        } catch (const std::exception&) {
            throw ParseError("bad rational in: " + lines[i]);
        }
        ++i;
        std::ostringstream block;
        while (i < lines.size() && lines[i].rfind("term:", 0) != 0) {
            block << lines[i] << "\n";
            ++i;
        }
        sum.add(parse_diagram(block.str()), coeff);
    }
    return sum;
}

} // namespace beadweave
