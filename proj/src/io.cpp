#include "pianocat/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace pianocat {

json to_json(const BoundaryPoint &p) {
    if (p.acc) return json{{"acc", p.seg}};
    return json{{"pt", {p.seg, p.pos}}};
}

json to_json(const Arc &a) { return json::array({to_json(a.a), to_json(a.b)}); }

json to_json(const ArcSet &A) {
    json arcs = json::array();
    for (auto &a : A.arcs) arcs.push_back(to_json(a));
    return json{{"n", A.n}, {"arcs", arcs}};
}

json to_json(const DissectionSet &D) {
    json red = json::array(), bind = json::array();
    for (auto [a, b] : D.red) red.push_back({a, b});
    for (auto [a, b] : D.binding) bind.push_back({a, b});
    return json{{"n", D.n}, {"red", red}, {"binding", bind}};
}

json to_json(const PianoQuiver &P) {
    json verts = json::array(), arrows = json::array(), rels = json::array(), sharp = json::array();
    for (int v = 0; v < P.nv(); ++v) verts.push_back(v + 1);
    for (auto &a : P.arrows()) arrows.push_back({{"src", a.src + 1}, {"dst", a.dst + 1}, {"at", a.at}});
    for (auto [e, f] : P.kb.gentle.relations) rels.push_back({e, f});
    for (int v : P.kb.sharp) sharp.push_back(v + 1);
    json alpha = json::array(), beta = json::array(), comm = json::array();
    for (int v = 0; v < P.nv(); ++v) {
        alpha.push_back(v + 1);
        if (!P.is_sharp(v)) beta.push_back(v + 1);
    }
    for (auto &c : P.commutations) comm.push_back(c);
    return json{{"vertices", verts},
                {"arrows", arrows},
                {"relations", rels},
                {"sharp", sharp},
                {"loops", {{"alpha", alpha}, {"beta", beta}}},
                {"commutations", comm}};
}

json to_json(const HomDegreeTable &t) {
    json dims = json::object();
    for (auto [d, v] : t.dims) dims[std::to_string(d)] = v;
    return json{{"source", to_json(t.source)}, {"target", to_json(t.target)}, {"window", {-t.D, t.D}}, {"dims", dims}};
}

BoundaryPoint point_from_json(const json &j, int n) {
    if (!j.is_object()) throw ParseError("point must be an object");
    if (j.contains("acc")) return BoundaryPoint::Acc(j.at("acc").get<int>(), n);
    if (j.contains("pt")) {
        auto &p = j.at("pt");
        if (!p.is_array() || p.size() != 2) throw ParseError("pt must be [segment, position]");
        return BoundaryPoint::Pt(p[0].get<int>(), p[1].get<long>(), n);
    }
    throw ParseError("point needs an acc or pt key");
}

Arc arc_from_json(const json &j, int n) {
    if (!j.is_array() || j.size() != 2) throw ParseError("arc must be a two-element array");
    try {
        return Arc::make(point_from_json(j[0], n), point_from_json(j[1], n));
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
}

template <class F>
static auto guarded(F &&f) {
    try {
        return f();
    } catch (const json::exception &e) {
        throw ParseError(e.what());
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
}

ArcSet arcset_from_json(const json &j) {
    return guarded([&] {
        int n = j.at("n").get<int>();
        if (n < 1) throw ParseError("n must be positive");
        std::vector<Arc> v;
        for (auto &a : j.at("arcs")) v.push_back(arc_from_json(a, n));
        return ArcSet::ordered(n, v);
    });
}

DissectionSet dissection_from_json(const json &j) {
    return guarded([&] {
        DissectionSet D;
        D.n = j.at("n").get<int>();
        if (D.n < 0) throw ParseError("n must be non-negative");
        auto chord = [&](const json &c) {
            if (!c.is_array() || c.size() != 2) throw ParseError("chord must be [a, b]");
            Chord ch{c[0].get<int>(), c[1].get<int>()};
            if (ch.first < 0 || ch.second < 0 || ch.first >= 2 * D.n || ch.second >= 2 * D.n)
                throw ParseError("chord endpoint out of range");
            return ch;
        };
        if (j.contains("red"))
            for (auto &c : j.at("red")) D.red.push_back(chord(c));
        if (j.contains("binding"))
            for (auto &c : j.at("binding")) D.binding.push_back(chord(c));
        return D;
    });
}

json parse_json_text(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        throw ParseError(e.what());
    }
}

std::string hom_table_csv(const HomDegreeTable &t) {
    std::string s = "degree,dim\n";
    for (auto [d, v] : t.dims) s += std::to_string(d) + "," + std::to_string(v) + "\n";
    return s;
}

std::string quiver_dot(const PianoQuiver &P) {
    std::ostringstream o;
    o << "digraph piano {\n  node [shape=circle];\n";
    for (int v = 0; v < P.nv(); ++v)
        o << "  v" << v + 1 << " [label=\"" << v + 1 << (P.is_sharp(v) ? "#" : "") << "\""
          << (P.is_sharp(v) ? ", style=filled, fillcolor=green" : ", color=red") << "];\n";
    for (auto &a : P.arrows()) o << "  v" << a.src + 1 << " -> v" << a.dst + 1 << ";\n";
    for (auto [e, f] : P.kb.gentle.relations)
        o << "  v" << P.arrows()[e].src + 1 << " -> v" << P.arrows()[f].dst + 1
          << " [style=dotted, arrowhead=none, constraint=false];\n";
    o << "}\n";
    return o.str();
}

namespace {

const double kR = 100, kC = 120;

std::string fmt(double x) {
    char b[32];
    std::snprintf(b, sizeof b, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
    return b;
}

// angle for slot t of 2n equally spaced slots, anticlockwise from the top
std::pair<double, double> slot(double t, int slots) {
    double th = M_PI / 2 + 2 * M_PI * t / slots;
    return {kC + kR * std::cos(th), kC - kR * std::sin(th)};
}

std::pair<double, double> point_xy(const BoundaryPoint &p, int n) {
    if (p.acc) return slot(2 * p.seg, 2 * n);
    // marked points squeeze towards the neighbouring accumulation points
    double off = 0.9 * std::atan(double(p.pos) / 2) / M_PI;
    return slot(2 * p.seg + 1 + off, 2 * n);
}

struct Svg {
    std::ostringstream o;
    Svg() {
        o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"240\" height=\"240\" viewBox=\"0 0 240 240\">\n";
        o << "<circle class=\"boundary\" cx=\"" << fmt(kC) << "\" cy=\"" << fmt(kC) << "\" r=\"" << fmt(kR)
          << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    void chord(std::pair<double, double> a, std::pair<double, double> b, const char *colour) {
        o << "<line class=\"chord\" x1=\"" << fmt(a.first) << "\" y1=\"" << fmt(a.second) << "\" x2=\"" << fmt(b.first)
          << "\" y2=\"" << fmt(b.second) << "\" stroke=\"" << colour << "\"/>\n";
    }
    void hollow(std::pair<double, double> a) {
        o << "<circle class=\"hollow\" cx=\"" << fmt(a.first) << "\" cy=\"" << fmt(a.second)
          << "\" r=\"4\" fill=\"white\" stroke=\"red\"/>\n";
    }
    void filled(std::pair<double, double> a) {
        o << "<circle class=\"filled\" cx=\"" << fmt(a.first) << "\" cy=\"" << fmt(a.second)
          << "\" r=\"3\" fill=\"green\" stroke=\"green\"/>\n";
    }
    std::string done() {
        o << "</svg>\n";
        return o.str();
    }
};

}  // namespace

std::string arcs_svg(const ArcSet &A) {
    Svg s;
    for (auto &a : A.arcs) s.chord(point_xy(a.a, A.n), point_xy(a.b, A.n), "black");
    for (int i = 0; i < A.n; ++i) s.hollow(point_xy(BoundaryPoint::Acc(i, A.n), A.n));
    std::set<BoundaryPoint> pts;
    for (auto &a : A.arcs)
        for (auto *p : {&a.a, &a.b})
            if (!p->acc) pts.insert(*p);
    for (auto &p : pts) s.filled(point_xy(p, A.n));
    return s.done();
}

std::string dissection_svg(const DissectionSet &D) {
    Svg s;
    int N = 2 * D.n;
    for (auto [a, b] : D.red) s.chord(slot(a, N), slot(b, N), "red");
    for (auto [a, b] : D.binding) s.chord(slot(a, N), slot(b, N), "green");
    for (int k = 0; k < N; ++k) (k % 2 ? s.filled(slot(k, N)) : s.hollow(slot(k, N)));
    return s.done();
}

std::string quiver_svg(const PianoQuiver &P) {
    Svg s;
    int nv = P.nv();
    for (auto &a : P.arrows()) s.chord(slot(a.src, nv), slot(a.dst, nv), "black");
    for (int v = 0; v < nv; ++v) (P.is_sharp(v) ? s.filled(slot(v, nv)) : s.hollow(slot(v, nv)));
    return s.done();
}

static std::string tikz_xy(std::pair<double, double> p) {
    return "(" + fmt((p.first - kC) / 50) + "," + fmt((kC - p.second) / 50) + ")";
}

std::string arcs_tikz(const ArcSet &A) {
    std::ostringstream o;
    o << "\\begin{tikzpicture}\n  \\draw (0,0) circle (2);\n";
    for (auto &a : A.arcs) o << "  \\draw " << tikz_xy(point_xy(a.a, A.n)) << " -- " << tikz_xy(point_xy(a.b, A.n)) << ";\n";
    for (int i = 0; i < A.n; ++i)
        o << "  \\draw[red, fill=white] " << tikz_xy(point_xy(BoundaryPoint::Acc(i, A.n), A.n)) << " circle (2pt);\n";
    o << "\\end{tikzpicture}\n";
    return o.str();
}

std::string dissection_tikz(const DissectionSet &D) {
    std::ostringstream o;
    int N = 2 * D.n;
    o << "\\begin{tikzpicture}\n  \\draw (0,0) circle (2);\n";
    for (auto [a, b] : D.red) o << "  \\draw[red] " << tikz_xy(slot(a, N)) << " -- " << tikz_xy(slot(b, N)) << ";\n";
    for (auto [a, b] : D.binding) o << "  \\draw[green] " << tikz_xy(slot(a, N)) << " -- " << tikz_xy(slot(b, N)) << ";\n";
    for (int k = 0; k < N; ++k)
        o << (k % 2 ? "  \\fill[green] " : "  \\draw[red, fill=white] ") << tikz_xy(slot(k, N)) << " circle (2pt);\n";
    o << "\\end{tikzpicture}\n";
    return o.str();
}

}  // namespace pianocat
