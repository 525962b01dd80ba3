#include "pianocat/dissection.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace pianocat {

static int mod(int a, int N) { return ((a % N) + N) % N; }

void DissectionSet::normalize() {
    for (auto &c : red)
        if (c.first > c.second) std::swap(c.first, c.second);
    std::sort(red.begin(), red.end());
    std::sort(binding.begin(), binding.end());
}

bool DissectionSet::operator<(const DissectionSet &o) const {
    if (n != o.n) return n < o.n;
    if (red != o.red) return red < o.red;
    return binding < o.binding;
}

bool chords_cross(const Chord &c, const Chord &d, int N) {
    auto [a, b] = c;
    auto [x, y] = d;
    if (a == x || a == y || b == x || b == y) return false;
    auto inside = [&](int p) { return mod(p - a, N) < mod(b - a, N); };
    return inside(x) != inside(y);
}

std::vector<std::vector<FaceEdge>> polygon_faces(int N, const std::vector<Chord> &chords) {
    // edge ends at each vertex: (key, edge id, other vertex)
    struct End {
        int key, edge, other;
    };
    std::vector<std::vector<End>> ends(N);
    int E = N + chords.size();
    for (int i = 0; i < N; ++i) {
        ends[i].push_back({0, i, mod(i + 1, N)});
        ends[mod(i + 1, N)].push_back({N, i, i});
    }
    for (size_t c = 0; c < chords.size(); ++c) {
        auto [u, v] = chords[c];
        ends[u].push_back({mod(v - u, N), int(N + c), v});
        ends[v].push_back({mod(u - v, N), int(N + c), u});
    }
    for (auto &v : ends) std::sort(v.begin(), v.end(), [](auto &a, auto &b) { return a.key < b.key; });
    auto key_at = [&](int vtx, int edge, int other) {
        for (auto &e : ends[vtx])
            if (e.edge == edge && e.other == other) return e.key;
        throw std::logic_error("edge end missing");
    };
    // visited directed edges: (edge, from)
    std::set<std::pair<int, int>> seen;
    std::vector<std::vector<FaceEdge>> faces;
    auto walk = [&](int edge, int from, int to) {
        std::vector<FaceEdge> face;
        int e = edge, u = from, w = to;
        while (!seen.count({e, u})) {
            seen.insert({e, u});
            face.push_back({u, w, e < N});
            int k = key_at(w, e, u);
            const End *next = nullptr;
            for (auto &x : ends[w])
                if (x.key < k) next = &x;
            if (!next) throw std::logic_error("face traversal stuck");
            e = next->edge;
            u = w;
            w = next->other;
        }
        faces.push_back(face);
    };
    for (int i = 0; i < N; ++i)
        if (!seen.count({i, i})) walk(i, i, mod(i + 1, N));
    for (int c = N; c < E; ++c) {
        auto [u, v] = chords[c - N];
        if (!seen.count({c, u})) walk(c, u, v);
        if (!seen.count({c, v})) walk(c, v, u);
    }
    return faces;
}

static bool pairwise_noncrossing(const std::vector<Chord> &v, int N) {
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (chords_cross(v[i], v[j], N)) return false;
    return true;
}

static bool distinct_chords(std::vector<Chord> v) {
    for (auto &c : v)
        if (c.first > c.second) std::swap(c.first, c.second);
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool is_admissible_dissection(const DissectionSet &D) {
    int N = 2 * D.n;
    if (!D.binding.empty()) return false;
    if ((int)D.red.size() != D.n - 1) return false;
    for (auto [a, b] : D.red)
        if (a == b || a < 0 || b < 0 || a >= N || b >= N || a % 2 || b % 2) return false;
    if (!distinct_chords(D.red) || !pairwise_noncrossing(D.red, N)) return false;
    for (auto &f : polygon_faces(N, D.red)) {
        int greens = 0;
        for (auto &e : f) greens += e.from % 2;
        if (greens != 1) return false;
    }
    return true;
}

bool is_extended_admissible(const DissectionSet &D) {
    int N = 2 * D.n;
    DissectionSet r{D.n, D.red, {}};
    if (!is_admissible_dissection(r)) return false;
    if ((int)D.binding.size() != D.n) return false;
    std::set<int> greens;
    for (auto [a, g] : D.binding) {
        if (a < 0 || g < 0 || a >= N || g >= N || a % 2 || g % 2 == 0) return false;
        if (!greens.insert(g).second) return false;
    }
    std::vector<Chord> all = D.red;
    all.insert(all.end(), D.binding.begin(), D.binding.end());
    return pairwise_noncrossing(all, N) && (int)all.size() == 2 * D.n - 1;
}

InducedDissection induced_admissible(const DissectionSet &D) {
    if (!is_extended_admissible(D)) throw std::invalid_argument("not an extended admissible dissection");
    int N = 2 * D.n;
    std::vector<Chord> all = D.red;
    all.insert(all.end(), D.binding.begin(), D.binding.end());
    for (auto &f : polygon_faces(N, all)) {
        int sides = 0;
        for (auto &e : f) sides += e.side;
        if (sides != 1) throw std::logic_error("face without a unique boundary side");
    }
    // every side receives one new point, so old position k moves to 2k
    InducedDissection out;
    out.disc.n = N;
    out.dissection.n = N;
    for (auto [a, b] : all) out.dissection.red.push_back({2 * a, 2 * b});
    return out;
}

ExtendabilityReport extendability_report(const DissectionSet &D) {
    ExtendabilityReport rep;
    int m = D.n;  // number of open points
    if (m % 2 || m == 0) {
        rep.failed_condition = 1;
        rep.witness = "odd number of points: " + std::to_string(m);
        return rep;
    }
    std::vector<int> deg(m, 0);
    for (auto [a, b] : D.red) ++deg[a / 2], ++deg[b / 2];
    for (int cls : {1, 0}) {
        bool ok = true;
        for (int k = cls; k < m; k += 2) ok = ok && deg[k] == 1;
        if (!ok) continue;
        DissectionSet E;
        E.n = m / 2;
        bool bad = false;
        for (auto [a, b] : D.red) {
            int p = mod(a / 2 - cls + 1, m), q = mod(b / 2 - cls + 1, m);
            if (p % 2 && q % 2) bad = true;
            else if (p % 2) E.binding.push_back({q, p});
            else if (q % 2) E.binding.push_back({p, q});
            else E.red.push_back({p, q});
        }
        E.normalize();
        if (bad || !is_extended_admissible(E)) continue;
        rep.ok = true;
        rep.extended = E;
        return rep;
    }
    rep.failed_condition = 2;
    for (int k = 0; k < m; ++k)
        if (deg[k] != 1) {
            rep.witness = "point " + std::to_string(k) + " has " + std::to_string(deg[k]) + " incident arcs";
            break;
        }
    return rep;
}

DissectionSet epsilon(const ArcSet &G) {
    DissectionSet D;
    D.n = G.n;
    auto pos = [](const BoundaryPoint &p) { return p.acc ? 2 * p.seg : 2 * p.seg + 1; };
    for (auto &x : G.arcs) {
        if (x.kind() == ArcKind::DoubleLimit) D.red.push_back({pos(x.a), pos(x.b)});
        else if (x.kind() == ArcKind::Limit) {
            auto &r = x.a.acc ? x.a : x.b;
            auto &g = x.a.acc ? x.b : x.a;
            D.binding.push_back({pos(r), pos(g)});
        } else {
            throw std::invalid_argument("epsilon: not a limit-type arc " + x.str());
        }
    }
    D.normalize();
    return D;
}

ArcSet epsilon_inverse(const DissectionSet &D) {
    if (!is_extended_admissible(D)) throw std::invalid_argument("not an extended admissible dissection");
    int n = D.n;
    std::vector<Arc> v;
    for (auto [a, b] : D.red) v.push_back(Arc::make(BoundaryPoint::Acc(a / 2, n), BoundaryPoint::Acc(b / 2, n)));
    for (auto [r, g] : D.binding)
        v.push_back(Arc::make(BoundaryPoint::Acc(r / 2, n), BoundaryPoint::Pt((g - 1) / 2, 0, n)));
    return ArcSet(n, v);
}

DissectionSet rotate(const DissectionSet &D, int r) {
    int N = 2 * D.n;
    DissectionSet out{D.n, {}, {}};
    for (auto [a, b] : D.red) out.red.push_back({mod(a + 2 * r, N), mod(b + 2 * r, N)});
    for (auto [a, b] : D.binding) out.binding.push_back({mod(a + 2 * r, N), mod(b + 2 * r, N)});
    out.normalize();
    return out;
}

std::vector<DissectionSet> enumerate_admissible(int n) {
    int N = 2 * n;
    std::vector<Chord> all;
    for (int a = 0; a < N; a += 2)
        for (int b = a + 2; b < N; b += 2) all.push_back({a, b});
    std::vector<DissectionSet> out;
    std::vector<Chord> cur;
    std::function<void(size_t)> rec = [&](size_t s) {
        if ((int)cur.size() == n - 1) {
            DissectionSet D{n, cur, {}};
            if (is_admissible_dissection(D)) out.push_back(D);
            return;
        }
        for (size_t k = s; k < all.size(); ++k) {
            cur.push_back(all[k]);
            rec(k + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<DissectionSet> enumerate_extended_admissible(int n) {
    int N = 2 * n;
    std::vector<DissectionSet> out;
    for (auto &A : enumerate_admissible(n)) {
        std::vector<Chord> cur;
        std::function<void(int)> rec = [&](int j) {
            if (j == n) {
                DissectionSet D{n, A.red, cur};
                D.normalize();
                if (is_extended_admissible(D)) out.push_back(D);
                return;
            }
            for (int a = 0; a < N; a += 2) {
                Chord c{a, 2 * j + 1};
                bool ok = true;
                for (auto &r : A.red) ok = ok && !chords_cross(r, c, N);
                for (auto &b : cur) ok = ok && !chords_cross(b, c, N);
                if (!ok) continue;
                cur.push_back(c);
                rec(j + 1);
                cur.pop_back();
            }
        };
        rec(0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int admissible_arc_count(int marked_red, int punctures_red, int b, int g) {
    return marked_red + punctures_red + b + 2 * g - 2;
}

int extended_arc_count(int marked, int punctures, int punctures_green, int b, int g) {
    return marked + punctures + punctures_green + b + 2 * g - 2;
}

}  // namespace pianocat
