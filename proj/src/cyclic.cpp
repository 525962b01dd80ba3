#include "pianocat/cyclic.hpp"

#include <algorithm>
#include <cstdlib>

namespace pianocat {

static int reduce(int i, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return ((i % n) + n) % n;
}

BoundaryPoint BoundaryPoint::Acc(int i, int n) { return {true, reduce(i, n), 0}; }
BoundaryPoint BoundaryPoint::Pt(int i, long p, int n) { return {false, reduce(i, n), p}; }

std::string BoundaryPoint::str() const {
    if (acc) return "Acc(" + std::to_string(seg) + ")";
    return "Pt(" + std::to_string(seg) + "," + std::to_string(pos) + ")";
}

LinearKey linear_key(const BoundaryPoint &x) { return {x.seg, x.acc ? 0 : 1, x.acc ? 0 : x.pos}; }

bool cyclic_less(const BoundaryPoint &x, const BoundaryPoint &y, const BoundaryPoint &z) {
    if (x == y || y == z || x == z) throw std::invalid_argument("degenerate triple");
    auto kx = linear_key(x), ky = linear_key(y), kz = linear_key(z);
    return (kx < ky && ky < kz) || (ky < kz && kz < kx) || (kz < kx && kx < ky);
}

bool in_closed_arc(const BoundaryPoint &x, const BoundaryPoint &y, const BoundaryPoint &z) {
    if (y == x || y == z) return true;
    if (x == z) return false;
    return cyclic_less(x, y, z);
}

bool in_left_open_arc(const BoundaryPoint &x, const BoundaryPoint &y, const BoundaryPoint &z) {
    if (y == x) return false;
    if (y == z) return true;
    if (x == z) return false;
    return cyclic_less(x, y, z);
}

std::string kind_name(ArcKind k) {
    switch (k) {
        case ArcKind::Short: return "short";
        case ArcKind::Long: return "long";
        case ArcKind::Limit: return "limit";
        case ArcKind::DoubleLimit: return "double-limit";
    }
    return "?";
}

bool Arc::valid(const BoundaryPoint &x, const BoundaryPoint &y) {
    if (x == y) return false;
    if (!x.acc && !y.acc && x.seg == y.seg && std::labs(x.pos - y.pos) < 2) return false;
    return true;
}

Arc Arc::make(BoundaryPoint x, BoundaryPoint y) {
    if (!valid(x, y)) throw std::invalid_argument("invalid arc " + x.str() + " " + y.str());
    if (y < x) std::swap(x, y);
    return {x, y};
}

ArcKind Arc::kind() const {
    if (a.acc && b.acc) return ArcKind::DoubleLimit;
    if (a.acc || b.acc) return ArcKind::Limit;
    return a.seg == b.seg ? ArcKind::Short : ArcKind::Long;
}

std::string Arc::str() const { return "{" + a.str() + "," + b.str() + "}"; }

ArcSet::ArcSet(int n_, std::vector<Arc> a) : n(n_), arcs(std::move(a)) { normalize(); }

ArcSet ArcSet::ordered(int n_, std::vector<Arc> a) {
    ArcSet s;
    s.n = n_;
    s.arcs = a;
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw std::invalid_argument("duplicate arc");
    return s;
}

void ArcSet::normalize() {
    std::sort(arcs.begin(), arcs.end());
    if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
        throw std::invalid_argument("duplicate arc");
}

bool cross(const Arc &x, const Arc &y) {
    if (x.has(y.a) || x.has(y.b)) return false;
    return cyclic_less(x.a, y.a, x.b) != cyclic_less(x.a, y.b, x.b);
}

BoundaryPoint suspend(const BoundaryPoint &x, long k) {
    if (x.acc) return x;
    return {false, x.seg, x.pos - k};
}

Arc suspend(const Arc &x, long k) { return Arc::make(suspend(x.a, k), suspend(x.b, k)); }

Arc rotate(const Arc &x, int r, int n) {
    auto rot = [&](const BoundaryPoint &p) {
        return p.acc ? BoundaryPoint::Acc(p.seg + r, n) : BoundaryPoint::Pt(p.seg + r, p.pos, n);
    };
    return Arc::make(rot(x.a), rot(x.b));
}

std::set<int> orbit_segments(const ArcSet &A) {
    std::set<int> s;
    for (auto &x : A.arcs)
        for (auto *p : {&x.a, &x.b})
            if (!p->acc) s.insert(p->seg);
    return s;
}

bool complete_orbit(const ArcSet &A) { return (int)orbit_segments(A).size() == A.n; }

std::vector<BoundaryPoint> shared_endpoints(const Arc &x, const Arc &y) {
    std::vector<BoundaryPoint> r;
    if (y.has(x.a)) r.push_back(x.a);
    if (y.has(x.b)) r.push_back(x.b);
    return r;
}

}  // namespace pianocat
