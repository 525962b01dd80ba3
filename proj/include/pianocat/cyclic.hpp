#pragma once
#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace pianocat {

struct BoundaryPoint {
    bool acc = true;
    int seg = 0;
    long pos = 0;  // only meaningful for marked points

    static BoundaryPoint Acc(int i, int n);
    static BoundaryPoint Pt(int i, long p, int n);

    bool is_acc() const { return acc; }
    auto operator<=>(const BoundaryPoint &o) const {
        // variant first (Acc before Pt), then segment, then position
        if (acc != o.acc) return acc ? std::strong_ordering::less : std::strong_ordering::greater;
        if (seg != o.seg) return seg <=> o.seg;
        if (acc) return std::strong_ordering::equal;
        return pos <=> o.pos;
    }
    bool operator==(const BoundaryPoint &o) const = default;
    std::string str() const;
};

// key for the linear order Acc(0) < Pt(0,.) < Acc(1) < ...
struct LinearKey {
    int seg;
    int tier;
    long pos;
    auto operator<=>(const LinearKey &) const = default;
};
LinearKey linear_key(const BoundaryPoint &x);

bool cyclic_less(const BoundaryPoint &x, const BoundaryPoint &y, const BoundaryPoint &z);
// y in the closed anticlockwise interval [x, z]
bool in_closed_arc(const BoundaryPoint &x, const BoundaryPoint &y, const BoundaryPoint &z);
// y in the half-open interval (x, z]
bool in_left_open_arc(const BoundaryPoint &x, const BoundaryPoint &y, const BoundaryPoint &z);

enum class ArcKind { Short, Long, Limit, DoubleLimit };
std::string kind_name(ArcKind k);

struct Arc {
    BoundaryPoint a, b;

    static Arc make(BoundaryPoint x, BoundaryPoint y);
    static bool valid(const BoundaryPoint &x, const BoundaryPoint &y);

    ArcKind kind() const;
    bool is_limit_type() const { auto k = kind(); return k == ArcKind::Limit || k == ArcKind::DoubleLimit; }
    bool has(const BoundaryPoint &x) const { return a == x || b == x; }
    const BoundaryPoint &other(const BoundaryPoint &x) const { return a == x ? b : a; }
    auto operator<=>(const Arc &) const = default;
    bool operator==(const Arc &) const = default;
    std::string str() const;
};

struct ArcSet {
    int n = 1;
    std::vector<Arc> arcs;

    ArcSet() = default;
    ArcSet(int n_, std::vector<Arc> a);
    // keeps the given order, still rejects duplicates
    static ArcSet ordered(int n_, std::vector<Arc> a);
    void normalize();
    bool operator==(const ArcSet &o) const { return n == o.n && arcs == o.arcs; }
    bool operator<(const ArcSet &o) const { return n != o.n ? n < o.n : arcs < o.arcs; }
};

bool cross(const Arc &x, const Arc &y);
Arc suspend(const Arc &x, long k);
BoundaryPoint suspend(const BoundaryPoint &x, long k);
Arc rotate(const Arc &x, int r, int n);
std::set<int> orbit_segments(const ArcSet &A);
bool complete_orbit(const ArcSet &A);

// shared accumulation point if exactly one endpoint in common and it is Acc
std::vector<BoundaryPoint> shared_endpoints(const Arc &x, const Arc &y);

}  // namespace pianocat
