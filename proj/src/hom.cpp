#include "pianocat/hom.hpp"

#include <array>

namespace pianocat {

int ext1_dim(const Arc &X, const Arc &Y) {
    if (cross(X, Y)) return 1;
    if (X == Y) return X.kind() == ArcKind::DoubleLimit ? 1 : 0;
    auto sh = shared_endpoints(X, Y);
    if (sh.size() != 1 || !sh[0].acc) return 0;
    const auto &p = sh[0];
    return cyclic_less(X.other(p), Y.other(p), p) ? 1 : 0;
}

int hom_dim(const Arc &X, const Arc &Y, long i) {
    if (i == 0 && X == Y) return 1;
    return ext1_dim(X, suspend(Y, i - 1));
}

HomDegreeTable hom_table(const Arc &X, const Arc &Y, long D) {
    HomDegreeTable t{X, Y, D, {}};
    for (long i = -D; i <= D; ++i) t.dims[i] = hom_dim(X, Y, i);
    return t;
}

std::string direction_name(Direction d) { return d == Direction::Forward ? "forward" : "backward"; }

DirectionMode default_mode(int n) { return {BoundaryPoint::Acc(n - 1, n), false}; }

namespace {

struct Sweeps {
    BoundaryPoint x1, y1, x2, y2;
};

// labelling with y1 in [x1,x2) and y2 in [x2,x1)
std::vector<Sweeps> alignments(const Arc &X, const Arc &Y) {
    std::vector<Sweeps> out;
    for (int sx = 0; sx < 2; ++sx)
        for (int sy = 0; sy < 2; ++sy) {
            auto x1 = sx ? X.b : X.a, x2 = sx ? X.a : X.b;
            auto y1 = sy ? Y.b : Y.a, y2 = sy ? Y.a : Y.b;
            if (y1 == x2 || y2 == x1) continue;
            if (in_closed_arc(x1, y1, x2) && in_closed_arc(x2, y2, x1)) out.push_back({x1, y1, x2, y2});
        }
    return out;
}

// ranks relative to a1 placed either at the bottom or the top
bool before(const BoundaryPoint &a1, const BoundaryPoint &u, const BoundaryPoint &v) {
    if (u == v) return false;
    if (u == a1) return true;
    if (v == a1) return false;
    return cyclic_less(a1, u, v);
}

bool strict_chain(const BoundaryPoint &a1, std::array<BoundaryPoint, 4> c, std::array<bool, 3> strictness,
                  int bottom_slot, int top_slot) {
    // a1 may only sit in bottom_slot (as minimum) or top_slot (as maximum)
    for (int k = 0; k < 4; ++k)
        if (c[k] == a1 && k != bottom_slot && k != top_slot) return false;
    auto rank_lt = [&](int s, int t) {
        const auto &u = c[s], &v = c[t];
        if (u == v) return false;
        bool u_top = (u == a1 && s == top_slot), v_top = (v == a1 && t == top_slot);
        bool u_bot = (u == a1 && s == bottom_slot), v_bot = (v == a1 && t == bottom_slot);
        if (u_top || v_bot) return false;
        if (v_top || u_bot) return true;
        return before(a1, u, v);
    };
    for (int k = 0; k < 3; ++k) {
        bool lt = rank_lt(k, k + 1);
        bool eq = c[k] == c[k + 1] && !(c[k] == a1);
        if (strictness[k] ? !lt : !(lt || eq)) return false;
    }
    return true;
}

}  // namespace

std::optional<Direction> classify(const Arc &X, const Arc &Y, long i, const DirectionMode &mode) {
    if (!hom_dim(X, Y, i)) return std::nullopt;
    Arc Yi = suspend(Y, i);
    if (X == Yi) return Direction::Forward;
    auto al = alignments(X, Yi);
    if (al.empty()) return std::nullopt;
    const auto &a1 = mode.ref;
    if (!mode.strict) {
        const auto &s = al.front();
        bool wrap = (s.x1 != s.y1 && in_left_open_arc(s.x1, a1, s.y1)) ||
                    (s.x2 != s.y2 && in_left_open_arc(s.x2, a1, s.y2));
        return wrap ? Direction::Backward : Direction::Forward;
    }
    for (auto &s : al) {
        // a1 < x1 <= y1 < x2 <= y2 <= a1, x2 != a1
        if (s.x2 != a1 && strict_chain(a1, {s.x1, s.y1, s.x2, s.y2}, {false, true, false}, -1, 3))
            return Direction::Forward;
    }
    for (auto &s : al) {
        // a1 <= y1 < x1 <= y2 < x2 <= a1, with the roles of the labels swapped
        if (strict_chain(a1, {s.y2, s.x1, s.y1, s.x2}, {true, false, true}, 0, 3)) return Direction::Backward;
        if (strict_chain(a1, {s.y1, s.x2, s.y2, s.x1}, {true, false, true}, 0, 3)) return Direction::Backward;
    }
    return std::nullopt;
}

MorphismHandle make_handle(const Arc &X, const Arc &Y, long i, const DirectionMode &mode) {
    auto d = classify(X, Y, i, mode);
    if (!d) throw std::invalid_argument("no nonzero morphism " + X.str() + " -> " + Y.str() + "[" + std::to_string(i) + "]");
    return {X, Y, i, *d};
}

std::optional<long> shift_between(const Arc &A, const Arc &B) {
    if (A.kind() == ArcKind::DoubleLimit) return A == B ? std::optional<long>(0) : std::nullopt;
    auto pt = A.a.acc ? A.b : A.a;
    auto qt = B.a.acc ? B.b : B.a;
    if (qt.acc) return std::nullopt;
    long k = pt.pos - qt.pos;
    if (suspend(A, k) == B) return k;
    auto qt2 = B.a.acc ? B.a : B.b;
    if (!qt2.acc) {
        k = pt.pos - qt2.pos;
        if (suspend(A, k) == B) return k;
    }
    return std::nullopt;
}

Composite compose_nonzero(const MorphismHandle &f, const MorphismHandle &g) {
    if (!shift_between(f.target, g.source)) throw std::invalid_argument("handles are not composable");
    if (f.direction == Direction::Forward && g.direction == Direction::Forward) return {true, Direction::Forward};
    if (f.direction != g.direction) return {true, Direction::Backward};
    return {false, Direction::Backward};
}

bool factors_through(const Arc &Y, const Arc &W, const Arc &Z) {
    if (Y == Z || !hom_dim(Y, Z, 0)) throw std::invalid_argument("no morphism to factor");
    for (auto &s : alignments(Y, Z))
        for (int sw = 0; sw < 2; ++sw) {
            auto w1 = sw ? W.b : W.a, w2 = sw ? W.a : W.b;
            if (in_closed_arc(s.x1, w1, s.y1) && in_closed_arc(s.x2, w2, s.y2)) return true;
        }
    return false;
}

std::vector<Triangle> extension_triangles(const Arc &X, const Arc &Y) {
    auto middles = [](std::initializer_list<std::pair<BoundaryPoint, BoundaryPoint>> ps) {
        std::vector<Arc> m;
        for (auto &[p, q] : ps)
            if (Arc::valid(p, q)) m.push_back(Arc::make(p, q));
        return m;
    };
    if (cross(X, Y)) {
        for (int sx = 0; sx < 2; ++sx)
            for (int sy = 0; sy < 2; ++sy) {
                auto x0 = sx ? X.b : X.a, x1 = sx ? X.a : X.b;
                auto y0 = sy ? Y.b : Y.a, y1 = sy ? Y.a : Y.b;
                if (cyclic_less(y0, x0, y1) && cyclic_less(x0, y1, x1) && cyclic_less(y1, x1, y0)) {
                    return {Triangle{X, middles({{y1, x1}, {y0, x0}}), Y},
                            Triangle{Y, middles({{x0, y1}, {x1, y0}}), X}};
                }
            }
    }
    auto sh = shared_endpoints(X, Y);
    if (sh.size() == 1 && sh[0].acc) {
        auto p = sh[0];
        auto u = X.other(p), v = Y.other(p);
        Arc U = X, V = Y;
        if (!cyclic_less(p, u, v)) {
            std::swap(u, v);
            std::swap(U, V);
        }
        return {Triangle{V, middles({{u, v}}), U}};
    }
    throw std::invalid_argument("no extension triangle");
}

ConePresentation cone_presentation(const Arc &X, const ArcSet &E) {
    auto in_gen = [&](const Arc &A) {
        for (auto &e : E.arcs)
            if (shift_between(e, A)) return true;
        return false;
    };
    if (in_gen(X)) return {std::nullopt, X};
    std::set<BoundaryPoint> accs;
    for (auto &e : E.arcs)
        for (auto *q : {&e.a, &e.b})
            if (q->acc) accs.insert(*q);
    for (auto &p : accs) {
        if (X.has(p)) continue;
        auto u = X.a, v = X.b;
        if (!cyclic_less(p, u, v)) std::swap(u, v);
        if (!Arc::valid(p, u) || !Arc::valid(p, v)) continue;
        Arc U = Arc::make(p, u), V = Arc::make(p, v);
        if (in_gen(U) && in_gen(V)) return {suspend(U, -1), V};
    }
    throw std::invalid_argument("arc not reachable from generator in one step: " + X.str());
}

}  // namespace pianocat
