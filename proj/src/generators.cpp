#include "pianocat/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "pianocat/hom.hpp"

namespace pianocat {

GeneratorCandidate make_candidate(const ArcSet &A) {
    GeneratorCandidate g{A, false, complete_orbit(A), true};
    for (auto &x : A.arcs) g.limit_kind = g.limit_kind && x.is_limit_type();
    try {
        g.homologically_connected = is_homologically_connected(A);
    } catch (const std::invalid_argument &) {
        g.homologically_connected = false;
    }
    return g;
}

bool crosses_under_shifts(const Arc &x, const Arc &y) {
    long span = 2;
    for (auto *p : {&x.a, &x.b, &y.a, &y.b})
        if (!p->acc) span += std::labs(p->pos);
    for (long k = -2 * span; k <= 2 * span; ++k)
        if (cross(x, suspend(y, k))) return true;
    return false;
}

namespace {

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

bool pairwise_shift_noncrossing(const std::vector<Arc> &v) {
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (crosses_under_shifts(v[i], v[j])) return false;
    return true;
}

}  // namespace

bool is_homologically_connected(const ArcSet &A) {
    for (auto &x : A.arcs)
        if (!x.is_limit_type()) throw std::invalid_argument("unsupported arc configuration");
    if (!pairwise_shift_noncrossing(A.arcs)) throw std::invalid_argument("unsupported arc configuration");
    int m = A.arcs.size();
    if (m == 0) return false;
    DSU d(m);
    int comps = m;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool share = false;
            for (auto &p : shared_endpoints(A.arcs[i], A.arcs[j])) share = share || p.acc;
            if (share && d.unite(i, j)) --comps;
        }
    return comps == 1;
}

bool is_limit_pre_generator(const ArcSet &A) {
    int n = A.n;
    if ((int)A.arcs.size() != n - 1) return false;
    for (auto &x : A.arcs)
        if (x.kind() != ArcKind::DoubleLimit) return false;
    for (size_t i = 0; i < A.arcs.size(); ++i)
        for (size_t j = i + 1; j < A.arcs.size(); ++j)
            if (cross(A.arcs[i], A.arcs[j])) return false;
    DSU d(n);
    for (auto &x : A.arcs)
        if (!d.unite(x.a.seg, x.b.seg)) return false;
    return true;
}

LimitGeneratorDecomposition decompose(const ArcSet &A) {
    LimitGeneratorDecomposition dec;
    dec.pre_generator.n = dec.limit_part.n = A.n;
    for (auto &x : A.arcs) {
        if (x.kind() == ArcKind::DoubleLimit) {
            dec.pre_generator.arcs.push_back(x);
        } else if (x.kind() == ArcKind::Limit) {
            dec.limit_part.arcs.push_back(x);
            int s = x.a.acc ? x.b.seg : x.a.seg;
            if (!dec.segment_assignment.emplace(s, x).second) throw std::invalid_argument("two limit arcs in one segment");
        } else {
            throw std::invalid_argument("not a limit-type arc: " + x.str());
        }
    }
    return dec;
}

bool is_limit_generator(const ArcSet &A) {
    for (auto &x : A.arcs)
        if (!x.is_limit_type()) return false;
    LimitGeneratorDecomposition dec;
    try {
        dec = decompose(A);
    } catch (const std::invalid_argument &) {
        return false;
    }
    if (A.n > 1 && !is_limit_pre_generator(dec.pre_generator)) return false;
    if (A.n == 1 && !dec.pre_generator.arcs.empty()) return false;
    if ((int)dec.limit_part.arcs.size() != A.n || (int)dec.segment_assignment.size() != A.n) return false;
    return pairwise_shift_noncrossing(A.arcs);
}

ArcSet fan_generator_at(int n, int apex) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    auto a = BoundaryPoint::Acc(apex, n);
    std::vector<Arc> v;
    for (int j = 0; j < n; ++j) {
        if (j != a.seg) v.push_back(Arc::make(a, BoundaryPoint::Acc(j, n)));
        v.push_back(Arc::make(a, BoundaryPoint::Pt(j, 0, n)));
    }
    return ArcSet(n, v);
}

ArcSet fan_generator(int n) { return fan_generator_at(n, n - 1); }

std::vector<ArcSet> enumerate_pre_generators(int n) {
    std::vector<Arc> all;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.push_back(Arc::make(BoundaryPoint::Acc(i, n), BoundaryPoint::Acc(j, n)));
    std::vector<ArcSet> out;
    std::vector<Arc> cur;
    std::function<void(size_t)> rec = [&](size_t start) {
        if ((int)cur.size() == n - 1) {
            ArcSet s(n, cur);
            if (is_limit_pre_generator(s)) out.push_back(s);
            return;
        }
        for (size_t k = start; k < all.size(); ++k) {
            bool ok = true;
            for (auto &c : cur) ok = ok && !cross(c, all[k]);
            if (!ok) continue;
            cur.push_back(all[k]);
            rec(k + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

ArcSet rotate(const ArcSet &A, int r) {
    std::vector<Arc> v;
    for (auto &x : A.arcs) v.push_back(rotate(x, r, A.n));
    return ArcSet(A.n, v);
}

ArcSet canonical_rotation(const ArcSet &A) {
    ArcSet best = A;
    for (int r = 1; r < A.n; ++r) best = std::min(best, rotate(A, r));
    return best;
}

std::vector<ArcSet> enumerate_limit_generators(int n, bool up_to_equivalence, int cap) {
    if (n < 1 || n > cap) throw std::out_of_range("n outside enumeration cap");
    std::vector<ArcSet> out;
    for (auto &tree : enumerate_pre_generators(n)) {
        // admissible apex choices per segment
        std::vector<std::vector<Arc>> choices(n);
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < n; ++a) {
                Arc x = Arc::make(BoundaryPoint::Acc(a, n), BoundaryPoint::Pt(j, 0, n));
                bool ok = true;
                for (auto &t : tree.arcs) ok = ok && !cross(x, t);
                if (ok) choices[j].push_back(x);
            }
        std::vector<Arc> cur = tree.arcs;
        std::function<void(int)> rec = [&](int j) {
            if (j == n) {
                ArcSet s(n, cur);
                if (is_limit_generator(s)) out.push_back(s);
                return;
            }
            for (auto &x : choices[j]) {
                cur.push_back(x);
                rec(j + 1);
                cur.pop_back();
            }
        };
        rec(0);
    }
    if (up_to_equivalence) {
        for (auto &g : out) g = canonical_rotation(g);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    } else {
        std::sort(out.begin(), out.end());
    }
    return out;
}

bool LinearGeneratorReport::pass() const {
    for (auto &a : axioms)
        if (!a.pass) return false;
    return true;
}

LinearGeneratorReport check_linear_generator(const ArcSet &E, long D) {
    std::vector<Arc> obj;
    for (auto &e : E.arcs)
        for (long k = -D; k <= D; ++k) obj.push_back(suspend(e, k));
    std::sort(obj.begin(), obj.end());
    obj.erase(std::unique(obj.begin(), obj.end()), obj.end());
    auto le = [](const Arc &Q, const Arc &P) { return hom_dim(P, Q, 0) == 1; };
    AxiomResult g1{"G1", true, ""}, g2{"G2", true, ""}, g3{"G3", true, ""}, g4{"G4", true, ""};
    int m = obj.size();
    for (int i = 0; i < m && g1.pass; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool a = le(obj[i], obj[j]), b = le(obj[j], obj[i]);
            if (a == b) {
                g1.pass = false;
                g1.witness = obj[i].str() + " " + obj[j].str() + (a ? " both directions" : " incomparable");
                break;
            }
        }
    for (int i = 0; i < m && g1.pass; ++i)
        for (int j = 0; j < m && g1.pass; ++j)
            for (int k = 0; k < m; ++k)
                if (le(obj[i], obj[j]) && le(obj[j], obj[k]) && !le(obj[i], obj[k])) {
                    g1.pass = false;
                    g1.witness = "intransitive " + obj[i].str() + " " + obj[j].str() + " " + obj[k].str();
                    break;
                }
    for (auto &P : obj)
        if (!le(P, suspend(P, 1))) {
            g2.pass = false;
            g2.witness = P.str();
            break;
        }
    for (auto &P : obj) {
        Arc P1 = suspend(P, 1);
        for (auto &Q : obj)
            if (le(P, Q) && le(Q, P1) && Q != P && Q != P1) {
                g3.pass = false;
                g3.witness = P.str() + " < " + Q.str() + " < " + P1.str();
            }
    }
    for (auto &P : obj)
        for (auto &Q : obj)
            for (auto &R : obj) {
                if (P == R || !le(R, Q) || !le(Q, P)) continue;
                if (!factors_through(P, Q, R)) {
                    g4.pass = false;
                    g4.witness = P.str() + " -> " + Q.str() + " -> " + R.str();
                }
            }
    return {{g1, g2, g3, g4}};
}

}  // namespace pianocat
