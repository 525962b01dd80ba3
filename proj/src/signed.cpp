#include "pianocat/signed.hpp"

#include <algorithm>
#include <deque>

#include "pianocat/generators.hpp"
#include "pianocat/quiver.hpp"

namespace pianocat {

ConeData cone_data(const ArcSet &G, bool keep_order) {
    ArcSet E = fan_generator(G.n);
    std::vector<Arc> with_q, without_q;
    for (auto &x : G.arcs) (cone_presentation(x, E).Q ? with_q : without_q).push_back(x);
    std::vector<Arc> order;
    if (keep_order) {
        order = G.arcs;
        for (size_t k = 0; k < order.size(); ++k)
            if ((k < with_q.size()) != bool(cone_presentation(order[k], E).Q))
                throw std::invalid_argument("summands with nonzero Q must come first");
    } else {
        order = with_q;
        order.insert(order.end(), without_q.begin(), without_q.end());
    }
    ConeData C;
    C.G = ArcSet::ordered(G.n, order);
    C.m = with_q.size();
    for (auto &x : order) {
        auto cp = cone_presentation(x, E);
        C.Q.push_back(cp.Q);
        C.P.push_back(cp.P);
        C.in_generated_1.push_back(!cp.Q);
    }
    return C;
}

InitialChoice parse_choice(const std::string &s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("choice must look like beta:J or delta:J");
    std::string side = s.substr(0, colon);
    int v = std::stoi(s.substr(colon + 1));
    if (v < 1) throw std::invalid_argument("choice index is 1-based");
    if (side == "beta") return {Side::Beta, v - 1};
    if (side == "delta") return {Side::Delta, v - 1};
    throw std::invalid_argument("choice side must be beta or delta");
}

std::string choice_str(const InitialChoice &c) {
    return std::string(c.side == Side::Beta ? "beta:" : "delta:") + std::to_string(c.vertex + 1);
}

std::vector<int> SignedMatrix::diagonal() const {
    std::vector<int> d = beta;
    d.insert(d.end(), delta.begin(), delta.end());
    return d;
}

std::vector<KeyboardEdge> keyboard_edges(const ConeData &C, const DirectionMode &mode) {
    auto P = piano_from_generator(C.G);
    std::vector<KeyboardEdge> out;
    for (auto &a : P.arrows()) {
        auto d = classify(C.G.arcs[a.src], C.G.arcs[a.dst], 0, mode);
        if (!d) throw std::logic_error("keyboard arrow without a classified morphism");
        out.push_back({a.src, a.dst, *d});
    }
    return out;
}

SignedMatrix signed_matrix(const ConeData &C, InitialChoice choice, const DirectionMode &mode) {
    int nv = C.G.arcs.size();
    if (choice.vertex < 0 || choice.vertex >= nv) throw std::invalid_argument("initial choice out of range");
    auto edges = keyboard_edges(C, mode);
    if ((int)edges.size() != nv - 1) throw std::invalid_argument("non-tree keyboard");
    std::vector<std::vector<std::pair<int, Direction>>> adj(nv);
    for (auto &e : edges) {
        adj[e.src].push_back({e.dst, e.dir});
        adj[e.dst].push_back({e.src, e.dir});
    }
    std::vector<int> seen(nv, 0);
    SignedMatrix M;
    M.m = C.m;
    M.initial = choice;
    M.side.assign(nv, Side::Beta);
    M.side[choice.vertex] = choice.side;
    std::deque<int> q{choice.vertex};
    seen[choice.vertex] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (auto [u, d] : adj[v]) {
            if (seen[u]) continue;
            seen[u] = 1;
            Side s = M.side[v];
            if (d == Direction::Backward) s = s == Side::Beta ? Side::Delta : Side::Beta;
            M.side[u] = s;
            q.push_back(u);
        }
    }
    if (std::count(seen.begin(), seen.end(), 1) != nv) throw std::invalid_argument("non-tree keyboard");
    for (int j = 0; j < C.m; ++j) M.beta.push_back(M.side[j] == Side::Beta ? -1 : 1);
    for (int j = 0; j < nv; ++j) M.delta.push_back(M.side[j] == Side::Delta ? -1 : 1);
    return M;
}

SignedMatrix signed_matrix(const ArcSet &G, InitialChoice choice) {
    return signed_matrix(cone_data(G), choice, default_mode(G.n));
}

static int spow(int s, long i) { return (std::labs(i) % 2 && s < 0) ? -1 : 1; }

Report check_beta_delta(const SignedMatrix &M, const ConeData &C, const DirectionMode &mode) {
    Report r;
    int nv = C.G.arcs.size();
    auto name = [](int j) { return std::to_string(j + 1); };
    for (int j = 0; j < M.m; ++j) {
        ++r.checked;
        if (M.beta[j] * M.delta[j] != -1) r.failures.push_back("beta*delta != -1 at " + name(j));
    }
    for (int j = 0; j < nv; ++j)
        for (int l = 0; l < nv; ++l) {
            if (j == l) continue;
            std::optional<Direction> d;
            for (long i = 0; i <= 2 && !d; ++i)
                for (long s : {i, -i})
                    if (!d) d = classify(C.G.arcs[j], C.G.arcs[l], s, mode);
            if (!d) continue;
            ++r.checked;
            std::string at = name(j) + "->" + name(l) + " " + direction_name(*d);
            if (*d == Direction::Forward) {
                if (j < M.m && l < M.m && M.beta[j] != M.beta[l]) r.failures.push_back("beta mismatch " + at);
                if (M.delta[j] != M.delta[l]) r.failures.push_back("delta mismatch " + at);
            } else {
                if (j < M.m && M.beta[j] != M.delta[l]) r.failures.push_back("beta/delta mismatch " + at);
                if (l < M.m && M.delta[j] != M.beta[l]) r.failures.push_back("delta/beta mismatch " + at);
            }
        }
    return r;
}

BlockMorphism phi_block(const SignedMatrix &M, const ChiAlgebra &A, int j, int l, long i, Direction dir) {
    if (!A.dim(j, l, i)) throw std::invalid_argument("zero graded piece");
    BlockMorphism b{j, l, i};
    b.has_qq = j < M.m && l < M.m;
    b.has_qp = j < M.m;
    if (dir == Direction::Forward) {
        if (b.has_qq) b.y = spow(M.beta[j], i);
        b.z = spow(M.delta[j], i);
    } else {
        if (!b.has_qp) throw std::invalid_argument("backward morphism out of a summand with Q = 0");
        b.w = spow(M.beta[j], i);
    }
    return b;
}

BlockMorphism block_product(const BlockMorphism &x, const BlockMorphism &y, int m) {
    BlockMorphism r{x.j, y.l, x.i + y.i};
    r.has_qq = x.j < m && y.l < m;
    r.has_qp = x.j < m;
    r.y = x.y * y.y;
    r.w = x.y * y.w + x.w * y.z;
    r.z = x.z * y.z;
    return r;
}

Report verify_phi_homomorphism(const ConeData &C, const SignedMatrix &M, const DirectionMode &mode, long D) {
    Report r;
    auto name = [](int j) { return std::to_string(j + 1); };
    for (int j = 0; j < M.m; ++j)
        for (long i = -D; i <= D; ++i) {
            ++r.checked;
            int sgn = (std::labs(i) % 2) ? -1 : 1;
            if (spow(M.beta[j], i) != sgn * spow(M.delta[j], i))
                r.failures.push_back("differential at vertex " + name(j) + " degree " + std::to_string(i));
        }
    ChiAlgebra A = make_chi(C.G);
    int nv = A.size();
    for (int j = 0; j < nv; ++j)
        for (int jp = 0; jp < nv; ++jp)
            for (int l = 0; l < nv; ++l)
                for (long i = -D; i <= D; ++i) {
                    if (!A.dim(j, jp, i)) continue;
                    auto d1 = classify(C.G.arcs[j], C.G.arcs[jp], i, mode);
                    for (long ip = -D; ip <= D; ++ip) {
                        if (!A.dim(jp, l, ip)) continue;
                        ++r.checked;
                        auto d2 = classify(C.G.arcs[jp], C.G.arcs[l], ip, mode);
                        std::string at = "(" + name(j) + "," + name(jp) + "," + name(l) + "; " + std::to_string(i) + "," +
                                         std::to_string(ip) + ")";
                        if (!d1 || !d2) {
                            r.failures.push_back("unclassified morphism " + at);
                            continue;
                        }
                        int s = chi_multiply(A, {j, jp, i}, {jp, l, ip});
                        auto rhs = block_product(phi_block(M, A, j, jp, i, *d1), phi_block(M, A, jp, l, ip, *d2), M.m);
                        rhs.y *= s, rhs.w *= s, rhs.z *= s;
                        BlockMorphism lhs{j, l, i + ip};
                        if (s) {
                            auto d = classify(C.G.arcs[j], C.G.arcs[l], i + ip, mode);
                            if (!d) {
                                r.failures.push_back("unclassified product " + at);
                                continue;
                            }
                            Direction expect = (*d1 == Direction::Forward && *d2 == Direction::Forward) ? Direction::Forward
                                                                                                     : Direction::Backward;
                            if (*d1 == Direction::Backward && *d2 == Direction::Backward)
                                r.failures.push_back("backward composite is nonzero " + at);
                            else if (*d != expect)
                                r.failures.push_back("composite direction " + at);
                            lhs = phi_block(M, A, j, l, i + ip, *d);
                            lhs.y *= s, lhs.w *= s, lhs.z *= s;
                        }
                        if (lhs.y != rhs.y || lhs.w != rhs.w || lhs.z != rhs.z)
                            r.failures.push_back("multiplicativity " + at);
                    }
                }
    return r;
}

ArcSet worked_example_generator() {
    const int n = 4;
    auto A = [](int i) { return BoundaryPoint::Acc(i, n); };
    auto P = [](int i) { return BoundaryPoint::Pt(i, 0, n); };
    return ArcSet::ordered(n, {Arc::make(A(0), P(3)), Arc::make(A(0), A(2)), Arc::make(A(0), P(0)),
                               Arc::make(A(2), P(1)), Arc::make(A(1), A(2)), Arc::make(A(3), A(2)),
                               Arc::make(A(3), P(2))});
}

}  // namespace pianocat
