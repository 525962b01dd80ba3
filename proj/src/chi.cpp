#include "pianocat/chi.hpp"

#include "pianocat/hom.hpp"
#include "pianocat/quiver.hpp"

namespace pianocat {

std::string entry_name(EntryKind k) {
    switch (k) {
        case EntryKind::PolyK: return "k[x]";
        case EntryKind::LaurentK: return "k[x,x^-1]";
        case EntryKind::LongRing: return "r";
        case EntryKind::ZeroEntry: return "0";
    }
    return "?";
}

int GradedEntry::dim(long d) const {
    switch (kind) {
        case EntryKind::PolyK: return d <= 0;
        case EntryKind::LaurentK: return 1;
        case EntryKind::LongRing: return d != 1;
        case EntryKind::ZeroEntry: return 0;
    }
    return 0;
}

GradedEntry classify_entry(const ArcSet &G, int i, int j) {
    const Arc &X = G.arcs.at(i), &Y = G.arcs.at(j);
    if (i != j) {
        auto si = orbit_segments(ArcSet(G.n, {X})), sj = orbit_segments(ArcSet(G.n, {Y}));
        for (int s : si)
            if (sj.count(s)) throw std::invalid_argument("orbits overlap");
    }
    if (i == j) {
        switch (X.kind()) {
            case ArcKind::Limit: return {EntryKind::PolyK};
            case ArcKind::DoubleLimit: return {EntryKind::LaurentK};
            case ArcKind::Long: return {EntryKind::LongRing};
            case ArcKind::Short: throw std::invalid_argument("unsupported arc kind: short");
        }
    }
    if (cross(X, Y)) return {EntryKind::LaurentK};
    auto sh = shared_endpoints(X, Y);
    if (sh.size() == 1 && sh[0].acc && cyclic_less(X.other(sh[0]), Y.other(sh[0]), sh[0])) return {EntryKind::LaurentK};
    return {EntryKind::ZeroEntry};
}

ChiAlgebra make_chi(const ArcSet &G) {
    ChiAlgebra A{G, {}};
    int m = G.arcs.size();
    A.entries.assign(m, std::vector<GradedEntry>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) A.entries[i][j] = classify_entry(G, i, j);
    return A;
}

int long_ring_product(long p, long q) {
    if (p <= 0 && q <= 0) return 1;
    if (p <= 0 && q >= 2 && q > -p) return 1;
    if (p >= 2 && q <= 0 && -q < p) return 1;
    return 0;
}

static bool common_acc(const Arc &x, const Arc &y, const Arc &z) {
    for (auto *p : {&x.a, &x.b})
        if (p->acc && y.has(*p) && z.has(*p)) return true;
    return false;
}

int chi_multiply(const ChiAlgebra &A, ChiTerm f, ChiTerm g) {
    if (f.j != g.i) throw std::invalid_argument("terms are not composable");
    if (!A.dim(f.i, f.j, f.deg) || !A.dim(g.i, g.j, g.deg)) throw std::invalid_argument("zero operand");
    int i = f.i, j = f.j, l = g.j;
    long d = f.deg + g.deg;
    if (!A.dim(i, l, d)) return 0;
    if (i == j && j == l) {
        if (A.entries[i][i].kind == EntryKind::LongRing) return long_ring_product(f.deg, g.deg);
        return 1;
    }
    if (i == j || j == l) return 1;
    const Arc &X = A.G.arcs[i], &Y = A.G.arcs[j], &Z = A.G.arcs[l];
    if (common_acc(X, Y, Z)) return 1;
    if (i == l) return (X.kind() == ArcKind::Long && d > 0) ? 1 : 0;
    Arc Yp = suspend(Y, f.deg), Zp = suspend(Z, d);
    if (X == Zp || !hom_dim(X, Zp, 0)) return 0;
    return factors_through(X, Yp, Zp) ? 1 : 0;
}

IsoReport verify_path_algebra_iso(const ArcSet &G, long D) { return verify_path_algebra_iso(G, piano_from_generator(G), D); }

IsoReport verify_path_algebra_iso(const ArcSet &G, const PianoQuiver &P, long D) {
    IsoReport rep;
    ChiAlgebra A = make_chi(G);
    int m = A.size();
    auto at = [](int a, int b, long d) {
        return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," + std::to_string(d) + ")";
    };
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (long d = -D; d <= D; ++d) {
                ++rep.checked;
                int x = graded_dim(P, a, b, d, D), y = A.dim(a, b, d);
                if (x != y)
                    rep.mismatches.push_back({"dimension", at(a, b, d) + " path " + std::to_string(x) + " chi " + std::to_string(y)});
            }
    if (!rep.pass()) return rep;
    std::vector<std::vector<std::vector<Word>>> reps(m, std::vector<std::vector<Word>>(m, std::vector<Word>(2 * D + 1)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (long d = -D; d <= D; ++d)
                if (A.dim(a, b, d)) reps[a][b][d + D] = representative_word(P, a, b, d);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                for (long p = -D; p <= D; ++p) {
                    if (!A.dim(a, b, p)) continue;
                    for (long q = -D; q <= D; ++q) {
                        if (!A.dim(b, c, q)) continue;
                        ++rep.checked;
                        Word w = reps[a][b][p + D];
                        auto &w2 = reps[b][c][q + D];
                        w.insert(w.end(), w2.begin(), w2.end());
                        auto nf = normal_form(P, a, w);
                        int s = chi_multiply(A, {a, b, p}, {b, c, q});
                        bool nz = nf.shape != Shape::Zero;
                        if (nz != (s != 0)) {
                            rep.mismatches.push_back({"product", at(a, b, p) + "*" + at(b, c, q) + " path " +
                                                                     std::to_string(nz) + " chi " + std::to_string(s)});
                        } else if (nz && (nf.b != c || nf.m != p + q)) {
                            rep.mismatches.push_back({"product-degree", at(a, b, p) + "*" + at(b, c, q)});
                        }
                    }
                }
    return rep;
}

}  // namespace pianocat
