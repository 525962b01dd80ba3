#include "pianocat/quiver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <unordered_map>

namespace pianocat {

bool GentleQuiver::is_relation(int e1, int e2) const {
    return std::find(relations.begin(), relations.end(), std::make_pair(e1, e2)) != relations.end();
}

GentleQuiver gentle_from_chords(int N, const std::vector<Chord> &chords) {
    GentleQuiver Q;
    Q.nv = chords.size();
    std::map<int, std::vector<std::pair<int, int>>> at;  // position -> (offset, chord)
    for (size_t c = 0; c < chords.size(); ++c) {
        auto [u, v] = chords[c];
        at[u].push_back({((v - u) % N + N) % N, int(c)});
        at[v].push_back({((u - v) % N + N) % N, int(c)});
    }
    for (auto &[pos, list] : at) {
        std::sort(list.begin(), list.end());
        for (size_t k = 0; k + 1 < list.size(); ++k) Q.arrows.push_back({list[k].second, list[k + 1].second, pos});
    }
    for (size_t e = 0; e < Q.arrows.size(); ++e)
        for (size_t f = 0; f < Q.arrows.size(); ++f)
            if (Q.arrows[e].dst == Q.arrows[f].src && Q.arrows[e].at != Q.arrows[f].at)
                Q.relations.push_back({int(e), int(f)});
    return Q;
}

GentleQuiver gentle_from_dissection(const DissectionSet &D) {
    if (!is_admissible_dissection(D)) throw std::invalid_argument("not an admissible dissection");
    return gentle_from_chords(2 * D.n, D.red);
}

bool is_locally_gentle(const GentleQuiver &Q) {
    std::vector<int> in(Q.nv, 0), out(Q.nv, 0);
    for (auto &a : Q.arrows) {
        if (a.src < 0 || a.src >= Q.nv || a.dst < 0 || a.dst >= Q.nv) return false;
        ++out[a.src], ++in[a.dst];
    }
    for (int v = 0; v < Q.nv; ++v)
        if (in[v] > 2 || out[v] > 2) return false;
    for (auto [e, f] : Q.relations)
        if (Q.arrows[e].dst != Q.arrows[f].src) return false;
    int m = Q.arrows.size();
    for (int b = 0; b < m; ++b) {
        int after_in = 0, after_out = 0, before_in = 0, before_out = 0;
        for (int c = 0; c < m; ++c) {
            if (Q.arrows[b].dst == Q.arrows[c].src) (Q.is_relation(b, c) ? after_in : after_out)++;
            if (Q.arrows[c].dst == Q.arrows[b].src) (Q.is_relation(c, b) ? before_in : before_out)++;
        }
        if (after_in > 1 || after_out > 1 || before_in > 1 || before_out > 1) return false;
    }
    return true;
}

static KeyboardQuiver keyboard_from_chords(int n, const std::vector<Chord> &chords, const std::vector<bool> &binding) {
    // the induced admissible dissection doubles every old position
    std::vector<Chord> doubled;
    for (auto [a, b] : chords) doubled.push_back({2 * a, 2 * b});
    KeyboardQuiver K;
    K.gentle = gentle_from_chords(4 * n, doubled);
    for (size_t k = 0; k < binding.size(); ++k)
        if (binding[k]) K.sharp.insert(k);
    return K;
}

KeyboardQuiver keyboard_from_extended(const DissectionSet &D) {
    auto ind = induced_admissible(D);
    KeyboardQuiver K;
    K.gentle = gentle_from_dissection(ind.dissection);
    for (size_t k = 0; k < D.binding.size(); ++k) K.sharp.insert(D.red.size() + k);
    return K;
}

PianoQuiver piano_from_keyboard(const KeyboardQuiver &K) {
    PianoQuiver P{K, {}};
    auto &A = K.gentle.arrows;
    for (size_t e = 0; e < A.size(); ++e) {
        if (K.is_sharp(A[e].src)) continue;
        if (!K.is_sharp(A[e].dst)) {
            P.commutations.push_back({int(e)});
            continue;
        }
        for (size_t f = 0; f < A.size(); ++f)
            if (A[f].src == A[e].dst && !K.is_sharp(A[f].dst) && !K.gentle.is_relation(e, f))
                P.commutations.push_back({int(e), int(f)});
    }
    return P;
}

PianoQuiver piano_from_extended(const DissectionSet &D) { return piano_from_keyboard(keyboard_from_extended(D)); }

PianoQuiver piano_from_generator(const ArcSet &G) {
    if (!is_extended_admissible(epsilon(G))) throw std::invalid_argument("not a limit generator");
    auto pos = [](const BoundaryPoint &p) { return p.acc ? 2 * p.seg : 2 * p.seg + 1; };
    std::vector<Chord> chords;
    std::vector<bool> binding;
    for (auto &x : G.arcs) {
        chords.push_back({pos(x.a), pos(x.b)});
        binding.push_back(x.kind() == ArcKind::Limit);
    }
    return piano_from_keyboard(keyboard_from_chords(G.n, chords, binding));
}

std::string word_str(const PianoQuiver &P, const Word &w) {
    std::string s;
    for (auto &l : w) {
        if (!s.empty()) s += " ";
        if (l.kind == Letter::Delta)
            s += "d" + std::to_string(P.arrows()[l.id].src + 1) + std::to_string(P.arrows()[l.id].dst + 1);
        else
            s += (l.kind == Letter::Alpha ? "a" : "b") + std::to_string(l.id + 1);
    }
    return s.empty() ? "1" : s;
}

int letter_src(const PianoQuiver &P, const Letter &l) { return l.kind == Letter::Delta ? P.arrows()[l.id].src : l.id; }
int letter_dst(const PianoQuiver &P, const Letter &l) { return l.kind == Letter::Delta ? P.arrows()[l.id].dst : l.id; }

void check_composable(const PianoQuiver &P, int start, const Word &w) {
    if (start < 0 || start >= P.nv()) throw std::invalid_argument("bad start vertex");
    int cur = start;
    for (auto &l : w) {
        if (l.kind == Letter::Delta) {
            if (l.id < 0 || l.id >= (int)P.arrows().size()) throw std::invalid_argument("bad arrow id");
        } else {
            if (l.id < 0 || l.id >= P.nv()) throw std::invalid_argument("bad loop vertex");
            if (l.kind == Letter::Beta && P.is_sharp(l.id)) throw std::invalid_argument("no beta loop at a sharp vertex");
        }
        if (letter_src(P, l) != cur) throw std::invalid_argument("word is not composable");
        cur = letter_dst(P, l);
    }
}

long word_degree(const Word &w) {
    long m = 0;
    for (auto &l : w) m += l.kind == Letter::Beta ? 1 : l.kind == Letter::Alpha ? -1 : 0;
    return m;
}

std::string shape_name(Shape s) {
    switch (s) {
        case Shape::DeltaAlpha: return "delta-alpha";
        case Shape::DeltaBeta: return "delta-beta";
        case Shape::DeltaBetaDelta: return "delta-beta-delta";
        case Shape::Zero: return "zero";
    }
    return "?";
}

namespace {

// calls f(result) for every single rule application, stopping when f returns true
template <class F>
void for_each_rewrite(const PianoQuiver &P, const Word &w, F &&f) {
    auto &A = P.arrows();
    auto &G = P.kb.gentle;
    int L = w.size();
    auto D = Letter::Delta, Al = Letter::Alpha, Be = Letter::Beta;
    for (int k = 0; k < L; ++k) {
        const auto &x = w[k];
        if (k + 1 < L) {
            const auto &y = w[k + 1];
            if (x.kind == D && y.kind == D && G.is_relation(x.id, y.id)) {
                if (f(std::optional<Word>())) return;
            }
            if ((x.kind == Al && y.kind == Be) || (x.kind == Be && y.kind == Al)) {
                Word r(w.begin(), w.begin() + k);
                r.insert(r.end(), w.begin() + k + 2, w.end());
                if (f(std::optional<Word>(r))) return;
            }
            if (x.kind == Al && y.kind == D) {
                Word r = w;
                r[k] = y;
                r[k + 1] = {Al, A[y.id].dst};
                if (f(std::optional<Word>(r))) return;
            }
            if (x.kind == Be && y.kind == D && !P.is_sharp(A[y.id].dst)) {
                Word r = w;
                r[k] = y;
                r[k + 1] = {Be, A[y.id].dst};
                if (f(std::optional<Word>(r))) return;
            }
        }
        // d_ab b_b^k d_bc with d_ab d_bc in the ideal and a standard: pull the
        // betas back through d_ab and the relation kills the word
        if (x.kind == D && !P.is_sharp(A[x.id].src) && k + 1 < L && w[k + 1].kind == Be) {
            int e = k + 1;
            while (e < L && w[e].kind == Be) ++e;
            if (e < L && w[e].kind == D && G.is_relation(x.id, w[e].id)) {
                if (f(std::optional<Word>())) return;
            }
        }
        if (k + 2 < L && x.kind == Be && w[k + 1].kind == D && P.is_sharp(A[w[k + 1].id].dst)) {
            const auto &y = w[k + 1], &z = w[k + 2];
            if (z.kind == D && !P.is_sharp(A[z.id].dst) && !G.is_relation(y.id, z.id)) {
                Word r = w;
                r[k] = y;
                r[k + 1] = z;
                r[k + 2] = {Be, A[z.id].dst};
                if (f(std::optional<Word>(r))) return;
            }
            if (z.kind == Al) {
                Word r(w.begin(), w.begin() + k);
                r.push_back(y);
                r.insert(r.end(), w.begin() + k + 3, w.end());
                if (f(std::optional<Word>(r))) return;
            }
        }
    }
}

}  // namespace

std::vector<std::optional<Word>> rewrite_steps(const PianoQuiver &P, const Word &w) {
    std::vector<std::optional<Word>> out;
    for_each_rewrite(P, w, [&](std::optional<Word> r) {
        out.push_back(std::move(r));
        return false;
    });
    return out;
}

PathNormalForm classify_irreducible(const PianoQuiver &P, int start, const Word &w) {
    PathNormalForm nf;
    nf.a = start;
    nf.word = w;
    size_t i = 0;
    while (i < w.size() && w[i].kind == Letter::Delta) nf.deltas.push_back(w[i++].id);
    int cur = start;
    for (auto &l : w) cur = letter_dst(P, l);
    nf.b = cur;
    nf.m = word_degree(w);
    if (i == w.size()) {
        nf.shape = Shape::DeltaAlpha;
        return nf;
    }
    auto kind = w[i].kind;
    while (i < w.size() && w[i].kind == kind) ++i;
    if (kind == Letter::Alpha && i == w.size()) {
        nf.shape = Shape::DeltaAlpha;
        return nf;
    }
    if (kind == Letter::Beta && i == w.size()) {
        nf.shape = Shape::DeltaBeta;
        return nf;
    }
    if (kind == Letter::Beta && i + 1 == w.size() && w[i].kind == Letter::Delta) {
        nf.deltas.push_back(w[i].id);
        nf.shape = Shape::DeltaBetaDelta;
        return nf;
    }
    throw std::logic_error("irreducible word is not canonical: " + word_str(P, w));
}

PathNormalForm normal_form(const PianoQuiver &P, int start, const Word &w0) {
    check_composable(P, start, w0);
    Word w = w0;
    for (;;) {
        bool moved = false, zero = false;
        for_each_rewrite(P, w, [&](std::optional<Word> r) {
            if (!r) zero = true;
            else w = std::move(*r);
            moved = true;
            return true;
        });
        if (zero) {
            PathNormalForm nf;
            nf.a = start;
            nf.shape = Shape::Zero;
            return nf;
        }
        if (!moved) break;
    }
    return classify_irreducible(P, start, w);
}

PathNormalForm normal_form(const PianoQuiver &P, const Word &w) {
    if (w.empty()) throw std::invalid_argument("empty word needs a start vertex");
    return normal_form(P, letter_src(P, w.front()), w);
}

PathNormalForm predicted_normal_form(const PianoQuiver &P, int start, const Word &w) {
    check_composable(P, start, w);
    PathNormalForm nf;
    nf.a = start;
    for (auto &l : w)
        if (l.kind == Letter::Delta) nf.deltas.push_back(l.id);
    for (size_t k = 0; k + 1 < nf.deltas.size(); ++k)
        if (P.kb.gentle.is_relation(nf.deltas[k], nf.deltas[k + 1])) {
            PathNormalForm z;
            z.a = start;
            return z;
        }
    nf.b = start;
    for (auto &l : w) nf.b = letter_dst(P, l);
    nf.m = word_degree(w);
    if (nf.m <= 0) nf.shape = Shape::DeltaAlpha;
    else if (!P.is_sharp(nf.b)) nf.shape = Shape::DeltaBeta;
    else nf.shape = Shape::DeltaBetaDelta;
    return nf;
}

std::optional<std::vector<int>> delta_path(const PianoQuiver &P, int a, int b) {
    if (a == b) return std::vector<int>{};
    auto &A = P.arrows();
    // states: (vertex, last arrow)
    std::deque<std::pair<int, std::vector<int>>> q;
    q.push_back({a, {}});
    while (!q.empty()) {
        auto [v, path] = q.front();
        q.pop_front();
        for (size_t e = 0; e < A.size(); ++e) {
            if (A[e].src != v) continue;
            if (!path.empty() && P.kb.gentle.is_relation(path.back(), e)) continue;
            if (path.size() > A.size()) continue;
            auto p2 = path;
            p2.push_back(e);
            if (A[e].dst == b) return p2;
            q.push_back({A[e].dst, p2});
        }
    }
    return std::nullopt;
}

int graded_dim(const PianoQuiver &P, int a, int b, long m, long D) {
    if (m < -D || m > D) throw std::out_of_range("window exceeded");
    if (a == b) return P.is_sharp(a) ? (m <= 0) : 1;
    auto p = delta_path(P, a, b);
    if (!p) return 0;
    if (m <= 0 || !P.is_sharp(b)) return 1;
    return P.is_sharp(P.arrows()[p->back()].src) ? 0 : 1;
}

Word representative_word(const PianoQuiver &P, int a, int b, long m) {
    if (!graded_dim(P, a, b, m, std::labs(m))) throw std::invalid_argument("zero graded piece");
    auto p = *delta_path(P, a, b);
    Word w;
    for (int e : p) w.push_back({Letter::Delta, e});
    if (m <= 0) {
        for (long k = 0; k < -m; ++k) w.push_back({Letter::Alpha, b});
    } else if (!P.is_sharp(b)) {
        for (long k = 0; k < m; ++k) w.push_back({Letter::Beta, b});
    } else {
        int pred = P.arrows()[p.back()].src;
        w.pop_back();
        for (long k = 0; k < m; ++k) w.push_back({Letter::Beta, pred});
        w.push_back({Letter::Delta, p.back()});
    }
    return w;
}

int ComponentStructure::total() const {
    int t = 0;
    for (auto &c : columns)
        for (int x : c) t += x;
    return t;
}

std::vector<int> projective_column(const PianoQuiver &P, int v) {
    std::vector<int> c(P.nv(), 0);
    for (int x = 0; x < P.nv(); ++x) c[x] = delta_path(P, x, v).has_value();
    return c;
}

ComponentStructure degree_component_structure(const PianoQuiver &P, long i, long D) {
    if (i < -D || i > D) throw std::out_of_range("window exceeded");
    ComponentStructure s{i, {}, {}};
    int nv = P.nv();
    for (int v = 0; v < nv; ++v) {
        std::vector<int> col(nv);
        for (int x = 0; x < nv; ++x) col[x] = graded_dim(P, x, v, i, D);
        s.columns.push_back(col);
        if (i <= 0 || !P.is_sharp(v)) {
            s.predicted.push_back(projective_column(P, v));
            s.predicted_radical.push_back(projective_column(P, v));
            continue;
        }
        auto rad = projective_column(P, v);
        rad[v] = 0;
        s.predicted_radical.push_back(rad);
        int pred = -1;
        for (auto &a : P.arrows())
            if (a.dst == v && !P.is_sharp(a.src)) pred = a.src;
        s.predicted.push_back(pred < 0 ? std::vector<int>(nv, 0) : projective_column(P, pred));
    }
    return s;
}

int keyboard_algebra_dim(const PianoQuiver &P) {
    int t = 0;
    for (int a = 0; a < P.nv(); ++a)
        for (int b = 0; b < P.nv(); ++b) t += delta_path(P, a, b).has_value();
    return t;
}

}  // namespace pianocat

namespace pianocat {

namespace {

struct WordHash {
    size_t operator()(const Word &w) const {
        size_t h = w.size();
        for (auto &l : w) h = h * 1000003u + (size_t(l.kind) * 131 + size_t(l.id));
        return h;
    }
};

std::string nf_key(const PathNormalForm &nf) {
    if (nf.shape == Shape::Zero) return "0";
    std::string k = std::to_string(nf.b) + ":" + std::to_string(nf.m) + ":" + shape_name(nf.shape);
    for (int d : nf.deltas) k += "," + std::to_string(d);
    return k;
}

struct Explorer {
    const PianoQuiver &P;
    int start;
    std::unordered_map<Word, std::set<std::string>, WordHash> memo;

    const std::set<std::string> &terminals(const Word &w) {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        std::set<std::string> out;
        bool any = false;
        for_each_rewrite(P, w, [&](std::optional<Word> r) {
            any = true;
            if (!r) out.insert("0");
            else {
                auto &t = terminals(*r);
                out.insert(t.begin(), t.end());
            }
            return false;
        });
        if (!any) out.insert(nf_key(classify_irreducible(P, start, w)));
        return memo.emplace(w, std::move(out)).first->second;
    }
};

}  // namespace

ConfluenceReport check_confluence(const PianoQuiver &P, int L) {
    ConfluenceReport rep;
    std::vector<std::vector<Letter>> out_letters(P.nv());
    for (int v = 0; v < P.nv(); ++v) {
        out_letters[v].push_back({Letter::Alpha, v});
        if (!P.is_sharp(v)) out_letters[v].push_back({Letter::Beta, v});
    }
    for (size_t e = 0; e < P.arrows().size(); ++e) out_letters[P.arrows()[e].src].push_back({Letter::Delta, int(e)});
    for (int a = 0; a < P.nv(); ++a) {
        Explorer ex{P, a, {}};
        Word w;
        std::function<void(int)> rec = [&](int v) {
            ++rep.words;
            auto &t = ex.terminals(w);
            if (t.size() != 1) {
                if (!rep.diverging++) rep.witness = "diverging " + word_str(P, w);
            } else {
                auto pred = nf_key(predicted_normal_form(P, a, w));
                auto det = nf_key(normal_form(P, a, w));
                if (pred != *t.begin() || det != pred) {
                    if (!rep.oracle_mismatch++ && rep.witness.empty())
                        rep.witness = "oracle " + word_str(P, w) + " got " + det + " expected " + pred;
                }
            }
            if ((int)w.size() == L) return;
            for (auto &l : out_letters[v]) {
                w.push_back(l);
                rec(letter_dst(P, l));
                w.pop_back();
            }
        };
        rec(a);
    }
    return rep;
}

}  // namespace pianocat
