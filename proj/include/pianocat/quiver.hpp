#pragma once
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pianocat/cyclic.hpp"
#include "pianocat/dissection.hpp"

namespace pianocat {

struct Arrow {
    int src, dst;
    int at;  // boundary position where the two arcs meet
};

struct GentleQuiver {
    int nv = 0;
    std::vector<Arrow> arrows;
    std::vector<std::pair<int, int>> relations;  // arrow ids, composed left to right
    bool is_relation(int e1, int e2) const;
};

struct KeyboardQuiver {
    GentleQuiver gentle;
    std::set<int> sharp;
    bool is_sharp(int v) const { return sharp.count(v) > 0; }
};

struct PianoQuiver {
    KeyboardQuiver kb;
    // instantiated beta commutations: delta paths between non-sharp vertices
    std::vector<std::vector<int>> commutations;
    int nv() const { return kb.gentle.nv; }
    const std::vector<Arrow> &arrows() const { return kb.gentle.arrows; }
    bool is_sharp(int v) const { return kb.is_sharp(v); }
};

GentleQuiver gentle_from_chords(int N, const std::vector<Chord> &chords);
GentleQuiver gentle_from_dissection(const DissectionSet &D);
bool is_locally_gentle(const GentleQuiver &Q);

// vertex k is the k-th arc of red followed by binding
KeyboardQuiver keyboard_from_extended(const DissectionSet &D);
PianoQuiver piano_from_extended(const DissectionSet &D);
// vertex k is G.arcs[k]
PianoQuiver piano_from_generator(const ArcSet &G);
PianoQuiver piano_from_keyboard(const KeyboardQuiver &K);

struct Letter {
    enum Kind { Delta, Alpha, Beta } kind;
    int id;  // arrow id for Delta, vertex for loops
    bool operator==(const Letter &) const = default;
    auto operator<=>(const Letter &) const = default;
};
using Word = std::vector<Letter>;

std::string word_str(const PianoQuiver &P, const Word &w);
int letter_src(const PianoQuiver &P, const Letter &l);
int letter_dst(const PianoQuiver &P, const Letter &l);
void check_composable(const PianoQuiver &P, int start, const Word &w);
long word_degree(const Word &w);

enum class Shape { DeltaAlpha, DeltaBeta, DeltaBetaDelta, Zero };
std::string shape_name(Shape s);

struct PathNormalForm {
    int a = 0, b = 0;
    long m = 0;
    Shape shape = Shape::Zero;
    std::vector<int> deltas;
    Word word;
    bool operator==(const PathNormalForm &o) const {
        if (shape == Shape::Zero || o.shape == Shape::Zero) return shape == o.shape && a == o.a;
        return a == o.a && b == o.b && m == o.m && shape == o.shape && deltas == o.deltas;
    }
};

// all results of one rule application; nullopt stands for zero
std::vector<std::optional<Word>> rewrite_steps(const PianoQuiver &P, const Word &w);
PathNormalForm classify_irreducible(const PianoQuiver &P, int start, const Word &w);
PathNormalForm normal_form(const PianoQuiver &P, int start, const Word &w);
PathNormalForm normal_form(const PianoQuiver &P, const Word &w);
// independent prediction from letter statistics
PathNormalForm predicted_normal_form(const PianoQuiver &P, int start, const Word &w);

std::optional<std::vector<int>> delta_path(const PianoQuiver &P, int a, int b);
int graded_dim(const PianoQuiver &P, int a, int b, long m, long D = 6);
Word representative_word(const PianoQuiver &P, int a, int b, long m);

struct ComponentStructure {
    long degree;
    // column[v][x] = dim of the degree piece from x to v
    std::vector<std::vector<int>> columns;
    // p_abar as stated: the projective at the standard predecessor
    std::vector<std::vector<int>> predicted;
    // radical of p_a at sharp vertices in positive degree
    std::vector<std::vector<int>> predicted_radical;
    int total() const;
    bool matches() const { return columns == predicted; }
    bool matches_radical() const { return columns == predicted_radical; }
};
std::vector<int> projective_column(const PianoQuiver &P, int v);
ComponentStructure degree_component_structure(const PianoQuiver &P, long i, long D = 6);
int keyboard_algebra_dim(const PianoQuiver &P);

struct ConfluenceReport {
    long words = 0;
    long diverging = 0;       // words with more than one terminal form
    long oracle_mismatch = 0; // deterministic normal form differs from the prediction
    std::string witness;
    bool pass() const { return diverging == 0 && oracle_mismatch == 0; }
};
// every composable word of length <= L, all maximal rewrite sequences
ConfluenceReport check_confluence(const PianoQuiver &P, int L);

}  // namespace pianocat
