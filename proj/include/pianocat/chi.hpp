#pragma once
#include <string>
#include <vector>

#include "pianocat/cyclic.hpp"

namespace pianocat {

enum class EntryKind { PolyK, LaurentK, LongRing, ZeroEntry };
std::string entry_name(EntryKind k);

struct GradedEntry {
    EntryKind kind = EntryKind::ZeroEntry;
    int dim(long d) const;
};

struct ChiAlgebra {
    ArcSet G;  // summands in the given order
    std::vector<std::vector<GradedEntry>> entries;
    int size() const { return G.arcs.size(); }
    int dim(int i, int j, long d) const { return entries[i][j].dim(d); }
};

// G is taken in its stored order
GradedEntry classify_entry(const ArcSet &G, int i, int j);
ChiAlgebra make_chi(const ArcSet &G);

struct ChiTerm {
    int i, j;
    long deg;
};
int long_ring_product(long p, long q);
int chi_multiply(const ChiAlgebra &A, ChiTerm f, ChiTerm g);

struct Mismatch {
    std::string what;
    std::string witness;
};
struct IsoReport {
    std::vector<Mismatch> mismatches;
    long checked = 0;
    bool pass() const { return mismatches.empty(); }
};

struct PianoQuiver;
IsoReport verify_path_algebra_iso(const ArcSet &G, long D = 6);
IsoReport verify_path_algebra_iso(const ArcSet &G, const PianoQuiver &P, long D);

}  // namespace pianocat
