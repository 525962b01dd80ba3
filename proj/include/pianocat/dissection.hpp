#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pianocat/cyclic.hpp"

namespace pianocat {

// boundary positions 0..2n-1, even = red (open circle), odd = green
struct MarkedDisc {
    int n = 1;
    int size() const { return 2 * n; }
};

using Chord = std::pair<int, int>;

struct DissectionSet {
    int n = 1;
    std::vector<Chord> red;      // both endpoints even
    std::vector<Chord> binding;  // (red endpoint, green endpoint)
    void normalize();
    bool operator==(const DissectionSet &o) const { return n == o.n && red == o.red && binding == o.binding; }
    bool operator<(const DissectionSet &o) const;
};

bool chords_cross(const Chord &c, const Chord &d, int N);

// faces of the polygon on N vertices cut by the chords; each face is the list
// of directed edges (from, to, is_side)
struct FaceEdge {
    int from, to;
    bool side;
};
std::vector<std::vector<FaceEdge>> polygon_faces(int N, const std::vector<Chord> &chords);

bool is_admissible_dissection(const DissectionSet &D);
bool is_extended_admissible(const DissectionSet &D);

struct InducedDissection {
    MarkedDisc disc;    // the recoloured disc, with disc.n = 2n
    DissectionSet dissection;  // red arcs only, first the old red then the old binding
};
InducedDissection induced_admissible(const DissectionSet &D);

struct ExtendabilityReport {
    bool ok = false;
    int failed_condition = 0;
    std::string witness;
    std::optional<DissectionSet> extended;
};
ExtendabilityReport extendability_report(const DissectionSet &D);

DissectionSet epsilon(const ArcSet &G);
ArcSet epsilon_inverse(const DissectionSet &D);

DissectionSet rotate(const DissectionSet &D, int r);
std::vector<DissectionSet> enumerate_admissible(int n);
std::vector<DissectionSet> enumerate_extended_admissible(int n);

// arc-count formulas for a marked surface with genus g, b boundary components,
// |M| marked points, |P| punctures of which |P•| are green
int admissible_arc_count(int marked_red, int punctures_red, int b, int g);
int extended_arc_count(int marked, int punctures, int punctures_green, int b, int g);

}  // namespace pianocat
