#pragma once
#include <map>
#include <string>
#include <vector>

#include "pianocat/cyclic.hpp"

namespace pianocat {

struct GeneratorCandidate {
    ArcSet arcs;
    bool homologically_connected = false;
    bool complete_orbit = false;
    bool limit_kind = false;
};
GeneratorCandidate make_candidate(const ArcSet &A);

struct LimitGeneratorDecomposition {
    ArcSet pre_generator;
    ArcSet limit_part;
    std::map<int, Arc> segment_assignment;
};

bool crosses_under_shifts(const Arc &x, const Arc &y);
bool is_homologically_connected(const ArcSet &A);
bool is_limit_pre_generator(const ArcSet &A);
bool is_limit_generator(const ArcSet &A);
LimitGeneratorDecomposition decompose(const ArcSet &A);

ArcSet fan_generator(int n);
ArcSet fan_generator_at(int n, int apex);

constexpr int kEnumerationCap = 6;
std::vector<ArcSet> enumerate_pre_generators(int n);
std::vector<ArcSet> enumerate_limit_generators(int n, bool up_to_equivalence, int cap = kEnumerationCap);
ArcSet rotate(const ArcSet &A, int r);
ArcSet canonical_rotation(const ArcSet &A);

struct AxiomResult {
    std::string axiom;
    bool pass = true;
    std::string witness;
};
struct LinearGeneratorReport {
    std::vector<AxiomResult> axioms;
    bool pass() const;
};
LinearGeneratorReport check_linear_generator(const ArcSet &E, long D = 6);

}  // namespace pianocat
