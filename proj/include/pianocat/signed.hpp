#pragma once
#include <optional>
#include <string>
#include <vector>

#include "pianocat/chi.hpp"
#include "pianocat/cyclic.hpp"
#include "pianocat/hom.hpp"

namespace pianocat {

struct ConeData {
    ArcSet G;  // summands reordered: those with Q != 0 first
    std::vector<std::optional<Arc>> Q;
    std::vector<Arc> P;
    std::vector<bool> in_generated_1;
    int m = 0;
};
// orders G's summands; if keep_order, the given order must already put Q != 0 first
ConeData cone_data(const ArcSet &G, bool keep_order = false);

enum class Side { Beta, Delta };
struct InitialChoice {
    Side side = Side::Beta;
    int vertex = 0;  // 0-based
};
InitialChoice parse_choice(const std::string &s);
std::string choice_str(const InitialChoice &c);

struct SignedMatrix {
    int m = 0;
    std::vector<int> beta;   // size m
    std::vector<int> delta;  // size 2n-1
    std::vector<Side> side;  // chosen side per vertex
    InitialChoice initial;
    std::vector<int> diagonal() const;
};

struct KeyboardEdge {
    int src, dst;
    Direction dir;
};
std::vector<KeyboardEdge> keyboard_edges(const ConeData &C, const DirectionMode &mode);

SignedMatrix signed_matrix(const ConeData &C, InitialChoice choice, const DirectionMode &mode);
SignedMatrix signed_matrix(const ArcSet &G, InitialChoice choice);

struct Report {
    std::vector<std::string> failures;
    long checked = 0;
    bool pass() const { return failures.empty(); }
};
Report check_beta_delta(const SignedMatrix &M, const ConeData &C, const DirectionMode &mode);

struct BlockMorphism {
    int j, l;
    long i;
    // y: Q->Q, w: Q->P (upper right), z: P->P; absent slots hold 0
    int y = 0, w = 0, z = 0;
    bool has_qq = false, has_qp = false;
};
BlockMorphism phi_block(const SignedMatrix &M, const ChiAlgebra &A, int j, int l, long i, Direction dir);
BlockMorphism block_product(const BlockMorphism &x, const BlockMorphism &y, int m);

Report verify_phi_homomorphism(const ConeData &C, const SignedMatrix &M, const DirectionMode &mode, long D = 4);

// the generator of the worked n = 4 example, in its printed order 1..7
ArcSet worked_example_generator();

}  // namespace pianocat
