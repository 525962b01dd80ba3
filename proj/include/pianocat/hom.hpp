#pragma once
#include <map>
#include <optional>
#include <vector>

#include "pianocat/cyclic.hpp"

namespace pianocat {

int ext1_dim(const Arc &X, const Arc &Y);
int hom_dim(const Arc &X, const Arc &Y, long i);

struct HomDegreeTable {
    Arc source, target;
    long D;
    std::map<long, int> dims;
};
HomDegreeTable hom_table(const Arc &X, const Arc &Y, long D);

enum class Direction { Forward, Backward };
std::string direction_name(Direction d);

// reference accumulation point for forward/backward; strict selects the
// literal inequalities instead of the interval reading
struct DirectionMode {
    BoundaryPoint ref;
    bool strict = false;
};
DirectionMode default_mode(int n);

std::optional<Direction> classify(const Arc &X, const Arc &Y, long i, const DirectionMode &mode);

struct MorphismHandle {
    Arc source, target;
    long degree;
    Direction direction;
};
MorphismHandle make_handle(const Arc &X, const Arc &Y, long i, const DirectionMode &mode);

struct Composite {
    bool nonzero;
    Direction direction;
};
Composite compose_nonzero(const MorphismHandle &f, const MorphismHandle &g);

// k with suspend(A, k) == B
std::optional<long> shift_between(const Arc &A, const Arc &B);

bool factors_through(const Arc &Y, const Arc &W, const Arc &Z);

struct Triangle {
    Arc first;
    std::vector<Arc> middle;
    Arc third;
};
std::vector<Triangle> extension_triangles(const Arc &X, const Arc &Y);

struct ConePresentation {
    std::optional<Arc> Q;
    Arc P;
};
ConePresentation cone_presentation(const Arc &X, const ArcSet &E);

}  // namespace pianocat
