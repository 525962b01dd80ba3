#pragma once
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pianocat/cyclic.hpp"
#include "pianocat/dissection.hpp"
#include "pianocat/hom.hpp"
#include "pianocat/quiver.hpp"

namespace pianocat {

using nlohmann::json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(const BoundaryPoint &p);
json to_json(const Arc &a);
json to_json(const ArcSet &A);
json to_json(const DissectionSet &D);
json to_json(const PianoQuiver &P);
json to_json(const HomDegreeTable &t);

BoundaryPoint point_from_json(const json &j, int n);
Arc arc_from_json(const json &j, int n);
// keeps the order of the arcs as written
ArcSet arcset_from_json(const json &j);
DissectionSet dissection_from_json(const json &j);
json parse_json_text(const std::string &text);

std::string hom_table_csv(const HomDegreeTable &t);
std::string quiver_dot(const PianoQuiver &P);
std::string arcs_svg(const ArcSet &A);
std::string dissection_svg(const DissectionSet &D);
std::string quiver_svg(const PianoQuiver &P);
std::string arcs_tikz(const ArcSet &A);
std::string dissection_tikz(const DissectionSet &D);

}  // namespace pianocat
