#pragma once
// The 4-cycle wheel property and the surface it induces.  A wheel family is a
// set of 4-cycles hitting every vertex exactly four times so that the union of
// the four cycles at each vertex is the nine-vertex wheel figure (a 3x3 grid
// patch: centre, four sides, four corners).  Gluing one unit square per family
// cycle along shared edges yields a closed surface whose Euler characteristic
// and orientability classify it as a torus or a Klein bottle.

#include "latloc/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latloc {

// A family of 4-cycles witnessing the wheel property, plus the per-vertex
// evidence: how many family cycles pass through each vertex (always four for
// a valid certificate) and whether their union is the wheel figure.
struct WheelCertificate {
    std::vector<Cycle4> family;
    std::vector<int> per_vertex_count;
    std::vector<char> wheel_check;
};

// Search for a wheel family.  The set of all 4-cycles is tried first; when its
// counts are off, a backtracking selection constrained by vertex-in-exactly-
// four / edge-in-exactly-two (with the wheel figure checked as soon as a
// vertex's four cycles are fixed) looks for a proper subfamily.  Returns
// nullopt when no family exists; throws INDETERMINATE when the search uses
// more than `budget` decision nodes before reaching a verdict.
std::optional<WheelCertificate> find_wheel_family(const Graph& g,
                                                  long long budget = 1'000'000);

enum class SurfaceClass { Torus, KleinBottle, Other };
std::string to_string(SurfaceClass c);

struct SurfaceReport {
    long long v = 0;
    long long e = 0;
    long long f = 0;
    long long euler = 0;  // v - e + f
    bool orientable = false;
    SurfaceClass classification = SurfaceClass::Other;
};

// Glue one square per family cycle, identifying the two occurrences of every
// edge.  Orientability is decided by propagating face orientations across
// shared edges; the verdict does not depend on the traversal order.  Euler
// characteristic zero plus orientable means torus, zero plus non-orientable
// means Klein bottle, anything else is Other.  Throws MALFORMED_CERTIFICATE
// when the family is empty, a cycle is degenerate, or some edge does not lie
// in exactly two family cycles.
SurfaceReport glue_surface(const WheelCertificate& cert);

// True when every vertex of g lies in exactly four family cycles and those
// four squares close into a single rotational fan around the vertex (each
// incident edge in exactly two of them, and the fan connected) -- i.e. the
// glued surface is locally a disc at every vertex.
bool vertex_rotation_check(const WheelCertificate& cert, const Graph& g);

}  // namespace latloc
