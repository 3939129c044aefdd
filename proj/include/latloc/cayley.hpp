#pragma once

// The counterexample lab: a 112-element affine group over the 4-dimensional
// vector space on two elements whose Cayley graph looks like the
// 3-dimensional lattice graph out to radius 2 around every vertex, yet admits
// no covering by it.  Product extensions with powers of Z_14 lift the same
// phenomenon to dimensions 4 and above.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latloc/covering.hpp"
#include "latloc/graph.hpp"
#include "latloc/local_probe.hpp"

namespace latloc {

// Affine map x -> Ax + v on 4-bit vectors over the two-element field.
// `mat` stores A row-major (bit 4*r + c = A[r][c]), `vec` stores v (bit r).
// Unlike the rest of the library, products here compose LEFT TO RIGHT:
// affine_mul(g, h) applies g first, then h.  The convention is confined to
// this module and documented at every adapter point.
struct AffineF2 {
    uint16_t mat = 0;
    uint8_t vec = 0;
};

bool operator==(const AffineF2& a, const AffineF2& b);
bool operator<(const AffineF2& a, const AffineF2& b);

AffineF2 affine_identity();
uint8_t affine_apply(const AffineF2& g, uint8_t x);
AffineF2 affine_mul(const AffineF2& g, const AffineF2& h);  // g first, then h
AffineF2 affine_inverse(const AffineF2& g);

// The defining matrix of the counterexample group (as an affine element with
// zero translation part); it has order 7.
AffineF2 counterexample_matrix();
// The three distinguished generators a, b, c.
std::vector<AffineF2> counterexample_generators();

// Group element of the counterexample group, possibly extended by a torus
// part with entries mod 14 (empty for the 3-dimensional group).
struct CayleyElement {
    AffineF2 aff;
    std::vector<int> torus;
};

bool operator==(const CayleyElement& a, const CayleyElement& b);
bool operator<(const CayleyElement& a, const CayleyElement& b);

CayleyElement cayley_mul(const CayleyElement& g, const CayleyElement& h);  // g first
CayleyElement cayley_inverse(const CayleyElement& g);

// A finite group enumerated together with its right Cayley graph: vertex ids
// are positions in `elements` (sorted canonically), and g is adjacent to g*s
// for every s in the generator set.
struct FiniteCayleyGraph {
    int d = 3;  // half the degree; the lattice dimension being imitated
    std::vector<CayleyElement> elements;
    std::vector<std::pair<std::string, CayleyElement>> generator_set;
    Graph graph;
    int identity = -1;

    int vertex_of(const CayleyElement& g) const;  // -1 if absent
};

// The 112-element group generated by the three affine maps above, with
// generator set {a, b, c, a^-1, b^-1, c^-1}.  Fails loudly (INTERNAL) if the
// closure does not have exactly 112 distinct elements or the six generators
// are not distinct — either would indicate a transcription bug.
FiniteCayleyGraph build_example_group();

// The product of the counterexample group with d-3 copies of Z_14, with the
// torus unit vectors and their inverses added to the generator set.
// Requires 4 <= d; throws CAP_EXCEEDED for d above the cap (vertex count
// grows as 112 * 14^(d-3)).
FiniteCayleyGraph build_product_extension(int d, int cap = 5);

// All words of the given length over the generator set that evaluate to the
// identity, split into free-group-trivial words and genuine relators.
// Words are sequences of indices into generator_set, in lexicographic order.
struct RelatorEnumeration {
    int length = 0;
    std::vector<std::vector<int>> nontrivial;
    std::vector<std::vector<int>> trivial_words;
};
RelatorEnumeration enumerate_relators(const FiniteCayleyGraph& cg, int length, int threads = 1);

// Bundled verification of the counterexample properties: bipartite and
// 2d-regular, locally lattice-like to radius 2 but not even weakly to
// radius 3, and obstructed under the covering extension.
struct CounterexampleReport {
    bool bipartite = false;
    int degree = -1;  // common degree, -1 if irregular
    LocalCheck two_locally;
    LocalCheck weakly_three;
    bool covered = false;
    std::optional<CoverObstruction> obstruction;
};
CounterexampleReport verify_counterexample(const FiniteCayleyGraph& cg, int threads = 1);

}  // namespace latloc
