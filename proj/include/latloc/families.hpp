#pragma once
// Builders for the classical finite families of 4-regular "surface grid"
// graphs: rectangular grid patches, twisted discrete tori, the three kinds
// of discrete Klein bottle graphs, and the "strange" Klein bottle graphs.
// Each family that lives on a closed surface is also exposed as a subgroup
// of lattice automorphisms, so the explicit edge formulas can be checked
// against the generic quotient construction.

#include "latloc/graph.hpp"
#include "latloc/lattice_group.hpp"

namespace latloc {

// The p x q rectangular grid patch (no wrap-around).  Requires p, q >= 2.
Graph build_grid(int p, int q);

// Twisted discrete torus on {0..p-1} x {0..q-1}: grid edges, a horizontal
// wrap {(0,j),(p-1,j)}, and a vertical wrap with twist delta,
// {(i,0),((i+delta) mod p, q-1)}.  Requires p, q >= 3 and
// 0 <= delta <= p/2.
Graph build_torus(int p, int q, int delta);

// Discrete Klein bottle graphs on {0..p-1} x {0..q-1}.  All three kinds
// keep the grid edges and the horizontal wrap {(0,j),(p-1,j)}; they differ
// in the vertical wrap:
//   kind 0 (p even): {(i,0),(p-1-i, q-1)}
//   kind 1 (p odd):  {(i,0),(p-1-i, q-1)}
//   kind 2 (p even): {(i,0),((p-i) mod p, q-1)}
// Requires p, q >= 3 and the parity matching the kind.
Graph build_klein(int p, int q, int kind);

// The "strange" Klein bottle graphs S(p,q) on {0..p-1} x {0..q-1}, whose
// wrap edges run diagonally.  Requires p, q >= 3.
Graph build_strange(int p, int q);

// Subgroups of Aut(L^2) whose quotients realise the families above.
SubgroupSpec gen_torus_group(const Vec& v1, const Vec& v2);
SubgroupSpec torus_group(int p, int q, int delta);
SubgroupSpec klein_group(int p, int q, int kind);
SubgroupSpec strange_group(int p, int q);

// Glide quotient constructions.  Both take a rectangle size (k, l) and
// build the group generated by one glide reflection g and one translation
// t perpendicular to the glide axis.
//
// Axis-parallel version: t = (k, 0) and g reflects across a vertical line
// and shifts by l.  The corner placement decides where the axis sits:
//   HalfInteger:   g(x,y) = (k-1-x, y+l)   (axis x = (k-1)/2)
//   LatticePoint:  g(x,y) = (k-x,   y+l)   (axis x = k/2)
enum class ProcICorner { HalfInteger, LatticePoint };
SubgroupSpec procedure_i(int k, int l, ProcICorner corner);

// Diagonal version: the glide axis runs along the main or the anti
// diagonal.
//   Main: g(x,y) = (y+l, x+k-l),    t = (l, -l)
//   Anti: g(x,y) = (-y-1, k-1-x),   t = (l, l)
enum class ProcIIDiagonal { Main, Anti };
SubgroupSpec procedure_ii(int k, int l, ProcIIDiagonal diagonal);

} // namespace latloc
