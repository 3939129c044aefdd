#pragma once

// Automorphisms of the d-dimensional lattice graph and finitely generated
// subgroups thereof: point-group closure, translation sublattice via Schreier
// generators, minimum displacement, torsion detection, and finite quotients.

#include <iosfwd>
#include <optional>
#include <vector>

#include "latloc/graph.hpp"

namespace latloc {

using Vec = std::vector<long long>;

// Signed permutation of the coordinate axes: images[i] = s*(j+1) means the i-th
// basis vector maps to s times the j-th (s = +1 or -1).
struct SignedPerm {
    std::vector<int> images;

    static SignedPerm identity(int d);
    int dim() const { return static_cast<int>(images.size()); }
    bool is_identity() const;
    Vec apply(const Vec& x) const;
    Vec column(int i) const;  // image of the i-th basis vector
    int det() const;
    int order() const;
};

bool operator==(const SignedPerm& a, const SignedPerm& b);
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);  // a after b
SignedPerm inverse(const SignedPerm& s);
void validate(const SignedPerm& s);

// Lattice-graph automorphism x -> sigma(x) + trans.
struct LatticeAut {
    SignedPerm sigma;
    Vec trans;

    static LatticeAut identity(int d);
    static LatticeAut translation(const Vec& t);
    int dim() const { return sigma.dim(); }
    bool is_identity() const;
    Vec apply(const Vec& x) const;
};

bool operator==(const LatticeAut& a, const LatticeAut& b);
LatticeAut compose(const LatticeAut& a, const LatticeAut& b);  // a after b
LatticeAut inverse(const LatticeAut& a);

// Integer lattice given by echelon basis columns (Hermite-reduced: pivot rows
// strictly increase, pivots positive, entries left of a pivot reduced mod it).
// When built with tracking, `expr[k]` writes basis column k in terms of the
// original input columns, so membership can return witness coefficients.
struct IntLattice {
    int dim = 0;
    std::vector<Vec> basis;
    std::vector<int> pivot;
    std::vector<Vec> expr;

    int rank() const { return static_cast<int>(basis.size()); }
    bool contains(const Vec& x) const;
    // Coefficients over the original columns, if x is a member and tracking is on.
    std::optional<Vec> coefficients(const Vec& x) const;
    // Index of the lattice in Z^dim (product of pivots); requires full rank.
    long long index() const;
    // Canonical coset representative (componentwise reduction); requires full rank.
    Vec residue(Vec x) const;
};

IntLattice lattice_from_columns(int dim, const std::vector<Vec>& columns, bool track = false);

// Exact l1 shortest nonzero vector / closest vector by branch-and-bound over
// the echelon basis. Optional out-parameters receive the achieving lattice
// vector, so callers and tests can check the certificate independently.
long long lattice_svp_l1(const IntLattice& lattice, Vec* witness = nullptr);
long long lattice_cvp_l1(const IntLattice& lattice, const Vec& target, Vec* closest = nullptr);

// A finitely generated subgroup of the lattice automorphism group, closed data:
// the point group (sigma parts), one group element per point-group coset
// (coset_reps[0] is the identity), and the translation sublattice.
struct SubgroupSpec {
    int d = 0;
    std::vector<LatticeAut> generators;
    std::vector<SignedPerm> point_group;
    std::vector<LatticeAut> coset_reps;
    IntLattice translation_lattice;

    bool is_trivial() const;
    int point_index(const SignedPerm& s) const;  // -1 if absent
    // Whether the automorphism belongs to the subgroup.
    bool contains(const LatticeAut& a) const;
};

SubgroupSpec make_subgroup(int d, std::vector<LatticeAut> generators);

// Convenience wrappers matching the individual operations.
std::vector<SignedPerm> point_group_closure(int d, const std::vector<LatticeAut>& generators);
IntLattice translation_lattice(int d, const std::vector<LatticeAut>& generators);

// Minimum over non-identity group elements of min_x |gamma(x) - x|_1.
// finite=false means the group is trivial (no non-identity element exists).
// Otherwise `witness` is a group element and `at_point` a lattice point with
// |witness(at_point) - at_point|_1 == value, a certificate of achievability.
// Throws NON_COCOMPACT when the translation lattice has rank < d.
struct Displacement {
    bool finite = true;
    long long value = 0;
    std::optional<LatticeAut> witness;
    Vec at_point;
};
Displacement min_displacement(const SubgroupSpec& spec);

struct TorsionResult {
    bool torsion_free = true;
    std::optional<LatticeAut> witness;  // a finite-order non-identity element
    int witness_order = 0;
};
TorsionResult is_torsion_free(const SubgroupSpec& spec);

// Finite quotient graph of the lattice graph by the subgroup. Vertices are
// orbit representatives (lex-least canonical residues); the emitted graph is
// simple, with degenerate identifications reported via the two flags.
struct QuotientGraph {
    Graph graph;
    std::vector<Vec> rep_of_vertex;
    bool loops_found = false;
    bool multi_edges_found = false;
};
QuotientGraph build_quotient(const SubgroupSpec& spec);

// Orbit representative lookup used by quotient construction and tests.
Vec canonical_orbit_rep(const SubgroupSpec& spec, const Vec& x);

// Text format: "d <dim>" header, then one "perm s1 .. sd trans v1 .. vd" line
// per generator (signed one-based axis images, then the translation vector).
std::vector<LatticeAut> parse_group_file(std::istream& in, int& d_out);
void write_group_file(int d, const std::vector<LatticeAut>& gens, std::ostream& out);

}  // namespace latloc
