#pragma once
// Constructive covering maps from the d-dimensional lattice graph onto a
// finite graph.  Starting from an opposite-pair seed around one vertex, the
// extension procedure assigns images to every lattice point in a finite
// window, deriving each value in all available ways (second common
// neighbours across a diagonal step, or the unique remaining neighbour) and
// cross-checking them.  Either the window certifies a covering map, or the
// procedure stops with a machine-checkable obstruction.  From a certified
// window one can then recover deck transformations, decide normality on the
// window, and classify the quotient (torus / Klein bottle for d = 2,
// manifold / orbifold quotient for d >= 3).

#include "latloc/graph.hpp"
#include "latloc/lattice_group.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latloc {

// Images of the origin and of +-e_i under the seed map: axes[i] holds the
// images of (+e_i, -e_i).  The two vertices of each pair are opposite one
// another across the root image.
struct SeedMap {
    int d = 0;
    int root = -1;
    std::vector<std::pair<int, int>> axes;
};

// Deterministic seed: the opposite partition of the root's neighbourhood,
// pairs ordered by their least vertex, least vertex of each pair on +e_i.
// Throws DEGREE_MISMATCH (degree != 2d) or NO_OPPOSITE_STRUCTURE.
SeedMap seed_map(const Graph& g, int root, int d);

// Why an extension attempt stopped.  `reason` is one of
//   AMBIGUOUS_EXTENSION    a derivation found a common-neighbour /
//                          remaining-neighbour count other than expected
//   INJECTIVITY_VIOLATION  two lattice neighbours of one point share an image
//   OPPOSITE_VIOLATION     an opposite pair's images are not opposite, or
//                          two derivations of one value disagree
// `at` is the focal lattice point; support_a/support_b are the lattice
// points whose images witness the failure, with their images in
// value_a/value_b where meaningful.
struct CoverObstruction {
    std::string reason;
    Vec at;
    Vec support_a;
    Vec support_b;
    int value_a = -1;
    int value_b = -1;
    std::string detail;
};

// A (partial) lattice-to-graph map on the window of all points with
// |x_i| <= radius, plus the one-step fringe around that box.  Cells are
// stored flat; -1 means unassigned.
struct PartialCover {
    int d = 0;
    int radius = 0;
    long long side = 0;  // 2*radius + 3 cells per axis
    std::vector<int> cells;
    long long assigned = 0;
    bool valid = false;
    std::optional<CoverObstruction> obstruction;

    bool in_domain(const Vec& x) const;
    long long cell_index(const Vec& x) const;  // callers ensure coordinates fit
    Vec point_of(long long index) const;
    int at(const Vec& x) const;                // -1 when unassigned or outside
    void set(const Vec& x, int v);             // for perturbation experiments
    long long domain_size() const;
};

// Extend the seed over the whole window, deriving every value in all
// available ways.  An obstruction is a result, not an error; a malformed
// seed throws BAD_PARAMS.  The shuffled variant processes candidate points
// in a pseudorandom order instead of the canonical one — the outcome must
// not depend on this.
PartialCover extend_cover(const Graph& g, const SeedMap& seed, int radius);
PartialCover extend_cover_shuffled(const Graph& g, const SeedMap& seed, int radius,
                                   unsigned shuffle_seed);

// Re-check a finished window from scratch: every point whose whole
// neighbourhood lies in the window must map it bijectively onto the image's
// neighbourhood, with opposite pairs landing on opposite pairs.
struct ValidationReport {
    bool ok = false;
    bool complete = false;  // every window point is assigned
    std::optional<CoverObstruction> problem;
};
ValidationReport validate_cover(const Graph& g, const PartialCover& pc, int threads = 1);

// Deck transformations found on the fibre over the root image inside the
// half-window.  `generators` lists one verified transformation per fibre
// point (not a minimal generating set).  Normality is certified from the
// window when the recovered group's quotient has exactly |V(G)| vertices.
struct DeckGroup {
    int d = 0;
    std::vector<LatticeAut> generators;
    long long fiber_size = 1;
    bool transitive_on_fiber = false;
    bool normality_certified = false;
    SubgroupSpec group;
};

// Throws BAD_PARAMS if the cover is not valid, FIBER_NOT_FOUND if the graph
// is finite but no second fibre point lies in the half-window.
DeckGroup recover_deck_group(const Graph& g, const PartialCover& pc, int threads = 1);

enum class Surface2 { Torus, KleinBottle };

// d = 2 classification: torus iff every point part preserves orientation.
// Throws NON_COCOMPACT when the deck group's translations have rank < 2 and
// ORBIFOLD_UNEXPECTED if the group has torsion.
Surface2 classify_2d(const DeckGroup& dg);

enum class QuotientKind { ManifoldQuotient, OrbifoldQuotient };
struct DClassification {
    QuotientKind kind = QuotientKind::ManifoldQuotient;
    TorsionResult torsion;
};

// d >= 3 classification: manifold quotient iff the group is torsion-free;
// otherwise the torsion witness is attached.
DClassification classify_d(const SubgroupSpec& spec);
DClassification classify_d(const DeckGroup& dg);

// One-shot pipeline: seed, extend, recover, classify.  radius < 0 selects
// the default 4*diameter(G) + 4.  Classification fields stay empty when the
// cover is obstructed or the deck group is not cocompact.
struct CoverPipelineResult {
    SeedMap seed;
    PartialCover cover;
    std::optional<DeckGroup> deck;
    std::optional<Surface2> surface;
    std::optional<DClassification> quotient_kind;
    int radius_used = 0;
};
CoverPipelineResult run_cover_pipeline(const Graph& g, int d, int root = 0, int radius = -1,
                                       int threads = 1);

// One line `x1 ... xd -> v` per assigned window point.
void write_cover(std::ostream& out, const PartialCover& pc);

} // namespace latloc
