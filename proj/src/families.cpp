// Explicit edge-list constructions for the grid, torus, Klein bottle and
// strange graph families, together with the matching automorphism
// subgroups.  The graph builders and the group builders are deliberately
// independent code paths: tests compare them through graph isomorphism.

#include "latloc/families.hpp"

#include <string>
#include <utility>
#include <vector>

namespace latloc {

namespace {

int vertex_id(int i, int j, int q) { return i * q + j; }

void attach_box_labels(Graph& g, int p, int q) {
    g.labels.resize(static_cast<std::size_t>(g.n));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            g.labels[vertex_id(i, j, q)] =
                "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Grid edges inside the p x q box, shared by every family.
void box_edges(int p, int q, std::vector<std::pair<int, int>>& edges) {
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
            if (i + 1 < p) edges.emplace_back(vertex_id(i, j, q), vertex_id(i + 1, j, q));
            if (j + 1 < q) edges.emplace_back(vertex_id(i, j, q), vertex_id(i, j + 1, q));
        }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error("BAD_PARAMS", what);
}

SignedPerm perm_from_images(std::vector<int> images) {
    SignedPerm s;
    s.images = std::move(images);
    validate(s);
    return s;
}

} // namespace

Graph build_grid(int p, int q) {
    require(p >= 2 && q >= 2, "grid requires p, q >= 2");
    std::vector<std::pair<int, int>> edges;
    box_edges(p, q, edges);
    Graph g = make_graph(p * q, edges);
    attach_box_labels(g, p, q);
    return g;
}

Graph build_torus(int p, int q, int delta) {
    require(p >= 3 && q >= 3, "torus requires p, q >= 3");
    require(0 <= delta && 2 * delta <= p, "torus requires 0 <= delta <= p/2");
    std::vector<std::pair<int, int>> edges;
    box_edges(p, q, edges);
    for (int j = 0; j < q; ++j)
        edges.emplace_back(vertex_id(0, j, q), vertex_id(p - 1, j, q));
    for (int i = 0; i < p; ++i)
        edges.emplace_back(vertex_id(i, 0, q), vertex_id((i + delta) % p, q - 1, q));
    Graph g = make_graph(p * q, edges);
    attach_box_labels(g, p, q);
    return g;
}

Graph build_klein(int p, int q, int kind) {
    require(p >= 3 && q >= 3, "klein requires p, q >= 3");
    require(kind == 0 || kind == 1 || kind == 2, "klein kind must be 0, 1 or 2");
    if (kind == 0 || kind == 2) require(p % 2 == 0, "klein kinds 0 and 2 require even p");
    if (kind == 1) require(p % 2 == 1, "klein kind 1 requires odd p");
    std::vector<std::pair<int, int>> edges;
    box_edges(p, q, edges);
    for (int j = 0; j < q; ++j)
        edges.emplace_back(vertex_id(0, j, q), vertex_id(p - 1, j, q));
    for (int i = 0; i < p; ++i) {
        int mate = (kind == 2) ? (p - i) % p : p - 1 - i;
        edges.emplace_back(vertex_id(i, 0, q), vertex_id(mate, q - 1, q));
    }
    Graph g = make_graph(p * q, edges);
    attach_box_labels(g, p, q);
    return g;
}

Graph build_strange(int p, int q) {
    require(p >= 3 && q >= 3, "strange graph requires p, q >= 3");
    std::vector<std::pair<int, int>> edges;
    box_edges(p, q, edges);
    if (p <= q) {
        for (int i = 0; i < p; ++i)
            edges.emplace_back(vertex_id(i, 0, q), vertex_id(p - 1, q - p + i, q));
        for (int j = 0; j < p; ++j)
            edges.emplace_back(vertex_id(0, j, q), vertex_id(j, q - 1, q));
        for (int j = p; j < q; ++j)
            edges.emplace_back(vertex_id(0, j, q), vertex_id(p - 1, j - p, q));
    } else {
        for (int i = 0; i < q; ++i)
            edges.emplace_back(vertex_id(i, 0, q), vertex_id(0, q - 1 - i, q));
        for (int i = 0; i < q; ++i)
            edges.emplace_back(vertex_id(p - 1 - i, q - 1, q), vertex_id(p - 1, i, q));
        for (int i = 0; i + q < p; ++i)
            edges.emplace_back(vertex_id(i, q - 1, q), vertex_id(i + q, 0, q));
    }
    Graph g = make_graph(p * q, edges);
    attach_box_labels(g, p, q);
    return g;
}

SubgroupSpec gen_torus_group(const Vec& v1, const Vec& v2) {
    require(v1.size() == 2 && v2.size() == 2, "generalised torus vectors must be 2-dimensional");
    return make_subgroup(2, {LatticeAut::translation(v1), LatticeAut::translation(v2)});
}

SubgroupSpec torus_group(int p, int q, int delta) {
    require(p >= 3 && q >= 3, "torus requires p, q >= 3");
    require(0 <= delta && 2 * delta <= p, "torus requires 0 <= delta <= p/2");
    return gen_torus_group({p, 0}, {delta, q});
}

SubgroupSpec klein_group(int p, int q, int kind) {
    require(p >= 3 && q >= 3, "klein requires p, q >= 3");
    require(kind == 0 || kind == 1 || kind == 2, "klein kind must be 0, 1 or 2");
    if (kind == 0 || kind == 2) require(p % 2 == 0, "klein kinds 0 and 2 require even p");
    if (kind == 1) require(p % 2 == 1, "klein kind 1 requires odd p");
    return procedure_i(p, q, kind == 2 ? ProcICorner::LatticePoint : ProcICorner::HalfInteger);
}

SubgroupSpec strange_group(int p, int q) {
    require(p >= 3 && q >= 3, "strange graph requires p, q >= 3");
    return p <= q ? procedure_ii(q, p, ProcIIDiagonal::Main)
                  : procedure_ii(q, p, ProcIIDiagonal::Anti);
}

SubgroupSpec procedure_i(int k, int l, ProcICorner corner) {
    require(k >= 1 && l >= 1, "procedure I requires k, l >= 1");
    long long c = (corner == ProcICorner::LatticePoint) ? k : k - 1;
    LatticeAut glide;
    glide.sigma = perm_from_images({-1, 2}); // x -> -x, y -> y
    glide.trans = {c, l};
    return make_subgroup(2, {glide, LatticeAut::translation({k, 0})});
}

SubgroupSpec procedure_ii(int k, int l, ProcIIDiagonal diagonal) {
    require(k >= 1 && l >= 1, "procedure II requires k, l >= 1");
    LatticeAut glide;
    Vec t;
    if (diagonal == ProcIIDiagonal::Main) {
        glide.sigma = perm_from_images({2, 1}); // swap x and y
        glide.trans = {l, k - l};
        t = {l, -l};
    } else {
        glide.sigma = perm_from_images({-2, -1}); // (x,y) -> (-y,-x)
        glide.trans = {-1, k - 1};
        t = {l, l};
    }
    return make_subgroup(2, {glide, LatticeAut::translation(t)});
}

} // namespace latloc
