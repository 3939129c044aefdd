// Wheel-property detection and surface gluing.  The family search is a
// backtracking selection over all 4-cycles with unit propagation on two
// counters (cycles per vertex, cycles per edge); the wheel figure at a vertex
// is checked the moment its four cycles are fixed.  Gluing is combinatorial:
// faces are the family cycles, edges are identified in pairs, and
// orientability falls out of propagating face orientations across shared
// edges.

#include "latloc/wheel.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <utility>

#include "latloc/util.hpp"

namespace latloc {

namespace {

constexpr char kUndecided = 0;
constexpr char kIn = 1;
constexpr char kOut = 2;

// 0 is the centre, 1..4 the side midpoints, 5..8 the corners; the rim is the
// 8-cycle 1,5,2,6,3,7,4,8.
Graph wheel_figure() {
    return make_graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                          {1, 5}, {5, 2}, {2, 6}, {6, 3},
                          {3, 7}, {7, 4}, {4, 8}, {8, 1}});
}

// Union of the given cycles as a standalone graph (cycle edges only, not the
// induced subgraph), compared against the nine-vertex figure.
bool union_is_wheel(const std::vector<Cycle4>& cycles, const Graph& figure) {
    std::map<int, int> local;
    auto id_of = [&](int x) {
        auto it = local.find(x);
        if (it == local.end()) it = local.emplace(x, static_cast<int>(local.size())).first;
        return it->second;
    };
    std::set<std::pair<int, int>> edges;
    for (const Cycle4& c : cycles)
        for (int k = 0; k < 4; ++k) {
            int a = id_of(c[k]);
            int b = id_of(c[(k + 1) % 4]);
            edges.insert(std::minmax(a, b));
        }
    if (local.size() != 9 || edges.size() != 12) return false;
    Graph u = make_graph(9, {edges.begin(), edges.end()});
    return graph_isomorphism(u, figure).has_value();
}

// Backtracking selection of a subfamily with every vertex in exactly four
// cycles and every edge in exactly two.  Decisions (chosen or propagated)
// count against the budget.
struct FamilySearch {
    const Graph& g;
    Graph figure = wheel_figure();
    std::vector<Cycle4> cands;
    int ne = 0;
    std::vector<std::array<int, 4>> sides;    // candidate -> its four edge ids
    std::vector<std::vector<int>> at_vertex;  // vertex -> candidate ids
    std::vector<std::vector<int>> at_edge;    // edge id -> candidate ids
    std::vector<char> state;
    std::vector<int> v_in, v_un, e_in, e_un;
    std::vector<int> trail;
    long long budget = 0;
    long long nodes = 0;

    FamilySearch(const Graph& graph, std::vector<Cycle4> candidates, long long node_budget)
        : g(graph), cands(std::move(candidates)), budget(node_budget) {
        std::map<std::pair<int, int>, int> edge_id;
        for (int u = 0; u < g.n; ++u)
            for (int w : g.adj[u])
                if (u < w) edge_id.emplace(std::make_pair(u, w), ne++);
        sides.resize(cands.size());
        at_vertex.assign(g.n, {});
        at_edge.assign(ne, {});
        for (std::size_t i = 0; i < cands.size(); ++i) {
            const Cycle4& c = cands[i];
            for (int k = 0; k < 4; ++k) {
                at_vertex[c[k]].push_back(static_cast<int>(i));
                auto it = edge_id.find(std::minmax(c[k], c[(k + 1) % 4]));
                if (it == edge_id.end()) throw Error("INTERNAL", "4-cycle side is not a graph edge");
                sides[i][k] = it->second;
                at_edge[it->second].push_back(static_cast<int>(i));
            }
        }
        state.assign(cands.size(), kUndecided);
        v_in.assign(g.n, 0);
        e_in.assign(ne, 0);
        v_un.resize(g.n);
        e_un.resize(ne);
        for (int v = 0; v < g.n; ++v) v_un[v] = static_cast<int>(at_vertex[v].size());
        for (int e = 0; e < ne; ++e) e_un[e] = static_cast<int>(at_edge[e].size());
    }

    bool feasible_start() const {
        for (int v = 0; v < g.n; ++v)
            if (v_un[v] < 4) return false;
        for (int e = 0; e < ne; ++e)
            if (e_un[e] < 2) return false;
        return true;
    }

    // Applies every queued decision plus its consequences; false on
    // contradiction (counter over target, target unreachable, or a completed
    // vertex whose four cycles do not form the wheel figure).
    bool propagate(std::vector<std::pair<int, char>>& queue) {
        while (!queue.empty()) {
            auto [c, want] = queue.back();
            queue.pop_back();
            if (state[c] != kUndecided) {
                if (state[c] != want) return false;
                continue;
            }
            if (++nodes > budget)
                throw Error("INDETERMINATE", "wheel family search exceeded its node budget");
            state[c] = want;
            trail.push_back(c);
            bool in = want == kIn;
            for (int v : cands[c]) {
                --v_un[v];
                if (in) ++v_in[v];
                if (v_in[v] > 4 || v_in[v] + v_un[v] < 4) return false;
                if (in && v_in[v] == 4) {
                    std::vector<Cycle4> four;
                    for (int x : at_vertex[v]) {
                        if (state[x] == kIn) four.push_back(cands[x]);
                        if (state[x] == kUndecided) queue.emplace_back(x, kOut);
                    }
                    if (!union_is_wheel(four, figure)) return false;
                }
                if (v_in[v] + v_un[v] == 4 && v_un[v] > 0)
                    for (int x : at_vertex[v])
                        if (state[x] == kUndecided) queue.emplace_back(x, kIn);
            }
            for (int e : sides[c]) {
                --e_un[e];
                if (in) ++e_in[e];
                if (e_in[e] > 2 || e_in[e] + e_un[e] < 2) return false;
                if (in && e_in[e] == 2) {
                    for (int x : at_edge[e])
                        if (state[x] == kUndecided) queue.emplace_back(x, kOut);
                }
                if (e_in[e] + e_un[e] == 2 && e_un[e] > 0)
                    for (int x : at_edge[e])
                        if (state[x] == kUndecided) queue.emplace_back(x, kIn);
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail.size() > mark) {
            int c = trail.back();
            trail.pop_back();
            bool in = state[c] == kIn;
            state[c] = kUndecided;
            for (int v : cands[c]) {
                ++v_un[v];
                if (in) --v_in[v];
            }
            for (int e : sides[c]) {
                ++e_un[e];
                if (in) --e_in[e];
            }
        }
    }

    // Branch on the most constrained unsatisfied counter.  When none is left
    // every vertex sits in four chosen cycles and every edge in two, and the
    // figure checks already ran, so the selection is a wheel family.
    bool dfs() {
        int pick = -1;
        int best = std::numeric_limits<int>::max();
        for (int e = 0; e < ne; ++e)
            if (e_in[e] < 2 && e_un[e] < best) {
                best = e_un[e];
                pick = at_edge[e].empty() ? -1 : first_undecided(at_edge[e]);
                if (pick == -1) return false;  // unreachable target
            }
        if (pick == -1)
            for (int v = 0; v < g.n; ++v)
                if (v_in[v] < 4 && v_un[v] < best) {
                    best = v_un[v];
                    pick = first_undecided(at_vertex[v]);
                    if (pick == -1) return false;
                }
        if (pick == -1) return true;

        std::size_t mark = trail.size();
        std::vector<std::pair<int, char>> queue;
        for (char want : {kIn, kOut}) {
            queue.assign(1, {pick, want});
            if (propagate(queue) && dfs()) return true;
            undo(mark);
        }
        return false;
    }

    int first_undecided(const std::vector<int>& list) const {
        for (int x : list)
            if (state[x] == kUndecided) return x;
        return -1;
    }

    std::vector<Cycle4> chosen() const {
        std::vector<Cycle4> family;
        for (std::size_t i = 0; i < cands.size(); ++i)
            if (state[i] == kIn) family.push_back(cands[i]);
        return family;
    }
};

WheelCertificate make_certificate(const Graph& g, std::vector<Cycle4> family,
                                  const Graph& figure) {
    std::sort(family.begin(), family.end());
    WheelCertificate cert;
    cert.family = std::move(family);
    cert.per_vertex_count.assign(g.n, 0);
    std::vector<std::vector<Cycle4>> at(g.n);
    for (const Cycle4& c : cert.family)
        for (int v : c) {
            ++cert.per_vertex_count[v];
            at[v].push_back(c);
        }
    cert.wheel_check.assign(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        cert.wheel_check[v] = cert.per_vertex_count[v] == 4 && union_is_wheel(at[v], figure);
    return cert;
}

}  // namespace

std::optional<WheelCertificate> find_wheel_family(const Graph& g, long long budget) {
    if (g.n == 0 || !g.is_regular(4)) return std::nullopt;
    std::vector<Cycle4> all = enumerate_4cycles(g);
    Graph figure = wheel_figure();

    std::vector<int> vc(g.n, 0);
    std::map<std::pair<int, int>, int> ec;
    for (int u = 0; u < g.n; ++u)
        for (int w : g.adj[u])
            if (u < w) ec.emplace(std::make_pair(u, w), 0);
    for (const Cycle4& c : all)
        for (int k = 0; k < 4; ++k) {
            ++vc[c[k]];
            ++ec.at(std::minmax(c[k], c[(k + 1) % 4]));
        }

    // A family only ever shrinks these counts, so a shortfall is already final.
    for (int v = 0; v < g.n; ++v)
        if (vc[v] < 4) return std::nullopt;
    for (const auto& [e, count] : ec)
        if (count < 2) return std::nullopt;

    // All 4-cycles first: when every vertex already sits in exactly four, the
    // full set is the only candidate family.
    if (*std::max_element(vc.begin(), vc.end()) == 4) {
        for (const auto& [e, count] : ec)
            if (count != 2) return std::nullopt;
        std::vector<std::vector<Cycle4>> at(g.n);
        for (const Cycle4& c : all)
            for (int v : c) at[v].push_back(c);
        for (int v = 0; v < g.n; ++v)
            if (!union_is_wheel(at[v], figure)) return std::nullopt;
        return make_certificate(g, std::move(all), figure);
    }

    FamilySearch search(g, std::move(all), budget);
    if (!search.feasible_start()) return std::nullopt;
    if (!search.dfs()) return std::nullopt;
    return make_certificate(g, search.chosen(), figure);
}

std::string to_string(SurfaceClass c) {
    switch (c) {
        case SurfaceClass::Torus: return "TORUS";
        case SurfaceClass::KleinBottle: return "KLEIN_BOTTLE";
        case SurfaceClass::Other: return "OTHER";
    }
    return "OTHER";
}

SurfaceReport glue_surface(const WheelCertificate& cert) {
    if (cert.family.empty()) throw Error("MALFORMED_CERTIFICATE", "empty face family");

    struct Side {
        int face;
        bool forward;  // traversed min(u,v) -> max(u,v)
    };
    std::set<int> verts;
    std::map<std::pair<int, int>, std::vector<Side>> slots;
    for (std::size_t i = 0; i < cert.family.size(); ++i) {
        const Cycle4& c = cert.family[i];
        if (std::set<int>(c.begin(), c.end()).size() != 4)
            throw Error("MALFORMED_CERTIFICATE", "family cycle with a repeated vertex");
        for (int k = 0; k < 4; ++k) {
            int u = c[k];
            int v = c[(k + 1) % 4];
            verts.insert(u);
            slots[std::minmax(u, v)].push_back({static_cast<int>(i), u < v});
        }
    }
    for (const auto& [e, inc] : slots)
        if (inc.size() != 2)
            throw Error("MALFORMED_CERTIFICATE",
                        "edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                            " lies in " + std::to_string(inc.size()) + " family cycles, expected 2");

    SurfaceReport rep;
    rep.v = static_cast<long long>(verts.size());
    rep.e = static_cast<long long>(slots.size());
    rep.f = static_cast<long long>(cert.family.size());
    rep.euler = rep.v - rep.e + rep.f;

    // A consistent assignment of face orientations exists iff, across every
    // shared edge, equally-oriented faces traverse it in opposite directions:
    // orient[b] = orient[a] xor forward_a xor forward_b xor 1.
    int nf = static_cast<int>(cert.family.size());
    std::vector<std::vector<std::pair<int, int>>> dual(nf);
    for (const auto& [e, inc] : slots) {
        int parity = 1 ^ static_cast<int>(inc[0].forward) ^ static_cast<int>(inc[1].forward);
        dual[inc[0].face].emplace_back(inc[1].face, parity);
        dual[inc[1].face].emplace_back(inc[0].face, parity);
    }
    std::vector<int> orient(nf, -1);
    bool orientable = true;
    for (int s = 0; s < nf && orientable; ++s) {
        if (orient[s] != -1) continue;
        orient[s] = 0;
        std::vector<int> stack = {s};
        while (!stack.empty() && orientable) {
            int x = stack.back();
            stack.pop_back();
            for (auto [y, parity] : dual[x]) {
                int want = orient[x] ^ parity;
                if (orient[y] == -1) {
                    orient[y] = want;
                    stack.push_back(y);
                } else if (orient[y] != want) {
                    orientable = false;
                    break;
                }
            }
        }
    }
    rep.orientable = orientable;
    rep.classification = rep.euler != 0 ? SurfaceClass::Other
                         : orientable   ? SurfaceClass::Torus
                                        : SurfaceClass::KleinBottle;
    return rep;
}

bool vertex_rotation_check(const WheelCertificate& cert, const Graph& g) {
    std::vector<std::vector<int>> at(g.n);
    for (std::size_t i = 0; i < cert.family.size(); ++i)
        for (int v : cert.family[i]) at[v].push_back(static_cast<int>(i));

    for (int v = 0; v < g.n; ++v) {
        if (at[v].size() != 4) return false;
        // Link of v: one node per incident edge, one link edge per face
        // joining the face's two sides at v.  Locally a disc iff every node
        // has link degree two and the link is a single cycle.
        std::map<int, int> slot;
        for (int w : g.adj[v]) slot.emplace(w, static_cast<int>(slot.size()));
        int deg = static_cast<int>(slot.size());
        std::vector<std::vector<int>> link(deg);
        for (int i : at[v]) {
            const Cycle4& c = cert.family[i];
            int pos = static_cast<int>(std::find(c.begin(), c.end(), v) - c.begin());
            auto ita = slot.find(c[(pos + 1) % 4]);
            auto itb = slot.find(c[(pos + 3) % 4]);
            if (ita == slot.end() || itb == slot.end() || ita == itb) return false;
            link[ita->second].push_back(itb->second);
            link[itb->second].push_back(ita->second);
        }
        for (int s = 0; s < deg; ++s)
            if (link[s].size() != 2) return false;
        std::vector<char> seen(deg, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : link[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    stack.push_back(y);
                }
        }
        if (reached != deg) return false;
    }
    return true;
}

}  // namespace latloc
