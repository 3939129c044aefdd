#include "latloc/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

namespace latloc {

bool Graph::has_edge(int u, int v) const {
    const auto& row = adj[u];
    return std::binary_search(row.begin(), row.end(), v);
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (const auto& row : adj) twice += static_cast<long long>(row.size());
    return twice / 2;
}

bool Graph::is_regular(int k) const {
    for (const auto& row : adj)
        if (static_cast<int>(row.size()) != k) return false;
    return true;
}

std::vector<int> Graph::common_neighbors(int u, int v) const {
    std::vector<int> out;
    std::set_intersection(adj[u].begin(), adj[u].end(), adj[v].begin(), adj[v].end(),
                          std::back_inserter(out));
    return out;
}

std::string Graph::label(int v) const {
    if (v < static_cast<int>(labels.size()) && !labels[v].empty()) return labels[v];
    return std::to_string(v);
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error("BAD_PARAMS", "edge endpoint out of range: " + std::to_string(u) +
                                          " " + std::to_string(v));
        if (u == v)
            throw Error("BAD_PARAMS", "loop at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& row : g.adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return g;
}

Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int declared = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank line
        if (first[0] == '#') {
            std::string word = first.size() > 1 ? first.substr(1) : "";
            if (word.empty()) ls >> word;
            if (word == "vertices") {
                if (!(ls >> declared) || declared < 0)
                    throw Error("PARSE_ERROR",
                                "bad vertex-count header on line " + std::to_string(line_no));
            }
            continue;
        }
        int u = 0, v = 0;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw Error("PARSE_ERROR", "expected vertex id on line " + std::to_string(line_no));
        }
        if (!(ls >> v))
            throw Error("PARSE_ERROR", "expected two vertex ids on line " + std::to_string(line_no));
        if (u < 0 || v < 0)
            throw Error("PARSE_ERROR", "negative vertex id on line " + std::to_string(line_no));
        edges.emplace_back(u, v);
    }
    int max_id = -1;
    for (auto [u, v] : edges) max_id = std::max({max_id, u, v});
    if (declared >= 0 && max_id >= declared)
        throw Error("PARSE_ERROR", "edge endpoint " + std::to_string(max_id) +
                                       " exceeds declared vertex count " + std::to_string(declared));
    return make_graph(declared >= 0 ? declared : max_id + 1, edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "# vertices " << g.n << "\n";
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) out << u << " " << v << "\n";
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.n, kInfiniteDistance);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.adj[u])
            if (dist[v] == kInfiniteDistance) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

int distance(const Graph& g, int u, int v) {
    if (u == v) return 0;
    std::vector<int> dist(g.n, kInfiniteDistance);
    std::deque<int> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : g.adj[x]) {
            if (dist[y] != kInfiniteDistance) continue;
            dist[y] = dist[x] + 1;
            if (y == v) return dist[y];
            queue.push_back(y);
        }
    }
    return kInfiniteDistance;
}

RootedBall extract_ball(const Graph& g, int v, int r, BallMode mode) {
    if (v < 0 || v >= g.n) throw Error("BAD_PARAMS", "ball root out of range");
    if (r < 0) throw Error("BAD_PARAMS", "ball radius must be non-negative");

    std::vector<int> dist(g.n, kInfiniteDistance);
    std::deque<int> queue{v};
    dist[v] = 0;
    std::vector<int> members{v};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[u] == r) continue;
        for (int w : g.adj[u])
            if (dist[w] == kInfiniteDistance) {
                dist[w] = dist[u] + 1;
                members.push_back(w);
                queue.push_back(w);
            }
    }
    std::sort(members.begin(), members.end(),
              [&](int a, int b) { return std::make_pair(dist[a], a) < std::make_pair(dist[b], b); });

    RootedBall ball;
    ball.radius = r;
    ball.mode = mode;
    ball.original = members;
    ball.depth.reserve(members.size());
    std::vector<int> index(g.n, -1);
    for (int i = 0; i < static_cast<int>(members.size()); ++i) {
        index[members[i]] = i;
        ball.depth.push_back(dist[members[i]]);
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(members.size()); ++i) {
        int u = members[i];
        for (int w : g.adj[u]) {
            int j = index[w];
            if (j <= i) continue;  // keep each edge once; skips non-members (j == -1)
            if (mode == BallMode::Minus && dist[u] == r && dist[w] == r) continue;
            edges.emplace_back(i, j);
        }
    }
    ball.graph = make_graph(static_cast<int>(members.size()), edges);
    if (!g.labels.empty()) {
        ball.graph.labels.reserve(members.size());
        for (int u : members) ball.graph.labels.push_back(g.label(u));
    }
    return ball;
}

BipartiteCheck is_bipartite(const Graph& g) {
    BipartiteCheck result;
    result.colour.assign(g.n, -1);
    std::vector<int> parent(g.n, -1);
    for (int start = 0; start < g.n; ++start) {
        if (result.colour[start] != -1) continue;
        result.colour[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.adj[u]) {
                if (result.colour[w] == -1) {
                    result.colour[w] = result.colour[u] ^ 1;
                    parent[w] = u;
                    queue.push_back(w);
                    continue;
                }
                if (result.colour[w] != result.colour[u]) continue;
                // Same colour on an edge: stitch the two tree paths into an odd cycle.
                result.bipartite = false;
                std::vector<int> up_u{u}, up_w{w};
                std::vector<char> on_u_path(g.n, 0);
                for (int x = u; x != -1; x = parent[x]) on_u_path[x] = 1;
                int meet = w;
                while (!on_u_path[meet]) {
                    up_w.push_back(parent[meet]);
                    meet = parent[meet];
                }
                while (up_u.back() != meet) up_u.push_back(parent[up_u.back()]);
                // Closed walk: meet -> ... -> u, then w -> ... -> child of meet.
                std::vector<int> cycle(up_u.rbegin(), up_u.rend());
                for (int i = 0; i + 1 < static_cast<int>(up_w.size()); ++i) cycle.push_back(up_w[i]);
                result.odd_cycle = cycle;
                result.colour.clear();
                return result;
            }
        }
    }
    return result;
}

int girth(const Graph& g) {
    int best = kInfiniteDistance;
    std::vector<int> dist(g.n);
    for (int s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), kInfiniteDistance);
        std::vector<int> parent(g.n, -1);
        std::deque<int> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (best != kInfiniteDistance && 2 * dist[u] >= best) break;
            for (int w : g.adj[u]) {
                if (dist[w] == kInfiniteDistance) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best == kInfiniteDistance || len < best) best = len;
                }
            }
        }
        if (best == 3) break;
    }
    return best;
}

Cycle4 canonical_4cycle(const Cycle4& c) {
    Cycle4 best = c;
    for (int rev = 0; rev < 2; ++rev) {
        Cycle4 seq = c;
        if (rev) std::reverse(seq.begin(), seq.end());
        for (int rot = 0; rot < 4; ++rot) {
            Cycle4 cand{seq[rot % 4], seq[(rot + 1) % 4], seq[(rot + 2) % 4], seq[(rot + 3) % 4]};
            if (cand < best) best = cand;
        }
    }
    return best;
}

std::vector<Cycle4> enumerate_4cycles(const Graph& g) {
    // Every 4-cycle u-x-v-y has {u,v} as a diagonal, so it appears as a pair of
    // common neighbours of a vertex pair; canonicalising removes the double count.
    std::vector<Cycle4> found;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            auto common = g.common_neighbors(u, v);
            for (size_t i = 0; i < common.size(); ++i)
                for (size_t j = i + 1; j < common.size(); ++j)
                    found.push_back(canonical_4cycle({u, common[i], v, common[j]}));
        }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

namespace {

// Shared backtracking core for rooted and plain isomorphism. Vertices of `a` are
// assigned along `order`; each candidate must match the already-mapped part of its
// neighbourhood exactly (tracked by cnt_b = number of mapped images adjacent to w).
struct IsoSearch {
    const Graph& ga;
    const Graph& gb;
    const std::vector<int>& order;
    std::vector<int> mapping;      // a-vertex -> b-vertex or -1
    std::vector<char> used;        // b-vertex taken
    std::vector<int> cnt_b;        // per b-vertex: mapped images adjacent to it
    std::vector<int> mapped_deg;   // per a-vertex: neighbours earlier in `order`
    std::vector<int> first_nbr;    // per a-vertex: earliest-mapped neighbour or -1
    // Optional per-vertex invariant (depth in a ball); empty means unused.
    const std::vector<int>* inv_a = nullptr;
    const std::vector<int>* inv_b = nullptr;
    // Optional pairwise refinement for selected vertices (common-neighbour counts
    // between depth-1 vertices of a ball).
    std::vector<int> refine_idx_a, refine_idx_b;  // vertex -> slot or -1
    std::vector<std::vector<int>> refine_a, refine_b;

    IsoSearch(const Graph& ga_, const Graph& gb_, const std::vector<int>& order_)
        : ga(ga_), gb(gb_), order(order_) {
        mapping.assign(ga.n, -1);
        used.assign(gb.n, 0);
        cnt_b.assign(gb.n, 0);
        mapped_deg.assign(ga.n, 0);
        first_nbr.assign(ga.n, -1);
        std::vector<int> pos(ga.n, -1);
        for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
        for (int u : order) {
            int best = -1;
            for (int w : ga.adj[u])
                if (pos[w] < pos[u]) {
                    ++mapped_deg[u];
                    if (best == -1 || pos[w] < pos[best]) best = w;
                }
            first_nbr[u] = best;
        }
    }

    bool feasible(int u, int w) const {
        if (used[w]) return false;
        if (ga.degree(u) != gb.degree(w)) return false;
        if (inv_a && (*inv_a)[u] != (*inv_b)[w]) return false;
        if (cnt_b[w] != mapped_deg[u]) return false;
        for (int x : ga.adj[u]) {
            int img = mapping[x];
            if (img != -1 && !gb.has_edge(img, w)) return false;
        }
        if (!refine_idx_a.empty() && refine_idx_a[u] != -1) {
            int ia = refine_idx_a[u];
            int ib = refine_idx_b[w];
            if (ib == -1) return false;
            for (int x : order) {
                if (x == u) break;
                int sx = refine_idx_a[x];
                if (sx == -1 || mapping[x] == -1) continue;
                if (refine_a[ia][sx] != refine_b[ib][refine_idx_b[mapping[x]]]) return false;
            }
        }
        return true;
    }

    void assign(int u, int w) {
        mapping[u] = w;
        used[w] = 1;
        for (int y : gb.adj[w]) ++cnt_b[y];
    }

    void unassign(int u, int w) {
        mapping[u] = -1;
        used[w] = 0;
        for (int y : gb.adj[w]) --cnt_b[y];
    }

    bool extend(size_t i) {
        if (i == order.size()) return true;
        int u = order[i];
        if (first_nbr[u] != -1) {
            int anchor = mapping[first_nbr[u]];
            for (int w : gb.adj[anchor]) {
                if (!feasible(u, w)) continue;
                assign(u, w);
                if (extend(i + 1)) return true;
                unassign(u, w);
            }
        } else {
            for (int w = 0; w < gb.n; ++w) {
                if (!feasible(u, w)) continue;
                assign(u, w);
                if (extend(i + 1)) return true;
                unassign(u, w);
            }
        }
        return false;
    }
};

std::vector<std::vector<int>> pairwise_common_counts(const Graph& g, const std::vector<int>& verts) {
    std::vector<std::vector<int>> table(verts.size(), std::vector<int>(verts.size(), 0));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            int c = static_cast<int>(g.common_neighbors(verts[i], verts[j]).size());
            table[i][j] = table[j][i] = c;
        }
    return table;
}

}  // namespace

RootedIso rooted_isomorphic(const RootedBall& a, const RootedBall& b) {
    if (a.mode != b.mode)
        throw Error("BAD_PARAMS", "cannot compare balls of different modes");
    RootedIso out;
    if (a.graph.n != b.graph.n || a.graph.edge_count() != b.graph.edge_count()) return out;

    // Depth and (depth, degree) histograms must agree.
    int max_depth = 0;
    for (int d : a.depth) max_depth = std::max(max_depth, d);
    std::vector<std::pair<int, int>> prof_a, prof_b;
    for (int i = 0; i < a.graph.n; ++i) prof_a.emplace_back(a.depth[i], a.graph.degree(i));
    for (int i = 0; i < b.graph.n; ++i) prof_b.emplace_back(b.depth[i], b.graph.degree(i));
    std::sort(prof_a.begin(), prof_a.end());
    std::sort(prof_b.begin(), prof_b.end());
    if (prof_a != prof_b) return out;

    std::vector<int> order(a.graph.n);
    for (int i = 0; i < a.graph.n; ++i) order[i] = i;  // already sorted by (depth, id)

    IsoSearch search(a.graph, b.graph, order);
    search.inv_a = &a.depth;
    search.inv_b = &b.depth;

    std::vector<int> ones_a, ones_b;
    for (int i = 0; i < a.graph.n; ++i)
        if (a.depth[i] == 1) ones_a.push_back(i);
    for (int i = 0; i < b.graph.n; ++i)
        if (b.depth[i] == 1) ones_b.push_back(i);
    search.refine_idx_a.assign(a.graph.n, -1);
    search.refine_idx_b.assign(b.graph.n, -1);
    for (size_t i = 0; i < ones_a.size(); ++i) search.refine_idx_a[ones_a[i]] = static_cast<int>(i);
    for (size_t i = 0; i < ones_b.size(); ++i) search.refine_idx_b[ones_b[i]] = static_cast<int>(i);
    search.refine_a = pairwise_common_counts(a.graph, ones_a);
    search.refine_b = pairwise_common_counts(b.graph, ones_b);

    search.assign(0, 0);  // roots correspond
    if (a.graph.degree(0) != b.graph.degree(0)) return out;
    if (search.extend(1)) {
        out.isomorphic = true;
        out.mapping = search.mapping;
    }
    return out;
}

std::optional<std::vector<int>> graph_isomorphism(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return std::nullopt;
    std::vector<int> deg_a, deg_b;
    for (int i = 0; i < a.n; ++i) deg_a.push_back(a.degree(i));
    for (int i = 0; i < b.n; ++i) deg_b.push_back(b.degree(i));
    std::sort(deg_a.begin(), deg_a.end());
    std::sort(deg_b.begin(), deg_b.end());
    if (deg_a != deg_b) return std::nullopt;
    if (a.n == 0) return std::vector<int>{};

    // BFS-forest order keeps every non-root vertex anchored to a mapped neighbour.
    std::vector<int> order;
    std::vector<char> seen(a.n, 0);
    for (int s = 0; s < a.n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            order.push_back(u);
            for (int w : a.adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
    }

    IsoSearch search(a, b, order);
    if (search.extend(0)) return search.mapping;
    return std::nullopt;
}

}  // namespace latloc
