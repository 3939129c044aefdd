#include "latloc/local_probe.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>

#include "latloc/util.hpp"

namespace latloc {

namespace {

void enumerate_l1_ball(int d, int r, std::vector<int>& point,
                       std::vector<std::vector<int>>& out) {
    if (static_cast<int>(point.size()) == d) {
        out.push_back(point);
        return;
    }
    int used = 0;
    for (int x : point) used += std::abs(x);
    for (int x = -(r - used); x <= r - used; ++x) {
        point.push_back(x);
        enumerate_l1_ball(d, r, point, out);
        point.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> lattice_ball_coordinates(int d, int r) {
    if (d <= 0 || r < 0) throw Error("BAD_PARAMS", "lattice ball needs d >= 1, r >= 0");
    std::vector<std::vector<int>> points;
    std::vector<int> scratch;
    enumerate_l1_ball(d, r, scratch, points);
    std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
        int na = 0, nb = 0;
        for (int x : a) na += std::abs(x);
        for (int x : b) nb += std::abs(x);
        if (na != nb) return na < nb;
        return a < b;
    });
    return points;
}

RootedBall lattice_ball(int d, int r, BallMode mode) {
    auto points = lattice_ball_coordinates(d, r);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < points.size(); ++i) index[points[i]] = static_cast<int>(i);

    RootedBall ball;
    ball.radius = r;
    ball.mode = mode;  // the lattice ball has no boundary-boundary edges either way
    ball.original.resize(points.size());
    ball.depth.reserve(points.size());
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < points.size(); ++i) {
        ball.original[i] = static_cast<int>(i);
        int norm = 0;
        for (int x : points[i]) norm += std::abs(x);
        ball.depth.push_back(norm);
        for (int axis = 0; axis < d; ++axis)
            for (int s : {1, -1}) {
                std::vector<int> nb = points[i];
                nb[axis] += s;
                auto it = index.find(nb);
                if (it != index.end() && it->second > static_cast<int>(i))
                    edges.emplace_back(static_cast<int>(i), it->second);
            }
    }
    ball.graph = make_graph(static_cast<int>(points.size()), edges);
    return ball;
}

int OppositePartition::partner(int vertex) const {
    for (const auto& [a, b] : pairs) {
        if (a == vertex) return b;
        if (b == vertex) return a;
    }
    return -1;
}

namespace {

// All perfect matchings of the neighbour set under the "exactly one common
// neighbour" relation, validated against the cross-pair conditions.
void collect_matchings(const std::vector<int>& nbrs,
                       const std::vector<std::vector<char>>& paired_ok,
                       std::vector<char>& used, std::vector<std::pair<int, int>>& current,
                       std::vector<std::vector<std::pair<int, int>>>& found) {
    size_t first = 0;
    while (first < used.size() && used[first]) ++first;
    if (first == used.size()) {
        found.push_back(current);
        return;
    }
    used[first] = 1;
    for (size_t j = first + 1; j < used.size(); ++j) {
        if (used[j] || !paired_ok[first][j]) continue;
        used[j] = 1;
        current.emplace_back(nbrs[first], nbrs[j]);
        collect_matchings(nbrs, paired_ok, used, current, found);
        current.pop_back();
        used[j] = 0;
    }
    used[first] = 0;
}

}  // namespace

std::optional<OppositePartition> opposite_partition(const Graph& g, int v, int d) {
    const std::vector<int>& nbrs = g.adj[v];
    if (static_cast<int>(nbrs.size()) != 2 * d)
        throw Error("DEGREE_MISMATCH", "vertex " + std::to_string(v) + " has degree " +
                                           std::to_string(nbrs.size()) + ", expected " +
                                           std::to_string(2 * d));
    int n = 2 * d;
    std::vector<std::vector<int>> common(n, std::vector<int>(n, 0));
    std::vector<std::vector<int>> second(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto cn = g.common_neighbors(nbrs[i], nbrs[j]);
            common[i][j] = common[j][i] = static_cast<int>(cn.size());
            if (cn.size() == 2) {
                // v is adjacent to both, so it is always one of the two
                second[i][j] = second[j][i] = (cn[0] == v) ? cn[1] : cn[0];
            }
        }

    std::vector<std::vector<char>> pair_ok(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pair_ok[i][j] = (common[i][j] == 1);

    std::vector<std::vector<std::pair<int, int>>> matchings;
    std::vector<char> used(n, 0);
    std::vector<std::pair<int, int>> current;
    collect_matchings(nbrs, pair_ok, used, current, matchings);

    std::vector<OppositePartition> valid;
    for (const auto& m : matchings) {
        std::vector<int> slot(n, -1);  // neighbour index -> pair number
        auto idx_of = [&](int vert) {
            return static_cast<int>(std::find(nbrs.begin(), nbrs.end(), vert) - nbrs.begin());
        };
        for (size_t p = 0; p < m.size(); ++p) {
            slot[idx_of(m[p].first)] = static_cast<int>(p);
            slot[idx_of(m[p].second)] = static_cast<int>(p);
        }
        bool ok = true;
        std::set<int> corners;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                if (slot[i] == slot[j]) continue;
                if (common[i][j] != 2 || second[i][j] == -1) {
                    ok = false;
                    break;
                }
                if (!corners.insert(second[i][j]).second) ok = false;  // corners must differ
            }
        if (ok) valid.push_back(OppositePartition{m});
        if (valid.size() > 1) return std::nullopt;
    }
    if (valid.size() != 1) return std::nullopt;
    return valid[0];
}

namespace {

LocalCheck run_per_vertex(const Graph& g, int threads,
                          const std::function<bool(int)>& vertex_ok) {
    std::vector<char> ok(g.n, 1);
    parallel_for(g.n, threads, [&](int v) { ok[v] = vertex_ok(v) ? 1 : 0; });
    LocalCheck out;
    for (int v = 0; v < g.n; ++v)
        if (!ok[v]) {
            out.holds = false;
            out.failing_vertex = v;
            break;
        }
    return out;
}

LocalCheck locality_check(const Graph& g, int d, int r, BallMode mode, int threads) {
    if (d <= 0 || r < 0) throw Error("BAD_PARAMS", "locality check needs d >= 1, r >= 0");
    RootedBall reference = lattice_ball(d, r, mode);
    return run_per_vertex(g, threads, [&](int v) {
        if (r >= 1 && g.degree(v) != 2 * d) return false;
        RootedBall ball = extract_ball(g, v, r, mode);
        return rooted_isomorphic(ball, reference).isomorphic;
    });
}

}  // namespace

LocalCheck is_r_locally(const Graph& g, int d, int r, int threads) {
    return locality_check(g, d, r, BallMode::Full, threads);
}

LocalCheck is_weakly_r_locally(const Graph& g, int d, int r, int threads) {
    return locality_check(g, d, r, BallMode::Minus, threads);
}

namespace {

bool vertex_locally_grid(const Graph& g, int v) {
    if (g.degree(v) != 4) return false;
    const auto& nb = g.adj[v];
    // Fix w1 = nb[0]; cyclic rotations and reflections of a valid ordering are
    // valid, so trying the 6 arrangements of the rest covers every ordering.
    std::array<int, 3> rest{nb[1], nb[2], nb[3]};
    std::sort(rest.begin(), rest.end());
    do {
        std::array<int, 4> w{nb[0], rest[0], rest[1], rest[2]};
        std::array<int, 4> z{};
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) {
            auto cn = g.common_neighbors(w[i], w[(i + 1) % 4]);
            if (cn.size() != 2 || std::find(cn.begin(), cn.end(), v) == cn.end()) {
                ok = false;
                break;
            }
            z[i] = (cn[0] == v) ? cn[1] : cn[0];
        }
        for (int i = 0; i < 2 && ok; ++i) {
            auto cn = g.common_neighbors(w[i], w[(i + 2) % 4]);
            if (cn.size() != 1 || cn[0] != v) ok = false;
        }
        if (!ok) continue;
        // Corners distinct and outside the closed neighbourhood of v.
        std::set<int> distinct(z.begin(), z.end());
        if (distinct.size() != 4) continue;
        for (int c : z)
            if (c == v || g.has_edge(v, c)) ok = false;
        if (!ok) continue;
        // Exactly the twelve wheel edges inside {v, w*, z*}.
        std::vector<int> cell{v, w[0], w[1], w[2], w[3], z[0], z[1], z[2], z[3]};
        std::set<std::pair<int, int>> required;
        for (int i = 0; i < 4; ++i) {
            auto add = [&](int a, int b) { required.insert({std::min(a, b), std::max(a, b)}); };
            add(v, w[i]);
            add(z[i], w[i]);
            add(z[i], w[(i + 1) % 4]);
        }
        std::set<int> cell_set(cell.begin(), cell.end());
        if (cell_set.size() != 9) continue;
        for (int a : cell_set)
            for (int b : cell_set) {
                if (a >= b) continue;
                bool need = required.count({a, b}) > 0;
                if (g.has_edge(a, b) != need) ok = false;
            }
        if (ok) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return false;
}

}  // namespace

LocalCheck is_locally_grid(const Graph& g, int threads) {
    return run_per_vertex(g, threads, [&](int v) { return vertex_locally_grid(g, v); });
}

}  // namespace latloc
