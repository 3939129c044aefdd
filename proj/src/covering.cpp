// Windowed construction of covering maps L^d -> G with obstruction
// certificates, deck-transformation recovery and quotient classification.

#include "latloc/covering.hpp"

#include "latloc/local_probe.hpp"
#include "latloc/util.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <random>
#include <string>

namespace latloc {

namespace {

constexpr long long kMaxWindowCells = 20'000'000;

Vec step(const Vec& x, int axis, long long delta) {
    Vec y = x;
    y[axis] += delta;
    return y;
}

std::string vec_text(const Vec& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(x[i]);
    }
    return s + ")";
}

} // namespace

bool PartialCover::in_domain(const Vec& x) const {
    int outside = 0;
    for (int i = 0; i < d; ++i) {
        long long a = std::llabs(x[i]);
        if (a > radius + 1) return false;
        if (a > radius) ++outside;
    }
    return outside <= 1;
}

long long PartialCover::cell_index(const Vec& x) const {
    long long idx = 0;
    for (int i = d - 1; i >= 0; --i) idx = idx * side + (x[i] + radius + 1);
    return idx;
}

Vec PartialCover::point_of(long long index) const {
    Vec x(d, 0);
    for (int i = 0; i < d; ++i) {
        x[i] = index % side - (radius + 1);
        index /= side;
    }
    return x;
}

int PartialCover::at(const Vec& x) const {
    if (!in_domain(x)) return -1;
    return cells[cell_index(x)];
}

void PartialCover::set(const Vec& x, int v) {
    if (!in_domain(x)) throw Error("BAD_PARAMS", "point " + vec_text(x) + " is outside the window");
    int& cell = cells[cell_index(x)];
    if (cell < 0 && v >= 0) ++assigned;
    if (cell >= 0 && v < 0) --assigned;
    cell = v;
}

long long PartialCover::domain_size() const {
    // The box plus one fringe facet per side of the box.
    long long box = 1;
    for (int i = 0; i < d; ++i) box *= 2 * radius + 1;
    long long facet = box / (2 * radius + 1);
    return box + 2 * d * facet;
}

SeedMap seed_map(const Graph& g, int root, int d) {
    if (d < 2) throw Error("BAD_PARAMS", "covering construction requires dimension >= 2");
    if (root < 0 || root >= g.n) throw Error("BAD_PARAMS", "seed root out of range");
    if (g.degree(root) != 2 * d)
        throw Error("DEGREE_MISMATCH", "vertex " + std::to_string(root) + " has degree " +
                                           std::to_string(g.degree(root)) + ", expected " +
                                           std::to_string(2 * d));
    auto part = opposite_partition(g, root, d);
    if (!part)
        throw Error("NO_OPPOSITE_STRUCTURE",
                    "neighbourhood of vertex " + std::to_string(root) +
                        " has no unique opposite partition");
    SeedMap seed;
    seed.d = d;
    seed.root = root;
    for (auto [a, b] : part->pairs) seed.axes.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(seed.axes.begin(), seed.axes.end());
    return seed;
}

namespace {

// Shared state of one extension run.  The hot paths work on flat cell
// indices with per-axis strides; Vec values are only materialised on the
// cold obstruction paths.  The window cap keeps d <= 8, so stack buffers of
// a dozen coordinates are always large enough.
constexpr int kMaxDim = 12;

struct Extender {
    const Graph& g;
    PartialCover pc;
    int d;
    int two_d;
    std::vector<uint8_t> is_box;      // per cell: neighbourhood fully inside the window
    std::vector<uint8_t> pending;     // box cells: unassigned lattice neighbours
    std::vector<uint8_t> out_count;   // domain cells: coordinates beyond the box (0 or 1)
    std::vector<long long> stride;    // cell-index delta per +1 step on each axis
    std::vector<long long> order;     // domain cells, canonical or shuffled order
    bool stopped = false;

    Extender(const Graph& graph, int dim, int radius) : g(graph), d(dim), two_d(2 * dim) {
        pc.d = dim;
        pc.radius = radius;
        pc.side = 2LL * radius + 3;
        long long cells = 1;
        for (int i = 0; i < dim; ++i) {
            cells *= pc.side;
            if (cells > kMaxWindowCells)
                throw Error("CAP_EXCEEDED", "window of radius " + std::to_string(radius) +
                                                " in dimension " + std::to_string(dim) +
                                                " exceeds the cell cap");
        }
        pc.cells.assign(cells, -1);
        is_box.assign(cells, 0);
        pending.assign(cells, 0);
        out_count.assign(cells, 0);
        stride.assign(dim, 1);
        for (int i = 1; i < dim; ++i) stride[i] = stride[i - 1] * pc.side;

        // One odometer sweep classifies every cell; domain cells are then
        // bucket-placed by l1 depth, ties in index order.
        const long long R = radius;
        const int maxdepth = dim * (radius + 1);
        std::vector<uint16_t> depth_of(cells, 0xFFFF);
        std::vector<long long> bucket(maxdepth + 1, 0);
        std::vector<long long> coord(dim, -(R + 1));
        long long domain_count = 0;
        for (long long idx = 0; idx < cells; ++idx) {
            int outside = 0;
            long long dep = 0;
            for (int i = 0; i < dim; ++i) {
                long long a = std::llabs(coord[i]);
                if (a > R) ++outside;
                dep += a;
            }
            if (outside <= 1) {
                is_box[idx] = outside == 0 ? 1 : 0;
                pending[idx] = static_cast<uint8_t>(two_d);
                out_count[idx] = static_cast<uint8_t>(outside);
                depth_of[idx] = static_cast<uint16_t>(dep);
                ++bucket[dep];
                ++domain_count;
            }
            int i = 0;
            while (i < dim && ++coord[i] > R + 1) coord[i++] = -(R + 1);
        }
        std::vector<long long> start(maxdepth + 1, 0);
        for (int dep = 1; dep <= maxdepth; ++dep) start[dep] = start[dep - 1] + bucket[dep - 1];
        order.assign(domain_count, 0);
        for (long long idx = 0; idx < cells; ++idx)
            if (depth_of[idx] != 0xFFFF) order[start[depth_of[idx]]++] = idx;

        // Rows (along axis 0) touched when a cell is derived: one per sign
        // pattern over the higher axes at distance <= 1.  Used to prefetch
        // the next candidate's neighbourhood; the window scatters these rows
        // across memory, and the fetches dominate the running time.
        if (dim <= 4) {
            const int patterns = 1;
            int reps = patterns;
            for (int i = 1; i < dim; ++i) reps *= 3;
            for (int code = 0; code < reps; ++code) {
                long long off = 0;
                int c = code;
                for (int i = 1; i < dim; ++i) {
                    off += (c % 3 - 1) * stride[i];
                    c /= 3;
                }
                prefetch_rows.push_back(off);
            }
        }
    }

    std::vector<long long> prefetch_rows;

    void decode(long long index, long long* x) const {
        for (int i = 0; i < d; ++i) {
            x[i] = index % pc.side - (pc.radius + 1);
            index /= pc.side;
        }
    }

    // Cell index of base + di*e_i, or -1 when that point leaves the domain.
    // `x`/`out` describe the base cell, which must itself be in the domain.
    long long step_idx(long long idx, const long long* x, int out, int i, long long di) const {
        const long long c = x[i] + di;
        const long long a = c < 0 ? -c : c;
        if (a > pc.radius + 1) return -1;
        const int o = out - (std::llabs(x[i]) > pc.radius ? 1 : 0) + (a > pc.radius ? 1 : 0);
        if (o > 1) return -1;
        return idx + di * stride[i];
    }

    long long step2_idx(long long idx, const long long* x, int out, int i, long long di, int j,
                        long long dj) const {
        if (i == j) return step_idx(idx, x, out, i, di + dj);
        const long long ci = x[i] + di, cj = x[j] + dj;
        const long long ai = ci < 0 ? -ci : ci, aj = cj < 0 ? -cj : cj;
        if (ai > pc.radius + 1 || aj > pc.radius + 1) return -1;
        const int o = out - (std::llabs(x[i]) > pc.radius ? 1 : 0) -
                      (std::llabs(x[j]) > pc.radius ? 1 : 0) + (ai > pc.radius ? 1 : 0) +
                      (aj > pc.radius ? 1 : 0);
        if (o > 1) return -1;
        return idx + di * stride[i] + dj * stride[j];
    }

    // Common neighbours of two graph vertices: total count plus the first
    // two values, without allocating.
    struct Common2 {
        int count = 0;
        int c0 = -1;
        int c1 = -1;
    };
    Common2 commons(int pa, int pb) const {
        const auto& A = g.adj[pa];
        const auto& B = g.adj[pb];
        Common2 r;
        std::size_t ia = 0, ib = 0;
        while (ia < A.size() && ib < B.size()) {
            if (A[ia] < B[ib]) {
                ++ia;
            } else if (A[ia] > B[ib]) {
                ++ib;
            } else {
                if (r.count == 0)
                    r.c0 = A[ia];
                else if (r.count == 1)
                    r.c1 = A[ia];
                ++r.count;
                ++ia;
                ++ib;
            }
        }
        return r;
    }

    void obstruct(std::string reason, Vec at, Vec sa, Vec sb, int va, int vb, std::string detail) {
        if (stopped) return;
        stopped = true;
        pc.obstruction = CoverObstruction{std::move(reason), std::move(at), std::move(sa),
                                          std::move(sb),     va,            vb,
                                          std::move(detail)};
    }

    // Checks that have to hold the moment x receives image v; then records
    // the assignment and fires completed-point checks.
    void assign(const Vec& x, int v) {
        long long buf[kMaxDim];
        for (int i = 0; i < d; ++i) buf[i] = x[i];
        assign_idx(pc.cell_index(x), buf, v);
    }

    void assign_idx(long long xi, const long long* x, int v) {
        const int out = out_count[xi];
        for (int i = 0; i < d && !stopped; ++i)
            for (int s = -1; s <= 1; s += 2) {
                const long long yi = step_idx(xi, x, out, i, s);
                const int py = yi < 0 ? -1 : pc.cells[yi];
                if (py >= 0 && !g.has_edge(v, py))
                    obstruct("OPPOSITE_VIOLATION", pc.point_of(xi), pc.point_of(yi),
                             pc.point_of(xi), py, v,
                             "images of adjacent lattice points are not adjacent in the graph");
                // Injectivity around the shared neighbour y: no other
                // neighbour of y may already carry the image v.
                if (yi < 0) continue;
                for (int j = 0; j < d && !stopped; ++j)
                    for (int t = -1; t <= 1; t += 2) {
                        const long long zi = step2_idx(xi, x, out, i, s, j, t);
                        if (zi == xi) continue;
                        const int pz = zi < 0 ? -1 : pc.cells[zi];
                        if (pz == v)
                            obstruct("INJECTIVITY_VIOLATION", pc.point_of(yi), pc.point_of(xi),
                                     pc.point_of(zi), v, v,
                                     "two lattice neighbours of " + vec_text(pc.point_of(yi)) +
                                         " map to one vertex");
                    }
            }
        if (stopped) return;
        if (pc.cells[xi] < 0) ++pc.assigned;
        pc.cells[xi] = v;
        for (int i = 0; i < d; ++i)
            for (int s = -1; s <= 1; s += 2) {
                const long long yi = step_idx(xi, x, out, i, s);
                if (yi < 0) continue;
                if (!is_box[yi]) continue;
                if (--pending[yi] == 0 && pc.cells[yi] >= 0) check_completed_idx(yi);
                if (stopped) return;
            }
        if (is_box[xi] && pending[xi] == 0) check_completed_idx(xi);
    }

    // All lattice neighbours of w are assigned: the images must form exactly
    // the image's neighbourhood, with opposite pairs opposite.  Box cells
    // only, so every neighbour's index is a plain stride offset.
    void check_completed_idx(long long wi) {
        const int pw = pc.cells[wi];
        if (g.degree(pw) != two_d) {
            const Vec w = pc.point_of(wi);
            obstruct("AMBIGUOUS_EXTENSION", w, w, w, pw, -1,
                     "image vertex has degree " + std::to_string(g.degree(pw)) +
                         ", expected " + std::to_string(two_d));
            return;
        }
        for (int i = 0; i < d; ++i) {
            const long long ai = wi + stride[i], bi = wi - stride[i];
            const int pa = pc.cells[ai], pb = pc.cells[bi];
            const Common2 cm = commons(pa, pb);
            if (cm.count != 1 || cm.c0 != pw) {
                obstruct("OPPOSITE_VIOLATION", pc.point_of(wi), pc.point_of(ai), pc.point_of(bi),
                         pa, pb,
                         "images of an opposite pair have " + std::to_string(cm.count) +
                             " common neighbours, expected the centre alone");
                return;
            }
        }
    }

    // Try to compute the image of x from already-assigned points.  Every
    // applicable derivation is evaluated and all results must agree.
    // Returns the value, or -1 when no derivation applies yet.
    int derive(long long xi, const long long* x) {
        const int out = out_count[xi];
        int value = -1;
        long long value_base = -1;
        // Diagonal rule: x = u + a + b for unit steps a, b on distinct axes
        // with u, u+a, u+b assigned; the image is the second common
        // neighbour of the images of u+a and u+b.
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                for (int si = -1; si <= 1; si += 2)
                    for (int sj = -1; sj <= 1; sj += 2) {
                        const long long ua = step_idx(xi, x, out, j, -sj);  // u + a
                        const long long ub = step_idx(xi, x, out, i, -si);  // u + b
                        const long long u = step2_idx(xi, x, out, i, -si, j, -sj);
                        const int pu = u < 0 ? -1 : pc.cells[u];
                        const int pa = ua < 0 ? -1 : pc.cells[ua];
                        const int pb = ub < 0 ? -1 : pc.cells[ub];
                        if (pu < 0 || pa < 0 || pb < 0) continue;
                        const Common2 cm = commons(pa, pb);
                        if (cm.count != 2) {
                            obstruct("AMBIGUOUS_EXTENSION", pc.point_of(xi), pc.point_of(ua),
                                     pc.point_of(ub), pa, pb,
                                     "expected exactly 2 common neighbours, found " +
                                         std::to_string(cm.count));
                            return -1;
                        }
                        int derived;
                        if (cm.c0 == pu)
                            derived = cm.c1;
                        else if (cm.c1 == pu)
                            derived = cm.c0;
                        else
                            throw Error("INTERNAL", "derivation base image is not a common neighbour");
                        if (value < 0) {
                            value = derived;
                            value_base = u;
                        } else if (derived != value) {
                            obstruct("OPPOSITE_VIOLATION", pc.point_of(xi),
                                     pc.point_of(value_base), pc.point_of(u), value, derived,
                                     "two derivations of one image disagree");
                            return -1;
                        }
                        if (stopped) return -1;
                    }
        // Remaining-neighbour rule: some assigned neighbour m of x has all
        // its other lattice neighbours assigned; the image of x is the one
        // neighbour of m's image not yet used around m.
        for (int i = 0; i < d && !stopped; ++i)
            for (int s = -1; s <= 1; s += 2) {
                const long long mi = step_idx(xi, x, out, i, -s);
                if (mi < 0) continue;
                if (!is_box[mi] || pc.cells[mi] < 0 || pending[mi] != 1) continue;
                const int pm = pc.cells[mi];
                // The other 2d-1 neighbours of m are all assigned and, by
                // the injectivity checks, carry distinct images.
                int used[2 * kMaxDim];
                int nu = 0;
                for (int j = 0; j < d; ++j)
                    for (int t = -1; t <= 1; t += 2) {
                        const long long yi = step2_idx(xi, x, out, i, -s, j, t);
                        if (yi == xi) continue;
                        used[nu++] = yi < 0 ? -1 : pc.cells[yi];
                    }
                std::sort(used, used + nu);
                int restc = 0, rest0 = -1;
                int k = 0;
                for (int a : g.adj[pm]) {
                    while (k < nu && used[k] < a) ++k;
                    if (k < nu && used[k] == a) {
                        ++k;
                        continue;
                    }
                    if (restc == 0) rest0 = a;
                    ++restc;
                }
                if (restc != 1) {
                    obstruct("AMBIGUOUS_EXTENSION", pc.point_of(xi), pc.point_of(mi),
                             pc.point_of(mi), pm, -1,
                             "expected one unused neighbour of the image, found " +
                                 std::to_string(restc));
                    return -1;
                }
                if (value < 0) {
                    value = rest0;
                    value_base = mi;
                } else if (rest0 != value) {
                    obstruct("OPPOSITE_VIOLATION", pc.point_of(xi), pc.point_of(value_base),
                             pc.point_of(mi), value, rest0,
                             "two derivations of one image disagree");
                    return -1;
                }
            }
        return stopped ? -1 : value;
    }

    void plant_seed(const SeedMap& seed) {
        if (seed.d != d || static_cast<int>(seed.axes.size()) != d)
            throw Error("BAD_PARAMS", "seed dimension does not match");
        if (seed.root < 0 || seed.root >= g.n) throw Error("BAD_PARAMS", "seed root out of range");
        std::vector<int> imgs{seed.root};
        for (auto [a, b] : seed.axes) {
            imgs.push_back(a);
            imgs.push_back(b);
        }
        for (int v : imgs)
            if (v < 0 || v >= g.n) throw Error("BAD_PARAMS", "seed image out of range");
        std::vector<int> sorted = imgs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error("BAD_PARAMS", "seed images are not distinct");
        for (auto [a, b] : seed.axes) {
            if (!g.has_edge(seed.root, a) || !g.has_edge(seed.root, b))
                throw Error("BAD_PARAMS", "seed axis image is not a neighbour of the root");
            auto common = g.common_neighbors(a, b);
            if (common.size() != 1 || common[0] != seed.root)
                throw Error("BAD_PARAMS", "seed pair is not opposite across the root");
        }
        Vec origin(d, 0);
        assign(origin, seed.root);
        for (int i = 0; i < d && !stopped; ++i) {
            assign(step(origin, i, 1), seed.axes[i].first);
            if (!stopped) assign(step(origin, i, -1), seed.axes[i].second);
        }
    }

    void run() {
        long long passes = 0, limit = 10LL * (static_cast<long long>(d) * (pc.radius + 2) + 2);
        const long long cell_count = static_cast<long long>(pc.cells.size());
        while (!stopped) {
            bool progress = false;
            for (std::size_t k = 0; k < order.size(); ++k) {
                if (stopped) break;
                if (k + 1 < order.size() && pc.cells[order[k + 1]] < 0) {
                    const long long nxt = order[k + 1];
                    for (long long off : prefetch_rows) {
                        const long long row = nxt + off;
                        if (row >= 1 && row < cell_count - 1) {
                            __builtin_prefetch(&pc.cells[row - 1]);
                            __builtin_prefetch(&pc.cells[row + 1]);
                        }
                    }
                }
                const long long idx = order[k];
                if (pc.cells[idx] >= 0) continue;
                long long x[kMaxDim];
                decode(idx, x);
                int v = derive(idx, x);
                if (v >= 0) {
                    assign_idx(idx, x, v);
                    progress = true;
                }
            }
            if (!progress) break;
            if (++passes > limit) throw Error("INTERNAL", "extension did not converge");
        }
        if (!stopped && pc.assigned != static_cast<long long>(order.size()))
            throw Error("INTERNAL", "extension stalled with underivable points");
        pc.valid = !stopped;
    }
};

PartialCover run_extension(const Graph& g, const SeedMap& seed, int radius,
                           const unsigned* shuffle_seed) {
    if (radius < 2) throw Error("BAD_PARAMS", "window radius must be at least 2");
    Extender ext(g, seed.d, radius);
    if (shuffle_seed) {
        std::mt19937 rng(*shuffle_seed);
        std::shuffle(ext.order.begin(), ext.order.end(), rng);
    }
    ext.plant_seed(seed);
    if (!ext.stopped) ext.run();
    return std::move(ext.pc);
}

} // namespace

PartialCover extend_cover(const Graph& g, const SeedMap& seed, int radius) {
    return run_extension(g, seed, radius, nullptr);
}

PartialCover extend_cover_shuffled(const Graph& g, const SeedMap& seed, int radius,
                                   unsigned shuffle_seed) {
    return run_extension(g, seed, radius, &shuffle_seed);
}

ValidationReport validate_cover(const Graph& g, const PartialCover& pc, int threads) {
    ValidationReport report;
    const int d = pc.d, two_d = 2 * d;
    std::vector<long long> interior;  // assigned box cells
    bool complete = true;
    for (long long idx = 0; idx < static_cast<long long>(pc.cells.size()); ++idx) {
        Vec x = pc.point_of(idx);
        if (!pc.in_domain(x)) continue;
        if (pc.cells[idx] < 0) {
            complete = false;
            continue;
        }
        bool box = true;
        for (int i = 0; i < d && box; ++i)
            if (std::llabs(x[i]) > pc.radius) box = false;
        if (box) interior.push_back(idx);
    }
    report.complete = complete;

    const int n = static_cast<int>(interior.size());
    std::vector<uint8_t> bad(n, 0);
    parallel_for(n, threads, [&](int k) {
        const Vec w = pc.point_of(interior[k]);
        const int pw = pc.cells[interior[k]];
        if (pw < 0 || g.degree(pw) != two_d) {
            bad[k] = 1;
            return;
        }
        std::vector<int> imgs;
        for (int i = 0; i < d; ++i)
            for (int s = -1; s <= 1; s += 2) {
                int pv = pc.at(step(w, i, s));
                if (pv < 0 || !g.has_edge(pw, pv)) {
                    bad[k] = 1;
                    return;
                }
                imgs.push_back(pv);
            }
        std::sort(imgs.begin(), imgs.end());
        if (std::adjacent_find(imgs.begin(), imgs.end()) != imgs.end()) {
            bad[k] = 1;
            return;
        }
        for (int i = 0; i < d; ++i) {
            auto common = g.common_neighbors(pc.at(step(w, i, 1)), pc.at(step(w, i, -1)));
            if (common.size() != 1 || common[0] != pw) {
                bad[k] = 1;
                return;
            }
        }
    });

    for (int k = 0; k < n; ++k) {
        if (!bad[k]) continue;
        // Re-derive the precise failure sequentially for the report.
        const Vec w = pc.point_of(interior[k]);
        const int pw = pc.cells[interior[k]];
        if (g.degree(pw) != two_d) {
            report.problem = CoverObstruction{
                "AMBIGUOUS_EXTENSION", w, w, w, pw, -1,
                "image vertex has degree " + std::to_string(g.degree(pw))};
            break;
        }
        bool found = false;
        for (int i = 0; i < d && !found; ++i)
            for (int s = -1; s <= 1 && !found; s += 2) {
                Vec y = step(w, i, s);
                int pv = pc.at(y);
                if (pv < 0) {
                    report.problem = CoverObstruction{"AMBIGUOUS_EXTENSION", w, y, y, -1, -1,
                                                      "unassigned neighbour in the window"};
                    found = true;
                } else if (!g.has_edge(pw, pv)) {
                    report.problem =
                        CoverObstruction{"OPPOSITE_VIOLATION", w, y, w, pv, pw,
                                         "images of adjacent lattice points are not adjacent"};
                    found = true;
                }
            }
        for (int i = 0; i < d && !found; ++i)
            for (int s = -1; s <= 1 && !found; s += 2)
                for (int j = 0; j < d && !found; ++j)
                    for (int t = -1; t <= 1 && !found; t += 2) {
                        Vec y = step(w, i, s), z = step(w, j, t);
                        if (y == z) continue;
                        if (pc.at(y) == pc.at(z)) {
                            report.problem = CoverObstruction{
                                "INJECTIVITY_VIOLATION", w, y, z, pc.at(y), pc.at(z),
                                "two lattice neighbours share an image"};
                            found = true;
                        }
                    }
        for (int i = 0; i < d && !found; ++i) {
            Vec a = step(w, i, 1), b = step(w, i, -1);
            auto common = g.common_neighbors(pc.at(a), pc.at(b));
            if (common.size() != 1 || common[0] != pw) {
                report.problem = CoverObstruction{
                    "OPPOSITE_VIOLATION", w, a, b, pc.at(a), pc.at(b),
                    "images of an opposite pair have " + std::to_string(common.size()) +
                        " common neighbours"};
                found = true;
            }
        }
        if (!found)
            report.problem =
                CoverObstruction{"OPPOSITE_VIOLATION", w, w, w, pw, -1, "unclassified failure"};
        break;
    }

    report.ok = complete && !report.problem.has_value();
    return report;
}

DeckGroup recover_deck_group(const Graph& g, const PartialCover& pc, int threads) {
    if (!pc.valid) throw Error("BAD_PARAMS", "deck recovery requires a valid cover");
    const int d = pc.d;
    DeckGroup deck;
    deck.d = d;
    Vec origin(d, 0);
    const int v0 = pc.at(origin);
    const int half = pc.radius / 2;

    // Fibre points over the root image inside the half-window, in
    // deterministic cell order.
    std::vector<Vec> fiber;
    {
        Vec x(d, -half);
        while (true) {
            if (pc.at(x) == v0) fiber.push_back(x);
            int i = 0;
            while (i < d && ++x[i] > half) x[i++] = -half;
            if (i == d) break;
        }
    }
    deck.fiber_size = static_cast<long long>(fiber.size());
    if (fiber.size() <= 1 && pc.assigned > 2LL * g.n)
        throw Error("FIBER_NOT_FOUND",
                    "no second fibre point in the half-window; enlarge the radius");

    // Axis images around the origin, for the direction correspondence.
    std::vector<int> axis_image(2 * d);
    for (int i = 0; i < d; ++i) {
        axis_image[2 * i] = pc.at(step(origin, i, 1));
        axis_image[2 * i + 1] = pc.at(step(origin, i, -1));
    }

    std::vector<LatticeAut> candidates;
    for (const Vec& x : fiber) {
        if (x == origin) continue;
        SignedPerm sigma;
        sigma.images.assign(d, 0);
        bool ok = true;
        for (int i = 0; i < d && ok; ++i) {
            int found = 0;
            for (int j = 0; j < d && ok; ++j)
                for (int s = -1; s <= 1; s += 2) {
                    if (pc.at(step(x, j, s)) != axis_image[2 * i]) continue;
                    ++found;
                    sigma.images[i] = s * (j + 1);
                }
            if (found != 1) ok = false;
        }
        if (!ok) continue;
        try {
            validate(sigma);
        } catch (const Error&) {
            continue;
        }
        LatticeAut alpha;
        alpha.sigma = sigma;
        alpha.trans = x;
        candidates.push_back(alpha);
    }

    // Verify each candidate on the whole overlap of the window with its
    // translate, in parallel.  The image point alpha(z) is tracked
    // incrementally while z sweeps the window in cell-index order: each
    // odometer step moves exactly one coordinate of the image, so domain
    // membership and the image's cell index update in constant time.
    std::vector<uint8_t> verified(candidates.size(), 1);
    const long long cell_count = static_cast<long long>(pc.cells.size());
    const long long R = pc.radius;
    std::vector<long long> stride(d, 1);
    for (int i = 1; i < d; ++i) stride[i] = stride[i - 1] * pc.side;
    parallel_for(static_cast<int>(candidates.size()), threads, [&](int c) {
        const LatticeAut& alpha = candidates[c];
        int tgt[kMaxDim];
        long long sgn[kMaxDim];
        for (int i = 0; i < d; ++i) {
            const int im = alpha.sigma.images[i];
            tgt[i] = std::abs(im) - 1;
            sgn[i] = im > 0 ? 1 : -1;
        }
        long long z[kMaxDim], w[kMaxDim];
        for (int i = 0; i < d; ++i) z[i] = -(R + 1);
        for (int i = 0; i < d; ++i) w[tgt[i]] = sgn[i] * z[i] + alpha.trans[tgt[i]];
        // 0: inside the box, 1: on the fringe, 2: outside the window.
        auto cls = [R](long long v) {
            const long long a = v < 0 ? -v : v;
            return a > R + 1 ? 2 : (a > R ? 1 : 0);
        };
        int n_far = 0, n_out = 0;
        long long widx = 0;
        for (int k = 0; k < d; ++k) {
            const int ck = cls(w[k]);
            if (ck == 2) ++n_far;
            if (ck == 1) ++n_out;
            widx += (w[k] + R + 1) * stride[k];
        }
        for (long long idx = 0;;) {
            if (pc.cells[idx] >= 0 && n_far == 0 && n_out <= 1) {
                const int img = pc.cells[widx];
                if (img >= 0 && img != pc.cells[idx]) {
                    verified[c] = 0;
                    return;
                }
            }
            if (++idx >= cell_count) break;
            for (int i = 0; i < d; ++i) {
                const int p = tgt[i];
                const long long old = w[p];
                long long nw;
                const bool carry = z[i] == R + 1;
                if (carry) {
                    z[i] = -(R + 1);
                    nw = old - sgn[i] * (2 * R + 2);
                    widx -= sgn[i] * (2 * R + 2) * stride[p];
                } else {
                    ++z[i];
                    nw = old + sgn[i];
                    widx += sgn[i] * stride[p];
                }
                const int co = cls(old), cn = cls(nw);
                if (co == 2) --n_far;
                if (co == 1) --n_out;
                if (cn == 2) ++n_far;
                if (cn == 1) ++n_out;
                w[p] = nw;
                if (!carry) break;
            }
        }
        // Freeness: a verified deck transformation must not fix any lattice
        // point, i.e. (I - sigma) y = trans must have no integer solution.
        std::vector<Vec> cols;
        for (int i = 0; i < alpha.dim(); ++i) {
            Vec col = alpha.sigma.column(i);
            for (int r = 0; r < alpha.dim(); ++r) col[r] = (r == i ? 1 : 0) - col[r];
            cols.push_back(col);
        }
        if (lattice_from_columns(alpha.dim(), cols).contains(alpha.trans)) verified[c] = 0;
    });

    int reached = 1;  // the origin
    for (std::size_t c = 0; c < candidates.size(); ++c)
        if (verified[c]) {
            deck.generators.push_back(candidates[c]);
            ++reached;
        }
    deck.transitive_on_fiber = reached == static_cast<int>(fiber.size());
    deck.group = make_subgroup(d, deck.generators);
    if (deck.transitive_on_fiber && !deck.generators.empty() &&
        deck.group.translation_lattice.rank() == d)
        deck.normality_certified =
            deck.group.translation_lattice.index() ==
            static_cast<long long>(g.n) *
                static_cast<long long>(deck.group.point_group.size());
    return deck;
}

Surface2 classify_2d(const DeckGroup& dg) {
    if (dg.d != 2) throw Error("BAD_PARAMS", "surface classification applies to dimension 2");
    if (!dg.transitive_on_fiber)
        throw Error("BAD_PARAMS", "surface classification requires a transitive deck group");
    if (dg.group.translation_lattice.rank() < 2)
        throw Error("NON_COCOMPACT", "deck translations do not span the plane");
    TorsionResult torsion = is_torsion_free(dg.group);
    if (!torsion.torsion_free)
        throw Error("ORBIFOLD_UNEXPECTED",
                    "deck group has an element of finite order " +
                        std::to_string(torsion.witness_order));
    for (const SignedPerm& s : dg.group.point_group)
        if (s.det() < 0) return Surface2::KleinBottle;
    return Surface2::Torus;
}

DClassification classify_d(const SubgroupSpec& spec) {
    if (spec.d < 3)
        throw Error("BAD_PARAMS", "quotient-kind classification applies to dimension >= 3");
    if (spec.translation_lattice.rank() < spec.d)
        throw Error("NON_COCOMPACT", "translation lattice rank is below the dimension");
    DClassification out;
    out.torsion = is_torsion_free(spec);
    out.kind = out.torsion.torsion_free ? QuotientKind::ManifoldQuotient
                                        : QuotientKind::OrbifoldQuotient;
    return out;
}

DClassification classify_d(const DeckGroup& dg) { return classify_d(dg.group); }

CoverPipelineResult run_cover_pipeline(const Graph& g, int d, int root, int radius, int threads) {
    CoverPipelineResult result;
    if (root < 0 || root >= g.n) throw Error("BAD_PARAMS", "root vertex out of range");
    for (int x : bfs_distances(g, root))
        if (x == kInfiniteDistance)
            throw Error("BAD_PARAMS", "covering requires a connected graph");
    if (radius < 0) {
        int diameter = 0;
        for (int v = 0; v < g.n; ++v)
            for (int x : bfs_distances(g, v)) diameter = std::max(diameter, x);
        radius = 4 * diameter + 4;
    }
    result.radius_used = radius;
    result.seed = seed_map(g, root, d);
    result.cover = extend_cover(g, result.seed, radius);
    if (!result.cover.valid) return result;
    result.deck = recover_deck_group(g, result.cover, threads);
    const DeckGroup& deck = *result.deck;
    if (deck.transitive_on_fiber && !deck.generators.empty() &&
        deck.group.translation_lattice.rank() == d) {
        if (d == 2)
            result.surface = classify_2d(deck);
        else
            result.quotient_kind = classify_d(deck);
    }
    return result;
}

void write_cover(std::ostream& out, const PartialCover& pc) {
    for (long long idx = 0; idx < static_cast<long long>(pc.cells.size()); ++idx) {
        if (pc.cells[idx] < 0) continue;
        Vec x = pc.point_of(idx);
        if (!pc.in_domain(x)) continue;
        for (int i = 0; i < pc.d; ++i) out << x[i] << ' ';
        out << "-> " << pc.cells[idx] << '\n';
    }
}

} // namespace latloc
