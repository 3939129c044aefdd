// The affine counterexample group, its Cayley graph, relator enumeration and
// the bundled property verification.

#include "latloc/cayley.hpp"

#include "latloc/util.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>

namespace latloc {

bool operator==(const AffineF2& a, const AffineF2& b) {
    return a.mat == b.mat && a.vec == b.vec;
}

bool operator<(const AffineF2& a, const AffineF2& b) {
    if (a.mat != b.mat) return a.mat < b.mat;
    return a.vec < b.vec;
}

AffineF2 affine_identity() {
    AffineF2 id;
    for (int r = 0; r < 4; ++r) id.mat |= static_cast<uint16_t>(1u << (4 * r + r));
    return id;
}

uint8_t affine_apply(const AffineF2& g, uint8_t x) {
    uint8_t y = g.vec;
    for (int r = 0; r < 4; ++r) {
        uint8_t row = (g.mat >> (4 * r)) & 0xF;
        y ^= static_cast<uint8_t>((std::popcount(static_cast<unsigned>(row & x)) & 1) << r);
    }
    return y;
}

AffineF2 affine_mul(const AffineF2& g, const AffineF2& h) {
    // Left-to-right: x -> h(g(x)), so the matrix is B*A and the vector B*u + w.
    AffineF2 out;
    for (int r = 0; r < 4; ++r) {
        uint8_t brow = (h.mat >> (4 * r)) & 0xF;  // row r of B
        uint8_t crow = 0;
        for (int c = 0; c < 4; ++c) {
            uint8_t acol = 0;  // column c of A
            for (int k = 0; k < 4; ++k) acol |= static_cast<uint8_t>(((g.mat >> (4 * k + c)) & 1) << k);
            crow |= static_cast<uint8_t>((std::popcount(static_cast<unsigned>(brow & acol)) & 1) << c);
        }
        out.mat |= static_cast<uint16_t>(crow) << (4 * r);
    }
    out.vec = affine_apply(h, g.vec);
    return out;
}

AffineF2 affine_inverse(const AffineF2& g) {
    // Gauss-Jordan over the two-element field on [A | I].
    std::array<uint8_t, 4> rows, inv;
    for (int r = 0; r < 4; ++r) {
        rows[r] = (g.mat >> (4 * r)) & 0xF;
        inv[r] = static_cast<uint8_t>(1u << r);
    }
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int r = col; r < 4 && pivot < 0; ++r)
            if ((rows[r] >> col) & 1) pivot = r;
        if (pivot < 0) throw Error("INTERNAL", "affine element with singular matrix");
        std::swap(rows[pivot], rows[col]);
        std::swap(inv[pivot], inv[col]);
        for (int r = 0; r < 4; ++r)
            if (r != col && ((rows[r] >> col) & 1)) {
                rows[r] ^= rows[col];
                inv[r] ^= inv[col];
            }
    }
    AffineF2 out;
    for (int r = 0; r < 4; ++r) out.mat |= static_cast<uint16_t>(inv[r]) << (4 * r);
    out.vec = affine_apply(AffineF2{out.mat, 0}, g.vec);  // A^{-1} v
    return out;
}

AffineF2 counterexample_matrix() {
    static const int entries[4][4] = {{0, 0, 1, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}};
    AffineF2 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (entries[r][c]) m.mat |= static_cast<uint16_t>(1u << (4 * r + c));
    return m;
}

std::vector<AffineF2> counterexample_generators() {
    AffineF2 m = counterexample_matrix();
    AffineF2 m2 = affine_mul(m, m);
    AffineF2 m4 = affine_mul(m2, m2);
    AffineF2 a{m.mat, 0b1001};   // translation (1,0,0,1)
    AffineF2 b{m2.mat, 0b1101};  // translation (1,0,1,1)
    AffineF2 c{m4.mat, 0b1010};  // translation (0,1,0,1)
    return {a, b, c};
}

bool operator==(const CayleyElement& a, const CayleyElement& b) {
    return a.aff == b.aff && a.torus == b.torus;
}

bool operator<(const CayleyElement& a, const CayleyElement& b) {
    if (!(a.aff == b.aff)) return a.aff < b.aff;
    return a.torus < b.torus;
}

CayleyElement cayley_mul(const CayleyElement& g, const CayleyElement& h) {
    if (g.torus.size() != h.torus.size())
        throw Error("BAD_PARAMS", "torus ranks of multiplied elements differ");
    CayleyElement out;
    out.aff = affine_mul(g.aff, h.aff);
    out.torus.resize(g.torus.size());
    for (std::size_t i = 0; i < g.torus.size(); ++i) out.torus[i] = (g.torus[i] + h.torus[i]) % 14;
    return out;
}

CayleyElement cayley_inverse(const CayleyElement& g) {
    CayleyElement out;
    out.aff = affine_inverse(g.aff);
    out.torus.resize(g.torus.size());
    for (std::size_t i = 0; i < g.torus.size(); ++i) out.torus[i] = (14 - g.torus[i]) % 14;
    return out;
}

int FiniteCayleyGraph::vertex_of(const CayleyElement& g) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), g);
    if (it == elements.end() || !(*it == g)) return -1;
    return static_cast<int>(it - elements.begin());
}

namespace {

// Closes the generator set, assigns sorted canonical ids and assembles the
// right Cayley graph.  `expected` < 0 skips the size check.
FiniteCayleyGraph assemble_cayley(int d, std::vector<std::pair<std::string, CayleyElement>> gens,
                                  long long expected) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (gens[i].second == gens[j].second)
                throw Error("INTERNAL", "generators " + gens[i].first + " and " + gens[j].first +
                                            " coincide");
    CayleyElement id;
    id.aff = affine_identity();
    id.torus.assign(gens.front().second.torus.size(), 0);

    std::set<CayleyElement> seen{id};
    std::vector<CayleyElement> frontier{id};
    while (!frontier.empty()) {
        std::vector<CayleyElement> next;
        for (const CayleyElement& g : frontier)
            for (const auto& [label, s] : gens) {
                CayleyElement gs = cayley_mul(g, s);
                if (seen.insert(gs).second) next.push_back(gs);
            }
        frontier = std::move(next);
    }
    if (expected >= 0 && static_cast<long long>(seen.size()) != expected)
        throw Error("INTERNAL", "group closure has " + std::to_string(seen.size()) +
                                    " elements, expected " + std::to_string(expected));

    FiniteCayleyGraph cg;
    cg.d = d;
    cg.elements.assign(seen.begin(), seen.end());  // set iteration is sorted
    cg.generator_set = std::move(gens);
    cg.identity = cg.vertex_of(id);

    std::set<std::pair<int, int>> edges;
    for (int v = 0; v < static_cast<int>(cg.elements.size()); ++v)
        for (const auto& [label, s] : cg.generator_set) {
            int w = cg.vertex_of(cayley_mul(cg.elements[v], s));
            if (w < 0) throw Error("INTERNAL", "closure is not closed under multiplication");
            if (w == v) throw Error("INTERNAL", "identity generator produces a loop");
            edges.emplace(std::min(v, w), std::max(v, w));
        }
    cg.graph = make_graph(static_cast<int>(cg.elements.size()),
                          std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
    return cg;
}

std::vector<std::pair<std::string, CayleyElement>> base_generators(int torus_rank) {
    std::vector<AffineF2> abc = counterexample_generators();
    const char* names[3] = {"a", "b", "c"};
    std::vector<std::pair<std::string, CayleyElement>> gens;
    for (int i = 0; i < 3; ++i) {
        CayleyElement g;
        g.aff = abc[i];
        g.torus.assign(torus_rank, 0);
        gens.emplace_back(names[i], g);
    }
    for (int i = 0; i < 3; ++i)
        gens.emplace_back(std::string(names[i]) + "^-1", cayley_inverse(gens[i].second));
    return gens;
}

} // namespace

FiniteCayleyGraph build_example_group() { return assemble_cayley(3, base_generators(0), 112); }

FiniteCayleyGraph build_product_extension(int d, int cap) {
    if (d < 4) throw Error("BAD_PARAMS", "product extension requires dimension >= 4");
    if (d > cap)
        throw Error("CAP_EXCEEDED", "dimension " + std::to_string(d) + " exceeds the cap " +
                                        std::to_string(cap));
    const int rank = d - 3;
    auto gens = base_generators(rank);
    for (int i = 0; i < rank; ++i) {
        CayleyElement f;
        f.aff = affine_identity();
        f.torus.assign(rank, 0);
        f.torus[i] = 1;
        std::string name = "f" + std::to_string(i + 1);
        gens.emplace_back(name, f);
        gens.emplace_back(name + "^-1", cayley_inverse(f));
    }
    long long expected = 112;
    for (int i = 0; i < rank; ++i) expected *= 14;
    return assemble_cayley(d, std::move(gens), expected);
}

RelatorEnumeration enumerate_relators(const FiniteCayleyGraph& cg, int length, int threads) {
    if (length < 1 || length > 6)
        throw Error("BAD_PARAMS", "relator length must be between 1 and 6");
    const int s = static_cast<int>(cg.generator_set.size());
    const int n = cg.graph.n;

    // step[v * s + i] walks one edge in the direction of generator i.
    std::vector<int> step(static_cast<std::size_t>(n) * s);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < s; ++i)
            step[static_cast<std::size_t>(v) * s + i] =
                cg.vertex_of(cayley_mul(cg.elements[v], cg.generator_set[i].second));

    // inverse_of[i] = index of the inverse generator, for free reduction.
    std::vector<int> inverse_of(s, -1);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            if (cg.vertex_of(cayley_mul(cg.generator_set[i].second, cg.generator_set[j].second)) ==
                cg.identity)
                inverse_of[i] = j;
    for (int i = 0; i < s; ++i)
        if (inverse_of[i] < 0) throw Error("INTERNAL", "generator set is not inverse-closed");

    struct Bucket {
        std::vector<std::vector<int>> nontrivial, trivial_words;
    };
    std::vector<Bucket> buckets(s);
    parallel_for(s, threads, [&](int first) {
        std::vector<int> word(length);
        word[0] = first;
        // Odometer enumeration of the remaining letters, lexicographic.
        std::vector<int> rest(length - 1, 0);
        bool done = false;
        while (!done) {
            for (int k = 1; k < length; ++k) word[k] = rest[k - 1];
            int at = cg.identity;
            for (int k = 0; k < length; ++k) at = step[static_cast<std::size_t>(at) * s + word[k]];
            if (at == cg.identity) {
                std::vector<int> stack;
                for (int letter : word) {
                    if (!stack.empty() && stack.back() == inverse_of[letter])
                        stack.pop_back();
                    else
                        stack.push_back(letter);
                }
                if (stack.empty())
                    buckets[first].trivial_words.push_back(word);
                else
                    buckets[first].nontrivial.push_back(word);
            }
            int k = length - 2;
            while (k >= 0 && ++rest[k] == s) rest[k--] = 0;
            done = k < 0 || length == 1;
        }
    });

    RelatorEnumeration out;
    out.length = length;
    for (Bucket& b : buckets) {
        out.nontrivial.insert(out.nontrivial.end(), b.nontrivial.begin(), b.nontrivial.end());
        out.trivial_words.insert(out.trivial_words.end(), b.trivial_words.begin(),
                                 b.trivial_words.end());
    }
    return out;
}

CounterexampleReport verify_counterexample(const FiniteCayleyGraph& cg, int threads) {
    CounterexampleReport report;
    report.bipartite = is_bipartite(cg.graph).bipartite;
    report.degree = cg.graph.n > 0 ? cg.graph.degree(0) : -1;
    for (int v = 1; v < cg.graph.n; ++v)
        if (cg.graph.degree(v) != report.degree) {
            report.degree = -1;
            break;
        }
    report.two_locally = is_r_locally(cg.graph, cg.d, 2, threads);
    report.weakly_three = is_weakly_r_locally(cg.graph, cg.d, 3, threads);
    SeedMap seed = seed_map(cg.graph, cg.identity, cg.d);
    PartialCover pc = extend_cover(cg.graph, seed, 2);
    report.covered = pc.valid;
    report.obstruction = pc.obstruction;
    return report;
}

}  // namespace latloc
