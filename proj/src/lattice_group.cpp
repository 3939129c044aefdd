#include "latloc/lattice_group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace latloc {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long l1_norm(const Vec& v) {
    long long s = 0;
    for (long long x : v) s += std::llabs(x);
    return s;
}

void axpy(Vec& x, long long c, const Vec& y) {
    for (size_t i = 0; i < x.size(); ++i) x[i] += c * y[i];
}

std::string vec_to_string(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Signed permutations and lattice automorphisms
// ---------------------------------------------------------------------------

SignedPerm SignedPerm::identity(int d) {
    SignedPerm s;
    s.images.resize(d);
    for (int i = 0; i < d; ++i) s.images[i] = i + 1;
    return s;
}

bool SignedPerm::is_identity() const {
    for (int i = 0; i < dim(); ++i)
        if (images[i] != i + 1) return false;
    return true;
}

Vec SignedPerm::apply(const Vec& x) const {
    Vec y(dim(), 0);
    for (int i = 0; i < dim(); ++i) {
        int img = images[i];
        int j = std::abs(img) - 1;
        y[j] = (img > 0 ? x[i] : -x[i]);
    }
    return y;
}

Vec SignedPerm::column(int i) const {
    Vec e(dim(), 0);
    int img = images[i];
    e[std::abs(img) - 1] = (img > 0 ? 1 : -1);
    return e;
}

int SignedPerm::det() const {
    int d = dim();
    int sign = 1;
    std::vector<char> seen(d, 0);
    for (int i = 0; i < d; ++i) {
        if (images[i] < 0) sign = -sign;
        if (seen[i]) continue;
        int len = 0;
        int j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = std::abs(images[j]) - 1;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

int SignedPerm::order() const {
    SignedPerm acc = *this;
    int k = 1;
    while (!acc.is_identity()) {
        acc = compose(acc, *this);
        ++k;
    }
    return k;
}

bool operator==(const SignedPerm& a, const SignedPerm& b) { return a.images == b.images; }

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
    if (a.dim() != b.dim()) throw Error("DIMENSION_MISMATCH", "composing signed permutations");
    SignedPerm c;
    c.images.resize(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        int mid = b.images[i];
        int j = std::abs(mid) - 1;
        int out = a.images[j];
        c.images[i] = (mid > 0 ? out : -out);
    }
    return c;
}

SignedPerm inverse(const SignedPerm& s) {
    SignedPerm inv;
    inv.images.resize(s.dim());
    for (int i = 0; i < s.dim(); ++i) {
        int img = s.images[i];
        int j = std::abs(img) - 1;
        inv.images[j] = (img > 0 ? i + 1 : -(i + 1));
    }
    return inv;
}

void validate(const SignedPerm& s) {
    int d = s.dim();
    std::vector<char> hit(d, 0);
    for (int img : s.images) {
        int j = std::abs(img) - 1;
        if (img == 0 || j >= d || hit[j])
            throw Error("BAD_PARAMS", "invalid signed permutation");
        hit[j] = 1;
    }
}

LatticeAut LatticeAut::identity(int d) { return {SignedPerm::identity(d), Vec(d, 0)}; }

LatticeAut LatticeAut::translation(const Vec& t) {
    return {SignedPerm::identity(static_cast<int>(t.size())), t};
}

bool LatticeAut::is_identity() const {
    return sigma.is_identity() && std::all_of(trans.begin(), trans.end(),
                                              [](long long x) { return x == 0; });
}

Vec LatticeAut::apply(const Vec& x) const {
    Vec y = sigma.apply(x);
    for (int i = 0; i < dim(); ++i) y[i] += trans[i];
    return y;
}

bool operator==(const LatticeAut& a, const LatticeAut& b) {
    return a.sigma == b.sigma && a.trans == b.trans;
}

LatticeAut compose(const LatticeAut& a, const LatticeAut& b) {
    LatticeAut c;
    c.sigma = compose(a.sigma, b.sigma);
    c.trans = a.sigma.apply(b.trans);
    for (int i = 0; i < a.dim(); ++i) c.trans[i] += a.trans[i];
    return c;
}

LatticeAut inverse(const LatticeAut& a) {
    LatticeAut inv;
    inv.sigma = inverse(a.sigma);
    Vec t = inv.sigma.apply(a.trans);
    inv.trans.resize(a.dim());
    for (int i = 0; i < a.dim(); ++i) inv.trans[i] = -t[i];
    return inv;
}

// ---------------------------------------------------------------------------
// Integer lattices in Hermite form
// ---------------------------------------------------------------------------

IntLattice lattice_from_columns(int dim, const std::vector<Vec>& columns, bool track) {
    for (const Vec& c : columns)
        if (static_cast<int>(c.size()) != dim)
            throw Error("DIMENSION_MISMATCH", "lattice column of wrong dimension");

    std::vector<Vec> work = columns;
    std::vector<Vec> expr;
    if (track) {
        expr.resize(columns.size(), Vec(columns.size(), 0));
        for (size_t i = 0; i < columns.size(); ++i) expr[i][i] = 1;
    }
    auto col_op = [&](size_t dst, long long c, size_t src) {
        axpy(work[dst], c, work[src]);
        if (track) axpy(expr[dst], c, expr[src]);
    };

    IntLattice lat;
    lat.dim = dim;
    size_t r = 0;
    for (int row = 0; row < dim && r < work.size(); ++row) {
        // Euclidean elimination: gather the gcd of this row into column r.
        while (true) {
            size_t best = work.size();
            for (size_t j = r; j < work.size(); ++j)
                if (work[j][row] != 0 &&
                    (best == work.size() || std::llabs(work[j][row]) < std::llabs(work[best][row])))
                    best = j;
            if (best == work.size()) break;
            std::swap(work[r], work[best]);
            if (track) std::swap(expr[r], expr[best]);
            bool leftovers = false;
            for (size_t j = r + 1; j < work.size(); ++j) {
                if (work[j][row] == 0) continue;
                col_op(j, -(work[j][row] / work[r][row]), r);
                if (work[j][row] != 0) leftovers = true;
            }
            if (!leftovers) break;
        }
        if (work[r][row] == 0) continue;
        if (work[r][row] < 0) {
            for (auto& x : work[r]) x = -x;
            if (track)
                for (auto& x : expr[r]) x = -x;
        }
        for (size_t j = 0; j < r; ++j)
            if (work[j][row] != 0) col_op(j, -floor_div(work[j][row], work[r][row]), r);
        lat.pivot.push_back(row);
        ++r;
    }
    work.resize(r);
    lat.basis = std::move(work);
    if (track) {
        expr.resize(r);
        lat.expr = std::move(expr);
    }
    return lat;
}

namespace {
// Shared solver: reduce x against the echelon basis; optionally record the
// per-basis-column coefficients. Returns true iff x lies in the lattice.
bool solve_membership(const IntLattice& lat, Vec x, Vec* coeffs_out) {
    if (coeffs_out) coeffs_out->assign(lat.basis.size(), 0);
    for (size_t k = 0; k < lat.basis.size(); ++k) {
        int p = lat.pivot[k];
        long long d = lat.basis[k][p];
        if (x[p] % d != 0) return false;
        long long c = x[p] / d;
        if (c != 0) axpy(x, -c, lat.basis[k]);
        if (coeffs_out) (*coeffs_out)[k] = c;
    }
    return std::all_of(x.begin(), x.end(), [](long long v) { return v == 0; });
}
}  // namespace

bool IntLattice::contains(const Vec& x) const { return solve_membership(*this, x, nullptr); }

std::optional<Vec> IntLattice::coefficients(const Vec& x) const {
    if (expr.empty() && !basis.empty())
        throw Error("BAD_PARAMS", "lattice was built without coefficient tracking");
    Vec local;
    if (!solve_membership(*this, x, &local)) return std::nullopt;
    size_t originals = expr.empty() ? 0 : expr[0].size();
    Vec out(originals, 0);
    for (size_t k = 0; k < basis.size(); ++k) axpy(out, local[k], expr[k]);
    return out;
}

long long IntLattice::index() const {
    if (rank() != dim) throw Error("NON_COCOMPACT", "lattice is not full rank");
    long long det = 1;
    for (int i = 0; i < dim; ++i) det *= basis[i][i];
    return det;
}

Vec IntLattice::residue(Vec x) const {
    if (rank() != dim) throw Error("NON_COCOMPACT", "lattice is not full rank");
    for (int i = 0; i < dim; ++i) {
        long long c = floor_div(x[i], basis[i][i]);
        if (c != 0) axpy(x, -c, basis[i]);
    }
    return x;
}

namespace {

// Exact branch-and-bound minimizer of |B c - target|_1 over integer c.
// Columns are echelon, so once c_0..c_k are fixed, every row before the next
// pivot is final; pruning works on that running partial sum.
struct L1Search {
    const IntLattice& lat;
    bool exclude_zero = false;
    long long best = 0;
    Vec target;
    Vec best_point;  // lattice vector achieving `best`

    L1Search(const IntLattice& l) : lat(l) {}

    long long run(const Vec& target_, long long init_best, const Vec& init_point) {
        target = target_;
        best = init_best;
        best_point = init_point;
        Vec residual = target;
        long long fixed = 0;
        int first_pivot = lat.basis.empty() ? lat.dim : lat.pivot[0];
        for (int row = 0; row < first_pivot; ++row) fixed += std::llabs(residual[row]);
        dfs(0, residual, fixed, true);
        return best;
    }

    void dfs(size_t k, Vec& residual, long long partial, bool all_zero) {
        if (partial >= best) return;
        if (k == lat.basis.size()) {
            // partial already covers every row: rows before the first pivot are
            // constant, the rest were added as each level finalized its range.
            if (!(exclude_zero && all_zero)) {
                best = partial;
                best_point.resize(lat.dim);
                for (int i = 0; i < lat.dim; ++i) best_point[i] = target[i] - residual[i];
            }
            return;
        }
        int p = lat.pivot[k];
        long long diag = lat.basis[k][p];
        int row_end = (k + 1 < lat.basis.size()) ? lat.pivot[k + 1] : lat.dim;
        long long center = floor_div(2 * residual[p] + diag, 2 * diag);  // nearest int to r/diag
        for (int side = 0; side < 2; ++side) {
            for (long long c = center + (side ? -1 : 0);; side ? --c : ++c) {
                long long term = std::llabs(residual[p] - c * diag);
                if (partial + term >= best) break;
                axpy(residual, -c, lat.basis[k]);
                long long np = partial;
                for (int row = p; row < row_end; ++row) np += std::llabs(residual[row]);
                dfs(k + 1, residual, np, all_zero && c == 0);
                axpy(residual, c, lat.basis[k]);
            }
        }
    }
};

}  // namespace

long long lattice_svp_l1(const IntLattice& lattice, Vec* witness) {
    if (lattice.basis.empty()) throw Error("BAD_PARAMS", "shortest vector of the zero lattice");
    size_t init_col = 0;
    for (size_t k = 1; k < lattice.basis.size(); ++k)
        if (l1_norm(lattice.basis[k]) < l1_norm(lattice.basis[init_col])) init_col = k;
    L1Search search(lattice);
    search.exclude_zero = true;
    // best_point tracks target - residual, which is exactly the lattice vector.
    long long best = search.run(Vec(lattice.dim, 0), l1_norm(lattice.basis[init_col]),
                                lattice.basis[init_col]);
    if (witness) *witness = search.best_point;
    return best;
}

long long lattice_cvp_l1(const IntLattice& lattice, const Vec& target, Vec* closest) {
    if (static_cast<int>(target.size()) != lattice.dim)
        throw Error("DIMENSION_MISMATCH", "cvp target dimension");
    // Babai-style greedy rounding gives an achievable starting bound.
    Vec residual = target;
    for (size_t k = 0; k < lattice.basis.size(); ++k) {
        int p = lattice.pivot[k];
        long long diag = lattice.basis[k][p];
        long long c = floor_div(2 * residual[p] + diag, 2 * diag);
        if (c != 0) axpy(residual, -c, lattice.basis[k]);
    }
    Vec babai_point(lattice.dim);
    for (int i = 0; i < lattice.dim; ++i) babai_point[i] = target[i] - residual[i];
    L1Search search(lattice);
    long long best = search.run(target, l1_norm(residual), babai_point);
    if (closest) *closest = search.best_point;
    return best;
}

// ---------------------------------------------------------------------------
// Subgroups of the automorphism group
// ---------------------------------------------------------------------------

SubgroupSpec make_subgroup(int d, std::vector<LatticeAut> generators) {
    if (d <= 0) throw Error("BAD_PARAMS", "dimension must be positive");
    for (const auto& g : generators) {
        if (g.dim() != d || static_cast<int>(g.trans.size()) != d)
            throw Error("DIMENSION_MISMATCH", "generator of wrong dimension");
        validate(g.sigma);
    }

    SubgroupSpec spec;
    spec.d = d;
    spec.generators = generators;

    std::vector<LatticeAut> gens_ext = generators;
    for (const auto& g : generators) gens_ext.push_back(inverse(g));

    std::map<std::vector<int>, int> index;
    spec.point_group.push_back(SignedPerm::identity(d));
    spec.coset_reps.push_back(LatticeAut::identity(d));
    index[spec.point_group[0].images] = 0;
    for (size_t head = 0; head < spec.coset_reps.size(); ++head) {
        LatticeAut u = spec.coset_reps[head];  // copy: the vector may reallocate
        for (const auto& g : gens_ext) {
            LatticeAut cand = compose(u, g);
            if (index.emplace(cand.sigma.images, spec.point_group.size()).second) {
                spec.point_group.push_back(cand.sigma);
                spec.coset_reps.push_back(cand);
            }
        }
    }

    std::vector<Vec> schreier;
    for (const auto& u : spec.coset_reps)
        for (const auto& g : gens_ext) {
            LatticeAut w = compose(u, g);
            const LatticeAut& rep = spec.coset_reps[index.at(w.sigma.images)];
            LatticeAut s = compose(w, inverse(rep));
            if (!s.sigma.is_identity())
                throw Error("INTERNAL", "Schreier element has non-trivial point part");
            schreier.push_back(s.trans);
        }
    spec.translation_lattice = lattice_from_columns(d, schreier);
    return spec;
}

bool SubgroupSpec::is_trivial() const {
    return point_group.size() == 1 && translation_lattice.rank() == 0;
}

int SubgroupSpec::point_index(const SignedPerm& s) const {
    for (size_t i = 0; i < point_group.size(); ++i)
        if (point_group[i] == s) return static_cast<int>(i);
    return -1;
}

bool SubgroupSpec::contains(const LatticeAut& a) const {
    int j = point_index(a.sigma);
    if (j < 0) return false;
    Vec diff(d);
    for (int i = 0; i < d; ++i) diff[i] = a.trans[i] - coset_reps[j].trans[i];
    return translation_lattice.contains(diff);
}

std::vector<SignedPerm> point_group_closure(int d, const std::vector<LatticeAut>& generators) {
    return make_subgroup(d, generators).point_group;
}

IntLattice translation_lattice(int d, const std::vector<LatticeAut>& generators) {
    return make_subgroup(d, generators).translation_lattice;
}

Displacement min_displacement(const SubgroupSpec& spec) {
    Displacement out;
    if (spec.is_trivial()) {
        out.finite = false;
        return out;
    }
    if (spec.translation_lattice.rank() < spec.d)
        throw Error("NON_COCOMPACT", "translation lattice has rank " +
                                         std::to_string(spec.translation_lattice.rank()) +
                                         " < " + std::to_string(spec.d));
    Vec shortest;
    out.value = lattice_svp_l1(spec.translation_lattice, &shortest);
    out.witness = LatticeAut::translation(shortest);
    out.at_point = Vec(spec.d, 0);

    // Each non-trivial point-group coset {(sigma, v0 + t)}: the displacement set
    // (sigma - I)x + v0 + t is a shifted copy of the sum lattice, so the minimum
    // is an l1 closest-vector distance. Coefficient tracking splits the closest
    // vector back into the point x and the lattice shift that achieve it.
    for (size_t j = 1; j < spec.point_group.size(); ++j) {
        const SignedPerm& sigma = spec.point_group[j];
        std::vector<Vec> cols;
        for (int i = 0; i < spec.d; ++i) {
            Vec c = sigma.column(i);
            c[i] -= 1;
            cols.push_back(c);
        }
        for (const Vec& b : spec.translation_lattice.basis) cols.push_back(b);
        IntLattice sum = lattice_from_columns(spec.d, cols, /*track=*/true);
        Vec target(spec.d);
        for (int i = 0; i < spec.d; ++i) target[i] = -spec.coset_reps[j].trans[i];
        Vec closest;
        long long dist = lattice_cvp_l1(sum, target, &closest);
        if (dist >= out.value) continue;
        auto coeff = sum.coefficients(closest);
        if (!coeff) throw Error("INTERNAL", "cvp result escaped its lattice");
        out.value = dist;
        LatticeAut gamma = spec.coset_reps[j];
        for (size_t m = 0; m < spec.translation_lattice.basis.size(); ++m)
            axpy(gamma.trans, (*coeff)[spec.d + m], spec.translation_lattice.basis[m]);
        out.witness = gamma;
        out.at_point.assign(coeff->begin(), coeff->begin() + spec.d);
    }
    return out;
}

TorsionResult is_torsion_free(const SubgroupSpec& spec) {
    TorsionResult res;
    for (size_t j = 1; j < spec.point_group.size(); ++j) {
        const SignedPerm& sigma = spec.point_group[j];
        const Vec& v0 = spec.coset_reps[j].trans;
        int k = sigma.order();
        // gamma = (sigma, v0 + B*lambda) satisfies gamma^k = translation by
        // N(v0 + B*lambda) with N = I + sigma + ... + sigma^{k-1}; torsion in this
        // coset means -N v0 lies in the lattice spanned by the columns of N*B.
        auto apply_n = [&](const Vec& v) {
            Vec acc(spec.d, 0);
            Vec cur = v;
            for (int i = 0; i < k; ++i) {
                for (int t = 0; t < spec.d; ++t) acc[t] += cur[t];
                cur = sigma.apply(cur);
            }
            return acc;
        };
        std::vector<Vec> nb;
        for (const Vec& b : spec.translation_lattice.basis) nb.push_back(apply_n(b));
        IntLattice image = lattice_from_columns(spec.d, nb, /*track=*/true);
        Vec target = apply_n(v0);
        for (auto& x : target) x = -x;
        Vec lambda;
        if (nb.empty()) {
            if (!std::all_of(target.begin(), target.end(), [](long long x) { return x == 0; }))
                continue;
        } else {
            auto sol = image.coefficients(target);
            if (!sol) continue;
            lambda = *sol;
        }
        LatticeAut witness = spec.coset_reps[j];
        for (size_t m = 0; m < lambda.size(); ++m)
            axpy(witness.trans, lambda[m], spec.translation_lattice.basis[m]);
        res.torsion_free = false;
        res.witness = witness;
        res.witness_order = k;
        return res;
    }
    return res;
}

Vec canonical_orbit_rep(const SubgroupSpec& spec, const Vec& x) {
    const IntLattice& lat = spec.translation_lattice;
    Vec best;
    for (const auto& rep : spec.coset_reps) {
        Vec cand = lat.residue(rep.apply(x));
        if (best.empty() || cand < best) best = cand;
    }
    return best;
}

QuotientGraph build_quotient(const SubgroupSpec& spec) {
    const IntLattice& lat = spec.translation_lattice;
    if (lat.rank() < spec.d)
        throw Error("NON_COCOMPACT", "quotient is infinite: translation rank " +
                                         std::to_string(lat.rank()));
    long long det = lat.index();
    if (det > 5'000'000)
        throw Error("CAP_EXCEEDED", "quotient residue count " + std::to_string(det) +
                                        " exceeds the enumeration cap");

    // Enumerate the residue box and keep the points that are their own orbit
    // representative; mixed-radix iteration makes the vertex ids lex-ordered.
    QuotientGraph out;
    std::map<Vec, int> id_of;
    Vec y(spec.d, 0);
    while (true) {
        if (canonical_orbit_rep(spec, y) == y) {
            id_of.emplace(y, static_cast<int>(out.rep_of_vertex.size()));
            out.rep_of_vertex.push_back(y);
        }
        int i = spec.d - 1;
        while (i >= 0 && y[i] + 1 == lat.basis[i][i]) y[i--] = 0;
        if (i < 0) break;
        ++y[i];
    }

    // Edge orbits: every lattice edge incident to an orbit is the image of one of
    // the 2d edges at its representative. A canonical key per orbit (normalize the
    // pair by every coset rep and both orientations, shift into the residue box)
    // lets us count parallel edge classes exactly.
    auto edge_key = [&](const Vec& a, const Vec& b) {
        std::vector<Vec> forms;
        for (const auto& rep : spec.coset_reps) {
            Vec pa = rep.apply(a), pb = rep.apply(b);
            for (int swap = 0; swap < 2; ++swap) {
                const Vec& h = swap ? pb : pa;
                const Vec& t = swap ? pa : pb;
                Vec hr = lat.residue(h);
                Vec form = hr;
                for (int i = 0; i < spec.d; ++i) form.push_back(t[i] - (h[i] - hr[i]));
                forms.push_back(std::move(form));
            }
        }
        return *std::min_element(forms.begin(), forms.end());
    };

    std::set<std::pair<int, int>> edges;
    std::map<std::pair<int, int>, std::set<Vec>> orbit_classes;
    for (size_t v = 0; v < out.rep_of_vertex.size(); ++v) {
        const Vec& y0 = out.rep_of_vertex[v];
        for (int i = 0; i < spec.d; ++i)
            for (int s : {1, -1}) {
                Vec nb = y0;
                nb[i] += s;
                Vec cn = canonical_orbit_rep(spec, nb);
                int w = id_of.at(cn);
                if (static_cast<int>(v) == w) {
                    out.loops_found = true;
                    continue;
                }
                std::pair<int, int> pr{std::min(static_cast<int>(v), w),
                                       std::max(static_cast<int>(v), w)};
                edges.emplace(pr);
                orbit_classes[pr].insert(edge_key(y0, nb));
            }
    }
    for (const auto& [pr, keys] : orbit_classes)
        if (keys.size() > 1) out.multi_edges_found = true;

    std::vector<std::pair<int, int>> edge_list(edges.begin(), edges.end());
    out.graph = make_graph(static_cast<int>(out.rep_of_vertex.size()), edge_list);
    out.graph.labels.reserve(out.rep_of_vertex.size());
    for (const Vec& rep : out.rep_of_vertex) out.graph.labels.push_back(vec_to_string(rep));
    return out;
}

// ---------------------------------------------------------------------------
// Group file serialization
// ---------------------------------------------------------------------------

std::vector<LatticeAut> parse_group_file(std::istream& in, int& d_out) {
    std::vector<LatticeAut> gens;
    int d = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "d") {
            if (d != -1) throw Error("PARSE_ERROR", "duplicate dimension header");
            if (!(ls >> d) || d <= 0)
                throw Error("PARSE_ERROR", "bad dimension on line " + std::to_string(line_no));
            continue;
        }
        if (head != "perm")
            throw Error("PARSE_ERROR", "expected 'perm' on line " + std::to_string(line_no));
        if (d == -1) throw Error("PARSE_ERROR", "generator before dimension header");
        LatticeAut g;
        g.sigma.images.resize(d);
        g.trans.resize(d);
        for (int i = 0; i < d; ++i)
            if (!(ls >> g.sigma.images[i]))
                throw Error("PARSE_ERROR", "short perm on line " + std::to_string(line_no));
        std::string kw;
        if (!(ls >> kw) || kw != "trans")
            throw Error("PARSE_ERROR", "expected 'trans' on line " + std::to_string(line_no));
        for (int i = 0; i < d; ++i)
            if (!(ls >> g.trans[i]))
                throw Error("PARSE_ERROR", "short trans on line " + std::to_string(line_no));
        try {
            validate(g.sigma);
        } catch (const Error&) {
            throw Error("PARSE_ERROR", "invalid perm on line " + std::to_string(line_no));
        }
        gens.push_back(std::move(g));
    }
    if (d == -1) throw Error("PARSE_ERROR", "missing 'd <dim>' header");
    d_out = d;
    return gens;
}

void write_group_file(int d, const std::vector<LatticeAut>& gens, std::ostream& out) {
    out << "d " << d << "\n";
    for (const auto& g : gens) {
        out << "perm";
        for (int x : g.sigma.images) out << " " << x;
        out << " trans";
        for (long long x : g.trans) out << " " << x;
        out << "\n";
    }
}

}  // namespace latloc
