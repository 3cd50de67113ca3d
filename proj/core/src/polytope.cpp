#include "repvar/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "repvar/errors.hpp"
#include "repvar/rng.hpp"

namespace repvar {

namespace {

// scale so the first nonzero coefficient has absolute value 1; positive
// scaling keeps the inequality direction
Inequality normalized(const Inequality& in) {
    Rational scale(0);
    for (const auto& c : in.a)
        if (c != 0) { scale = abs(c); break; }
    if (scale == 0) scale = (in.b != 0) ? abs(in.b) : Rational(1);
    Inequality out;
    out.a.reserve(in.a.size());
    for (const auto& c : in.a) out.a.push_back(c / scale);
    out.b = in.b / scale;
    return out;
}

bool same_inequality(const Inequality& x, const Inequality& y) {
    return x.b == y.b && x.a == y.a;
}

std::vector<Inequality> dedupe(std::vector<Inequality> list) {
    std::vector<Inequality> out;
    for (auto& in : list) {
        Inequality n = normalized(in);
        bool dup = false;
        for (const auto& seen : out)
            if (same_inequality(seen, n)) { dup = true; break; }
        if (!dup) out.push_back(std::move(n));
    }
    return out;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& x) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
    return s;
}

} // namespace

Polytope::Polytope(int dimension, std::vector<Inequality> inequalities, bool add_cube_bounds)
    : dim_(dimension) {
    if (dimension < 1) throw validation_error("Polytope: dimension must be >= 1");
    for (const auto& in : inequalities)
        if (static_cast<int>(in.a.size()) != dimension)
            throw validation_error("Polytope: inequality dimension mismatch");
    if (add_cube_bounds) {
        for (int i = 0; i < dimension; ++i) {
            Inequality lo, hi;
            lo.a.assign(dimension, Rational(0));
            hi.a.assign(dimension, Rational(0));
            lo.a[i] = -1; lo.b = 0; // t_i >= 0
            hi.a[i] = 1;  hi.b = 1; // t_i <= 1
            inequalities.push_back(std::move(lo));
            inequalities.push_back(std::move(hi));
        }
    }
    ineqs_ = dedupe(std::move(inequalities));
}

bool Polytope::contains(const std::vector<Rational>& t, bool strict) const {
    if (static_cast<int>(t.size()) != dim_)
        throw validation_error("Polytope::contains: point dimension mismatch");
    for (const auto& in : ineqs_) {
        const Rational lhs = dot(in.a, t);
        if (strict ? !(lhs < in.b) : !(lhs <= in.b)) return false;
    }
    return true;
}

Polytope polytope_from_graph(const TrivalentGraph& g) {
    const int e = g.edge_count();
    std::vector<Inequality> ineqs;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto inc = g.incident_edges(v);
        // triangle inequalities t_i <= t_j + t_k
        for (int r = 0; r < 3; ++r) {
            Inequality in;
            in.a.assign(e, Rational(0));
            in.a[inc[r]] += 1;
            in.a[inc[(r + 1) % 3]] -= 1;
            in.a[inc[(r + 2) % 3]] -= 1;
            in.b = 0;
            ineqs.push_back(std::move(in));
        }
        // perimeter t_i + t_j + t_k <= 2
        Inequality per;
        per.a.assign(e, Rational(0));
        for (int r = 0; r < 3; ++r) per.a[inc[r]] += 1;
        per.b = 2;
        ineqs.push_back(std::move(per));
    }
    return Polytope(e, std::move(ineqs));
}

namespace {

// exact solve of a d x d system rows[i] . x = rhs[i]; returns false if singular
bool solve_square(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs,
                  std::vector<Rational>& out) {
    const int d = static_cast<int>(rhs.size());
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int row = col; row < d; ++row)
            if (m[row][col] != 0) { pivot = row; break; }
        if (pivot < 0) return false;
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        const Rational inv = Rational(1) / m[col][col];
        for (int c = col; c < d; ++c) m[col][c] *= inv;
        rhs[col] *= inv;
        for (int row = 0; row < d; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rational f = m[row][col];
            for (int c = col; c < d; ++c) m[row][c] -= f * m[col][c];
            rhs[row] -= f * rhs[col];
        }
    }
    out = std::move(rhs);
    return true;
}

struct DoubleIneq {
    std::vector<double> a;
    double b;
};

// floating prefilter: returns false when the subset is clearly singular or
// the candidate point clearly violates some inequality
bool prefilter(const std::vector<DoubleIneq>& all, const std::vector<int>& subset, int d) {
    // Gaussian elimination in doubles
    std::vector<std::vector<double>> m(d, std::vector<double>(d + 1));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) m[i][j] = all[subset[i]].a[j];
        m[i][d] = all[subset[i]].b;
    }
    for (int col = 0; col < d; ++col) {
        int pivot = col;
        for (int row = col + 1; row < d; ++row)
            if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
        if (std::abs(m[pivot][col]) < 1e-9) return false; // treat as singular
        std::swap(m[col], m[pivot]);
        for (int row = 0; row < d; ++row) {
            if (row == col) continue;
            const double f = m[row][col] / m[col][col];
            if (f == 0.0) continue;
            for (int c = col; c <= d; ++c) m[row][c] -= f * m[col][c];
        }
    }
    std::vector<double> x(d);
    for (int i = 0; i < d; ++i) x[i] = m[i][d] / m[i][i];
    for (const auto& in : all) {
        double lhs = 0.0;
        for (int j = 0; j < d; ++j) lhs += in.a[j] * x[j];
        if (lhs > in.b + 1e-7) return false; // clear violation
    }
    return true;
}

} // namespace

std::vector<std::vector<Rational>> enumerate_vertices(const Polytope& p) {
    const int d = p.dimension();
    const auto& ineqs = p.inequalities();
    const int n = static_cast<int>(ineqs.size());
    if (n < d) return {};

    std::vector<DoubleIneq> dbl;
    dbl.reserve(n);
    for (const auto& in : ineqs) {
        DoubleIneq di;
        di.b = to_double(in.b);
        for (const auto& c : in.a) di.a.push_back(to_double(c));
        dbl.push_back(std::move(di));
    }

    std::vector<std::vector<Rational>> vertices;
    auto record = [&](const std::vector<Rational>& x) {
        for (const auto& v : vertices)
            if (v == x) return;
        vertices.push_back(x);
    };

    std::vector<int> subset(d);
    // iterate over all d-subsets in lexicographic order
    for (int i = 0; i < d; ++i) subset[i] = i;
    while (true) {
        if (prefilter(dbl, subset, d)) {
            std::vector<std::vector<Rational>> rows;
            std::vector<Rational> rhs;
            for (int i : subset) {
                rows.push_back(ineqs[i].a);
                rhs.push_back(ineqs[i].b);
            }
            std::vector<Rational> x;
            if (solve_square(std::move(rows), std::move(rhs), x)) {
                bool feasible = true;
                for (const auto& in : ineqs)
                    if (dot(in.a, x) > in.b) { feasible = false; break; }
                if (feasible) record(x);
            }
        }
        // next subset
        int i = d - 1;
        while (i >= 0 && subset[i] == n - d + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < d; ++j) subset[j] = subset[j - 1] + 1;
    }
    return vertices;
}

namespace {

int affine_rank(const std::vector<std::vector<Rational>>& pts) {
    if (pts.size() <= 1) return 0;
    const int d = static_cast<int>(pts[0].size());
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rational> r(d);
        for (int j = 0; j < d; ++j) r[j] = pts[i][j] - pts[0][j];
        rows.push_back(std::move(r));
    }
    int rank = 0;
    for (int col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int row = rank; row < static_cast<int>(rows.size()); ++row)
            if (rows[row][col] != 0) { pivot = row; break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int row = 0; row < static_cast<int>(rows.size()); ++row) {
            if (row == rank || rows[row][col] == 0) continue;
            const Rational f = rows[row][col] / rows[rank][col];
            for (int c = col; c < d; ++c) rows[row][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

Rational volume_recursive(const std::vector<std::vector<Rational>>& vertices,
                          const std::vector<Inequality>& ineqs, int d) {
    if (vertices.empty()) return Rational(0);
    if (d == 0) return Rational(1);
    if (d == 1) {
        Rational lo = vertices[0][0], hi = vertices[0][0];
        for (const auto& v : vertices) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
        }
        return hi - lo;
    }
    if (affine_rank(vertices) < d) return Rational(0);

    const std::vector<Rational>& apex = vertices[0];
    Rational total(0);
    for (const auto& in : ineqs) {
        const Rational slack = in.b - dot(in.a, apex);
        if (slack == 0) continue; // apex on this facet, zero-height pyramid
        // vertices tight on this inequality
        std::vector<std::vector<Rational>> tight;
        for (const auto& v : vertices)
            if (dot(in.a, v) == in.b) tight.push_back(v);
        if (static_cast<int>(tight.size()) < d) continue;

        // drop the coordinate with the largest |a_k|
        int k = 0;
        for (int j = 1; j < d; ++j)
            if (abs(in.a[j]) > abs(in.a[k])) k = j;
        if (in.a[k] == 0) continue;

        // project tight vertices
        std::vector<std::vector<Rational>> proj_vertices;
        for (const auto& v : tight) {
            std::vector<Rational> pv;
            pv.reserve(d - 1);
            for (int j = 0; j < d; ++j)
                if (j != k) pv.push_back(v[j]);
            proj_vertices.push_back(std::move(pv));
        }
        // restrict the other inequalities to the facet hyperplane:
        // x_k = (b - sum_{j != k} a_j x_j) / a_k
        std::vector<Inequality> proj_ineqs;
        for (const auto& other : ineqs) {
            if (&other == &in) continue;
            Inequality pi;
            pi.b = other.b - other.a[k] * in.b / in.a[k];
            for (int j = 0; j < d; ++j) {
                if (j == k) continue;
                pi.a.push_back(other.a[j] - other.a[k] * in.a[j] / in.a[k]);
            }
            proj_ineqs.push_back(std::move(pi));
        }
        const Rational facet_vol = volume_recursive(proj_vertices, dedupe(proj_ineqs), d - 1);
        total += slack * facet_vol / abs(in.a[k]);
    }
    return total / d;
}

} // namespace

Rational exact_volume(const Polytope& p) {
    if (p.dimension() > 6)
        throw validation_error("exact_volume: dimension capped at 6, use monte_carlo");
    const auto vertices = enumerate_vertices(p);
    if (vertices.empty()) throw validation_error("exact_volume: empty polytope");
    return volume_recursive(vertices, p.inequalities(), p.dimension());
}

McVolume monte_carlo_volume(const Polytope& p, std::uint64_t seed, std::uint64_t samples,
                            int workers) {
    if (samples == 0) throw validation_error("monte_carlo_volume: need samples > 0");
    const int d = p.dimension();
    std::vector<DoubleIneq> dbl;
    for (const auto& in : p.inequalities()) {
        DoubleIneq di;
        di.b = to_double(in.b);
        for (const auto& c : in.a) di.a.push_back(to_double(c));
        dbl.push_back(std::move(di));
    }

    if (workers <= 0)
        workers = static_cast<int>(std::min<unsigned>(std::thread::hardware_concurrency(), 8));
    if (workers < 1) workers = 1;

    std::vector<std::uint64_t> hits(workers, 0);
    auto run = [&](int widx, std::uint64_t begin, std::uint64_t end) {
        std::uint64_t h = 0;
        std::vector<double> t(d);
        for (std::uint64_t i = begin; i < end; ++i) {
            for (int j = 0; j < d; ++j)
                t[j] = CounterRng::uniform_at(seed, i * static_cast<std::uint64_t>(d) + j);
            bool inside = true;
            for (const auto& in : dbl) {
                double lhs = 0.0;
                for (int j = 0; j < d; ++j) lhs += in.a[j] * t[j];
                if (lhs > in.b) { inside = false; break; }
            }
            if (inside) ++h;
        }
        hits[widx] = h;
    };

    std::vector<std::thread> pool;
    const std::uint64_t chunk = samples / workers;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = (w + 1 == workers) ? samples : begin + chunk;
        pool.emplace_back(run, w, begin, end);
    }
    for (auto& th : pool) th.join();

    McVolume out;
    out.seed = seed;
    out.samples = samples;
    for (auto h : hits) out.hits += h;
    const double frac = static_cast<double>(out.hits) / static_cast<double>(samples);
    out.estimate = frac;
    out.std_error = std::sqrt(std::max(frac * (1.0 - frac), 1e-300) / static_cast<double>(samples));
    return out;
}

double PiValue::value() const { return to_double(mantissa) * std::pow(M_PI, pi_power); }

std::string PiValue::to_string() const {
    std::string s = to_fraction_string(mantissa);
    if (pi_power == 1) s += " * pi";
    else if (pi_power != 0) s += " * pi^" + std::to_string(pi_power);
    return s;
}

PiValue symplectic_volume(int genus, const Rational& vol_t) {
    if (genus < 2) throw validation_error("symplectic_volume: genus must be >= 2");
    PiValue v;
    // (2 pi)^{3g-3} * 2^{2g-3} * vol_t * pi^{3g-3}
    v.mantissa = vol_t * Rational(BigInt(1) << (5 * genus - 6));
    v.pi_power = 6 * genus - 6;
    return v;
}

BSLattice::BSLattice(const TrivalentGraph& g) : dim_(g.edge_count()) {
    for (int i = 0; i < dim_; ++i) {
        std::vector<Rational> e(dim_, Rational(0));
        e[i] = 1;
        gens_.push_back(std::move(e));
    }
    // half-period generators: one per independent mod-2 cycle of the graph.
    // Spanning-tree construction; loops and parallel edges give their own cycles.
    const int nv = g.vertex_count();
    std::vector<int> parent_vertex(nv, -1), parent_edge(nv, -1);
    std::vector<bool> in_tree(g.edge_count(), false), seen(nv, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& ed = g.edges()[e];
            int other = -1;
            if (ed[0] == v) other = ed[1];
            else if (ed[1] == v) other = ed[0];
            if (other < 0 || seen[other] || in_tree[e]) continue;
            if (other == v) continue; // loop, never a tree edge
            in_tree[e] = true;
            seen[other] = true;
            parent_vertex[other] = v;
            parent_edge[other] = e;
            stack.push_back(other);
        }
    }
    auto path_to_root = [&](int v, std::vector<int>& cyc) {
        while (parent_edge[v] >= 0) {
            cyc[parent_edge[v]] ^= 1;
            v = parent_vertex[v];
        }
        return v;
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        if (in_tree[e]) continue;
        std::vector<int> cyc(g.edge_count(), 0);
        cyc[e] ^= 1;
        path_to_root(g.edges()[e][0], cyc);
        path_to_root(g.edges()[e][1], cyc);
        std::vector<Rational> half(dim_, Rational(0));
        for (int i = 0; i < dim_; ++i)
            if (cyc[i]) half[i] = Rational(1, 2);
        gens_.push_back(std::move(half));
    }
}

BigInt BSLattice::index_from_determinant() const {
    // work with 2 * generators (integer matrix); det(2 Lambda) = 2^d det(Lambda)
    std::vector<std::vector<BigInt>> rows;
    for (const auto& g : gens_) {
        std::vector<BigInt> r;
        for (const auto& c : g) {
            const Rational doubled = c * 2;
            if (denominator(doubled) != 1)
                throw validation_error("BSLattice: generators not half-integral");
            r.push_back(numerator(doubled));
        }
        rows.push_back(std::move(r));
    }
    // integer row reduction (Hermite-style) to upper triangular
    const int d = dim_;
    int top = 0;
    BigInt det(1);
    for (int col = 0; col < d; ++col) {
        // euclid out the column below `top`
        while (true) {
            int nonzero = -1;
            for (int row = top + 1; row < static_cast<int>(rows.size()); ++row)
                if (rows[row][col] != 0) { nonzero = row; break; }
            if (rows[top][col] == 0) {
                if (nonzero < 0) break;
                std::swap(rows[top], rows[nonzero]);
                continue;
            }
            if (nonzero < 0) break;
            const BigInt q = rows[nonzero][col] / rows[top][col];
            for (int c = 0; c < d; ++c) rows[nonzero][c] -= q * rows[top][c];
            if (rows[nonzero][col] != 0) std::swap(rows[top], rows[nonzero]);
        }
        if (rows[top][col] == 0)
            throw validation_error("BSLattice: generator matrix is singular");
        det *= rows[top][col];
        ++top;
        if (top >= static_cast<int>(rows.size())) break;
    }
    if (det < 0) det = -det;
    // index = det(Z^d) / det(Lambda) = 2^d / det(2 Lambda basis)
    BigInt pow2 = BigInt(1) << dim_;
    if (pow2 % det != 0)
        throw validation_error("BSLattice: Z^E is not a sublattice of the span");
    return pow2 / det;
}

BigInt lattice_index(const TrivalentGraph& g) {
    const int h1 = g.edge_count() - g.incidence_rank_mod2();
    return BigInt(1) << h1;
}

} // namespace repvar
