#include "repvar/quantize.hpp"

#include <algorithm>
#include <cmath>

#include "repvar/errors.hpp"
#include "repvar/polytope.hpp"

namespace repvar {

double HolonomyPhase::defect() const {
    const double two_pi = 2.0 * M_PI;
    double r = std::fmod(angle, two_pi);
    if (r < 0) r += two_pi;
    return std::min(r, two_pi - r);
}

HolonomyPhase prequantum_holonomy(const TrivalentGraph& g, const LatticePath& path,
                                  const std::vector<double>& alpha, int level) {
    if (level < 1) throw validation_error("prequantum_holonomy: level must be >= 1");
    if (static_cast<int>(alpha.size()) != g.edge_count())
        throw validation_error("prequantum_holonomy: one angle per edge required");
    for (double a : alpha)
        if (!(a > 0.0 && a < M_PI))
            throw validation_error("prequantum_holonomy: angles must lie strictly in (0, pi)");

    if (path.kind == LatticePath::EdgeLoop) {
        if (path.index < 0 || path.index >= g.edge_count())
            throw validation_error("prequantum_holonomy: edge index out of range");
        return {-2.0 * level * alpha[path.index]};
    }
    if (path.index < 0 || path.index >= g.vertex_count())
        throw validation_error("prequantum_holonomy: vertex index out of range");
    const auto inc = g.incident_edges(path.index);
    return {-static_cast<double>(level) * (alpha[inc[0]] + alpha[inc[1]] + alpha[inc[2]])};
}

int halfform_holonomy(const LatticePath& path) {
    return path.kind == LatticePath::EdgeLoop ? +1 : -1;
}

namespace {

struct VertexEdges {
    std::array<int, 3> e;
};

bool vertex_ok_full(int a, int b, int c, int level) {
    if (a > b + c || b > a + c || c > a + b) return false;
    if ((a + b + c) % 2 == 0) return false;
    return a + b + c <= 2 * level;
}

// partial feasibility with one label pending
bool vertex_ok_partial(int a, int b, int level) {
    const int lo = std::max(1, std::abs(a - b));
    const int hi = std::min({level - 1, a + b, 2 * level - a - b});
    return lo <= hi;
}

} // namespace

std::vector<BSLabeling> bs_fibers(const TrivalentGraph& g, int level) {
    if (level < 1) throw validation_error("bs_fibers: level must be >= 1");
    const int ne = g.edge_count();
    std::vector<VertexEdges> verts;
    for (int v = 0; v < g.vertex_count(); ++v) verts.push_back({g.incident_edges(v)});

    std::vector<BSLabeling> out;
    std::vector<int> sigma(ne, 0);

    auto consistent = [&](int assigned) {
        for (const auto& vx : verts) {
            int known[3], nk = 0;
            for (int r = 0; r < 3; ++r)
                if (vx.e[r] < assigned) known[nk++] = sigma[vx.e[r]];
            if (nk == 3) {
                if (!vertex_ok_full(known[0], known[1], known[2], level)) return false;
            } else if (nk == 2) {
                if (!vertex_ok_partial(known[0], known[1], level)) return false;
            }
        }
        return true;
    };

    auto dfs = [&](auto&& self, int edge) -> void {
        if (edge == ne) {
            out.push_back({sigma});
            return;
        }
        for (int s = 1; s <= level - 1; ++s) {
            sigma[edge] = s;
            if (consistent(edge + 1)) self(self, edge + 1);
        }
        sigma[edge] = 0;
    };
    if (level >= 2) dfs(dfs, 0);
    return out;
}

std::vector<BSLabeling> bs_fibers_via_holonomy(const TrivalentGraph& g, int level, double tol) {
    if (level < 1) throw validation_error("bs_fibers_via_holonomy: level must be >= 1");
    const int ne = g.edge_count();
    const Polytope delta = polytope_from_graph(g);

    // clear denominators once: sum a_i sigma_i / K < b  <=>  sum a'_i sigma_i < b' K
    struct IntIneq {
        std::vector<long long> a;
        long long b;
    };
    std::vector<IntIneq> scaled;
    for (const auto& in : delta.inequalities()) {
        BigInt lcm = denominator(in.b);
        for (const auto& c : in.a) lcm = boost::multiprecision::lcm(lcm, denominator(c));
        IntIneq si;
        for (const auto& c : in.a)
            si.a.push_back(static_cast<long long>(numerator(c * Rational(lcm))));
        si.b = static_cast<long long>(numerator(in.b * Rational(lcm)));
        scaled.push_back(std::move(si));
    }
    auto strictly_inside = [&](const std::vector<int>& s) {
        for (const auto& in : scaled) {
            long long lhs = 0;
            for (int i = 0; i < ne; ++i) lhs += in.a[i] * s[i];
            if (!(lhs < in.b * level)) return false;
        }
        return true;
    };

    std::vector<BSLabeling> out;
    std::vector<int> sigma(ne, 1);
    if (level < 2) return out;

    while (true) {
        // strict interior of the moduli polytope, checked in exact arithmetic
        if (strictly_inside(sigma)) {
            std::vector<double> alpha(ne);
            for (int i = 0; i < ne; ++i) alpha[i] = M_PI * sigma[i] / level;
            bool trivial = true;
            for (int e = 0; e < ne && trivial; ++e) {
                const LatticePath path{LatticePath::EdgeLoop, e};
                const HolonomyPhase h =
                    prequantum_holonomy(g, path, alpha, level).times_sign(halfform_holonomy(path));
                trivial = h.is_trivial(tol);
            }
            for (int v = 0; v < g.vertex_count() && trivial; ++v) {
                const LatticePath path{LatticePath::VertexLoop, v};
                const HolonomyPhase h =
                    prequantum_holonomy(g, path, alpha, level).times_sign(halfform_holonomy(path));
                trivial = h.is_trivial(tol);
            }
            if (trivial) out.push_back({sigma});
        }
        // next tuple in [1, level-1]^ne, lexicographic
        int i = ne - 1;
        while (i >= 0 && sigma[i] == level - 1) {
            sigma[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++sigma[i];
    }
    return out;
}

long long verlinde_count(int genus, int level) {
    if (genus < 2) throw validation_error("verlinde_count: genus must be >= 2");
    if (level < 1) throw validation_error("verlinde_count: level must be >= 1");
    constexpr long double pi_l = 3.141592653589793238462643383279502884L;
    long double sum = 0.0L;
    const long double half_level = static_cast<long double>(level) / 2.0L;
    for (int j = 1; j < level; ++j) {
        const long double s = std::sin(pi_l * j / level);
        sum += std::pow(half_level, genus - 1) * std::pow(s, 2 - 2 * genus);
    }
    const long double rounded = std::round(sum);
    if (std::abs(sum - rounded) > 1e-6L)
        throw tolerance_error("verlinde_count: rounding residual above 1e-6");
    return static_cast<long long>(rounded);
}

std::vector<int> sphere_bs(int alpha, bool corrected) {
    if (alpha < 1) throw validation_error("sphere_bs: alpha must be a positive integer");
    std::vector<int> out;
    for (int l = -alpha; l <= alpha; ++l) {
        const bool matches = ((l % 2 + 2) % 2) == ((alpha % 2 + 2) % 2);
        if (corrected ? !matches : matches) out.push_back(l);
    }
    return out;
}

std::vector<double> oscillator_bs(double c, int max_k) {
    if (!(c > 0.0)) throw validation_error("oscillator_bs: c must be positive");
    std::vector<double> out;
    for (int k = 1; k <= max_k; k += 2) out.push_back(k / c);
    return out;
}

double cs_lens_value(int order) {
    if (order < 1) throw validation_error("cs_lens_value: order must be >= 1");
    return 4.0 * M_PI * M_PI / order;
}

} // namespace repvar
