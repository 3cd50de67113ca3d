#include "repvar/knots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "repvar/errors.hpp"

namespace repvar {

TracePolynomial two_bridge_polynomial(int a, int b) {
    const Word w = two_bridge_word(a, b); // validates (a, b)
    TracePolynomial sum;
    const int half = (a - 1) / 2;
    for (int n = 0; n <= half; ++n) {
        TracePolynomial fn;
        if (2 * n >= static_cast<int>(w.size())) {
            fn = TracePolynomial::constant(1); // trimmed to the trivial word
        } else {
            const Word wn(w.begin() + n, w.end() - n);
            fn = trace_polynomial(wn).substitute_equal_traces();
        }
        if (n % 2 == 0)
            sum += fn;
        else
            sum -= fn;
    }
    return sum.sign_normalized();
}

bool two_bridge_identity_holds(int a, int b) {
    const Word w = two_bridge_word(a, b);
    const Word rel = concat(concat(w, Word{1}), concat(inverse_word(w), Word{-2}));
    TracePolynomial lhs = trace_polynomial(rel).substitute_equal_traces();
    lhs -= TracePolynomial::constant(2);

    // abelian factor x^2 - y - 2 in the (x, y) encoding
    TracePolynomial abelian = TracePolynomial::monomial(2, 0, 0);
    abelian -= TracePolynomial::monomial(0, 1, 0);
    abelian -= TracePolynomial::constant(2);

    const TracePolynomial f = two_bridge_polynomial(a, b);
    return lhs == abelian * f * f;
}

std::vector<ArcDescription> torus_knot_arcs(int a, int b) {
    if (a < 2 || b < 2 || std::gcd(a, b) != 1)
        throw validation_error("torus_knot_arcs: a, b must be coprime and >= 2");
    std::vector<ArcDescription> arcs;
    for (int k = 1; k < a; ++k)
        for (int l = 1; l < b; ++l) {
            if ((k - l) % 2 != 0) continue;
            ArcDescription arc;
            arc.k = k;
            arc.l = l;
            const long kb = static_cast<long>(k) * b;
            const long la = static_cast<long>(l) * a;
            const long ab = static_cast<long>(a) * b;
            arc.lo_over_pi = Rational(std::abs(kb - la), ab);
            arc.hi_over_pi = Rational(std::min(kb + la, 2 * ab - kb - la), ab);
            arcs.push_back(std::move(arc));
        }
    return arcs;
}

namespace {

constexpr double kZeroTol = 1e-9;
constexpr double kAbelianTol = 1e-7;

struct Refiner {
    const TracePolynomial& p;
    // returns refined point on the segment, or nullopt if refinement stalls
    bool refine(double ax, double ay, double bx, double by, double& ox, double& oy) const {
        double fa = p.evaluate(ax, ay);
        double fb = p.evaluate(bx, by);
        if (std::abs(fa) < kZeroTol) { ox = ax; oy = ay; return true; }
        if (std::abs(fb) < kZeroTol) { ox = bx; oy = by; return true; }
        if ((fa < 0) == (fb < 0)) return false;
        for (int it = 0; it < 200; ++it) {
            const double mx = 0.5 * (ax + bx), my = 0.5 * (ay + by);
            const double fm = p.evaluate(mx, my);
            if (std::abs(fm) < kZeroTol) { ox = mx; oy = my; return true; }
            if ((fa < 0) != (fm < 0)) {
                bx = mx; by = my;
            } else {
                ax = mx; ay = my; fa = fm;
            }
        }
        return false;
    }
};

} // namespace

std::vector<ZeroPoint> zero_set(const TracePolynomial& poly, int resolution) {
    if (poly.is_zero()) throw validation_error("zero_set: zero polynomial");
    if (resolution < 16) throw validation_error("zero_set: resolution must be >= 16");

    const Refiner refiner{poly};
    std::vector<ZeroPoint> points;
    auto push = [&](double x, double y) {
        if (x < -2 - 1e-12 || x > 2 + 1e-12) return;
        if (y < x * x - 2 - 1e-9 || y > 2 + 1e-12) return;
        for (const auto& q : points)
            if (std::abs(q.x - x) < 1e-7 && std::abs(q.y - y) < 1e-7) return;
        points.push_back({x, y, std::abs(y - (x * x - 2)) < kAbelianTol});
    };

    const int n = resolution;
    // columns: fixed x, scan y over [x^2 - 2, 2]
    for (int i = 0; i < n; ++i) {
        const double x = -2.0 + 4.0 * i / (n - 1);
        const double ylo = x * x - 2.0;
        for (int j = 0; j + 1 < n; ++j) {
            const double y0 = ylo + (2.0 - ylo) * j / (n - 1);
            const double y1 = ylo + (2.0 - ylo) * (j + 1) / (n - 1);
            double ox, oy;
            if (refiner.refine(x, y0, x, y1, ox, oy)) push(ox, oy);
        }
    }
    // rows: fixed y, scan x over [-sqrt(y+2), sqrt(y+2)]
    for (int j = 0; j < n; ++j) {
        const double y = -2.0 + 4.0 * j / (n - 1);
        const double xmax = std::sqrt(std::max(0.0, y + 2.0));
        for (int i = 0; i + 1 < n; ++i) {
            const double x0 = -xmax + 2.0 * xmax * i / (n - 1);
            const double x1 = -xmax + 2.0 * xmax * (i + 1) / (n - 1);
            double ox, oy;
            if (refiner.refine(x0, y, x1, y, ox, oy)) push(ox, oy);
        }
    }
    // the abelian boundary curve y = x^2 - 2 itself
    for (int i = 0; i + 1 < n; ++i) {
        const double x0 = -2.0 + 4.0 * i / (n - 1);
        const double x1 = -2.0 + 4.0 * (i + 1) / (n - 1);
        double ox, oy;
        if (refiner.refine(x0, x0 * x0 - 2.0, x1, x1 * x1 - 2.0, ox, oy)) {
            // re-project onto the parabola after bisection along the chord
            push(ox, ox * ox - 2.0);
        }
    }

    std::sort(points.begin(), points.end(), [](const ZeroPoint& a, const ZeroPoint& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    return points;
}

Representation rep_from_point(int a, int b, double x, double y) {
    if (!(x > -2.0 && x < 2.0))
        throw validation_error("rep_from_point: x outside (-2, 2)");
    if (y < x * x - 2.0 - 1e-9 || y > 2.0 + 1e-12)
        throw validation_error("rep_from_point: (x, y) outside the region x^2 - 2 <= y <= 2");

    const TracePolynomial f = two_bridge_polynomial(a, b);
    const bool on_abelian = std::abs(y - (x * x - 2.0)) < 1e-9;
    if (!on_abelian && std::abs(f.evaluate(x, y)) > 1e-6)
        throw tolerance_error("rep_from_point: F_{a,b}(x, y) is not zero, point off the variety");

    const double phi = std::acos(std::clamp(x / 2.0, -1.0, 1.0));
    const double eta = std::acos(std::clamp(y / 2.0, -1.0, 1.0));
    auto [u, v] = pair_from_angles({phi, phi, eta});

    const Presentation p = two_bridge_group(a, b);
    const Representation rep = Representation::raw({u, v});
    const SU2 res = evaluate_word(rep, p.relators[0]);
    if (res.distance(SU2::identity()) > 1e-6)
        throw tolerance_error("rep_from_point: relator residual above 1e-6, (x, y) not on the variety");
    return rep;
}

} // namespace repvar
