#include "repvar/su2.hpp"

#include <algorithm>
#include <cmath>

#include "repvar/errors.hpp"

namespace repvar {

namespace {

inline double clamp1(double v) { return std::clamp(v, -1.0, 1.0); }

} // namespace

SU2::SU2(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {
    const double n = std::sqrt(norm_sq());
    if (n < 1e-14) throw validation_error("SU2: zero quaternion cannot be normalized");
    w /= n; x /= n; y /= n; z /= n;
}

SU2 SU2::exp_i(double phi) { return SU2(std::cos(phi), std::sin(phi), 0.0, 0.0); }

SU2 SU2::exp(const Eigen::Vector3d& xi) {
    const double t = xi.norm();
    if (t < 1e-300) return SU2::identity();
    const double s = std::sin(t) / t;
    return SU2(std::cos(t), s * xi[0], s * xi[1], s * xi[2]);
}

bool SU2::is_unit(double tol) const { return std::abs(norm_sq() - 1.0) <= tol; }

Eigen::Matrix<std::complex<double>, 2, 2> SU2::matrix() const {
    using C = std::complex<double>;
    Eigen::Matrix<C, 2, 2> m;
    m(0, 0) = C(w, x);
    m(0, 1) = C(y, z);
    m(1, 0) = C(-y, z);
    m(1, 1) = C(w, -x);
    return m;
}

SU2 operator*(const SU2& a, const SU2& b) {
    return SU2(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
               a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
               a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
               a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w);
}

double SU2::distance(const SU2& other) const {
    const double dw = w - other.w, dx = x - other.x, dy = y - other.y, dz = z - other.z;
    return std::sqrt(dw * dw + dx * dx + dy * dy + dz * dz);
}

double angle(const SU2& m) { return std::acos(clamp1(m.w)); }

SU2 conjugate(const SU2& a, const SU2& b) { return a * b * a.inverse(); }

Eigen::Matrix3d adjoint_matrix(const SU2& m) {
    const double w = m.w, x = m.x, y = m.y, z = m.z;
    Eigen::Matrix3d r;
    r << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
         2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
         2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
    return r;
}

Eigen::Vector3d log_su2(const SU2& m) {
    Eigen::Vector3d v(m.x, m.y, m.z);
    const double s = v.norm();
    if (s < 1e-14) {
        // +-1: log of -1 is any axis times pi; pick the i axis deterministically
        if (m.w < 0.0) return Eigen::Vector3d(M_PI, 0.0, 0.0);
        return Eigen::Vector3d::Zero();
    }
    const double theta = std::atan2(s, m.w);
    return (theta / s) * v;
}

bool AngleTriple::is_valid(double tol) const {
    auto in_range = [tol](double a) { return a >= -tol && a <= M_PI + tol; };
    if (!in_range(phi) || !in_range(psi) || !in_range(eta)) return false;
    return phi + psi + eta <= 2 * M_PI + tol &&
           phi <= psi + eta + tol &&
           psi <= phi + eta + tol &&
           eta <= phi + psi + tol;
}

std::pair<SU2, SU2> pair_from_angles(const AngleTriple& t) {
    if (!t.is_valid())
        throw validation_error("pair_from_angles: angle triple outside the tetrahedron");
    const double den = std::cos(t.phi - t.psi) - std::cos(t.phi + t.psi); // = 2 sin(phi) sin(psi) >= 0
    double a2;
    if (den < 1e-14) {
        // sin(phi) sin(psi) = 0: cos(eta) is pinned, alpha is free
        a2 = 1.0;
    } else {
        a2 = (std::cos(t.phi - t.psi) - std::cos(t.eta)) / den;
        a2 = std::clamp(a2, 0.0, 1.0);
    }
    const double alpha = std::sqrt(a2);
    const double beta = std::sqrt(1.0 - a2);
    const SU2 A = SU2::exp_i(t.phi);
    const SU2 P(alpha, 0.0, beta, 0.0);
    const SU2 B = conjugate(P, SU2::exp_i(t.psi));
    return {A, B};
}

SU2 conjugating_element(const SU2& g, const SU2& h, double tol) {
    if (std::abs(angle(g) - angle(h)) > tol)
        throw validation_error("conjugating_element: angles differ, elements are not conjugate");
    Eigen::Vector3d ag(g.x, g.y, g.z), ah(h.x, h.y, h.z);
    const double ng = ag.norm(), nh = ah.norm();
    if (ng < 1e-12 || nh < 1e-12) return SU2::identity(); // central
    ag /= ng;
    ah /= nh;
    const Eigen::Vector3d cross = ag.cross(ah);
    const double s = cross.norm(), c = ag.dot(ah);
    if (s < 1e-14) {
        if (c > 0.0) return SU2::identity();
        // antipodal axes: rotate by pi about any perpendicular direction
        Eigen::Vector3d perp = ag.cross(Eigen::Vector3d::UnitX());
        if (perp.norm() < 1e-6) perp = ag.cross(Eigen::Vector3d::UnitY());
        perp.normalize();
        return SU2(0.0, perp[0], perp[1], perp[2]);
    }
    const Eigen::Vector3d axis = cross / s;
    const double theta = std::atan2(s, c);
    const double half = 0.5 * theta;
    return SU2(std::cos(half), std::sin(half) * axis[0], std::sin(half) * axis[1],
               std::sin(half) * axis[2]);
}

SU2 haar_random(CounterRng& rng) {
    double q[4];
    for (double& v : q) v = rng.next_gaussian();
    return SU2(q[0], q[1], q[2], q[3]);
}

SU2 haar_random(std::uint64_t seed) {
    CounterRng rng(seed);
    return haar_random(rng);
}

} // namespace repvar
