#include "repvar/cohomology.hpp"

#include <Eigen/SVD>

#include <cmath>

#include "repvar/errors.hpp"

namespace repvar {

TwistedComplex build_complex(const Presentation& p, const Representation& rep) {
    if (rep.n_generators() != p.n_generators)
        throw validation_error("build_complex: representation does not match presentation");
    const int n = p.n_generators;
    const int m = static_cast<int>(p.relators.size());

    TwistedComplex c;
    c.n = n;
    c.m = m;
    c.d0.resize(3 * n, 3);
    for (int i = 0; i < n; ++i)
        c.d0.block<3, 3>(3 * i, 0) = Eigen::Matrix3d::Identity() - adjoint_matrix(rep.images[i]);

    c.d1.resize(3 * m, 3 * n);
    for (int j = 0; j < m; ++j)
        for (int i = 1; i <= n; ++i)
            c.d1.block<3, 3>(3 * j, 3 * (i - 1)) = fox_block(rep, p.relators[j], i);
    return c;
}

namespace {

struct RankInfo {
    int rank = 0;
    std::vector<double> sv;
    double gap = std::numeric_limits<double>::infinity();
    bool near_threshold = false;
};

RankInfo svd_rank(const Eigen::MatrixXd& m, double tol, double* threshold_out) {
    RankInfo info;
    if (m.rows() == 0 || m.cols() == 0) {
        if (threshold_out) *threshold_out = tol;
        return info;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    const double smax = s.size() ? s(0) : 0.0;
    const double threshold = tol * std::max(1.0, smax);
    if (threshold_out) *threshold_out = threshold;
    double last_kept = 0.0, first_dropped = 0.0;
    for (int i = 0; i < s.size(); ++i) {
        info.sv.push_back(s(i));
        if (s(i) > threshold) {
            ++info.rank;
            last_kept = s(i);
        } else if (first_dropped == 0.0) {
            first_dropped = s(i);
        }
        if (s(i) > threshold / 10.0 && s(i) < threshold * 10.0) info.near_threshold = true;
    }
    if (info.rank > 0 && first_dropped > 0.0) info.gap = last_kept / first_dropped;
    return info;
}

} // namespace

CohomologySummary cohomology_dims(const TwistedComplex& c, double tol) {
    CohomologySummary s;
    double thr0 = 0.0, thr1 = 0.0;
    const RankInfo r0 = svd_rank(c.d0, tol, &thr0);
    const RankInfo r1 = svd_rank(c.d1, tol, &thr1);
    s.h0 = 3 - r0.rank;
    s.h1 = (3 * c.n - r1.rank) - r0.rank;
    s.h2 = 3 * c.m - r1.rank;
    s.euler = s.h0 - s.h1 + s.h2;
    s.sv_d0 = r0.sv;
    s.sv_d1 = r1.sv;
    s.tolerance = std::max(thr0, thr1);
    s.spectral_gap = std::min(r0.gap, r1.gap);
    s.ill_conditioned = r0.near_threshold || r1.near_threshold;
    return s;
}

RepClass classify(const Representation& rep, double tol) {
    const int n = rep.n_generators();
    Eigen::MatrixXd d0(3 * n, 3);
    for (int i = 0; i < n; ++i)
        d0.block<3, 3>(3 * i, 0) = Eigen::Matrix3d::Identity() - adjoint_matrix(rep.images[i]);
    const RankInfo r = svd_rank(d0, tol, nullptr);
    const int h0 = 3 - r.rank;
    switch (h0) {
        case 3: return RepClass::Central;
        case 1: return RepClass::Abelian;
        case 0: return RepClass::Irreducible;
        default:
            throw tolerance_error("classify: ambiguous fixed-space dimension " + std::to_string(h0));
    }
}

bool is_irreducible(const Representation& rep, double tol) {
    return classify(rep, tol) == RepClass::Irreducible;
}

bool is_central(const Representation& rep, double tol) {
    return classify(rep, tol) == RepClass::Central;
}

std::string to_string(RepClass c) {
    switch (c) {
        case RepClass::Central: return "central";
        case RepClass::Abelian: return "abelian";
        case RepClass::Irreducible: return "irreducible";
    }
    return "?";
}

RegularityReport is_regular(const Presentation& knot, const Representation& rep,
                            const Word& meridian, const Word& longitude, double tol) {
    const SU2 m = evaluate_word(rep, meridian);
    const SU2 l = evaluate_word(rep, longitude);
    if ((m * l).distance(l * m) > 1e-8)
        throw validation_error("is_regular: peripheral words do not commute at this representation");

    RegularityReport report;
    report.irreducible = (classify(rep, tol) == RepClass::Irreducible);

    const CohomologySummary hm = cohomology_dims(build_complex(knot, rep), tol);
    const Representation boundary_rep = Representation::raw({m, l});
    const CohomologySummary hb =
        cohomology_dims(build_complex(torus_group(), boundary_rep), tol);

    report.h1_manifold = hm.h1;
    report.h1_boundary = hb.h1;
    report.regular = report.irreducible && (2 * hm.h1 == hb.h1);
    return report;
}

namespace {

// value of a cochain on a single signed letter, with the crossed rule for inverses
Eigen::Vector3d letter_value(const Representation& rep,
                             const std::vector<Eigen::Vector3d>& u, std::int32_t l) {
    const int g = std::abs(l) - 1;
    if (l > 0) return u[g];
    return -(adjoint_matrix(rep.images[g].inverse()) * u[g]);
}

double fan_pairing(const Presentation& p, const Representation& rep,
                   const std::vector<Eigen::Vector3d>& u,
                   const std::vector<Eigen::Vector3d>& v) {
    const Word& rel = p.relators[0];
    double total = 0.0;
    Eigen::Vector3d ext_u = Eigen::Vector3d::Zero();
    SU2 prefix = SU2::identity();
    bool first = true;
    for (auto l : rel) {
        if (!first) {
            const Eigen::Vector3d dv = adjoint_matrix(prefix) * letter_value(rep, v, l);
            total += su2_inner(ext_u, dv);
        }
        first = false;
        const int g = std::abs(l) - 1;
        if (l > 0) {
            ext_u += adjoint_matrix(prefix) * u[g];
            prefix *= rep.images[g];
        } else {
            prefix *= rep.images[g].inverse();
            ext_u -= adjoint_matrix(prefix) * u[g];
        }
    }
    return total;
}

void check_cocycle(const TwistedComplex& c, const std::vector<Eigen::Vector3d>& u,
                   const char* name) {
    Eigen::VectorXd stacked(3 * c.n);
    for (int i = 0; i < c.n; ++i) stacked.segment<3>(3 * i) = u[i];
    const double scale = std::max(1.0, stacked.norm());
    if ((c.d1 * stacked).norm() > 1e-8 * scale * std::max(1.0, c.d1.norm()))
        throw validation_error(std::string("cup_pairing: ") + name + " is not a 1-cocycle");
}

} // namespace

double cup_pairing(const Presentation& p, const Representation& rep,
                   const std::vector<Eigen::Vector3d>& u,
                   const std::vector<Eigen::Vector3d>& v) {
    if (p.relators.size() != 1)
        throw validation_error("cup_pairing: presentation must have exactly one relator");
    if (static_cast<int>(u.size()) != p.n_generators ||
        static_cast<int>(v.size()) != p.n_generators)
        throw validation_error("cup_pairing: cochains must have one value per generator");
    const TwistedComplex c = build_complex(p, rep);
    check_cocycle(c, u, "u");
    check_cocycle(c, v, "v");
    return 0.5 * (fan_pairing(p, rep, u, v) - fan_pairing(p, rep, v, u));
}

Eigen::MatrixXd harmonic_basis(const TwistedComplex& c, double tol) {
    // kernel of d1
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(c.d1, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double thr1 = tol * std::max(1.0, s.size() ? s(0) : 0.0);
    int rank1 = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s(i) > thr1) ++rank1;
    Eigen::MatrixXd kernel;
    if (c.d1.rows() == 0) {
        kernel = Eigen::MatrixXd::Identity(3 * c.n, 3 * c.n);
    } else {
        kernel = svd.matrixV().rightCols(3 * c.n - rank1);
    }

    // subtract the image of d0
    Eigen::JacobiSVD<Eigen::MatrixXd> svd0(c.d0, Eigen::ComputeFullU);
    const auto& s0 = svd0.singularValues();
    const double thr0 = tol * std::max(1.0, s0.size() ? s0(0) : 0.0);
    int rank0 = 0;
    for (int i = 0; i < s0.size(); ++i)
        if (s0(i) > thr0) ++rank0;
    const Eigen::MatrixXd im = svd0.matrixU().leftCols(rank0);

    Eigen::MatrixXd proj = kernel - im * (im.transpose() * kernel);
    // orthonormalize and keep the h1 significant directions
    Eigen::JacobiSVD<Eigen::MatrixXd> svdp(proj, Eigen::ComputeThinU);
    const auto& sp = svdp.singularValues();
    int h1 = 0;
    for (int i = 0; i < sp.size(); ++i)
        if (sp(i) > tol * std::max(1.0, sp(0))) ++h1;
    return svdp.matrixU().leftCols(h1);
}

std::vector<Eigen::Vector3d> unstack_cochain(const Eigen::VectorXd& v) {
    if (v.size() % 3 != 0) throw validation_error("unstack_cochain: length not a multiple of 3");
    std::vector<Eigen::Vector3d> out(v.size() / 3);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = v.segment<3>(3 * static_cast<int>(i));
    return out;
}

Eigen::MatrixXd cup_pairing_matrix(const Presentation& p, const Representation& rep,
                                   const Eigen::MatrixXd& basis) {
    const int h = static_cast<int>(basis.cols());
    Eigen::MatrixXd omega(h, h);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j)
            omega(i, j) = cup_pairing(p, rep, unstack_cochain(basis.col(i)),
                                      unstack_cochain(basis.col(j)));
    return omega;
}

} // namespace repvar
