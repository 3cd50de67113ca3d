#include "repvar/torsion.hpp"

#include <Eigen/LU>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "repvar/errors.hpp"
#include "repvar/rng.hpp"

namespace repvar {

int BasedComplex::dim(int i) const {
    const int nd = static_cast<int>(differentials.size());
    if (i < 0 || i > nd) throw validation_error("BasedComplex: degree out of range");
    if (i < nd) return static_cast<int>(differentials[i].cols());
    return static_cast<int>(differentials[nd - 1].rows());
}

void BasedComplex::validate(double tol) const {
    if (differentials.empty())
        throw validation_error("BasedComplex: need at least one differential");
    for (std::size_t i = 0; i + 1 < differentials.size(); ++i) {
        if (differentials[i + 1].cols() != differentials[i].rows())
            throw validation_error("BasedComplex: differential shapes do not chain");
        const double prod = (differentials[i + 1] * differentials[i]).norm();
        const double scale =
            std::max(1.0, differentials[i + 1].norm() * differentials[i].norm());
        if (prod > tol * scale)
            throw validation_error("BasedComplex: D_{i+1} D_i != 0");
    }
    if (!homology.empty() && homology.size() != differentials.size() + 1)
        throw validation_error("BasedComplex: homology must list one basis per degree");
}

namespace {

constexpr double kRankTol = 1e-10;

// Greedy selection of column indices of M whose images are independent,
// scanning candidates in the given order.  Returns the pivot index list.
std::vector<int> pivot_columns(const Eigen::MatrixXd& m, const std::vector<int>& order) {
    std::vector<int> pivots;
    if (m.rows() == 0 || m.cols() == 0) return pivots;
    Eigen::MatrixXd q(m.rows(), std::min(m.rows(), m.cols()));
    int r = 0;
    const double scale = std::max(1.0, m.norm());
    for (int idx : order) {
        Eigen::VectorXd v = m.col(idx);
        for (int j = 0; j < r; ++j) v -= q.col(j).dot(v) * q.col(j);
        // re-orthogonalize once for numerical safety
        for (int j = 0; j < r; ++j) v -= q.col(j).dot(v) * q.col(j);
        if (v.norm() > kRankTol * scale) {
            q.col(r) = v / v.norm();
            pivots.push_back(idx);
            ++r;
            if (r == q.cols()) break;
        }
    }
    return pivots;
}

Eigen::MatrixXd kernel_projector(const Eigen::MatrixXd& d) {
    // orthogonal projector onto ker d
    if (d.rows() == 0) return Eigen::MatrixXd::Identity(d.cols(), d.cols());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(d, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double thr = kRankTol * std::max(1.0, s.size() ? s(0) : 0.0);
    int rank = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s(i) > thr) ++rank;
    const Eigen::MatrixXd vk = svd.matrixV().rightCols(d.cols() - rank);
    return vk * vk.transpose();
}

} // namespace

TorsionResult torsion(const BasedComplex& c, std::uint64_t pivot_seed) {
    c.validate();
    const int nspaces = c.spaces();
    CounterRng rng(pivot_seed);

    // pivot preimage bases b^i for each differential
    std::vector<std::vector<int>> pivots(nspaces - 1);
    for (int i = 0; i + 1 < nspaces; ++i) {
        const auto& d = c.differentials[i];
        std::vector<int> order(d.cols());
        std::iota(order.begin(), order.end(), 0);
        if (pivot_seed != 0) {
            for (int j = static_cast<int>(order.size()) - 1; j > 0; --j)
                std::swap(order[j], order[rng.next_u64() % (j + 1)]);
        }
        pivots[i] = pivot_columns(d, order);
    }

    double log_mag = 0.0;
    int sign = +1;
    for (int i = 0; i < nspaces; ++i) {
        const int dim = c.dim(i);
        const int rank_out = (i + 1 < nspaces) ? static_cast<int>(pivots[i].size()) : 0;
        const int rank_in = (i > 0) ? static_cast<int>(pivots[i - 1].size()) : 0;
        const int hdim = dim - rank_in - rank_out;
        if (hdim < 0) throw tolerance_error("torsion: inconsistent ranks");

        std::vector<Eigen::VectorXd> hlift;
        if (hdim > 0) {
            if (c.homology.empty() || static_cast<int>(c.homology[i].size()) != hdim)
                throw validation_error(
                    "torsion: cohomology is nonzero, supply matching basis vectors");
            const Eigen::MatrixXd proj =
                (i + 1 < nspaces) ? kernel_projector(c.differentials[i])
                                  : Eigen::MatrixXd::Identity(dim, dim);
            for (const auto& h : c.homology[i]) {
                if (h.size() != dim)
                    throw validation_error("torsion: homology vector has wrong dimension");
                hlift.push_back(proj * h);
            }
        }

        Eigen::MatrixXd basis(dim, dim);
        int col = 0;
        for (int j = 0; j < rank_in; ++j)
            basis.col(col++) = c.differentials[i - 1].col(pivots[i - 1][j]).eval();
        // columns of D_{i-1} indexed by pivots are exactly D_{i-1} b^{i-1}
        for (const auto& h : hlift) basis.col(col++) = h;
        for (int j = 0; j < rank_out; ++j)
            basis.col(col++) = Eigen::VectorXd::Unit(dim, pivots[i][j]);

        Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis);
        const double det = lu.determinant();
        if (det == 0.0 || !std::isfinite(det))
            throw tolerance_error("torsion: singular basis change, homology lifts degenerate");
        const int expo = (i % 2 == 0) ? -1 : +1; // det(M_i)^{(-1)^{i+1}}
        log_mag += expo * std::log(std::abs(det));
        if (det < 0) sign = -sign;
    }

    TorsionResult r;
    r.magnitude = std::exp(log_mag);
    r.sign = sign;
    return r;
}

BasedComplex circle_complex(double theta) {
    Eigen::Matrix2d rot;
    rot << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    BasedComplex c;
    c.differentials.push_back(Eigen::Matrix2d::Identity() - rot);
    return c;
}

} // namespace repvar
