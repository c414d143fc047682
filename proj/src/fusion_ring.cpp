#include "fusionstab/fusion_ring.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace fusionstab {

FusionRing::FusionRing(std::vector<std::string> basis_labels, int unit_index,
                       std::vector<IMat> tensor)
    : labels_(std::move(basis_labels)), unit_(unit_index), n_(std::move(tensor)) {
    const int r = rank();
    if (r == 0)
        throw std::invalid_argument("fusion ring: empty basis");
    if (unit_ < 0 || unit_ >= r)
        throw std::invalid_argument("fusion ring: unit index out of range");
    if (static_cast<int>(n_.size()) != r)
        throw std::invalid_argument("fusion ring: tensor has wrong first dimension");
    for (const IMat& m : n_)
        if (m.rows() != r || m.cols() != r)
            throw std::invalid_argument("fusion ring: tensor slice has wrong shape");
}

int FusionRing::index_of(const std::string& label) const {
    for (int i = 0; i < rank(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

std::vector<std::string> validate_fusion_ring(FusionRing& ring) {
    std::vector<std::string> report;
    const int r = ring.rank();
    const int e = ring.unit();

    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                if (ring.structure_constant(i, j, k) < 0)
                    report.push_back("negative structure constant N[" + std::to_string(i) +
                                     "][" + std::to_string(j) + "][" + std::to_string(k) + "]");

    // unit axiom: N[e][j][k] = delta_{jk} and N[i][e][k] = delta_{ik}
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
            const Int left = ring.structure_constant(e, j, k);
            if (left != (j == k ? 1 : 0))
                report.push_back("unit axiom fails on the left at (" + std::to_string(j) +
                                 "," + std::to_string(k) + ")");
            const Int right = ring.structure_constant(j, e, k);
            if (right != (j == k ? 1 : 0))
                report.push_back("unit axiom fails on the right at (" + std::to_string(j) +
                                 "," + std::to_string(k) + ")");
        }

    // associativity: sum_m N[i][j][m] N[m][k][l] = sum_m N[j][k][m] N[i][m][l]
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                for (int l = 0; l < r; ++l) {
                    Int lhs = 0, rhs = 0;
                    for (int m = 0; m < r; ++m) {
                        lhs += ring.structure_constant(i, j, m) * ring.structure_constant(m, k, l);
                        rhs += ring.structure_constant(j, k, m) * ring.structure_constant(i, m, l);
                    }
                    if (lhs != rhs)
                        report.push_back("associativity fails at (i,j,k,l)=(" +
                                         std::to_string(i) + "," + std::to_string(j) + "," +
                                         std::to_string(k) + "," + std::to_string(l) + "): " +
                                         std::to_string(lhs) + " != " + std::to_string(rhs));
                }

    // duality: exactly one partner j with N[i][j][e] = 1 = N[j][i][e]
    std::vector<int> dual(r, -1);
    bool dual_ok = true;
    for (int i = 0; i < r; ++i) {
        std::vector<int> candidates;
        for (int j = 0; j < r; ++j) {
            const Int fwd = ring.structure_constant(i, j, e);
            const Int bwd = ring.structure_constant(j, i, e);
            if (fwd == 0 && bwd == 0) continue;
            if (fwd == 1 && bwd == 1) {
                candidates.push_back(j);
            } else {
                report.push_back("duality pairing of basis " + std::to_string(i) + " and " +
                                 std::to_string(j) + " has multiplicity (" + std::to_string(fwd) +
                                 "," + std::to_string(bwd) + "), expected (1,1) or (0,0)");
                dual_ok = false;
            }
        }
        if (candidates.size() != 1) {
            report.push_back("basis " + std::to_string(i) + " has " +
                             std::to_string(candidates.size()) + " dual candidates, expected 1");
            dual_ok = false;
        } else {
            dual[i] = candidates[0];
        }
    }
    if (dual_ok)
        for (int i = 0; i < r; ++i)
            if (dual[dual[i]] != i) {
                report.push_back("dual map is not an involution at basis " + std::to_string(i));
                dual_ok = false;
            }

    if (report.empty())
        ring.dual_ = dual;
    return report;
}

FusionElement multiply(const FusionRing& ring, const FusionElement& x,
                       const FusionElement& y) {
    const int r = ring.rank();
    if (x.size() != r || y.size() != r)
        throw std::invalid_argument("multiply: element length does not match ring rank");
    FusionElement z = FusionElement::Zero(r);
    for (int i = 0; i < r; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < r; ++j) {
            if (y[j] == 0) continue;
            for (int k = 0; k < r; ++k)
                z[k] += x[i] * y[j] * ring.structure_constant(i, j, k);
        }
    }
    return z;
}

namespace {

constexpr double kPowerIterTol = 1e-12;
constexpr int kPowerIterCap = 10000;
constexpr double kEigenvectorResidualTol = 1e-9;

// Perron vector of the sum of all fusion matrices.  The sum has a positive
// unit row, a positive unit column and a positive diagonal entry at the
// unit, so it is irreducible and aperiodic and the iteration converges.
Eigen::VectorXd perron_vector(const FusionRing& ring) {
    const int r = ring.rank();
    Eigen::MatrixXd total = Eigen::MatrixXd::Zero(r, r);
    for (int k = 0; k < r; ++k)
        total += ring.fusion_matrix(k).cast<double>();

    Eigen::VectorXd v = Eigen::VectorXd::Ones(r);
    double prev = 0.0;
    for (int it = 0; it < kPowerIterCap; ++it) {
        Eigen::VectorXd w = total * v;
        const double rq = v.dot(w) / v.dot(v);
        // the Rayleigh quotient converges twice as fast as the vector, so
        // also require the vector residual to settle before stopping
        const double residual = (w - rq * v).lpNorm<Eigen::Infinity>();
        v = w / w.norm();
        if (it > 0 && std::abs(rq - prev) <= kPowerIterTol &&
            residual <= kPowerIterTol * std::max(1.0, rq))
            return v;
        prev = rq;
    }
    throw std::runtime_error("fpdim: power iteration did not converge; invalid structure tensor?");
}

}  // namespace

std::vector<double> fpdim_all(const FusionRing& ring) {
    const int r = ring.rank();
    const Eigen::VectorXd v = perron_vector(ring);
    std::vector<double> dims(r);
    for (int k = 0; k < r; ++k) {
        const Eigen::VectorXd w = ring.fusion_matrix(k).cast<double>() * v;
        const double d = v.dot(w) / v.dot(v);
        if ((w - d * v).lpNorm<Eigen::Infinity>() >
            kEigenvectorResidualTol * v.lpNorm<Eigen::Infinity>())
            throw std::runtime_error("fpdim: Perron vector is not an eigenvector of fusion matrix " +
                                     std::to_string(k) + "; invalid structure tensor?");
        dims[k] = d;
    }
    return dims;
}

double fpdim_simple(const FusionRing& ring, int k) {
    if (k < 0 || k >= ring.rank())
        throw std::out_of_range("fpdim_simple: basis index out of range");
    return fpdim_all(ring)[k];
}

double fpdim(const FusionRing& ring, const FusionElement& x) {
    if (x.size() != ring.rank())
        throw std::invalid_argument("fpdim: element length does not match ring rank");
    for (int k = 0; k < x.size(); ++k)
        if (x[k] < 0)
            throw std::domain_error("fpdim: negative coefficient; virtual classes are rejected");
    const std::vector<double> dims = fpdim_all(ring);
    double s = 0.0;
    for (int k = 0; k < x.size(); ++k) s += static_cast<double>(x[k]) * dims[k];
    return s;
}

FusionRing builtin_fib() {
    std::vector<IMat> n(2, IMat::Zero(2, 2));
    n[0](0, 0) = 1;  // 1 * 1 = 1
    n[0](1, 1) = 1;  // 1 * Pi = Pi
    n[1](0, 1) = 1;  // Pi * 1 = Pi
    n[1](1, 0) = 1;  // Pi * Pi = 1 + Pi
    n[1](1, 1) = 1;
    FusionRing ring({"1", "Pi"}, 0, std::move(n));
    if (!validate_fusion_ring(ring).empty())
        throw std::logic_error("builtin_fib: construction is broken");
    return ring;
}

}  // namespace fusionstab
