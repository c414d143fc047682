#include "fusionstab/k0_module.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace fusionstab {

namespace {

constexpr double kRankTol = 1e-8;  // relative to the largest singular value

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

// Unique reduced row echelon form of the row span; rows with leading 1.
Eigen::MatrixXcd complex_rref(Eigen::MatrixXcd m) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double tol = kRankTol * scale;
    int pivot_row = 0;
    for (int col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        int best = -1;
        double best_abs = tol;
        for (int r = pivot_row; r < m.rows(); ++r)
            if (std::abs(m(r, col)) > best_abs) {
                best_abs = std::abs(m(r, col));
                best = r;
            }
        if (best < 0) continue;
        m.row(pivot_row).swap(m.row(best));
        m.row(pivot_row) /= m(pivot_row, col);
        for (int r = 0; r < m.rows(); ++r)
            if (r != pivot_row && std::abs(m(r, col)) > 0.0)
                m.row(r) -= m(r, col) * m.row(pivot_row);
        ++pivot_row;
    }
    Eigen::MatrixXcd out(pivot_row, m.cols());
    out = m.topRows(pivot_row);
    // scrub elimination residue below tolerance so output is clean
    for (int r = 0; r < out.rows(); ++r)
        for (int c = 0; c < out.cols(); ++c)
            if (std::abs(out(r, c)) < tol) out(r, c) = 0.0;
    return out;
}

}  // namespace

std::vector<std::string> validate_action(const K0ModuleAction& action) {
    const int r = action.ring.rank();
    const int n = action.lattice.rank();
    if (static_cast<int>(action.matrices.size()) != r)
        throw std::invalid_argument("action: one matrix per ring basis element required");
    for (const IMat& m : action.matrices)
        if (m.rows() != n || m.cols() != n)
            throw std::invalid_argument("action: matrix shape does not match lattice rank");

    std::vector<std::string> report;
    if (action.matrices[action.ring.unit()] != IMat::Identity(n, n))
        report.push_back("unit does not act as the identity");
    for (int i = 0; i < r; ++i)
        if ((action.matrices[i].array() < 0).any())
            report.push_back("matrix for '" + action.ring.label(i) + "' has a negative entry");
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            IMat expected = IMat::Zero(n, n);
            for (int k = 0; k < r; ++k)
                expected += action.ring.structure_constant(i, j, k) * action.matrices[k];
            if (action.matrices[i] * action.matrices[j] != expected)
                report.push_back("module axiom fails for ('" + action.ring.label(i) + "','" +
                                 action.ring.label(j) + "')");
        }
    return report;
}

K0ModuleAction regular_representation_action(const FusionRing& ring) {
    const int r = ring.rank();
    std::vector<IMat> mats;
    mats.reserve(r);
    for (int i = 0; i < r; ++i) mats.push_back(ring.fusion_matrix(i).transpose());
    return K0ModuleAction{ring, K0Lattice{ring.basis()}, std::move(mats)};
}

K0ModuleAction fib_on_a4_action() {
    FusionRing fib = builtin_fib();
    IMat a_pi(4, 4);
    // columns: S1 -> S3, S2 -> S2 + S4, S3 -> S1 + S3, S4 -> S2
    a_pi << 0, 0, 1, 0,
            0, 1, 0, 1,
            1, 0, 1, 0,
            0, 1, 0, 0;
    std::vector<IMat> mats = {IMat::Identity(4, 4), a_pi};
    K0ModuleAction action{std::move(fib), K0Lattice{{"S1", "S2", "S3", "S4"}}, std::move(mats)};
    if (!validate_action(action).empty())
        throw std::logic_error("fib_on_a4_action: construction is broken");
    return action;
}

std::vector<CentralCharge> equivariant_charge_space(const K0ModuleAction& action) {
    const int n = action.lattice.rank();
    const int r = action.ring.rank();
    const std::vector<double> dims = fpdim_all(action.ring);

    // Z A_S = d_S Z for a row functional Z = X + iY; real coefficients, so
    // the doubled real system is block diagonal in (X, Y).
    std::vector<int> simples;
    for (int s = 0; s < r; ++s)
        if (s != action.ring.unit()) simples.push_back(s);
    const int blocks = std::max<int>(1, static_cast<int>(simples.size()));
    Eigen::MatrixXd system = Eigen::MatrixXd::Zero(2 * n * blocks, 2 * n);
    for (size_t b = 0; b < simples.size(); ++b) {
        const int s = simples[b];
        const Eigen::MatrixXd k =
            action.matrices[s].cast<double>().transpose() - dims[s] * Eigen::MatrixXd::Identity(n, n);
        system.block(2 * n * static_cast<int>(b), 0, n, n) = k;
        system.block(2 * n * static_cast<int>(b) + n, n, n, n) = k;
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() > 0 ? kRankTol * std::max(sv(0), 1.0) : 0.0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    const int nullity = 2 * n - rank;

    Eigen::MatrixXcd raw(nullity, n);
    for (int i = 0; i < nullity; ++i) {
        const Eigen::VectorXd u = svd.matrixV().col(2 * n - 1 - i);
        for (int j = 0; j < n; ++j) raw(i, j) = std::complex<double>(u(j), u(n + j));
    }
    const Eigen::MatrixXcd basis = complex_rref(std::move(raw));

    std::vector<CentralCharge> out;
    out.reserve(basis.rows());
    for (int i = 0; i < basis.rows(); ++i)
        out.push_back(CentralCharge{action.lattice, basis.row(i).transpose()});
    return out;
}

double equivariance_residual(const CentralCharge& z, const K0ModuleAction& action) {
    const int n = action.lattice.rank();
    if (z.values.size() != n)
        throw std::invalid_argument("equivariance_residual: charge length does not match lattice");
    const std::vector<double> dims = fpdim_all(action.ring);
    double worst = 0.0;
    for (int s = 0; s < action.ring.rank(); ++s) {
        const Eigen::VectorXcd lhs =
            action.matrices[s].cast<double>().transpose() * z.values;  // Z o A_S as a row
        const Eigen::VectorXcd rhs = dims[s] * z.values;
        worst = std::max(worst, (lhs - rhs).lpNorm<Eigen::Infinity>());
    }
    return worst;
}

bool is_equivariant(const CentralCharge& z, const K0ModuleAction& action, double tol) {
    if (tol <= 0) throw std::invalid_argument("is_equivariant: tolerance must be positive");
    return equivariance_residual(z, action) <= tol;
}

K0ModuleAction mckay_rep_action(const CharacterTable& ct) {
    FusionRing ring = builtin_rep_g(ct);
    const int ni = ct.num_irreps();
    K0Lattice lattice;
    for (const std::string& s : ct.irreps) lattice.labels.push_back("L_" + s);
    for (const std::string& s : ct.irreps) lattice.labels.push_back("R_" + s);

    std::vector<IMat> mats;
    mats.reserve(ni);
    for (int w = 0; w < ni; ++w) {
        IMat t(ni, ni);  // t(i, j) = multiplicity of V_j in W (x) V_i
        for (int i = 0; i < ni; ++i) t.row(i) = tensor_multiplicities(ct, w, i).transpose();
        IMat a = IMat::Zero(2 * ni, 2 * ni);
        a.block(0, 0, ni, ni) = t.transpose();  // columns are images of lattice basis vectors
        a.block(ni, ni, ni, ni) = t.transpose();
        mats.push_back(std::move(a));
    }
    K0ModuleAction action{std::move(ring), std::move(lattice), std::move(mats)};
    if (!validate_action(action).empty())
        throw std::logic_error("mckay_rep_action: construction is broken");
    return action;
}

DualityReport duality_check(const IMat& forgetful, const IMat& induction,
                            const K0ModuleAction& action_g, const K0ModuleAction& action_rep_g,
                            double tol) {
    const int n = action_g.lattice.rank();
    const int m = action_rep_g.lattice.rank();
    if (forgetful.rows() != n || forgetful.cols() != m)
        throw std::invalid_argument("duality_check: forgetful matrix must be " +
                                    std::to_string(n) + "x" + std::to_string(m));
    if (induction.rows() != m || induction.cols() != n)
        throw std::invalid_argument("duality_check: induction matrix must be " +
                                    std::to_string(m) + "x" + std::to_string(n));

    const std::vector<double> g_dims = fpdim_all(action_g.ring);
    for (double d : g_dims)
        if (std::abs(d - 1.0) > tol)
            throw std::invalid_argument(
                "duality_check: action_g ring is not group-like (an FPdim differs from 1)");
    const Int group_order = action_g.ring.rank();

    const std::vector<double> rep_dims_f = fpdim_all(action_rep_g.ring);
    std::vector<Int> rep_dims(rep_dims_f.size());
    for (size_t i = 0; i < rep_dims_f.size(); ++i) {
        rep_dims[i] = std::llround(rep_dims_f[i]);
        if (std::abs(rep_dims_f[i] - static_cast<double>(rep_dims[i])) > 1e-6)
            throw std::invalid_argument("duality_check: action_rep_g ring has a non-integer FPdim");
    }

    DualityReport report;

    IMat sum_g = IMat::Zero(n, n);
    for (const IMat& a : action_g.matrices) sum_g += a;
    const IMat fi = forgetful * induction;
    report.items.push_back({"(a) F*I equals the sum of the group action matrices", fi == sum_g,
                            fi == sum_g ? "exact integer identity"
                                        : "max deviation " +
                                              std::to_string((fi - sum_g).cwiseAbs().maxCoeff())});

    IMat regular = IMat::Zero(m, m);
    for (size_t w = 0; w < action_rep_g.matrices.size(); ++w)
        regular += rep_dims[w] * action_rep_g.matrices[w];
    const IMat if_ = induction * forgetful;
    report.items.push_back({"(b) I*F equals the regular representation action", if_ == regular,
                            if_ == regular
                                ? "exact integer identity"
                                : "max deviation " +
                                      std::to_string((if_ - regular).cwiseAbs().maxCoeff())});

    const std::vector<CentralCharge> invariant = equivariant_charge_space(action_g);
    const Eigen::MatrixXd f_d = forgetful.cast<double>();
    const Eigen::MatrixXd fi_d = fi.cast<double>();

    bool c_pass = true, d_pass = true;
    std::string c_detail = invariant.empty() ? "no invariant charges (rank-0 space)" : "",
                d_detail = c_detail;
    double c_worst = 0.0;
    for (size_t idx = 0; idx < invariant.size(); ++idx) {
        const CentralCharge& z = invariant[idx];
        CentralCharge transported{action_rep_g.lattice, f_d.transpose() * z.values};
        const double res = equivariance_residual(transported, action_rep_g);
        c_worst = std::max(c_worst, res);
        if (res > tol) c_pass = false;

        const Eigen::VectorXcd round_trip = fi_d.transpose() * z.values;
        const Eigen::VectorXcd expected = static_cast<double>(group_order) * z.values;
        if ((round_trip - expected).lpNorm<Eigen::Infinity>() > tol) {
            d_pass = false;
            // report the observed uniform factor when the round trip is
            // still proportional to Z
            int imax = 0;
            z.values.cwiseAbs().maxCoeff(&imax);
            const std::complex<double> factor = round_trip(imax) / z.values(imax);
            const double prop_res =
                (round_trip - factor * z.values).lpNorm<Eigen::Infinity>();
            if (prop_res <= tol && std::abs(factor.imag()) <= tol)
                d_detail = "observed rescaling factor " + fmt(factor.real()) + ", expected |G| = " +
                           std::to_string(group_order);
            else
                d_detail = "round trip is not proportional to the charge (basis vector " +
                           std::to_string(idx) + ")";
        }
    }
    if (!invariant.empty()) {
        if (c_pass) c_detail = "max equivariance residual " + fmt(c_worst);
        if (d_pass)
            d_detail = "round trip rescales by " + std::to_string(group_order) +
                       " on all " + std::to_string(invariant.size()) + " basis charges";
        else if (d_detail.empty())
            d_detail = "round trip deviates beyond tolerance";
        if (!c_pass) c_detail = "equivariance residual " + fmt(c_worst) + " exceeds tolerance";
    }
    report.items.push_back({"(c) transported invariant charges are rep(G)-equivariant", c_pass,
                            c_detail});
    report.items.push_back({"(d) transport round trip rescales charges by |G|", d_pass, d_detail});
    return report;
}

}  // namespace fusionstab
