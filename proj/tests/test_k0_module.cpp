#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Eigenvalues>

#include "fusionstab/k0_module.hpp"

using namespace fusionstab;

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

K0ModuleAction trivial_vec_action(const std::string& group, int lattice_rank) {
    FusionRing ring = builtin_vec_g(builtin_group(group));
    K0Lattice lattice;
    for (int i = 1; i <= lattice_rank; ++i) lattice.labels.push_back("S" + std::to_string(i));
    std::vector<IMat> mats(ring.rank(), IMat::Identity(lattice_rank, lattice_rank));
    return K0ModuleAction{std::move(ring), std::move(lattice), std::move(mats)};
}

struct Bundle {
    IMat forgetful, induction;
    K0ModuleAction action_g, action_rep_g;
};

// G acting trivially on the rank-2 lattice of the Kronecker quiver; the
// equivariant side is the separated McKay quiver with the forgetful map
// weighting vertices by dimension and induction inserting the regular class.
Bundle mckay_bundle(const std::string& group) {
    const CharacterTable ct = builtin_character_table(group);
    const int k = ct.num_irreps();
    IMat f = IMat::Zero(2, 2 * k);
    IMat ind = IMat::Zero(2 * k, 2);
    for (int i = 0; i < k; ++i) {
        f(0, i) = ct.dim(i);
        f(1, k + i) = ct.dim(i);
        ind(i, 0) = ct.dim(i);
        ind(k + i, 1) = ct.dim(i);
    }
    return Bundle{std::move(f), std::move(ind), trivial_vec_action(group, 2),
                  mckay_rep_action(ct)};
}

}  // namespace

TEST_CASE("the Fib action on the A4 lattice satisfies the golden identity") {
    const K0ModuleAction action = fib_on_a4_action();
    CHECK(validate_action(action).empty());
    const IMat& a_pi = action.matrices[1];
    CHECK(action.matrices[0] == IMat(IMat::Identity(4, 4)));
    CHECK(a_pi * a_pi == IMat(IMat::Identity(4, 4) + a_pi));

    Eigen::EigenSolver<Eigen::MatrixXd> eig(a_pi.cast<double>());
    double spectral_radius = 0.0;
    for (int i = 0; i < 4; ++i)
        spectral_radius = std::max(spectral_radius, std::abs(eig.eigenvalues()[i]));
    CHECK(std::abs(spectral_radius - kPhi) < 1e-9);
}

TEST_CASE("every ring acts on itself by left multiplication") {
    for (const std::string& name : {"S3", "C4", "D4"}) {
        K0ModuleAction reg = regular_representation_action(builtin_vec_g(builtin_group(name)));
        CHECK(validate_action(reg).empty());
    }
    K0ModuleAction fib_reg = regular_representation_action(builtin_fib());
    CHECK(validate_action(fib_reg).empty());
}

TEST_CASE("a corrupted action matrix fails the module axiom") {
    K0ModuleAction action = fib_on_a4_action();
    action.matrices[1](3, 1) = 0;  // drop S2 -> S4 from the Pi action
    const auto report = validate_action(action);
    bool mentions_axiom = false;
    for (const auto& line : report)
        if (line.find("module axiom") != std::string::npos) mentions_axiom = true;
    CHECK(mentions_axiom);
}

TEST_CASE("action shape mismatches throw") {
    K0ModuleAction action = fib_on_a4_action();
    action.matrices.pop_back();
    CHECK_THROWS_AS(validate_action(action), std::invalid_argument);
}

TEST_CASE("equivariant charge space of the Fib/A4 action is a plane") {
    const K0ModuleAction action = fib_on_a4_action();
    const auto basis = equivariant_charge_space(action);
    REQUIRE(basis.size() == 2);
    for (const CentralCharge& z : basis) {
        CHECK(is_equivariant(z, action, 1e-9));
        CHECK(std::abs(z.values[2] - kPhi * z.values[0]) < 1e-9);  // Z(S3) = phi Z(S1)
        CHECK(std::abs(z.values[1] - kPhi * z.values[3]) < 1e-9);  // Z(S2) = phi Z(S4)
    }
    // the restriction to (Z(S1), Z(S4)) parametrises the plane
    Eigen::Matrix2cd restriction;
    restriction << basis[0].values[0], basis[0].values[3], basis[1].values[0], basis[1].values[3];
    CHECK(std::abs(restriction.determinant()) > 1e-9);
}

TEST_CASE("the regular action admits exactly the FP dimension functional") {
    for (FusionRing ring : {builtin_fib(), builtin_rep_g(builtin_character_table("S3"))}) {
        const K0ModuleAction reg = regular_representation_action(ring);
        const auto basis = equivariant_charge_space(reg);
        REQUIRE(basis.size() == 1);
        const std::vector<double> dims = fpdim_all(ring);
        const std::complex<double> scale = basis[0].values[0] / dims[0];
        for (int k = 0; k < ring.rank(); ++k)
            CHECK(std::abs(basis[0].values[k] - scale * dims[k]) < 1e-9);
    }
}

TEST_CASE("a trivial group action leaves the whole dual space equivariant") {
    const K0ModuleAction action = trivial_vec_action("S3", 5);
    CHECK(validate_action(action).empty());
    CHECK(equivariant_charge_space(action).size() == 5);
}

TEST_CASE("equivariant space dimension is invariant under unimodular base change") {
    const K0ModuleAction action = fib_on_a4_action();
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> vertex(0, 3), shear(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        // random product of elementary shears, with the inverse tracked
        IMat u = IMat::Identity(4, 4), u_inv = IMat::Identity(4, 4);
        for (int step = 0; step < 6; ++step) {
            const int i = vertex(rng);
            int j = vertex(rng);
            while (j == i) j = vertex(rng);
            const Int c = shear(rng);
            IMat e = IMat::Identity(4, 4), e_inv = IMat::Identity(4, 4);
            e(i, j) = c;
            e_inv(i, j) = -c;
            u = u * e;
            u_inv = e_inv * u_inv;
        }
        REQUIRE(u * u_inv == IMat(IMat::Identity(4, 4)));
        K0ModuleAction conjugated = action;
        for (IMat& m : conjugated.matrices) m = u * m * u_inv;
        CHECK(equivariant_charge_space(conjugated).size() == 2);
    }
}

TEST_CASE("equivariance test on frozen charges") {
    const K0ModuleAction action = fib_on_a4_action();
    const double c5 = std::cos(std::numbers::pi / 5.0), s5 = std::sin(std::numbers::pi / 5.0);
    CentralCharge pentagon{action.lattice, Eigen::VectorXcd(4)};
    pentagon.values << std::complex<double>(-1, 0), kPhi * std::complex<double>(c5, s5),
        std::complex<double>(-kPhi, 0), std::complex<double>(c5, s5);
    CHECK(is_equivariant(pentagon, action, 1e-9));

    CentralCharge zero{action.lattice, Eigen::VectorXcd::Zero(4)};
    CHECK(is_equivariant(zero, action, 1e-9));

    CentralCharge off{action.lattice, Eigen::VectorXcd(4)};
    off.values << std::complex<double>(-1, 0), kPhi * std::complex<double>(c5, s5),
        std::complex<double>(-1, 0), std::complex<double>(c5, s5);
    CHECK(!is_equivariant(off, action, 1e-9));  // phi * (-1) != -1
}

TEST_CASE("McKay action of rep(S3) is block diagonal in the tensor matrix") {
    const CharacterTable s3 = builtin_character_table("S3");
    const K0ModuleAction action = mckay_rep_action(s3);
    CHECK(validate_action(action).empty());
    IMat t_std(3, 3);
    t_std << 0, 0, 1, 0, 0, 1, 1, 1, 1;
    const IMat& a_std = action.matrices[action.ring.index_of("std")];
    CHECK(a_std.block(0, 0, 3, 3) == t_std);
    CHECK(a_std.block(3, 3, 3, 3) == t_std);
    CHECK(a_std.block(0, 3, 3, 3).isZero());
    CHECK(a_std.block(3, 0, 3, 3).isZero());
    CHECK(action.matrices[action.ring.index_of("triv")] == IMat(IMat::Identity(6, 6)));
}

TEST_CASE("McKay action of rep(S4) validates") {
    CHECK(validate_action(mckay_rep_action(builtin_character_table("S4"))).empty());
}

TEST_CASE("McKay equivariant charges are proportional to dimensions per side") {
    for (const std::string& name : {"S3", "S4", "D4", "D5", "C6"}) {
        const CharacterTable ct = builtin_character_table(name);
        const int k = ct.num_irreps();
        const K0ModuleAction action = mckay_rep_action(ct);
        const auto basis = equivariant_charge_space(action);
        REQUIRE(basis.size() == 2);
        for (const CentralCharge& z : basis) {
            CHECK(is_equivariant(z, action, 1e-9));
            for (int side = 0; side < 2; ++side) {
                // z restricted to one side is a scalar multiple of dims
                const std::complex<double> scale = z.values[side * k] /
                                                   static_cast<double>(ct.dim(0));
                for (int i = 0; i < k; ++i)
                    CHECK(std::abs(z.values[side * k + i] -
                                   scale * static_cast<double>(ct.dim(i))) < 1e-9);
            }
        }
    }
}

TEST_CASE("duality identities hold for the C2 Kronecker bundle") {
    const Bundle b = mckay_bundle("C2");
    const DualityReport report =
        duality_check(b.forgetful, b.induction, b.action_g, b.action_rep_g);
    REQUIRE(report.items.size() == 4);
    for (const auto& item : report.items) {
        INFO(item.name, ": ", item.detail);
        CHECK(item.pass);
    }
}

TEST_CASE("duality identities hold for the S3 McKay bundle, with F*I = |G| Id") {
    const Bundle b = mckay_bundle("S3");
    CHECK(b.forgetful * b.induction == IMat(6 * IMat::Identity(2, 2)));
    const DualityReport report =
        duality_check(b.forgetful, b.induction, b.action_g, b.action_rep_g);
    for (const auto& item : report.items) {
        INFO(item.name, ": ", item.detail);
        CHECK(item.pass);
    }
}

TEST_CASE("duality identities are trivial for the trivial group") {
    FusionRing vec = builtin_vec_g(builtin_group("C1"));
    FusionRing rep = builtin_rep_g(builtin_character_table("C1"));
    K0ModuleAction action_g{vec, K0Lattice{{"S1", "S2"}},
                            {IMat::Identity(2, 2)}};
    K0ModuleAction action_rep{rep, K0Lattice{{"E1", "E2"}},
                              {IMat::Identity(2, 2)}};
    const DualityReport report = duality_check(IMat::Identity(2, 2), IMat::Identity(2, 2),
                                               action_g, action_rep);
    CHECK(report.all_pass());
}

TEST_CASE("doubling the induction matrix breaks (a) and (d) coherently") {
    const Bundle b = mckay_bundle("C2");
    const IMat doubled = 2 * b.induction;
    const DualityReport report =
        duality_check(b.forgetful, doubled, b.action_g, b.action_rep_g);
    REQUIRE(report.items.size() == 4);
    CHECK(!report.items[0].pass);  // (a) F*I doubled
    CHECK(!report.items[3].pass);  // (d) factor 2|G| instead of |G|
    CHECK(report.items[3].detail.find("observed rescaling factor 4") != std::string::npos);
    // (a) and (d) fail together: on invariant charges they express the same
    // composite, once as matrices and once transported through charges
    CHECK(report.items[0].pass == report.items[3].pass);
}

TEST_CASE("duality_check rejects non-group-like left actions") {
    const Bundle b = mckay_bundle("C2");
    K0ModuleAction fib_side = regular_representation_action(builtin_fib());
    CHECK_THROWS_AS(duality_check(IMat::Identity(2, 2), IMat::Identity(2, 2), fib_side,
                                  b.action_rep_g),
                    std::invalid_argument);
}
