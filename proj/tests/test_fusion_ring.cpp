#include <doctest.h>

#include <cmath>
#include <random>

#include "fusionstab/finite_group.hpp"
#include "fusionstab/fusion_ring.hpp"

using namespace fusionstab;

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

FusionRing rank_one_ring() {
    std::vector<IMat> n(1, IMat::Ones(1, 1));
    return FusionRing({"1"}, 0, std::move(n));
}

// Fib with the Pi*Pi coefficient of Pi bumped to 2, i.e. Pi^2 = 1 + 2 Pi.
FusionRing golden_variant_ring() {
    std::vector<IMat> n(2, IMat::Zero(2, 2));
    n[0](0, 0) = 1;
    n[0](1, 1) = 1;
    n[1](0, 1) = 1;
    n[1](1, 0) = 1;
    n[1](1, 1) = 2;
    return FusionRing({"1", "Pi"}, 0, std::move(n));
}

// Unit and duality hold but b*a = a breaks associativity: (b*a)*a = 1 while
// b*(a*a) = b.
FusionRing broken_associativity_ring() {
    std::vector<IMat> n(3, IMat::Zero(3, 3));
    n[0] = IMat::Identity(3, 3);
    n[1](0, 1) = 1;  // a*1 = a
    n[1](1, 0) = 1;  // a*a = 1
    n[1](2, 2) = 1;  // a*b = b
    n[2](0, 2) = 1;  // b*1 = b
    n[2](1, 1) = 1;  // b*a = a
    n[2](2, 0) = 1;  // b*b = 1 + a + b
    n[2](2, 1) = 1;
    n[2](2, 2) = 1;
    return FusionRing({"1", "a", "b"}, 0, std::move(n));
}

FusionRing permuted(const FusionRing& ring, const std::vector<int>& perm) {
    const int r = ring.rank();
    std::vector<std::string> labels(r);
    std::vector<IMat> tensor(r, IMat::Zero(r, r));
    for (int i = 0; i < r; ++i) labels[perm[i]] = ring.label(i);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                tensor[perm[i]](perm[j], perm[k]) = ring.structure_constant(i, j, k);
    return FusionRing(std::move(labels), perm[ring.unit()], std::move(tensor));
}

std::vector<FusionRing> builtin_rings() {
    std::vector<FusionRing> rings;
    rings.push_back(builtin_fib());
    for (const std::string& g : {"C2", "C5", "S3", "D4"})
        rings.push_back(builtin_vec_g(builtin_group(g)));
    for (const std::string& g : {"C3", "S3", "S4", "D4", "D5"})
        rings.push_back(builtin_rep_g(builtin_character_table(g)));
    return rings;
}

}  // namespace

TEST_CASE("fib validates and has the golden fusion rule") {
    FusionRing fib = builtin_fib();
    CHECK(validate_fusion_ring(fib).empty());
    CHECK(fib.dual(0) == 0);
    CHECK(fib.dual(1) == 1);

    FusionElement pi(2);
    pi << 0, 1;
    FusionElement sq = multiply(fib, pi, pi);
    CHECK(sq[0] == 1);
    CHECK(sq[1] == 1);
}

TEST_CASE("rank one ring validates") {
    FusionRing r = rank_one_ring();
    CHECK(validate_fusion_ring(r).empty());
}

TEST_CASE("the Pi^2 = 1 + 2Pi variant is a valid based ring") {
    // bumping N[Pi][Pi][Pi] to 2 leaves a quotient of Z[x], which is still
    // unital, associative and rigid; the validator must accept it
    FusionRing r = golden_variant_ring();
    CHECK(validate_fusion_ring(r).empty());
    CHECK(fpdim_simple(r, 1) == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("a noncommutative corruption fails associativity") {
    FusionRing r = broken_associativity_ring();
    const auto report = validate_fusion_ring(r);
    REQUIRE(!report.empty());
    bool mentions_associativity = false;
    for (const auto& line : report)
        if (line.find("associativity") != std::string::npos) mentions_associativity = true;
    CHECK(mentions_associativity);
}

TEST_CASE("validation is invariant under basis relabeling") {
    FusionRing fib = permuted(builtin_fib(), {1, 0});
    CHECK(validate_fusion_ring(fib).empty());

    FusionRing broken = permuted(broken_associativity_ring(), {2, 0, 1});
    CHECK(!validate_fusion_ring(broken).empty());
}

TEST_CASE("structural shape errors throw instead of reporting") {
    std::vector<IMat> n(2, IMat::Zero(2, 2));
    CHECK_THROWS_AS(FusionRing({"1"}, 0, std::move(n)), std::invalid_argument);
    std::vector<IMat> bad_shape(1, IMat::Zero(2, 3));
    CHECK_THROWS_AS(FusionRing({"1"}, 0, std::move(bad_shape)), std::invalid_argument);
    std::vector<IMat> ok(1, IMat::Ones(1, 1));
    CHECK_THROWS_AS(FusionRing({"1"}, 3, std::move(ok)), std::invalid_argument);
}

TEST_CASE("unit multiplication is the identity") {
    FusionRing fib = builtin_fib();
    std::mt19937 rng(7);
    std::uniform_int_distribution<Int> coeff(0, 5);
    FusionElement unit(2);
    unit << 1, 0;
    for (int trial = 0; trial < 20; ++trial) {
        FusionElement x(2);
        x << coeff(rng), coeff(rng);
        CHECK(multiply(fib, unit, x) == x);
        CHECK(multiply(fib, x, unit) == x);
    }
}

TEST_CASE("vec_S3 multiplies like the group") {
    const FiniteGroup s3 = builtin_group("S3");
    FusionRing ring = builtin_vec_g(s3);
    for (int g = 0; g < 6; ++g)
        for (int h = 0; h < 6; ++h) {
            FusionElement x = FusionElement::Zero(6), y = FusionElement::Zero(6);
            x[g] = 1;
            y[h] = 1;
            FusionElement z = multiply(ring, x, y);
            for (int k = 0; k < 6; ++k) CHECK(z[k] == (k == s3.table[g][h] ? 1 : 0));
        }
}

TEST_CASE("fusion matrices match the frozen examples") {
    FusionRing fib = builtin_fib();
    IMat expected_pi(2, 2);
    expected_pi << 0, 1, 1, 1;
    CHECK(fib.fusion_matrix(1) == expected_pi);
    CHECK(fib.fusion_matrix(0) == IMat::Identity(2, 2));

    FusionRing rep_s3 = builtin_rep_g(builtin_character_table("S3"));
    IMat expected_std(3, 3);
    expected_std << 0, 0, 1, 0, 0, 1, 1, 1, 1;
    CHECK(rep_s3.fusion_matrix(rep_s3.index_of("std")) == expected_std);

    CHECK_THROWS_AS(fpdim_simple(fib, 5), std::out_of_range);
}

TEST_CASE("FP dimensions of the shipped examples") {
    FusionRing fib = builtin_fib();
    CHECK(std::abs(fpdim_simple(fib, 1) - kPhi) < 1e-9);
    CHECK(std::abs(fpdim_simple(fib, 0) - 1.0) < 1e-9);

    FusionRing vec_c2 = builtin_vec_g(builtin_group("C2"));
    for (int k = 0; k < 2; ++k) CHECK(std::abs(fpdim_simple(vec_c2, k) - 1.0) < 1e-9);

    FusionRing rep_s3 = builtin_rep_g(builtin_character_table("S3"));
    CHECK(std::abs(fpdim_simple(rep_s3, rep_s3.index_of("std")) - 2.0) < 1e-9);
}

TEST_CASE("fpdim extends linearly and rejects virtual classes") {
    FusionRing fib = builtin_fib();
    FusionElement x(2);
    x << 1, 1;
    CHECK(std::abs(fpdim(fib, x) - (1.0 + kPhi)) < 1e-9);
    CHECK(std::abs(fpdim(fib, x) - kPhi * kPhi) < 1e-9);
    CHECK(fpdim(fib, FusionElement::Zero(2)) == 0.0);

    FusionRing rep_s3 = builtin_rep_g(builtin_character_table("S3"));
    FusionElement regular(3);
    regular << 1, 1, 2;
    CHECK(std::abs(fpdim(rep_s3, regular) - 6.0) < 1e-9);

    FusionElement virt(2);
    virt << 1, -1;
    CHECK_THROWS_AS(fpdim(fib, virt), std::domain_error);
}

TEST_CASE("fpdim is a ring homomorphism on random non-negative elements") {
    std::mt19937 rng(20240601);
    for (FusionRing& ring : builtin_rings()) {
        REQUIRE(validate_fusion_ring(ring).empty());
        const int r = ring.rank();
        std::uniform_int_distribution<Int> coeff(0, 3);
        for (int trial = 0; trial < 25; ++trial) {
            FusionElement x(r), y(r);
            for (int k = 0; k < r; ++k) {
                x[k] = coeff(rng);
                y[k] = coeff(rng);
            }
            const double fx = fpdim(ring, x), fy = fpdim(ring, y);
            const double fxy = fpdim(ring, multiply(ring, x, y));
            CHECK(std::abs(fxy - fx * fy) <= 1e-6 * std::max(1.0, std::abs(fx * fy)));
            CHECK(std::abs(fpdim(ring, x + y) - (fx + fy)) <= 1e-9 * std::max(1.0, fx + fy));
            if ((x.array() != 0).any()) CHECK(fx > 0.0);
        }
    }
}

TEST_CASE("every simple has FP dimension at least one") {
    for (FusionRing& ring : builtin_rings()) {
        REQUIRE(validate_fusion_ring(ring).empty());
        for (double d : fpdim_all(ring)) CHECK(d >= 1.0 - 1e-9);
    }
}

TEST_CASE("the dual simple has the transposed fusion matrix") {
    for (FusionRing& ring : builtin_rings()) {
        REQUIRE(validate_fusion_ring(ring).empty());
        for (int k = 0; k < ring.rank(); ++k)
            CHECK(ring.fusion_matrix(ring.dual(k)) == IMat(ring.fusion_matrix(k).transpose()));
    }
}
