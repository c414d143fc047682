#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "fusionstab/finite_group.hpp"
#include "fusionstab/fusion_ring.hpp"

namespace fusionstab {

struct K0Lattice {
    std::vector<std::string> labels;
    int rank() const { return static_cast<int>(labels.size()); }
};

/// Complex-valued linear functional on a K0 lattice.
struct CentralCharge {
    K0Lattice lattice;
    Eigen::VectorXcd values;
};

/// A fusion ring acting on a K0 lattice: one integer matrix per ring basis
/// element, columns being the images of the lattice basis vectors.  The
/// composition convention is left actions, so matrices(i) * matrices(j)
/// realises basis_i acting after basis_j.
struct K0ModuleAction {
    FusionRing ring;
    K0Lattice lattice;
    std::vector<IMat> matrices;
};

/// Unit-is-identity, non-negativity and the module axiom
/// A_i * A_j = sum_k N[i][j][k] * A_k, all in exact integer arithmetic.
/// Shape mismatches throw std::invalid_argument.
std::vector<std::string> validate_action(const K0ModuleAction& action);

/// The ring acting on itself by left multiplication.
K0ModuleAction regular_representation_action(const FusionRing& ring);

/// The Fibonacci ring acting on the K0 lattice (S1, S2, S3, S4) of the heart
/// of the bipartite A4 quiver: Pi swaps S1 <-> S3 and S2 <-> S4 with an extra
/// loop on S3 and S2, so that A_Pi^2 = I + A_Pi.
K0ModuleAction fib_on_a4_action();

/// Basis of { Z : Z o A_S = FPdim(S) * Z for all simples S }, i.e. the
/// central charges intertwining the lattice action with the Frobenius-Perron
/// scalar action.  Solved as a real linear system of doubled size (real and
/// imaginary parts separately; the constraints have real coefficients).
/// The returned basis is in complex reduced row echelon form, so each
/// vector's first nonzero entry is 1 and the output is canonical.
std::vector<CentralCharge> equivariant_charge_space(const K0ModuleAction& action);

/// max_S || Z o A_S - FPdim(S) * Z ||_inf
double equivariance_residual(const CentralCharge& z, const K0ModuleAction& action);

bool is_equivariant(const CentralCharge& z, const K0ModuleAction& action, double tol);

/// rep(G) acting on K0 of the separated McKay quiver: the lattice is the
/// vertex simples (left copies then right copies), and each irrep W acts
/// block-diagonally on the two sides through its tensor multiplicities.
K0ModuleAction mckay_rep_action(const CharacterTable& ct);

struct DualityReport {
    struct Item {
        std::string name;
        bool pass = false;
        std::string detail;
    };
    std::vector<Item> items;

    bool all_pass() const {
        for (const Item& it : items)
            if (!it.pass) return false;
        return true;
    }
};

/// K0-level checks of the induction/forgetful duality.  With F the matrix of
/// the forgetful functor K0(D^G) -> K0(D) and I the matrix of induction
/// K0(D) -> K0(D^G):
///   (a) F * I = sum_g A_g                 on K0(D)
///   (b) I * F = sum_W dim(W) * A_W        on K0(D^G)
///   (c) Z o F is rep(G)-equivariant for every basis charge Z of the
///       G-invariant charge space of K0(D)
///   (d) Z o F o I = |G| * Z for those Z (round trip rescales by |G|)
/// action_g must be group-like (all FPdims 1); |G| is its ring rank.
DualityReport duality_check(const IMat& forgetful, const IMat& induction,
                            const K0ModuleAction& action_g, const K0ModuleAction& action_rep_g,
                            double tol = 1e-9);

}  // namespace fusionstab
