#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace fusionstab {

using Int = std::int64_t;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

/// A fusion ring presented by structure constants on its basis of simples.
///
/// The structure tensor N is indexed N[i][j][k] = coefficient of basis k in
/// the product basis_i * basis_j.  Left multiplication therefore reads rows:
/// fusion_matrix(k)(i, j) is the coefficient of basis j in basis_k * basis_i.
/// (The indexing of the fusion matrix could equally well be transposed; the
/// Frobenius-Perron eigenvalue does not see the difference, but this is the
/// convention used throughout.)
class FusionRing {
public:
    FusionRing(std::vector<std::string> basis_labels, int unit_index,
               std::vector<IMat> tensor);

    int rank() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& basis() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(i); }
    int unit() const { return unit_; }
    int index_of(const std::string& label) const;  // -1 if absent

    Int structure_constant(int i, int j, int k) const { return n_[i](j, k); }

    /// The matrix ( coefficient of basis j in basis_k * basis_i )_{i,j}.
    const IMat& fusion_matrix(int k) const { return n_.at(k); }

    bool has_duals() const { return !dual_.empty(); }
    int dual(int i) const { return dual_.at(i); }

private:
    std::vector<std::string> labels_;
    int unit_;
    std::vector<IMat> n_;     // n_[i](j, k) = N[i][j][k]
    std::vector<int> dual_;   // populated by validate_fusion_ring

    friend std::vector<std::string> validate_fusion_ring(FusionRing&);
};

/// Elements of the fusion ring as integer coefficient vectors over the basis.
using FusionElement = IVec;

/// Checks the unit, associativity and duality axioms.  Returns one message
/// per violation; an empty report means the ring is valid, and in that case
/// the dual map is computed and cached on the ring.  Shape inconsistencies
/// are structural and throw std::invalid_argument instead of being reported.
std::vector<std::string> validate_fusion_ring(FusionRing& ring);

/// Bilinear extension of the structure constants.
FusionElement multiply(const FusionRing& ring, const FusionElement& x,
                       const FusionElement& y);

/// Frobenius-Perron dimensions of all simples at once.
///
/// Power iteration runs on the (irreducible, aperiodic) sum of all fusion
/// matrices; its Perron vector is a simultaneous positive eigenvector of
/// every fusion_matrix(k), and the per-simple value is read off as the
/// Rayleigh quotient of fusion_matrix(k) against that vector.  Individual
/// fusion matrices can be reducible or periodic (every vec_G matrix is a
/// permutation), so iterating on them directly is not reliable.
std::vector<double> fpdim_all(const FusionRing& ring);

/// Frobenius-Perron dimension of a single simple: the largest real
/// eigenvalue of fusion_matrix(k).
double fpdim_simple(const FusionRing& ring, int k);

/// Linear extension of fpdim_simple to classes of actual objects.
/// Throws std::domain_error on negative coefficients.
double fpdim(const FusionRing& ring, const FusionElement& x);

/// The Fibonacci ring: basis {1, Pi} with Pi * Pi = 1 + Pi.
FusionRing builtin_fib();

}  // namespace fusionstab
