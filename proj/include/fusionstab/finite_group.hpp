#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fusionstab/fusion_ring.hpp"

namespace fusionstab {

/// A finite group presented by its multiplication table.
/// table[g][h] is the index of the product g*h.
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> table;
    int identity = 0;
};

/// Latin-square, identity and associativity checks.  Empty report iff valid.
std::vector<std::string> validate_group(const FiniteGroup& g);

int group_inverse(const FiniteGroup& g, int x);

/// Orbits of the conjugation action, each sorted ascending, the list of
/// classes ordered by minimal element index.  With the builtin element
/// enumerations this reproduces the conventional class order (e.g. cycle
/// type order for symmetric groups).
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

/// Character table of a finite group: rows are irreducibles, columns are
/// conjugacy classes.  Values may be complex (cyclic groups) or irrational
/// (dihedral rotation characters); all arithmetic on them is double
/// precision with integrality recovered by rounding.
struct CharacterTable {
    Int group_order = 0;
    std::vector<Int> class_sizes;
    std::vector<std::string> irreps;
    Eigen::MatrixXcd chars;              // irreps x classes
    std::vector<int> class_of_element;   // optional; empty when standalone

    int num_classes() const { return static_cast<int>(class_sizes.size()); }
    int num_irreps() const { return static_cast<int>(irreps.size()); }
    int irrep_index(const std::string& name) const;  // -1 if absent

    /// Dimension of irrep a (its value on the class of the identity,
    /// rounded; the validator guarantees integrality).
    Int dim(int a) const;
};

/// Orthogonality, integral dimensions and sum-of-squares checks at 1e-9.
/// Shape mismatches throw std::invalid_argument.
std::vector<std::string> validate_character_table(const CharacterTable& ct);

/// Multiplicity vector of V_a (x) V_b over the irreducibles:
/// component c = (1/|G|) sum_cls |cls| chi_a chi_b conj(chi_c).
/// Throws std::runtime_error if a component is not an integer within 1e-6.
IVec tensor_multiplicities(const CharacterTable& ct, int a, int b);

/// A quiver as labelled vertices plus a non-negative arrow-count matrix:
/// adj(i, j) = number of arrows i -> j.
struct Quiver {
    std::vector<std::string> vertices;
    IMat adj;

    Int num_arrows() const { return adj.sum(); }
};

/// McKay quiver of (G, V): vertices are the irreducibles, and the number of
/// arrows i -> j is the multiplicity of V_j in V (x) V_i.  V is given as a
/// non-negative combination of irreps.
Quiver mckay_quiver(const CharacterTable& ct, const IVec& v_class);
Quiver mckay_quiver(const CharacterTable& ct, int v_irrep);

/// Two disjoint copies of the irreducibles with every arrow i -> j of the
/// McKay quiver redirected left_i -> right_j.  Bipartite, loop-free.
Quiver separated_mckay_quiver(const CharacterTable& ct, const IVec& v_class);
Quiver separated_mckay_quiver(const CharacterTable& ct, int v_irrep);

/// Shipped groups: C1..C12, S3, S4, D4, D5.  Unknown names throw
/// std::invalid_argument.
FiniteGroup builtin_group(const std::string& name);
CharacterTable builtin_character_table(const std::string& name);
std::vector<std::string> builtin_group_names();

/// Group ring of G as a fusion ring: basis g0..g{n-1}, [g][h] = [gh].
FusionRing builtin_vec_g(const FiniteGroup& g);

/// Representation ring of G from its character table: basis the irreps,
/// structure constants from tensor_multiplicities.
FusionRing builtin_rep_g(const CharacterTable& ct);

}  // namespace fusionstab
