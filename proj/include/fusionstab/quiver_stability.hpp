#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "fusionstab/fusion_ring.hpp"
#include "fusionstab/k0_module.hpp"

namespace fusionstab {

enum class Arrow { Right, Left };  // Right: i -> i+1, Left: i+1 -> i

/// Type A quiver on vertices 1..n with a chosen orientation per edge.
struct TypeAQuiver {
    int n = 0;
    std::vector<Arrow> orientation;  // n-1 entries

    /// Arrows as (source, target) pairs, 1-based.
    std::vector<std::pair<int, int>> arrows() const;
};

std::vector<std::string> validate_type_a_quiver(const TypeAQuiver& q);

/// The bipartite A4 quiver: arrows 1 -> 2 <- 3 -> 4.
TypeAQuiver bipartite_a4();

/// Thin indecomposable supported on the vertex range [a, b], 1-based.
struct IntervalModule {
    int a = 1, b = 1;
    auto operator<=>(const IntervalModule&) const = default;
    std::string name() const;  // "[a,b]"
};

/// A representation as a multiset of interval modules.
using TypeARep = std::vector<IntervalModule>;

/// All n(n+1)/2 intervals in (a, b) order.
std::vector<IntervalModule> indecomposables(const TypeAQuiver& q);

/// K0 class of an interval: 1 on the supported vertices.
IVec dim_vector(const IntervalModule& m, const TypeAQuiver& q);

/// Stability function on the heart of a type A quiver, given by its values
/// on the vertex simples.  Valid when every value lies in the strict upper
/// half plane union the strictly negative reals; that region is closed under
/// addition, so validity on the simples covers every nonzero class.
struct StabilityFunction {
    Eigen::VectorXcd z;  // z[v-1] = value on the simple at vertex v
};

/// One message per vertex simple whose value leaves the allowed region.
std::vector<std::string> validate_stability_function(const StabilityFunction& zf);

/// Supports of the submodules of an interval: the subsets of [a, b] closed
/// under the arrows inside the support.  Every submodule of a thin module is
/// determined by such a subset (possibly disconnected).  Includes the empty
/// set and the full support; ordered by bitmask value for determinism.
std::vector<std::vector<int>> submodule_supports(const IntervalModule& m, const TypeAQuiver& q);

/// Phase in (0, 1]: (1/pi) arg Z(class), with the negative reals at 1.
/// Throws std::domain_error on the zero class.
double phase(const StabilityFunction& zf, const IVec& k0_class);

bool is_semistable(const StabilityFunction& zf, const IntervalModule& m, const TypeAQuiver& q,
                   double tol = 1e-9);
bool is_stable(const StabilityFunction& zf, const IntervalModule& m, const TypeAQuiver& q,
               double tol = 1e-9);

struct HNPiece {
    double phase_value = 0.0;
    std::vector<IntervalModule> intervals;  // sorted by (a, b)
    IVec k0_class;
};

/// Harder-Narasimhan filtration, reported as graded pieces with strictly
/// decreasing phases.  Per interval the maximal destabilising submodule is
/// found greedily over submodule supports (maximal phase, then maximal
/// cardinality, then lexicographically smallest support) and the complement
/// is processed recursively; pieces of equal phase across summands merge.
std::vector<HNPiece> hn_filtration(const StabilityFunction& zf, const TypeARep& rep,
                                   const TypeAQuiver& q, double tol = 1e-9);

/// The central charge whose interval images form the I2(5) root system:
/// Z(S1) = -1, Z(S2) = phi e^{i pi/5}, Z(S3) = -phi, Z(S4) = e^{i pi/5}.
/// The ten interval charges have lengths in {1, phi} and phases k/5.
StabilityFunction pentagon_charge();

/// Object-level action of one fusion ring simple on the interval modules;
/// images are multisets of intervals.  The K0 shadow of the table must agree
/// with the given action matrix; the constructor checks this and throws.
struct ObjectActionTable {
    FusionRing ring;
    int simple = 0;  // acting basis element
    TypeAQuiver quiver;
    std::map<IntervalModule, TypeARep> images;
    IMat shadow;  // action of `simple` on the vertex-simple lattice

    ObjectActionTable(FusionRing ring, int simple, TypeAQuiver quiver,
                      std::map<IntervalModule, TypeARep> images, IMat shadow);
};

/// The action of Pi on the ten indecomposables of the bipartite A4 quiver:
/// five transposition pairs, with an extra fixed copy on the longer member.
ObjectActionTable fib_a4_object_action();

/// Semistability transport survey: for every interval A in the table,
/// compares semistability of A with that of every member of its image and
/// checks phase agreement.  Returns one message per counterexample.  Makes
/// no equivariance assumption on Z.
std::vector<std::string> transport_counterexamples(const StabilityFunction& zf,
                                                   const ObjectActionTable& table,
                                                   double tol = 1e-9);

/// Same survey, but requires Z to be equivariant for the table's K0 shadow
/// (throws std::invalid_argument otherwise).  Under that hypothesis any
/// returned counterexample is a genuine failure of semistability transport.
std::vector<std::string> check_equivariant_semistability(const StabilityFunction& zf,
                                                         const ObjectActionTable& table,
                                                         double tol = 1e-9);

}  // namespace fusionstab
