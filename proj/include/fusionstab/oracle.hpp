#pragma once

#include <vector>

#include "fusionstab/quiver_stability.hpp"

namespace fusionstab {

/// A quiver representation over the two-element field, given by explicit
/// per-vertex dimensions and one 0/1 matrix per edge (target rows, source
/// columns, in the direction of the arrow).
struct ExplicitRepF2 {
    std::vector<int> dims;       // one entry per vertex
    std::vector<IMat> edge_maps; // one entry per edge of the quiver
};

/// Assemble the interval multiset into explicit matrices: identity blocks
/// wherever an interval covers both endpoints of an edge.
ExplicitRepF2 assemble_rep_f2(const TypeARep& rep, const TypeAQuiver& q);

struct OraclePiece {
    double phase_value = 0.0;
    IVec k0_class;
};

struct OracleResult {
    bool semistable = false;
    std::vector<OraclePiece> hn;  // phases strictly decreasing
};

/// Independent semistability and HN oracle: enumerates every subspace tuple
/// compatible with the arrow maps, decides semistability from the phases of
/// the subrepresentation classes, and peels off maximal-phase subobjects to
/// produce the HN phases and graded classes.  Does not share any code path
/// with submodule_supports or hn_filtration.
///
/// Preconditions: nonzero representation, total dimension at most 8.
OracleResult brute_force_oracle(const ExplicitRepF2& rep, const TypeAQuiver& q,
                                const StabilityFunction& zf, double tol = 1e-9);

}  // namespace fusionstab
