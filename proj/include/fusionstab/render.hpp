#pragma once

#include <string>

#include "fusionstab/finite_group.hpp"
#include "fusionstab/quiver_stability.hpp"

namespace fusionstab {

/// "%.10f" with trailing zeros trimmed (at least one decimal digit kept),
/// so 1.0 prints as "1.0" and the golden ratio as "1.6180339887".
std::string format_double(double x);

/// Graphviz output; one edge statement per arrow, so multiplicities show as
/// repeated edges.  Byte deterministic: vertices in order, edges row major.
std::string to_dot(const Quiver& q, const std::string& name = "quiver");

/// All interval charges of the quiver as origin-anchored vectors, labelled
/// by interval.  Two stroke classes split at the midpoint of the occurring
/// lengths (short blue, long red); for the pentagon charge this separates
/// the unit vectors from the golden-ratio ones.
std::string interval_charge_svg(const StabilityFunction& zf, const TypeAQuiver& q);

}  // namespace fusionstab
