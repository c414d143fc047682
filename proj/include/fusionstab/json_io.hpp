#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fusionstab/finite_group.hpp"
#include "fusionstab/fusion_ring.hpp"
#include "fusionstab/k0_module.hpp"
#include "fusionstab/quiver_stability.hpp"

namespace fusionstab {

/// Malformed input (wrong shape, unknown field values, unknown builtin
/// names).  Distinct from mathematical validation failures, which are
/// reported by the validators.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json load_json_file(const std::string& path);

/// { "basis": [...], "unit": i, "N": [[[...]]] }, or a builtin name given
/// either as a bare string or as { "builtin": name }.  Builtin names:
/// "fib", "vec_<G>", "rep_<G>" for the shipped groups G.
FusionRing parse_fusion_ring(const nlohmann::json& j);
FusionRing builtin_ring(const std::string& name);
nlohmann::json fusion_ring_to_json(const FusionRing& ring);

/// { "order": n, "table": [[...]] } or { "builtin": name }.
FiniteGroup parse_group(const nlohmann::json& j);

/// { "group": <group>, "class_sizes": [...], "chars": [[[re,im],...]],
///   "irreps": [...]? } or { "builtin": name }.  Omitted irrep names
/// default to V0, V1, ...
CharacterTable parse_character_table(const nlohmann::json& j);

/// { "ring": <ring or builtin name>, "lattice": [...],
///   "matrices": { label: [[...]], ... } }.  The unit matrix may be
/// omitted (it is the identity).
K0ModuleAction parse_action(const nlohmann::json& j);

/// { "lattice": [...], "values": [[re,im],...] }
CentralCharge parse_charge(const nlohmann::json& j);
nlohmann::json charge_to_json(const CentralCharge& z);

/// { "n": 4, "orientation": ["R","L","R"] }
TypeAQuiver parse_type_a_quiver(const nlohmann::json& j);

/// [[a,b], ...]
TypeARep parse_rep(const nlohmann::json& j);

/// { "vertices": [...], "adj": [[...]] }
nlohmann::json quiver_to_json(const Quiver& q);
Quiver parse_quiver(const nlohmann::json& j);

struct DualityBundle {
    IMat forgetful;
    IMat induction;
    K0ModuleAction action_g;
    K0ModuleAction action_rep_g;
};

/// { "forgetful": [[...]], "induction": [[...]],
///   "action_g": <action>, "action_rep_g": <action> }
DualityBundle parse_duality_bundle(const nlohmann::json& j);

}  // namespace fusionstab
