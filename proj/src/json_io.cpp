#include "fusionstab/json_io.hpp"

#include <fstream>

namespace fusionstab {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string(what) + ": missing field '" + key + "'");
    return j.at(key);
}

Int to_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw SchemaError(std::string(what) + ": expected an integer");
    return j.get<Int>();
}

IMat parse_imatrix(const json& j, const char* what) {
    if (!j.is_array() || j.empty())
        throw SchemaError(std::string(what) + ": expected a non-empty matrix");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j.at(0).size());
    IMat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const json& row = j.at(r);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw SchemaError(std::string(what) + ": ragged matrix");
        for (int c = 0; c < cols; ++c) m(r, c) = to_int(row.at(c), what);
    }
    return m;
}

std::vector<std::string> parse_labels(const json& j, const char* what) {
    if (!j.is_array() || j.empty())
        throw SchemaError(std::string(what) + ": expected a non-empty list of labels");
    std::vector<std::string> out;
    for (const json& item : j) {
        if (!item.is_string())
            throw SchemaError(std::string(what) + ": labels must be strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::complex<double> parse_complex(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j.at(0).is_number() || !j.at(1).is_number())
        throw SchemaError(std::string(what) + ": complex values are [re, im] pairs");
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

}  // namespace

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SchemaError("cannot parse '" + path + "': " + e.what());
    }
    return j;
}

FusionRing builtin_ring(const std::string& name) {
    try {
        if (name == "fib") return builtin_fib();
        if (name.rfind("vec_", 0) == 0) return builtin_vec_g(builtin_group(name.substr(4)));
        if (name.rfind("rep_", 0) == 0)
            return builtin_rep_g(builtin_character_table(name.substr(4)));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
    throw SchemaError("unknown builtin ring '" + name + "'");
}

FusionRing parse_fusion_ring(const json& j) {
    if (j.is_string()) return builtin_ring(j.get<std::string>());
    if (j.is_object() && j.contains("builtin"))
        return builtin_ring(need(j, "builtin", "fusion ring").get<std::string>());
    const auto labels = parse_labels(need(j, "basis", "fusion ring"), "fusion ring basis");
    const int unit = static_cast<int>(to_int(need(j, "unit", "fusion ring"), "fusion ring unit"));
    const json& n = need(j, "N", "fusion ring");
    const int rank = static_cast<int>(labels.size());
    if (!n.is_array() || static_cast<int>(n.size()) != rank)
        throw SchemaError("fusion ring: N must have one slice per basis element");
    std::vector<IMat> tensor;
    tensor.reserve(rank);
    for (const json& slice : n) {
        IMat m = parse_imatrix(slice, "fusion ring N slice");
        if (m.rows() != rank || m.cols() != rank)
            throw SchemaError("fusion ring: N slice has wrong shape");
        tensor.push_back(std::move(m));
    }
    if (unit < 0 || unit >= rank) throw SchemaError("fusion ring: unit index out of range");
    return FusionRing(labels, unit, std::move(tensor));
}

json fusion_ring_to_json(const FusionRing& ring) {
    json n = json::array();
    for (int i = 0; i < ring.rank(); ++i) {
        json slice = json::array();
        for (int j_ = 0; j_ < ring.rank(); ++j_) {
            json row = json::array();
            for (int k = 0; k < ring.rank(); ++k) row.push_back(ring.structure_constant(i, j_, k));
            slice.push_back(std::move(row));
        }
        n.push_back(std::move(slice));
    }
    return json{{"basis", ring.basis()}, {"unit", ring.unit()}, {"N", std::move(n)}};
}

FiniteGroup parse_group(const json& j) {
    if (j.is_string()) return builtin_group(j.get<std::string>());
    if (j.is_object() && j.contains("builtin")) {
        try {
            return builtin_group(j.at("builtin").get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw SchemaError(e.what());
        }
    }
    FiniteGroup g;
    g.order = static_cast<int>(to_int(need(j, "order", "group"), "group order"));
    const json& table = need(j, "table", "group");
    if (!table.is_array() || static_cast<int>(table.size()) != g.order)
        throw SchemaError("group: table must have |G| rows");
    for (const json& row : table) {
        if (!row.is_array() || static_cast<int>(row.size()) != g.order)
            throw SchemaError("group: table must be square");
        std::vector<int> r;
        for (const json& x : row) r.push_back(static_cast<int>(to_int(x, "group table")));
        g.table.push_back(std::move(r));
    }
    g.identity = j.contains("identity")
                     ? static_cast<int>(to_int(j.at("identity"), "group identity"))
                     : 0;
    return g;
}

CharacterTable parse_character_table(const json& j) {
    if (j.is_string()) return builtin_character_table(j.get<std::string>());
    if (j.is_object() && j.contains("builtin")) {
        try {
            return builtin_character_table(j.at("builtin").get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw SchemaError(e.what());
        }
    }
    const FiniteGroup g = parse_group(need(j, "group", "character table"));
    CharacterTable ct;
    ct.group_order = g.order;
    for (const json& s : need(j, "class_sizes", "character table"))
        ct.class_sizes.push_back(to_int(s, "class size"));
    const json& chars = need(j, "chars", "character table");
    const int ni = static_cast<int>(chars.size());
    const int nc = ct.num_classes();
    if (ni == 0) throw SchemaError("character table: no character rows");
    ct.chars.resize(ni, nc);
    for (int a = 0; a < ni; ++a) {
        const json& row = chars.at(a);
        if (!row.is_array() || static_cast<int>(row.size()) != nc)
            throw SchemaError("character table: row " + std::to_string(a) +
                              " does not match the number of classes");
        for (int c = 0; c < nc; ++c) ct.chars(a, c) = parse_complex(row.at(c), "character value");
    }
    if (j.contains("irreps")) {
        ct.irreps = parse_labels(j.at("irreps"), "character table irreps");
        if (static_cast<int>(ct.irreps.size()) != ni)
            throw SchemaError("character table: wrong number of irrep names");
    } else {
        for (int a = 0; a < ni; ++a) ct.irreps.push_back("V" + std::to_string(a));
    }
    // class membership from the group, for cross checking sizes
    const auto classes = conjugacy_classes(g);
    if (static_cast<int>(classes.size()) != nc)
        throw SchemaError("character table: group has " + std::to_string(classes.size()) +
                          " classes, table lists " + std::to_string(nc));
    ct.class_of_element.assign(g.order, -1);
    for (size_t c = 0; c < classes.size(); ++c)
        for (int x : classes[c]) ct.class_of_element[x] = static_cast<int>(c);
    return ct;
}

K0ModuleAction parse_action(const json& j) {
    FusionRing ring = parse_fusion_ring(need(j, "ring", "action"));
    K0Lattice lattice{parse_labels(need(j, "lattice", "action"), "action lattice")};
    const json& mats = need(j, "matrices", "action");
    if (!mats.is_object()) throw SchemaError("action: 'matrices' must map labels to matrices");
    const int n = lattice.rank();
    std::vector<IMat> matrices(ring.rank(), IMat::Identity(n, n));
    std::vector<bool> given(ring.rank(), false);
    for (const auto& [label, value] : mats.items()) {
        const int idx = ring.index_of(label);
        if (idx < 0) throw SchemaError("action: '" + label + "' is not a ring basis label");
        IMat m = parse_imatrix(value, "action matrix");
        if (m.rows() != n || m.cols() != n)
            throw SchemaError("action: matrix for '" + label + "' must be " + std::to_string(n) +
                              "x" + std::to_string(n));
        matrices[idx] = std::move(m);
        given[idx] = true;
    }
    for (int i = 0; i < ring.rank(); ++i)
        if (!given[i] && i != ring.unit())
            throw SchemaError("action: missing matrix for '" + ring.label(i) + "'");
    return K0ModuleAction{std::move(ring), std::move(lattice), std::move(matrices)};
}

CentralCharge parse_charge(const json& j) {
    K0Lattice lattice{parse_labels(need(j, "lattice", "charge"), "charge lattice")};
    const json& values = need(j, "values", "charge");
    if (!values.is_array() || static_cast<int>(values.size()) != lattice.rank())
        throw SchemaError("charge: one [re, im] value per lattice label required");
    Eigen::VectorXcd z(lattice.rank());
    for (int i = 0; i < lattice.rank(); ++i) z[i] = parse_complex(values.at(i), "charge value");
    return CentralCharge{std::move(lattice), std::move(z)};
}

json charge_to_json(const CentralCharge& z) {
    json values = json::array();
    for (int i = 0; i < z.values.size(); ++i)
        values.push_back(json::array({z.values[i].real(), z.values[i].imag()}));
    return json{{"lattice", z.lattice.labels}, {"values", std::move(values)}};
}

TypeAQuiver parse_type_a_quiver(const json& j) {
    TypeAQuiver q;
    q.n = static_cast<int>(to_int(need(j, "n", "quiver"), "quiver size"));
    if (q.n < 1) throw SchemaError("quiver: n must be at least 1");
    const json& orient = need(j, "orientation", "quiver");
    if (!orient.is_array() || static_cast<int>(orient.size()) != q.n - 1)
        throw SchemaError("quiver: expected " + std::to_string(q.n - 1) + " orientation entries");
    for (const json& o : orient) {
        const std::string s = o.is_string() ? o.get<std::string>() : "";
        if (s == "R")
            q.orientation.push_back(Arrow::Right);
        else if (s == "L")
            q.orientation.push_back(Arrow::Left);
        else
            throw SchemaError("quiver: orientation entries must be \"R\" or \"L\"");
    }
    return q;
}

TypeARep parse_rep(const json& j) {
    if (!j.is_array()) throw SchemaError("rep: expected a list of [a, b] pairs");
    TypeARep rep;
    for (const json& item : j) {
        if (!item.is_array() || item.size() != 2)
            throw SchemaError("rep: intervals are [a, b] pairs");
        rep.push_back(IntervalModule{static_cast<int>(to_int(item.at(0), "interval")),
                                     static_cast<int>(to_int(item.at(1), "interval"))});
    }
    return rep;
}

json quiver_to_json(const Quiver& q) {
    json adj = json::array();
    for (int i = 0; i < q.adj.rows(); ++i) {
        json row = json::array();
        for (int j_ = 0; j_ < q.adj.cols(); ++j_) row.push_back(q.adj(i, j_));
        adj.push_back(std::move(row));
    }
    return json{{"vertices", q.vertices}, {"adj", std::move(adj)}};
}

Quiver parse_quiver(const json& j) {
    Quiver q;
    q.vertices = parse_labels(need(j, "vertices", "quiver"), "quiver vertices");
    q.adj = parse_imatrix(need(j, "adj", "quiver"), "quiver adjacency");
    if (q.adj.rows() != static_cast<int>(q.vertices.size()) || q.adj.rows() != q.adj.cols())
        throw SchemaError("quiver: adjacency shape does not match vertex count");
    return q;
}

DualityBundle parse_duality_bundle(const json& j) {
    DualityBundle b{parse_imatrix(need(j, "forgetful", "duality bundle"), "forgetful matrix"),
                    parse_imatrix(need(j, "induction", "duality bundle"), "induction matrix"),
                    parse_action(need(j, "action_g", "duality bundle")),
                    parse_action(need(j, "action_rep_g", "duality bundle"))};
    return b;
}

}  // namespace fusionstab
