#include <complex>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fusionstab/json_io.hpp"
#include "fusionstab/oracle.hpp"
#include "fusionstab/render.hpp"

using namespace fusionstab;
using nlohmann::json;

namespace {

// Exit code contract: 0 success, 1 I/O or schema problem, 2 mathematical
// validation failure.
int guarded(const std::function<int()>& fn) {
    try {
        return fn();
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    }
}

int report_or(const std::vector<std::string>& report, const std::function<int()>& next) {
    if (!report.empty()) {
        for (const std::string& line : report) std::cerr << line << "\n";
        return 2;
    }
    return next();
}

int run_fusion_validate(const std::string& path) {
    FusionRing ring = parse_fusion_ring(load_json_file(path));
    return report_or(validate_fusion_ring(ring), [&] {
        std::cout << "valid fusion ring: rank " << ring.rank() << ", unit '"
                  << ring.label(ring.unit()) << "'\n";
        return 0;
    });
}

int run_fusion_fpdim(const std::string& path) {
    FusionRing ring = parse_fusion_ring(load_json_file(path));
    return report_or(validate_fusion_ring(ring), [&] {
        const std::vector<double> dims = fpdim_all(ring);
        for (int k = 0; k < ring.rank(); ++k) {
            if (k > 0) std::cout << ", ";
            std::cout << ring.label(k) << ": " << format_double(dims[k]);
        }
        std::cout << "\n";
        return 0;
    });
}

int run_mckay(const std::string& builtin, const std::string& table_path, const std::string& rep,
              bool separated, bool dot) {
    const CharacterTable ct = builtin.empty()
                                  ? parse_character_table(load_json_file(table_path))
                                  : builtin_character_table(builtin);
    return report_or(validate_character_table(ct), [&] {
        const int idx = ct.irrep_index(rep);
        if (idx < 0) throw SchemaError("unknown irreducible '" + rep + "'");
        const Quiver q = separated ? separated_mckay_quiver(ct, idx) : mckay_quiver(ct, idx);
        if (dot)
            std::cout << to_dot(q, separated ? "separated_mckay" : "mckay");
        else
            std::cout << quiver_to_json(q).dump(2) << "\n";
        return 0;
    });
}

int run_charge_solve(const std::string& action_path) {
    const K0ModuleAction action = parse_action(load_json_file(action_path));
    return report_or(validate_action(action), [&] {
        const std::vector<CentralCharge> basis = equivariant_charge_space(action);
        std::cerr << "dim = " << basis.size() << "\n";
        json out;
        out["dim"] = basis.size();
        out["basis"] = json::array();
        for (const CentralCharge& z : basis) out["basis"].push_back(charge_to_json(z));
        std::cout << out.dump(2) << "\n";
        return 0;
    });
}

int run_charge_check(const std::string& charge_path, const std::string& action_path, double tol) {
    const CentralCharge z = parse_charge(load_json_file(charge_path));
    const K0ModuleAction action = parse_action(load_json_file(action_path));
    return report_or(validate_action(action), [&] {
        if (z.lattice.labels != action.lattice.labels)
            throw SchemaError("charge lattice does not match action lattice");
        const double residual = equivariance_residual(z, action);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.3e", residual);
        std::cout << "max residual = " << buf << "\n";
        return residual <= tol ? 0 : 2;
    });
}

int run_hn(const std::string& quiver_path, const std::string& rep_path,
           const std::string& charge_path, const std::string& svg_path, double tol) {
    const TypeAQuiver q = parse_type_a_quiver(load_json_file(quiver_path));
    const TypeARep rep = parse_rep(load_json_file(rep_path));
    const CentralCharge charge = parse_charge(load_json_file(charge_path));
    if (charge.values.size() != q.n)
        throw SchemaError("charge has " + std::to_string(charge.values.size()) +
                          " values, quiver has " + std::to_string(q.n) + " vertices");
    const StabilityFunction zf{charge.values};
    return report_or(validate_stability_function(zf), [&] {
        const std::vector<HNPiece> pieces = hn_filtration(zf, rep, q, tol);
        json out;
        out["pieces"] = json::array();
        for (const HNPiece& p : pieces) {
            json intervals = json::array();
            for (const IntervalModule& m : p.intervals)
                intervals.push_back(json::array({m.a, m.b}));
            json cls = json::array();
            for (int v = 0; v < p.k0_class.size(); ++v) cls.push_back(p.k0_class[v]);
            out["pieces"].push_back(json{{"phase", p.phase_value},
                                         {"intervals", std::move(intervals)},
                                         {"class", std::move(cls)}});
        }
        std::cout << out.dump(2) << "\n";
        if (!svg_path.empty()) {
            std::ofstream svg(svg_path);
            if (!svg) throw SchemaError("cannot write '" + svg_path + "'");
            svg << interval_charge_svg(zf, q);
        }
        return 0;
    });
}

int run_duality_check(const std::string& bundle_path, double tol) {
    const DualityBundle b = parse_duality_bundle(load_json_file(bundle_path));
    auto combined = validate_action(b.action_g);
    for (const std::string& line : validate_action(b.action_rep_g))
        combined.push_back("rep action: " + line);
    return report_or(combined, [&] {
        const DualityReport report =
            duality_check(b.forgetful, b.induction, b.action_g, b.action_rep_g, tol);
        for (const auto& item : report.items)
            std::cout << (item.pass ? "[PASS] " : "[FAIL] ") << item.name << " -- " << item.detail
                      << "\n";
        return report.all_pass() ? 0 : 2;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fusion rings, McKay quivers, equivariant central charges and HN filtrations"};
    app.require_subcommand(1);
    int exit_code = 0;
    double tol = 1e-9;

    auto* fusion = app.add_subcommand("fusion", "fusion ring validation and FP dimensions");
    fusion->require_subcommand(1);
    std::string fusion_path;
    auto* fusion_validate = fusion->add_subcommand("validate", "check the fusion ring axioms");
    fusion_validate->add_option("ring", fusion_path, "fusion ring JSON file")->required();
    fusion_validate->callback([&] { exit_code = guarded([&] { return run_fusion_validate(fusion_path); }); });
    auto* fusion_fpdim = fusion->add_subcommand("fpdim", "print the FP dimension of every simple");
    fusion_fpdim->add_option("ring", fusion_path, "fusion ring JSON file")->required();
    fusion_fpdim->callback([&] { exit_code = guarded([&] { return run_fusion_fpdim(fusion_path); }); });

    auto* mckay = app.add_subcommand("mckay", "(separated) McKay quiver of a pair (G, V)");
    std::string mckay_builtin, mckay_table, mckay_rep;
    bool mckay_separated = false, mckay_dot = false;
    auto* builtin_opt = mckay->add_option("--builtin", mckay_builtin, "builtin character table name");
    mckay->add_option("--table", mckay_table, "character table JSON file")->excludes(builtin_opt);
    mckay->add_option("--rep", mckay_rep, "irreducible to tensor by")->required();
    mckay->add_flag("--separated", mckay_separated, "emit the separated (bipartite) quiver");
    mckay->add_flag("--dot", mckay_dot, "emit Graphviz DOT instead of JSON");
    mckay->callback([&] {
        if (mckay_builtin.empty() && mckay_table.empty()) {
            std::cerr << "error: one of --builtin or --table is required\n";
            exit_code = 1;
            return;
        }
        exit_code = guarded(
            [&] { return run_mckay(mckay_builtin, mckay_table, mckay_rep, mckay_separated, mckay_dot); });
    });

    auto* charge = app.add_subcommand("charge", "equivariant central charge spaces");
    charge->require_subcommand(1);
    std::string charge_action, charge_file;
    auto* charge_solve = charge->add_subcommand("solve", "basis of the equivariant charge space");
    charge_solve->add_option("action", charge_action, "action JSON file")->required();
    charge_solve->callback([&] { exit_code = guarded([&] { return run_charge_solve(charge_action); }); });
    auto* charge_check = charge->add_subcommand("check", "equivariance residual of a charge");
    charge_check->add_option("charge", charge_file, "charge JSON file")->required();
    charge_check->add_option("action", charge_action, "action JSON file")->required();
    charge_check->add_option("--tol", tol, "residual tolerance");
    charge_check->callback(
        [&] { exit_code = guarded([&] { return run_charge_check(charge_file, charge_action, tol); }); });

    auto* hn = app.add_subcommand("hn", "Harder-Narasimhan filtration on a type A quiver");
    std::string hn_quiver, hn_rep, hn_charge, hn_svg;
    hn->add_option("quiver", hn_quiver, "type A quiver JSON file")->required();
    hn->add_option("rep", hn_rep, "interval multiset JSON file")->required();
    hn->add_option("charge", hn_charge, "charge JSON file")->required();
    hn->add_option("--svg", hn_svg, "also render all interval charges to this SVG file");
    hn->add_option("--tol", tol, "phase comparison tolerance");
    hn->callback(
        [&] { exit_code = guarded([&] { return run_hn(hn_quiver, hn_rep, hn_charge, hn_svg, tol); }); });

    auto* duality = app.add_subcommand("duality", "K0-level induction/forgetful duality checks");
    duality->require_subcommand(1);
    std::string duality_bundle;
    auto* duality_cmd = duality->add_subcommand("check", "verify the four duality identities");
    duality_cmd->add_option("bundle", duality_bundle, "duality bundle JSON file")->required();
    duality_cmd->add_option("--tol", tol, "comparison tolerance");
    duality_cmd->callback(
        [&] { exit_code = guarded([&] { return run_duality_check(duality_bundle, tol); }); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    return exit_code;
}
