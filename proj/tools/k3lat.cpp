// k3lat command-line front end; talks to the engine through the C API only.

#include <CLI11.hpp>
#include <json.hpp>
#include <k3lat/k3lat.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { k3lat_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct OwnedLattice {
    k3lat_lattice* ptr = nullptr;
    ~OwnedLattice() { k3lat_lattice_free(ptr); }
};

int fail(k3lat_status st) {
    std::cerr << "error: " << k3lat_last_error() << "\n";
    return static_cast<int>(st);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_report_human(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    std::cout << j["name"].get<std::string>() << "\n";
    for (const auto& c : j["checks"]) {
        std::cout << "  " << (c["pass"].get<bool>() ? "pass" : "FAIL") << "  "
                  << c["id"].get<std::string>() << ": " << c["detail"].get<std::string>()
                  << "\n";
    }
}

int load_lattice(const std::string& spec, OwnedLattice& out) {
    // a path to a JSON file, inline JSON, or a standard name like U+D6^2+A1^2
    k3lat_status st;
    if (!spec.empty() && (spec[0] == '{' || spec[0] == '[')) {
        st = k3lat_lattice_from_json(spec.c_str(), &out.ptr);
    } else if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
        std::string text = read_file(spec);
        st = k3lat_lattice_from_json(text.c_str(), &out.ptr);
    } else {
        st = k3lat_lattice_standard(spec.c_str(), &out.ptr);
    }
    return st == K3LAT_OK ? 0 : fail(st);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice, discriminant-form and quadratic-form computations "
                 "for double planes branched in six lines"};
    app.require_subcommand(1);

    // lattice info|sum|scale
    auto* lattice = app.add_subcommand("lattice", "lattice constructions and invariants");
    lattice->require_subcommand(1);
    std::string lat_a, lat_b;
    long scale_factor = 1;
    auto* lat_info = lattice->add_subcommand("info", "rank, determinant, signature, parity");
    lat_info->add_option("lattice", lat_a, "JSON file, inline JSON, or standard name")->required();
    auto* lat_sum = lattice->add_subcommand("sum", "orthogonal direct sum");
    lat_sum->add_option("first", lat_a)->required();
    lat_sum->add_option("second", lat_b)->required();
    auto* lat_scale = lattice->add_subcommand("scale", "multiply the form by an integer");
    lat_scale->add_option("lattice", lat_a)->required();
    lat_scale->add_option("--a", scale_factor, "scaling factor")->required();

    // disc form|orbits
    auto* disc = app.add_subcommand("disc", "discriminant groups and forms");
    disc->require_subcommand(1);
    std::string disc_lat;
    auto* disc_form = disc->add_subcommand("form", "orders, q and b as exact fractions");
    disc_form->add_option("lattice", disc_lat)->required();
    auto* disc_orbits = disc->add_subcommand("orbits", "isometry orbit representatives and sizes");
    disc_orbits->add_option("lattice", disc_lat)->required();

    // orbit classify|table
    auto* orbit = app.add_subcommand("orbit", "orbit classification in T = U^2 + <-1>^2");
    orbit->require_subcommand(1);
    std::string coords, basis = "e";
    int delta_max = 8;
    auto* orbit_classify = orbit->add_subcommand("classify", "classify one vector");
    orbit_classify->add_option("--coords", coords, "a,b,c,d,e,f")->required();
    orbit_classify->add_option("--basis", basis, "e (T coordinates) or y (Y coordinates)");
    auto* orbit_table = orbit->add_subcommand("table", "delta, parity case, representative, n(delta)");
    orbit_table->add_option("--delta-max", delta_max, "largest delta listed");

    // scenario list|verify
    auto* scenario = app.add_subcommand("scenario", "built-in elliptic-fibration scenarios");
    scenario->require_subcommand(1);
    std::string scen_name;
    bool as_json = false;
    scenario->add_subcommand("list", "list registered scenarios");
    auto* scen_verify = scenario->add_subcommand("verify", "run the lattice-chain checks");
    scen_verify->add_option("name", scen_name)->required();
    scen_verify->add_flag("--json", as_json, "print the JSON report");

    // phi
    auto* phi_cmd = app.add_subcommand("phi", "image of an SU(2,2;Z[i]) matrix in SO(T)+");
    std::string phi_matrix;
    phi_cmd->add_option("--matrix", phi_matrix,
                        "4x4 JSON with entries [re_num, re_den, im_num, im_den], "
                        "inline or a file path")
        ->required();

    // pfaffian
    auto* pf_cmd = app.add_subcommand("pfaffian", "M(y) and its pfaffian");
    std::string y_csv;
    pf_cmd->add_option("--y", y_csv, "y1,...,y6")->required();

    // ks / quat
    auto* ks_cmd = app.add_subcommand("ks", "Kuga-Satake decomposition data");
    long ks_delta = 1;
    bool ks_json = false;
    ks_cmd->add_option("--delta", ks_delta)->required();
    ks_cmd->add_flag("--json", ks_json);
    auto* quat_cmd = app.add_subcommand("quat", "ramification of a quaternion algebra (a,b)_Q");
    std::string qa, qb;
    quat_cmd->add_option("--a", qa)->required();
    quat_cmd->add_option("--b", qb)->required();

    // symbolic verify-d1
    auto* symbolic = app.add_subcommand("symbolic", "exact polynomial identity checks");
    symbolic->require_subcommand(1);
    symbolic->add_subcommand("verify-d1", "Weierstrass section, conics, Pluecker quadric");

    // selftest
    app.add_subcommand("selftest", "run every acceptance check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    k3lat_status st = K3LAT_OK;
    OwnedString out;

    if (lattice->parsed()) {
        OwnedLattice a;
        if (int rc = load_lattice(lat_a, a)) return rc;
        if (lat_info->parsed()) {
            st = k3lat_lattice_info_json(a.ptr, &out.ptr);
        } else if (lat_sum->parsed()) {
            OwnedLattice b, s;
            if (int rc = load_lattice(lat_b, b)) return rc;
            st = k3lat_lattice_direct_sum(a.ptr, b.ptr, &s.ptr);
            if (st == K3LAT_OK) st = k3lat_lattice_to_json(s.ptr, &out.ptr);
        } else {
            OwnedLattice s;
            st = k3lat_lattice_rescale(a.ptr, scale_factor, &s.ptr);
            if (st == K3LAT_OK) st = k3lat_lattice_to_json(s.ptr, &out.ptr);
        }
        if (st != K3LAT_OK) return fail(st);
        std::cout << out.str() << "\n";
        return 0;
    }

    if (disc->parsed()) {
        OwnedLattice a;
        if (int rc = load_lattice(disc_lat, a)) return rc;
        st = disc_form->parsed() ? k3lat_disc_form_json(a.ptr, &out.ptr)
                                 : k3lat_disc_orbits_json(a.ptr, &out.ptr);
        if (st != K3LAT_OK) return fail(st);
        std::cout << out.str() << "\n";
        return 0;
    }

    if (orbit->parsed()) {
        st = orbit_classify->parsed()
                 ? k3lat_orbit_classify_json(coords.c_str(), basis.c_str(), &out.ptr)
                 : k3lat_orbit_table_json(delta_max, &out.ptr);
        if (st != K3LAT_OK) return fail(st);
        std::cout << out.str() << "\n";
        return 0;
    }

    if (scenario->parsed()) {
        if (scen_verify->parsed()) {
            int all_pass = 0;
            st = k3lat_scenario_verify_json(scen_name.c_str(), &out.ptr, &all_pass);
            if (st != K3LAT_OK) return fail(st);
            if (as_json)
                std::cout << out.str() << "\n";
            else
                print_report_human(out.str());
            return all_pass ? 0 : 1;
        }
        st = k3lat_scenario_list_json(&out.ptr);
        if (st != K3LAT_OK) return fail(st);
        std::cout << out.str() << "\n";
        return 0;
    }

    if (phi_cmd->parsed()) {
        std::string text = phi_matrix;
        if (!text.empty() && text[0] != '[') text = read_file(text);
        st = k3lat_phi_json(text.c_str(), &out.ptr);
        if (st != K3LAT_OK) return fail(st);
        std::cout << out.str() << "\n";
        return 0;
    }

    if (pf_cmd->parsed()) {
        st = k3lat_pfaffian_json(y_csv.c_str(), &out.ptr);
        if (st != K3LAT_OK) return fail(st);
        std::cout << out.str() << "\n";
        return 0;
    }

    if (ks_cmd->parsed()) {
        st = k3lat_ks_json(ks_delta, &out.ptr);
        if (st != K3LAT_OK) return fail(st);
        if (ks_json) {
            std::cout << out.str() << "\n";
        } else {
            auto j = nlohmann::json::parse(out.str());
            std::cout << "delta " << j["delta"].get<std::string>() << ": Cl+ = "
                      << j["clifford_even"].get<std::string>() << ", "
                      << (j["is_split"].get<bool>() ? "split" : "division algebra")
                      << ", dim " << j["ks_dimension"].get<int>() << ", "
                      << j["decomposition"].get<std::string>() << "\n";
        }
        return 0;
    }

    if (quat_cmd->parsed()) {
        st = k3lat_quat_json(qa.c_str(), qb.c_str(), &out.ptr);
        if (st != K3LAT_OK) return fail(st);
        std::cout << out.str() << "\n";
        return 0;
    }

    if (symbolic->parsed()) {
        int all_pass = 0;
        st = k3lat_symbolic_verify_d1_json(&out.ptr, &all_pass);
        if (st != K3LAT_OK) return fail(st);
        print_report_human(out.str());
        return all_pass ? 0 : 1;
    }

    // selftest
    int all_pass = 0;
    st = k3lat_selftest_json(&out.ptr, &all_pass);
    if (st != K3LAT_OK) return fail(st);
    {
        auto j = nlohmann::json::parse(out.str());
        for (const auto& rep : j["reports"]) {
            bool pass = true;
            for (const auto& c : rep["checks"]) pass = pass && c["pass"].get<bool>();
            std::cout << (pass ? "pass" : "FAIL") << "  " << rep["name"].get<std::string>()
                      << "\n";
        }
    }
    std::cout << (all_pass ? "selftest: all checks passed" : "selftest: FAILURES") << "\n";
    return all_pass ? 0 : 1;
}
