#include "k3lat/k3lat.h"

#include "checks.hpp"
#include "discform.hpp"
#include "fibration.hpp"
#include "gaussian.hpp"
#include "geomchecks.hpp"
#include "quaternion.hpp"
#include "wall.hpp"
#include <json.hpp>

#include <cstring>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace k3lat;

struct k3lat_lattice {
    IntLattice value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
k3lat_status guarded(F&& f) {
    try {
        return f();
    } catch (const input_error& e) {
        g_last_error = e.what();
        return K3LAT_ERR_INPUT;
    } catch (const precondition_error& e) {
        g_last_error = e.what();
        return K3LAT_ERR_PRECONDITION;
    } catch (const json::exception& e) {
        g_last_error = e.what();
        return K3LAT_ERR_INPUT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return K3LAT_ERR_INTERNAL;
    }
}

json lattice_json(const IntLattice& l) {
    json gram = json::array();
    for (std::size_t i = 0; i < l.rank(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < l.rank(); ++j) row.push_back(to_string(l.gram()[i][j]));
        gram.push_back(std::move(row));
    }
    return json{{"label", l.label()}, {"gram", std::move(gram)}};
}

json report_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"name", r.name}, {"checks", std::move(checks)}};
}

IntLattice lattice_sum_from_name(const std::string& name) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : name) {
        if (c == '+') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    require(!parts.empty() && !parts[0].empty(), "empty lattice name");
    // allow an exponent shorthand like A1^2
    auto expand = [](const std::string& p) {
        auto caret = p.find('^');
        if (caret == std::string::npos) return std::vector<std::string>{p};
        int e = std::stoi(p.substr(caret + 1));
        require(e >= 1, "exponent must be positive");
        return std::vector<std::string>(static_cast<std::size_t>(e), p.substr(0, caret));
    };
    std::optional<IntLattice> acc;
    for (const auto& part : parts)
        for (const auto& nm : expand(part)) {
            IntLattice next = make_standard(nm);
            acc = acc ? direct_sum(*acc, next) : next;
        }
    return IntLattice(acc->gram(), name);
}

std::array<Int, 6> parse_coords6(const std::string& csv) {
    std::array<Int, 6> out;
    std::stringstream ss(csv);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 6) throw input_error("expected 6 coordinates");
        try {
            out[static_cast<std::size_t>(i++)] = Int(item);
        } catch (const std::exception&) {
            throw input_error("bad coordinate: " + item);
        }
    }
    if (i != 6) throw input_error("expected 6 coordinates");
    return out;
}

Int json_int(const json& v) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) return Int(v.get<std::string>());
    throw input_error("expected an integer (number or string)");
}

IntLattice parse_lattice_json(const char* text) {
    json j = json::parse(text);
    require(j.contains("gram") && j["gram"].is_array(), "lattice JSON needs a gram array");
    IntMat gram;
    for (const auto& row : j["gram"]) {
        IntVec r;
        for (const auto& x : row) r.push_back(json_int(x));
        gram.push_back(std::move(r));
    }
    require(!gram.empty(), "gram must be nonempty");
    for (const auto& r : gram)
        if (r.size() != gram.size()) throw input_error("gram must be square");
    for (std::size_t i = 0; i < gram.size(); ++i)
        for (std::size_t j2 = 0; j2 < gram.size(); ++j2)
            if (gram[i][j2] != gram[j2][i]) throw input_error("gram must be symmetric");
    std::string label = j.value("label", "");
    try {
        return IntLattice(std::move(gram), label);
    } catch (const precondition_error& e) {
        throw input_error(e.what());
    }
}

} // namespace

extern "C" {

const char* k3lat_last_error(void) { return g_last_error.c_str(); }

void k3lat_string_free(char* s) { std::free(s); }

k3lat_status k3lat_lattice_from_json(const char* text, k3lat_lattice** out) {
    return guarded([&]() {
        *out = new k3lat_lattice{parse_lattice_json(text)};
        return K3LAT_OK;
    });
}

k3lat_status k3lat_lattice_standard(const char* name, k3lat_lattice** out) {
    return guarded([&]() {
        *out = new k3lat_lattice{lattice_sum_from_name(name)};
        return K3LAT_OK;
    });
}

void k3lat_lattice_free(k3lat_lattice* l) { delete l; }

k3lat_status k3lat_lattice_info_json(const k3lat_lattice* l, char** out_json) {
    return guarded([&]() {
        const IntLattice& lat = l->value;
        SignaturePair s = lat.signature();
        ScaleNorm sn = scale_and_norm(lat);
        json info{{"label", lat.label()},
                  {"rank", lat.rank()},
                  {"det", to_string(lat.determinant())},
                  {"signature", {s.pos, s.neg}},
                  {"even", lat.is_even()},
                  {"scale", to_string(sn.scale)},
                  {"norm_gcd", to_string(sn.norm_gcd)}};
        *out_json = dup_string(info.dump(2));
        return K3LAT_OK;
    });
}

k3lat_status k3lat_lattice_to_json(const k3lat_lattice* l, char** out_json) {
    return guarded([&]() {
        *out_json = dup_string(lattice_json(l->value).dump(2));
        return K3LAT_OK;
    });
}

k3lat_status k3lat_lattice_direct_sum(const k3lat_lattice* a, const k3lat_lattice* b,
                                      k3lat_lattice** out) {
    return guarded([&]() {
        *out = new k3lat_lattice{direct_sum(a->value, b->value)};
        return K3LAT_OK;
    });
}

k3lat_status k3lat_lattice_rescale(const k3lat_lattice* l, long factor, k3lat_lattice** out) {
    return guarded([&]() {
        *out = new k3lat_lattice{rescale(l->value, Int(factor))};
        return K3LAT_OK;
    });
}

k3lat_status k3lat_disc_form_json(const k3lat_lattice* l, char** out_json) {
    return guarded([&]() {
        FiniteQuadraticForm f = discriminant_form(l->value);
        json orders = json::array(), q = json::array(), b = json::array();
        for (const auto& d : f.orders()) orders.push_back(to_string(d));
        for (std::size_t i = 0; i < f.ngens(); ++i) {
            q.push_back(to_string(f.q_gen(i)));
            json row = json::array();
            for (std::size_t j = 0; j < f.ngens(); ++j) row.push_back(to_string(f.b_gen(i, j)));
            b.push_back(std::move(row));
        }
        json out{{"label", l->value.label()},
                 {"orders", std::move(orders)},
                 {"q", std::move(q)},
                 {"b", std::move(b)}};
        *out_json = dup_string(out.dump(2));
        return K3LAT_OK;
    });
}

k3lat_status k3lat_disc_orbits_json(const k3lat_lattice* l, char** out_json) {
    return guarded([&]() {
        FiniteQuadraticForm f = discriminant_form(l->value);
        auto orbits = isometry_orbits(f);
        json arr = json::array();
        for (const auto& o : orbits) {
            auto rep = *std::min_element(o.begin(), o.end());
            json repj = json::array();
            for (const auto& c : rep) repj.push_back(to_string(c));
            arr.push_back(json{{"size", o.size()},
                               {"representative", std::move(repj)},
                               {"q", to_string(f.q_of(rep))}});
        }
        json out{{"label", l->value.label()}, {"orbits", std::move(arr)}};
        *out_json = dup_string(out.dump(2));
        return K3LAT_OK;
    });
}

k3lat_status k3lat_orbit_classify_json(const char* coords_csv, const char* basis,
                                       char** out_json) {
    return guarded([&]() {
        std::array<Int, 6> c = parse_coords6(coords_csv);
        std::string bs = basis ? basis : "e";
        json out;
        if (bs == "e") {
            TVector x;
            for (int i = 0; i < 6; ++i) x[i] = c[static_cast<std::size_t>(i)];
            require(t_primitive(x), "vector is not primitive in T");
            Int nrm = t_norm(x);
            VectorType ty = vector_type(x);
            out["basis"] = "e";
            out["norm"] = to_string(nrm);
            out["type"] = ty == VectorType::characteristic ? "characteristic" : "ordinary";
            out["delta"] = to_string(delta_of_t(x));
            if (nrm < 0) {
                TVector rep = canonical_rep(nrm, ty);
                json repj = json::array();
                for (const auto& v : rep) repj.push_back(to_string(v));
                out["representative"] = std::move(repj);
            }
        } else if (bs == "y") {
            YVector y;
            for (int i = 0; i < 6; ++i) y[i] = c[static_cast<std::size_t>(i)];
            YClassification cls = classify_y(y);
            out["basis"] = "y";
            out["delta"] = to_string(cls.delta);
            out["parity_case"] =
                cls.parity_case == VectorType::characteristic ? "characteristic" : "ordinary";
            json repj = json::array();
            for (const auto& v : cls.representative) repj.push_back(to_string(v));
            out["representative"] = std::move(repj);
            Int m4 = ((cls.delta % 4) + 4) % 4;
            if (cls.delta < 1) {
                out["n_delta"] = "not a divisor class (delta < 1)";
            } else if (m4 == 3) {
                out["n_delta"] = "not represented";
            } else {
                out["n_delta"] = n_delta(cls.delta);
            }
            json img = json::array();
            for (int v : f2_image(y)) img.push_back(v);
            out["f2_image"] = std::move(img);
        } else {
            throw input_error("basis must be e or y");
        }
        *out_json = dup_string(out.dump(2));
        return K3LAT_OK;
    });
}

k3lat_status k3lat_orbit_table_json(int delta_max, char** out_json) {
    return guarded([&]() {
        require(delta_max >= 1, "delta-max must be positive");
        json rows = json::array();
        for (Int delta = 1; delta <= delta_max; ++delta) {
            json row{{"delta", to_string(delta)}};
            if (delta % 4 == 3) {
                row["n"] = "not represented";
            } else {
                row["n"] = n_delta(delta);
                YVector y;
                if (delta % 4 == 0)
                    y = {1, -delta / 4, 0, 0, 0, 0};
                else if (delta % 4 == 1)
                    y = {1, (1 - delta) / 4, 0, 0, 1, 0};
                else
                    y = {1, (2 - delta) / 4, 0, 0, 1, 1};
                YClassification cls = classify_y(y);
                row["parity_case"] =
                    cls.parity_case == VectorType::characteristic ? "characteristic" : "ordinary";
                json repj = json::array();
                for (const auto& v : cls.representative) repj.push_back(to_string(v));
                row["representative"] = std::move(repj);
            }
            rows.push_back(std::move(row));
        }
        json out{{"rows", std::move(rows)}};
        *out_json = dup_string(out.dump(2));
        return K3LAT_OK;
    });
}

k3lat_status k3lat_scenario_list_json(char** out_json) {
    return guarded([&]() {
        json arr = json::array();
        for (const auto& s : builtin_scenarios()) {
            json fibers = json::array();
            for (const auto& f : s.config.fibers) fibers.push_back(fiber_name(f));
            arr.push_back(json{{"name", s.config.name},
                               {"fibers", std::move(fibers)},
                               {"torsion", to_string(s.config.torsion_order)},
                               {"mw_rank", s.config.mw_rank},
                               {"expected_ns", s.expected_ns.label()},
                               {"expected_t", s.expected_t.label()}});
        }
        *out_json = dup_string(json{{"scenarios", std::move(arr)}}.dump(2));
        return K3LAT_OK;
    });
}

k3lat_status k3lat_scenario_verify_json(const char* name, char** out_json, int* all_pass) {
    return guarded([&]() {
        Report r = verify_scenario(name);
        if (all_pass) *all_pass = r.all_pass() ? 1 : 0;
        *out_json = dup_string(report_json(r).dump(2));
        return K3LAT_OK;
    });
}

k3lat_status k3lat_phi_json(const char* matrix_json, char** out_json) {
    return guarded([&]() {
        json j = json::parse(matrix_json);
        require(j.is_array() && j.size() == 4, "phi needs a 4x4 matrix");
        GaussMat a(4, GaussVec(4));
        for (int r = 0; r < 4; ++r) {
            require(j[r].is_array() && j[r].size() == 4, "phi needs a 4x4 matrix");
            for (int c = 0; c < 4; ++c) {
                const auto& e = j[r][c];
                require(e.is_array() && e.size() == 4,
                        "matrix entries are [re_num, re_den, im_num, im_den]");
                Int rd = json_int(e[1]), id = json_int(e[3]);
                if (rd == 0 || id == 0) throw input_error("zero denominator in matrix entry");
                Rat re = Rat(json_int(e[0])) / Rat(rd);
                Rat im = Rat(json_int(e[2])) / Rat(id);
                a[r][c] = GaussianScalar{re, im};
            }
        }
        IntMat p = phi(a);
        json rows = json::array();
        for (const auto& row : p) {
            json rj = json::array();
            for (const auto& x : row) rj.push_back(to_string(x));
            rows.push_back(std::move(rj));
        }
        *out_json = dup_string(json{{"phi", std::move(rows)}}.dump(2));
        return K3LAT_OK;
    });
}

k3lat_status k3lat_pfaffian_json(const char* y_csv, char** out_json) {
    return guarded([&]() {
        auto y = parse_coords6(y_csv);
        GaussMat m = m_of_y(y);
        GaussianScalar pf = pfaffian(m);
        json rows = json::array();
        for (const auto& row : m) {
            json rj = json::array();
            for (const auto& x : row)
                rj.push_back(json::array({to_string(x.re), to_string(x.im)}));
            rows.push_back(std::move(rj));
        }
        json out{{"matrix", std::move(rows)},
                 {"pfaffian", json::array({to_string(pf.re), to_string(pf.im)})}};
        *out_json = dup_string(out.dump(2));
        return K3LAT_OK;
    });
}

k3lat_status k3lat_ks_json(long delta, char** out_json) {
    return guarded([&]() {
        KSReport k = kuga_satake_report(Int(delta));
        json ram = json::array();
        for (const auto& p : k.minus_one_delta) ram.push_back(p == 0 ? "inf" : to_string(p));
        json out{{"delta", to_string(k.delta)},
                 {"clifford_even", "M2((-1," + to_string(k.delta) + ")_Q)"},
                 {"ramification", std::move(ram)},
                 {"is_split", k.is_split},
                 {"ks_dimension", k.ks_dimension},
                 {"decomposition", k.decomposition}};
        *out_json = dup_string(out.dump(2));
        return K3LAT_OK;
    });
}

k3lat_status k3lat_quat_json(const char* a, const char* b, char** out_json) {
    return guarded([&]() {
        QuaternionAlgebra q{parse_rat(a), parse_rat(b)};
        RamSet ram = ramification(q);
        json rj = json::array();
        for (const auto& p : ram) rj.push_back(p == 0 ? "inf" : to_string(p));
        json out{{"a", to_string(q.a)},
                 {"b", to_string(q.b)},
                 {"ramification", std::move(rj)},
                 {"is_split", ram.empty()}};
        *out_json = dup_string(out.dump(2));
        return K3LAT_OK;
    });
}

k3lat_status k3lat_symbolic_verify_d1_json(char** out_json, int* all_pass) {
    return guarded([&]() {
        Report r = symbolic_verify_d1();
        if (all_pass) *all_pass = r.all_pass() ? 1 : 0;
        *out_json = dup_string(report_json(r).dump(2));
        return K3LAT_OK;
    });
}

k3lat_status k3lat_selftest_json(char** out_json, int* all_pass) {
    return guarded([&]() {
        auto reports = run_acceptance_suite();
        bool ok = true;
        json arr = json::array();
        for (const auto& r : reports) {
            ok = ok && r.all_pass();
            arr.push_back(report_json(r));
        }
        if (all_pass) *all_pass = ok ? 1 : 0;
        *out_json = dup_string(json{{"reports", std::move(arr)}}.dump(2));
        return K3LAT_OK;
    });
}

} // extern "C"
