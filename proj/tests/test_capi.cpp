#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <k3lat/k3lat.h>

#include <json.hpp>
#include <string>

using json = nlohmann::json;

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { k3lat_string_free(p); }
    std::string s() const { return p ? std::string(p) : std::string(); }
};

struct Lat {
    k3lat_lattice* p = nullptr;
    ~Lat() { k3lat_lattice_free(p); }
};

} // namespace

TEST_CASE("lattice JSON round trip and info") {
    Lat l;
    REQUIRE(k3lat_lattice_standard("U+D6^2+A1^2", &l.p) == K3LAT_OK);
    Str info;
    REQUIRE(k3lat_lattice_info_json(l.p, &info.p) == K3LAT_OK);
    json j = json::parse(info.s());
    CHECK(j["rank"] == 16);
    CHECK(j["det"] == "-64");
    CHECK(j["signature"][0] == 1);
    CHECK(j["signature"][1] == 15);
    CHECK(j["even"] == true);

    Str dump;
    REQUIRE(k3lat_lattice_to_json(l.p, &dump.p) == K3LAT_OK);
    Lat l2;
    REQUIRE(k3lat_lattice_from_json(dump.s().c_str(), &l2.p) == K3LAT_OK);
    Str info2;
    REQUIRE(k3lat_lattice_info_json(l2.p, &info2.p) == K3LAT_OK);
    CHECK(json::parse(info2.s())["det"] == "-64");
}

TEST_CASE("malformed input exits with the input error code") {
    Lat l;
    CHECK(k3lat_lattice_from_json("{not json", &l.p) == K3LAT_ERR_INPUT);
    CHECK(k3lat_lattice_from_json(R"({"gram": [[0,1],[2,0]]})", &l.p) == K3LAT_ERR_INPUT);
    CHECK(k3lat_lattice_from_json(R"({"gram": [[0,1]]})", &l.p) == K3LAT_ERR_INPUT);
    CHECK(k3lat_lattice_from_json(R"({"gram": [[0,1],[1,0],[0,0]]})", &l.p) == K3LAT_ERR_INPUT);
    CHECK(k3lat_lattice_standard("B7", &l.p) == K3LAT_ERR_INPUT);
    CHECK(std::string(k3lat_last_error()).size() > 0);
}

TEST_CASE("disc form JSON") {
    Lat l;
    REQUIRE(k3lat_lattice_standard("U(2)", &l.p) == K3LAT_OK);
    Str out;
    REQUIRE(k3lat_disc_form_json(l.p, &out.p) == K3LAT_OK);
    json j = json::parse(out.s());
    CHECK(j["orders"] == json::array({"2", "2"}));
    // deterministic output
    Str out2;
    REQUIRE(k3lat_disc_form_json(l.p, &out2.p) == K3LAT_OK);
    CHECK(out.s() == out2.s());
    // odd lattices have no discriminant form
    Lat odd;
    REQUIRE(k3lat_lattice_standard("<1>", &odd.p) == K3LAT_OK);
    CHECK(k3lat_disc_form_json(odd.p, &out2.p) == K3LAT_ERR_PRECONDITION);
}

TEST_CASE("orbit classification") {
    Str out;
    REQUIRE(k3lat_orbit_classify_json("1,-1,0,0,0,0", "y", &out.p) == K3LAT_OK);
    json j = json::parse(out.s());
    CHECK(j["delta"] == "4");
    CHECK(j["n_delta"] == 15);
    CHECK(j["f2_image"] == json::array({1, 1, 0, 0, 0, 0}));

    Str out_e;
    REQUIRE(k3lat_orbit_classify_json("1,-3,0,0,1,0", "e", &out_e.p) == K3LAT_OK);
    json je = json::parse(out_e.s());
    CHECK(je["type"] == "ordinary");
    CHECK(je["norm"] == "-7");

    Str bad;
    CHECK(k3lat_orbit_classify_json("1,2,3", "e", &bad.p) == K3LAT_ERR_INPUT);
    CHECK(k3lat_orbit_classify_json("1,2,3,4,5,6", "q", &bad.p) == K3LAT_ERR_INPUT);
}

TEST_CASE("orbit table") {
    Str out;
    REQUIRE(k3lat_orbit_table_json(8, &out.p) == K3LAT_OK);
    json j = json::parse(out.s());
    REQUIRE(j["rows"].size() == 8);
    auto n_of = [&](int idx) { return j["rows"][static_cast<std::size_t>(idx - 1)]["n"]; };
    CHECK(n_of(1) == 1);
    CHECK(n_of(2) == 10);
    CHECK(n_of(3) == "not represented");
    CHECK(n_of(4) == 15);
    CHECK(n_of(5) == 1);
    CHECK(n_of(6) == 6);
    CHECK(n_of(7) == "not represented");
    CHECK(n_of(8) == 15);
}

TEST_CASE("scenario API") {
    Str list;
    REQUIRE(k3lat_scenario_list_json(&list.p) == K3LAT_OK);
    json j = json::parse(list.s());
    CHECK(j["scenarios"].size() == 9);

    Str rep;
    int all_pass = 0;
    REQUIRE(k3lat_scenario_verify_json("generic-standard", &rep.p, &all_pass) == K3LAT_OK);
    CHECK(all_pass == 1);
    json r = json::parse(rep.s());
    CHECK(r["name"] == "generic-standard");
    bool found_discr = false;
    for (const auto& c : r["checks"])
        if (c["id"] == "ns-discriminant") {
            CHECK(c["detail"].get<std::string>().find("-64") != std::string::npos);
            found_discr = true;
        }
    CHECK(found_discr);

    Str rep2;
    CHECK(k3lat_scenario_verify_json("unknown", &rep2.p, &all_pass) == K3LAT_ERR_INPUT);
}

TEST_CASE("phi through the C surface") {
    const char* identity = R"([
        [[1,1,0,1],[0,1,0,1],[0,1,0,1],[0,1,0,1]],
        [[0,1,0,1],[1,1,0,1],[0,1,0,1],[0,1,0,1]],
        [[0,1,0,1],[0,1,0,1],[1,1,0,1],[0,1,0,1]],
        [[0,1,0,1],[0,1,0,1],[0,1,0,1],[1,1,0,1]]])";
    Str out;
    REQUIRE(k3lat_phi_json(identity, &out.p) == K3LAT_OK);
    json j = json::parse(out.s());
    CHECK(j["phi"][0][0] == "1");
    CHECK(j["phi"][0][1] == "0");

    // a non-unitary matrix violates the precondition
    const char* bad = R"([
        [[1,1,0,1],[1,1,0,1],[0,1,0,1],[0,1,0,1]],
        [[0,1,0,1],[1,1,0,1],[0,1,0,1],[0,1,0,1]],
        [[0,1,0,1],[0,1,0,1],[1,1,0,1],[0,1,0,1]],
        [[0,1,0,1],[0,1,0,1],[0,1,0,1],[1,1,0,1]]])";
    Str out2;
    CHECK(k3lat_phi_json(bad, &out2.p) == K3LAT_ERR_PRECONDITION);
}

TEST_CASE("pfaffian through the C surface") {
    Str out;
    REQUIRE(k3lat_pfaffian_json("0,0,0,0,1,0", &out.p) == K3LAT_OK);
    json j = json::parse(out.s());
    CHECK(j["pfaffian"][0] == "1/4");
    CHECK(j["pfaffian"][1] == "0");
}

TEST_CASE("quaternion and KS through the C surface") {
    Str out;
    REQUIRE(k3lat_quat_json("-1", "3", &out.p) == K3LAT_OK);
    json j = json::parse(out.s());
    CHECK(j["is_split"] == false);
    CHECK(j["ramification"] == json::array({"2", "3"}));

    Str ks;
    REQUIRE(k3lat_ks_json(2, &ks.p) == K3LAT_OK);
    json k = json::parse(ks.s());
    CHECK(k["is_split"] == true);
    CHECK(k["ks_dimension"] == 16);
    CHECK(k["decomposition"] == "A(T_2) ~ A_2^2");

    Str bad;
    CHECK(k3lat_quat_json("0", "3", &bad.p) == K3LAT_ERR_PRECONDITION);
    CHECK(k3lat_quat_json("x", "3", &bad.p) == K3LAT_ERR_INPUT);
}

TEST_CASE("symbolic verification through the C surface") {
    Str out;
    int all_pass = 0;
    REQUIRE(k3lat_symbolic_verify_d1_json(&out.p, &all_pass) == K3LAT_OK);
    CHECK(all_pass == 1);
    json j = json::parse(out.s());
    CHECK(j["checks"].size() == 4);
}
