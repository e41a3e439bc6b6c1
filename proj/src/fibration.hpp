#pragma once

#include "discform.hpp"
#include "lattice.hpp"
#include <map>

namespace k3lat {

enum class FiberKind { In, II, III, IV, IstarN, IIstar, IIIstar, IVstar };

struct KodairaFiber {
    FiberKind kind;
    int n = 0;  // parameter for In (n >= 1) and IstarN (n >= 0)
};

KodairaFiber parse_fiber(const std::string& s);  // "I2", "I0*", "III*", ...
std::string fiber_name(const KodairaFiber& f);

struct FiberData {
    std::optional<IntLattice> root_lattice;  // empty for II and I1
    Int euler;                               // table value
    std::string component_group;             // finite part
    std::string disc_group;
    Int root_det;  // exact determinant of the root lattice (1 when empty)
};

FiberData fiber_data(const KodairaFiber& f);

// which simple fiber component a section meets
struct ComponentRef {
    enum Kind { identity, an_index, istar0_branch, near, far1, far2 } kind = identity;
    int index = 0;  // an_index: 1..n-1; istar0_branch: 1..3

    static ComponentRef id() { return {}; }
    static ComponentRef an(int i) { return {an_index, i}; }
    static ComponentRef branch(int b) { return {istar0_branch, b}; }
    static ComponentRef nr() { return {near, 0}; }
    static ComponentRef f1() { return {far1, 0}; }
    static ComponentRef f2() { return {far2, 0}; }
    bool operator==(const ComponentRef&) const = default;
};

struct SectionSpec {
    std::string name;
    Int pairing_with_zero = 0;       // the intersection number P.s
    std::vector<ComponentRef> met;   // one entry per fiber of the config
    bool torsion = false;
};

struct FibrationConfig {
    std::string name;
    int chi = 2;  // chi(O_S); 2 for K3
    std::vector<KodairaFiber> fibers;
    std::vector<SectionSpec> sections;
    Int torsion_order = 1;
    int mw_rank = 0;
    Rat mwl_disc = 1;
};

Int euler_sum(const FibrationConfig& c);
IntLattice trivial_lattice(const FibrationConfig& c);
int shioda_tate(const FibrationConfig& c, int rho);

// local height contribution c_nu of the met component
Rat height_contribution(const KodairaFiber& f, const ComponentRef& comp);
// off-diagonal contribution for two sections meeting the given components
Rat pair_contribution(const KodairaFiber& f, const ComponentRef& p, const ComponentRef& q);

Rat height(const FibrationConfig& c, const SectionSpec& p);
Rat height_pairing(const FibrationConfig& c, const SectionSpec& p, const SectionSpec& q,
                   const Int& pq);

Rat ns_discriminant(const FibrationConfig& c);

// glue class of a section in delta(trivial lattice), as rational coordinates
RatVec section_glue_class(const FibrationConfig& c, const SectionSpec& p);

struct Scenario {
    FibrationConfig config;
    IntLattice expected_ns;
    IntLattice expected_t;
    int expected_rho;
    std::vector<std::string> glue_sections;  // torsion sections generating the glue
    std::map<std::string, Rat> expected_heights;
    // declared intersection numbers P.Q for height-pairing checks
    std::map<std::pair<std::string, std::string>, Int> intersections;
};

const std::vector<Scenario>& builtin_scenarios();
const Scenario& scenario_by_name(const std::string& name);

struct Check {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string name;
    std::vector<Check> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

Report verify_scenario(const std::string& name);

} // namespace k3lat
