#include "fibration.hpp"

#include <algorithm>
#include <sstream>

namespace k3lat {

KodairaFiber parse_fiber(const std::string& s) {
    require(!s.empty(), "empty fiber name");
    if (s == "II") return {FiberKind::II};
    if (s == "III") return {FiberKind::III};
    if (s == "IV") return {FiberKind::IV};
    if (s == "II*") return {FiberKind::IIstar};
    if (s == "III*") return {FiberKind::IIIstar};
    if (s == "IV*") return {FiberKind::IVstar};
    if (s[0] == 'I') {
        bool star = s.back() == '*';
        std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
        try {
            int n = std::stoi(digits);
            if (star) {
                require(n >= 0, "I*(n) needs n >= 0");
                return {FiberKind::IstarN, n};
            }
            require(n >= 1, "I(n) needs n >= 1");
            return {FiberKind::In, n};
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    throw input_error("unknown Kodaira fiber: " + s);
}

std::string fiber_name(const KodairaFiber& f) {
    switch (f.kind) {
        case FiberKind::In: return "I" + std::to_string(f.n);
        case FiberKind::II: return "II";
        case FiberKind::III: return "III";
        case FiberKind::IV: return "IV";
        case FiberKind::IstarN: return "I" + std::to_string(f.n) + "*";
        case FiberKind::IIstar: return "II*";
        case FiberKind::IIIstar: return "III*";
        case FiberKind::IVstar: return "IV*";
    }
    return "?";
}

FiberData fiber_data(const KodairaFiber& f) {
    auto mk = [](std::optional<IntLattice> root, Int euler, std::string grp, std::string disc) {
        Int d = root ? root->determinant() : Int(1);
        return FiberData{std::move(root), std::move(euler), std::move(grp), std::move(disc), d};
    };
    switch (f.kind) {
        case FiberKind::In:
            require(f.n >= 1, "I(n) needs n >= 1");
            if (f.n == 1) return mk(std::nullopt, f.n, "Z/1", "1");
            // the root determinant is det(A_{n-1}) = (-1)^(n-1) n, matching
            // the component group Z/n (the (-1)^n (n+1) value sometimes
            // printed in fiber tables is inconsistent with it)
            return mk(lat_a(f.n - 1), f.n, "Z/" + std::to_string(f.n),
                      "Z/" + std::to_string(f.n));
        case FiberKind::II: return mk(std::nullopt, 1, "1", "1");
        case FiberKind::III: return mk(lat_a(1), 1, "Z/2", "Z/2");
        case FiberKind::IV: return mk(lat_a(2), 2, "Z/3", "Z/3");
        case FiberKind::IstarN:
            require(f.n >= 0, "I*(n) needs n >= 0");
            if (f.n % 2 == 0) return mk(lat_d(f.n + 4), f.n + 5, "(Z/2)^2", "(Z/2)^2");
            return mk(lat_d(f.n + 4), f.n + 5, "Z/4", "Z/4");
        case FiberKind::IIstar: return mk(lat_e(8), 9, "1", "1");
        case FiberKind::IIIstar: return mk(lat_e(7), 8, "Z/2", "Z/2");
        case FiberKind::IVstar: return mk(lat_e(6), 7, "Z/3", "Z/3");
    }
    throw input_error("invalid fiber kind");
}

Int euler_sum(const FibrationConfig& c) {
    Int s = 0;
    for (const auto& f : c.fibers) s += fiber_data(f).euler;
    return s;
}

IntLattice trivial_lattice(const FibrationConfig& c) {
    IntLattice t = lat_u();
    for (const auto& f : c.fibers) {
        FiberData d = fiber_data(f);
        if (d.root_lattice) t = direct_sum(t, *d.root_lattice);
    }
    return t;
}

int shioda_tate(const FibrationConfig& c, int rho) {
    int r = rho - 2;
    for (const auto& f : c.fibers) {
        FiberData d = fiber_data(f);
        if (d.root_lattice) r -= static_cast<int>(d.root_lattice->rank());
    }
    require(r >= 0, "Picard number below the trivial lattice rank");
    return r;
}

Rat height_contribution(const KodairaFiber& f, const ComponentRef& comp) {
    if (comp.kind == ComponentRef::identity) return Rat(0);
    switch (f.kind) {
        case FiberKind::In: {
            require(comp.kind == ComponentRef::an_index && comp.index >= 1 && comp.index < f.n,
                    "invalid I(n) component");
            return Rat(comp.index) * Rat(f.n - comp.index) / Rat(f.n);
        }
        case FiberKind::III:
            return Rat(1) / 2;
        case FiberKind::IV:
            return Rat(2) / 3;
        case FiberKind::IstarN:
            if (f.n == 0) {
                require(comp.kind == ComponentRef::istar0_branch && comp.index >= 1 &&
                            comp.index <= 3,
                        "I0* components are the three branches");
                return Rat(1);
            }
            if (comp.kind == ComponentRef::near) return Rat(1);
            require(comp.kind == ComponentRef::far1 || comp.kind == ComponentRef::far2,
                    "I*(n) components are near/far");
            return Rat(1) + Rat(f.n) / 4;
        case FiberKind::IIIstar:
            return Rat(3) / 2;
        case FiberKind::IVstar:
            return Rat(4) / 3;
        default:
            throw precondition_error("fiber type has no non-identity simple components");
    }
}

Rat pair_contribution(const KodairaFiber& f, const ComponentRef& p, const ComponentRef& q) {
    if (p.kind == ComponentRef::identity || q.kind == ComponentRef::identity) return Rat(0);
    switch (f.kind) {
        case FiberKind::In: {
            int i = std::min(p.index, q.index), j = std::max(p.index, q.index);
            require(i >= 1 && j < f.n, "invalid I(n) component");
            return Rat(i) * Rat(f.n - j) / Rat(f.n);
        }
        case FiberKind::IstarN:
            if (f.n == 0) return p.index == q.index ? Rat(1) : Rat(1) / 2;
            // only the I0* off-diagonal entries are consumed by the scenarios
            throw precondition_error("pair contribution not tabulated for " + fiber_name(f));
        default:
            throw precondition_error("pair contribution not tabulated for " + fiber_name(f));
    }
}

Rat height(const FibrationConfig& c, const SectionSpec& p) {
    require(p.met.size() == c.fibers.size(), "section incidence must cover all fibers");
    Rat h = Rat(2 * c.chi) + Rat(2) * Rat(p.pairing_with_zero);
    for (std::size_t i = 0; i < c.fibers.size(); ++i)
        h -= height_contribution(c.fibers[i], p.met[i]);
    return h;
}

Rat height_pairing(const FibrationConfig& c, const SectionSpec& p, const SectionSpec& q,
                   const Int& pq) {
    if (p.name == q.name) return height(c, p);
    require(p.met.size() == c.fibers.size() && q.met.size() == c.fibers.size(),
            "section incidence must cover all fibers");
    Rat h = Rat(c.chi) + Rat(p.pairing_with_zero) + Rat(q.pairing_with_zero) - Rat(pq);
    for (std::size_t i = 0; i < c.fibers.size(); ++i)
        h -= pair_contribution(c.fibers[i], p.met[i], q.met[i]);
    return h;
}

Rat ns_discriminant(const FibrationConfig& c) {
    Rat d = Rat(trivial_lattice(c).determinant()) * c.mwl_disc;
    d /= Rat(c.torsion_order * c.torsion_order);
    if (c.mw_rank % 2 != 0) d = -d;
    return d;
}

namespace {

// rational coordinates (in the root lattice basis) of the dual class of the
// component a section meets
RatVec component_dual_class(const KodairaFiber& f, const ComponentRef& comp) {
    FiberData d = fiber_data(f);
    require(d.root_lattice.has_value(), "fiber has no root lattice");
    std::size_t rk = d.root_lattice->rank();
    RatVec out(rk, Rat(0));
    if (comp.kind == ComponentRef::identity) return out;
    std::size_t root_index = 0;
    switch (f.kind) {
        case FiberKind::In:
            root_index = static_cast<std::size_t>(comp.index - 1);  // chain position
            break;
        case FiberKind::IstarN:
            if (f.n == 0) {
                // lat_d(4): vertex 1 is the node; outer vertices 0, 2, 3
                static const std::size_t outer[3] = {0, 2, 3};
                root_index = outer[comp.index - 1];
            } else {
                // lat_d(k): chain 0..k-3, fork ends k-2 and k-1; near = chain end 0
                if (comp.kind == ComponentRef::near)
                    root_index = 0;
                else if (comp.kind == ComponentRef::far1)
                    root_index = rk - 2;
                else
                    root_index = rk - 1;
            }
            break;
        default:
            throw precondition_error("glue class not implemented for " + fiber_name(f));
    }
    RatMat inv = rat_inverse(to_rat(d.root_lattice->gram()));
    for (std::size_t r = 0; r < rk; ++r) out[r] = inv[r][root_index];
    return out;
}

} // namespace

RatVec section_glue_class(const FibrationConfig& c, const SectionSpec& p) {
    IntLattice triv = trivial_lattice(c);
    RatVec glue(triv.rank(), Rat(0));
    std::size_t offset = 2;  // U block first
    for (std::size_t i = 0; i < c.fibers.size(); ++i) {
        FiberData d = fiber_data(c.fibers[i]);
        if (!d.root_lattice) continue;
        std::size_t rk = d.root_lattice->rank();
        if (p.met[i].kind != ComponentRef::identity) {
            RatVec cls = component_dual_class(c.fibers[i], p.met[i]);
            for (std::size_t r = 0; r < rk; ++r) glue[offset + r] = cls[r];
        }
        offset += rk;
    }
    return glue;
}

namespace {

KodairaFiber fib(const std::string& s) { return parse_fiber(s); }

SectionSpec section(std::string name, Int ps, std::vector<ComponentRef> met, bool torsion) {
    return {std::move(name), std::move(ps), std::move(met), torsion};
}

IntLattice named(IntLattice l, const std::string& label) { return IntLattice(l.gram(), label); }

std::vector<Scenario> build_scenarios() {
    using CR = ComponentRef;
    std::vector<Scenario> out;

    IntLattice U = lat_u();
    IntLattice T2 = rescale(direct_sum(direct_sum(lat_u(), lat_u()),
                                       direct_sum(lat_diag(-1), lat_diag(-1))),
                            2);
    T2 = named(T2, "T(2)");
    auto U2 = rescale(lat_u(), 2);

    // ---- generic-standard: 2 I0* + 6 I2, full 2-torsion ----
    {
        Scenario s;
        s.config.name = "generic-standard";
        s.config.fibers = {fib("I0*"), fib("I0*"), fib("I2"), fib("I2"),
                           fib("I2"),  fib("I2"),  fib("I2"), fib("I2")};
        s.config.torsion_order = 4;
        s.config.mw_rank = 0;
        s.config.mwl_disc = 1;
        // fiber order: [I0*@u=0, I0*@u=inf, I2@E34, I2@E35, I2@E36, I2@E45, I2@E46, I2@E56]
        s.config.sections = {
            section("l3", 0,
                    {CR::branch(1), CR::branch(1), CR::an(1), CR::an(1), CR::id(), CR::id(),
                     CR::an(1), CR::an(1)},
                    true),
            section("l4", 0,
                    {CR::branch(2), CR::branch(2), CR::an(1), CR::id(), CR::an(1), CR::an(1),
                     CR::id(), CR::an(1)},
                    true),
            section("l5", 0,
                    {CR::branch(3), CR::branch(3), CR::id(), CR::an(1), CR::an(1), CR::an(1),
                     CR::an(1), CR::id()},
                    true)};
        s.expected_ns = named(direct_sum(direct_sum(U, direct_sum(lat_d(6), lat_d(6))),
                                         direct_sum(lat_a(1), lat_a(1))),
                              "U+D6^2+A1^2");
        s.expected_t = T2;
        s.expected_rho = 16;
        s.glue_sections = {"l3", "l4"};
        s.expected_heights = {{"l3", Rat(0)}, {"l4", Rat(0)}, {"l5", Rat(0)}};
        out.push_back(std::move(s));
    }

    // ---- generic-alt: 2 I2* + 2 I2 ----
    {
        Scenario s;
        s.config.name = "generic-alt";
        s.config.fibers = {fib("I2*"), fib("I2*"), fib("I2"), fib("I2")};
        s.config.torsion_order = 1;  // ranks and discriminants already agree
        s.config.mw_rank = 0;
        s.config.mwl_disc = 1;
        s.expected_ns = named(direct_sum(direct_sum(U, direct_sum(lat_d(6), lat_d(6))),
                                         direct_sum(lat_a(1), lat_a(1))),
                              "U+D6^2+A1^2");
        s.expected_t = T2;
        s.expected_rho = 16;
        out.push_back(std::move(s));
    }

    // ---- d2-standard: 3 I0* + 3 I2, full 2-torsion ----
    {
        Scenario s;
        s.config.name = "d2-standard";
        s.config.fibers = {fib("I0*"), fib("I0*"), fib("I0*"), fib("I2"), fib("I2"), fib("I2")};
        s.config.torsion_order = 4;
        s.config.mw_rank = 0;
        s.config.mwl_disc = 1;
        s.config.sections = {
            section("l3", 0,
                    {CR::branch(1), CR::branch(1), CR::branch(1), CR::id(), CR::an(1), CR::an(1)},
                    true),
            section("l4", 0,
                    {CR::branch(2), CR::branch(2), CR::branch(2), CR::an(1), CR::id(), CR::an(1)},
                    true)};
        s.expected_ns = named(direct_sum(direct_sum(U, direct_sum(lat_d(4), lat_d(4))), lat_e(7)),
                              "U+D4^2+E7");
        s.expected_t = named(direct_sum(direct_sum(U2, U2), lat_a(1)), "U(2)^2+A1");
        s.expected_rho = 17;
        s.glue_sections = {"l3", "l4"};
        s.expected_heights = {{"l3", Rat(0)}, {"l4", Rat(0)}};
        out.push_back(std::move(s));
    }

    // ---- d2-alt: 2 I2* + 3 I2, 2-torsion section D ----
    {
        Scenario s;
        s.config.name = "d2-alt";
        s.config.fibers = {fib("I2*"), fib("I2*"), fib("I2"), fib("I2"), fib("I2")};
        s.config.torsion_order = 2;
        s.config.mw_rank = 0;
        s.config.mwl_disc = 1;
        s.config.sections = {
            section("D", 0, {CR::f1(), CR::f1(), CR::an(1), CR::an(1), CR::id()}, true)};
        s.expected_ns = named(direct_sum(direct_sum(U, direct_sum(lat_d(4), lat_d(4))), lat_e(7)),
                              "U+D4^2+E7");
        s.expected_t = named(direct_sum(direct_sum(U2, U2), lat_a(1)), "U(2)^2+A1");
        s.expected_rho = 17;
        s.glue_sections = {"D"};
        s.expected_heights = {{"D", Rat(0)}};
        out.push_back(std::move(s));
    }

    // ---- d4-standard: 2 I0* + I4 + 4 I2, full 2-torsion ----
    {
        Scenario s;
        s.config.name = "d4-standard";
        s.config.fibers = {fib("I0*"), fib("I0*"), fib("I4"),
                           fib("I2"),  fib("I2"),  fib("I2"), fib("I2")};
        s.config.torsion_order = 4;
        s.config.mw_rank = 0;
        s.config.mwl_disc = 1;
        // fiber order: [I0*, I0*, I4, I2@E35, I2@E36, I2@E45, I2@E46]
        s.config.sections = {
            section("l3", 0,
                    {CR::branch(1), CR::branch(1), CR::an(2), CR::an(1), CR::id(), CR::id(),
                     CR::an(1)},
                    true),
            section("l4", 0,
                    {CR::branch(2), CR::branch(2), CR::an(2), CR::id(), CR::an(1), CR::an(1),
                     CR::id()},
                    true)};
        s.expected_ns = named(direct_sum(direct_sum(U, direct_sum(lat_d(6), lat_d(6))), lat_a(3)),
                              "U+D6^2+A3");
        s.expected_t = named(direct_sum(direct_sum(U2, lat_diag(4)), direct_sum(lat_a(1), lat_a(1))),
                             "U(2)+<4>+A1^2");
        s.expected_rho = 17;
        s.glue_sections = {"l3", "l4"};
        s.expected_heights = {{"l3", Rat(0)}, {"l4", Rat(0)}};
        out.push_back(std::move(s));
    }

    // ---- d4-alt: 2 I2* + I4 ----
    {
        Scenario s;
        s.config.name = "d4-alt";
        s.config.fibers = {fib("I2*"), fib("I2*"), fib("I4")};
        s.config.torsion_order = 1;
        s.config.mw_rank = 0;
        s.config.mwl_disc = 1;
        s.expected_ns = named(direct_sum(direct_sum(U, direct_sum(lat_d(6), lat_d(6))), lat_a(3)),
                              "U+D6^2+A3");
        s.expected_t = named(direct_sum(direct_sum(U2, lat_diag(4)), direct_sum(lat_a(1), lat_a(1))),
                             "U(2)+<4>+A1^2");
        s.expected_rho = 17;
        out.push_back(std::move(s));
    }

    // ---- d1-alt: 2 I2* + 2 I2 with a height-1 section (alternative (3)) ----
    {
        Scenario s;
        s.config.name = "d1-alt";
        s.config.fibers = {fib("I2*"), fib("I2*"), fib("I2"), fib("I2")};
        s.config.torsion_order = 1;
        s.config.mw_rank = 1;
        s.config.mwl_disc = 1;
        s.config.sections = {
            section("P", 0, {CR::nr(), CR::nr(), CR::an(1), CR::an(1)}, false)};
        s.expected_ns = named(direct_sum(direct_sum(U, lat_d(4)), direct_sum(lat_d(8), lat_a(3))),
                              "U+D4+D8+A3");
        s.expected_t = named(direct_sum(direct_sum(U2, U2), lat_diag(-4)), "U(2)^2+<-4>");
        s.expected_rho = 17;
        s.expected_heights = {{"P", Rat(1)}};
        out.push_back(std::move(s));
    }

    // ---- d6-alt: 2 I2* + I2 + I3 ----
    {
        Scenario s;
        s.config.name = "d6-alt";
        s.config.fibers = {fib("I2*"), fib("I2*"), fib("I2"), fib("I3")};
        s.config.torsion_order = 1;
        s.config.mw_rank = 0;
        s.config.mwl_disc = 1;
        s.expected_ns = named(direct_sum(direct_sum(U, direct_sum(lat_d(6), lat_d(6))),
                                         direct_sum(lat_a(1), lat_a(2))),
                              "U+D6^2+A1+A2");
        s.expected_t = named(direct_sum(direct_sum(U2, direct_sum(lat_a(1), lat_a(1))), lat_diag(6)),
                             "U(2)+A1^2+<6>");
        s.expected_rho = 17;
        out.push_back(std::move(s));
    }

    // ---- d6-standard: 2 I0* + 6 I2 with the sections D1, D2 of height 3/2 ----
    {
        Scenario s;
        s.config.name = "d6-standard";
        s.config.fibers = {fib("I0*"), fib("I0*"), fib("I2"), fib("I2"),
                           fib("I2"),  fib("I2"),  fib("I2"), fib("I2")};
        s.config.torsion_order = 4;
        s.config.mw_rank = 1;
        s.config.mwl_disc = Rat(3) / 2;
        // fiber order: [I0*#1, I0*#2, I2@E34, I2@E35, I2@E36, I2@E45, I2@E46, I2@E56]
        std::vector<ComponentRef> d_met = {CR::branch(1), CR::id(), CR::id(), CR::an(1),
                                           CR::id(),      CR::id(), CR::an(1), CR::an(1)};
        s.config.sections = {
            section("D1", 0, d_met, false),
            section("D2", 0, d_met, false),
            section("l5", 0,
                    {CR::branch(2), CR::branch(1), CR::an(1), CR::id(), CR::an(1), CR::an(1),
                     CR::an(1), CR::id()},
                    true)};
        s.expected_ns = named(direct_sum(direct_sum(U, direct_sum(lat_d(6), lat_d(6))),
                                         direct_sum(lat_a(1), lat_a(2))),
                              "U+D6^2+A1+A2");
        s.expected_t = named(direct_sum(direct_sum(U2, direct_sum(lat_a(1), lat_a(1))), lat_diag(6)),
                             "U(2)+A1^2+<6>");
        s.expected_rho = 17;
        s.expected_heights = {{"D1", Rat(3) / 2}, {"D2", Rat(3) / 2}, {"l5", Rat(0)}};
        s.intersections = {{{"D1", "D2"}, Int(1)}, {{"D1", "l5"}, Int(1)}};
        out.push_back(std::move(s));
    }

    return out;
}

} // namespace

const std::vector<Scenario>& builtin_scenarios() {
    static const std::vector<Scenario> scenarios = build_scenarios();
    return scenarios;
}

const Scenario& scenario_by_name(const std::string& name) {
    for (const auto& s : builtin_scenarios())
        if (s.config.name == name) return s;
    throw input_error("unknown scenario: " + name);
}

Report verify_scenario(const std::string& name) {
    const Scenario& s = scenario_by_name(name);
    Report rep;
    rep.name = name;
    auto add = [&](std::string id, bool pass, std::string detail) {
        rep.checks.push_back({std::move(id), pass, std::move(detail)});
    };

    IntLattice triv = trivial_lattice(s.config);
    add("trivial-lattice", true,
        "rank " + std::to_string(triv.rank()) + ", det " + to_string(triv.determinant()));

    Int esum = euler_sum(s.config);
    add("euler-bound", esum <= 24, "sum of fiber Euler numbers = " + to_string(esum));

    int mw = shioda_tate(s.config, s.expected_rho);
    add("shioda-tate", mw == s.config.mw_rank,
        "Mordell-Weil rank " + std::to_string(mw) + " from rho = " +
            std::to_string(s.expected_rho));

    Rat discr = ns_discriminant(s.config);
    Int expected_det = s.expected_ns.determinant();
    add("ns-discriminant", den(discr) == 1, "discr NS = " + to_string(discr));
    add("det-match", Rat(expected_det) == discr,
        "expected NS " + s.expected_ns.label() + " has det " + to_string(expected_det));

    bool heights_ok = true;
    std::ostringstream hdetail;
    for (const auto& sec : s.config.sections) {
        Rat h = height(s.config, sec);
        hdetail << sec.name << ": " << to_string(h) << "  ";
        auto it = s.expected_heights.find(sec.name);
        if (it != s.expected_heights.end() && h != it->second) heights_ok = false;
        if (sec.torsion && h != 0) heights_ok = false;
        if (h < 0) heights_ok = false;
    }
    if (!s.config.sections.empty()) add("heights", heights_ok, hdetail.str());

    for (const auto& [pairkey, pq] : s.intersections) {
        const SectionSpec* p = nullptr;
        const SectionSpec* q = nullptr;
        for (const auto& sec : s.config.sections) {
            if (sec.name == pairkey.first) p = &sec;
            if (sec.name == pairkey.second) q = &sec;
        }
        require(p && q, "intersection data references unknown sections");
        Rat hp = height_pairing(s.config, *p, *q, pq);
        // torsion partners pair to 0; inverse sections to -h(P)
        Rat expect = q->torsion ? Rat(0) : -height(s.config, *p);
        add("pairing-" + p->name + "-" + q->name, hp == expect,
            "<" + p->name + "," + q->name + "> = " + to_string(hp) + " with " + p->name + "." +
                q->name + " = " + to_string(pq));
    }

    if (!s.glue_sections.empty()) {
        RatMat classes;
        for (const auto& nm : s.glue_sections) {
            for (const auto& sec : s.config.sections)
                if (sec.name == nm) classes.push_back(section_glue_class(s.config, sec));
        }
        IntLattice glued = glue_overlattice(triv, classes);
        bool det_ok = Rat(glued.determinant()) == discr;
        std::string det_note = "glued det " + to_string(glued.determinant());
        bool nik_ok = true;
        FiniteQuadraticForm fg = discriminant_form(glued);
        SignaturePair sg = glued.signature();
        if (fg.is_two_elementary() && sg.pos > 0 && sg.neg > 0) {
            nik_ok = nikulin_equivalent(glued, s.expected_ns);
            det_note += ", nikulin vs " + s.expected_ns.label() +
                        (nik_ok ? " equal" : " DIFFERENT");
        }
        // the glued and expected lattices must be in the same genus:
        // equal rank, signature, determinant and isometric discriminant forms
        bool genus_ok = glued.rank() == s.expected_ns.rank() &&
                        glued.signature() == s.expected_ns.signature() &&
                        glued.determinant() == s.expected_ns.determinant() &&
                        find_isometry(fg, discriminant_form(s.expected_ns)).has_value();
        det_note += genus_ok ? ", genus matches" : ", GENUS MISMATCH";
        add("glue-ns", det_ok && glued.is_even() && nik_ok && genus_ok, det_note);
    }

    FiniteQuadraticForm fns = discriminant_form(s.expected_ns);
    FiniteQuadraticForm ft = discriminant_form(s.expected_t);
    auto sigma = find_anti_isometry(fns, ft);
    bool anti_ok = sigma.has_value() && verify_anti_isometry(fns, ft, *sigma);
    add("anti-isometry", anti_ok, "q_T = -q_NS witness " +
                                      std::string(sigma ? "found" : "missing"));

    SignaturePair sn = s.expected_ns.signature(), st = s.expected_t.signature();
    add("signature-sum", sn.pos + st.pos == 3 && sn.neg + st.neg == 19,
        "(" + std::to_string(sn.pos + st.pos) + "," + std::to_string(sn.neg + st.neg) + ")");

    return rep;
}

} // namespace k3lat
