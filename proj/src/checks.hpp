#pragma once

#include "fibration.hpp"

namespace k3lat {

// the acceptance suite: one report per criterion, exact assertions only
std::vector<Report> run_acceptance_suite();

Report criterion_generic_chain();        // 1
Report criterion_generic_case();         // 2
Report criterion_degenerations();        // 3
Report criterion_orbit_structure();      // 4
Report criterion_n_delta();              // 5
Report criterion_wall_sweep();           // 6
Report criterion_heights();              // 7
Report criterion_enhancement();          // 8
Report criterion_kuga_satake();          // 9
Report criterion_group_isomorphism();    // 10
Report criterion_symbolic();             // 11
Report criterion_rational_equivalence(); // 12

} // namespace k3lat
