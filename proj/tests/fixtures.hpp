#ifndef GLPAIR_TESTS_FIXTURES_HPP
#define GLPAIR_TESTS_FIXTURES_HPP

#include "glpair/gauss_code.hpp"
#include "glpair/sld_format.hpp"

#include <string>

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(GLPAIR_TEST_DATA_DIR) + "/" + name; }

inline glpair::SldDocument load(const std::string& name) { return glpair::read_sld_file(data_path(name)); }

// Right-handed trefoil, every crossing positive.
inline glpair::GaussImport trefoil() { return glpair::from_virtual_gauss_code("O1+U2+O3+U1+O2+U3+"); }
inline glpair::GaussImport virtual_trefoil() { return glpair::from_virtual_gauss_code("O1+O2+U1+U2+"); }
inline glpair::GaussImport kink() { return glpair::from_virtual_gauss_code("O1+U1+"); }
// Positive Hopf link.
inline glpair::GaussImport hopf() { return glpair::from_virtual_gauss_code("O1+U2+/U1+O2+"); }
// Two unknots pushed across each other: one positive and one negative crossing.
inline glpair::GaussImport clasp_pair() { return glpair::from_virtual_gauss_code("O1+O2-/U1+U2-"); }

// Alternating three-component link J, K, L on the torus.
inline glpair::SldDocument torus_link() { return load("torus_link.sld"); }

inline glpair::SurfaceDiagram two_kinks() {
  return glpair::parse_sld("crossings 2\nedge 0.0 0.1\nedge 0.2 0.3\nedge 1.0 1.1\nedge 1.2 1.3\n").diagram;
}

}  // namespace fixtures

#endif  // GLPAIR_TESTS_FIXTURES_HPP
