#ifndef GLPAIR_GAUSS_CODE_HPP
#define GLPAIR_GAUSS_CODE_HPP

#include "glpair/diagram.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace glpair {

class GaussCodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GaussImport {
  SurfaceDiagram diagram;
  /// Orientation following the traversal order of the code.
  LinkOrientation orientation;
};

/// Builds the diagram on the canonical cellular carrier surface of a signed
/// virtual Gauss code such as "O1+O2+U1+U2+". Tokens may be separated by
/// whitespace or written together; "/" separates link components. Each
/// label must occur once as O and once as U with the same sign.
///
/// Virtual crossings are not part of the code, so the rotation at each
/// classical crossing is fixed by its sign alone: the over-strand enters slot
/// 3 and leaves slot 1; a positive under-strand runs 0 -> 2, a negative one
/// 2 -> 0.
GaussImport from_virtual_gauss_code(std::string_view code);

}  // namespace glpair

#endif  // GLPAIR_GAUSS_CODE_HPP
