#ifndef GLPAIR_SLD_FORMAT_HPP
#define GLPAIR_SLD_FORMAT_HPP

#include "glpair/diagram.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace glpair {

// Plain-text diagram format (.sld):
//
//   # comment
//   crossings N
//   edge A.p B.q        (exactly 2N lines, 0 <= A,B < N, p,q in 0..3)
//   orient k +|-        (optional, component k in canonical numbering)

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct SldDocument {
  SurfaceDiagram diagram;
  /// Components whose orientation was given explicitly; true = reversed.
  std::map<int, bool> orient;

  /// Orientation with the explicit choices applied over the canonical one.
  LinkOrientation orientation() const;
};

SldDocument parse_sld(std::string_view text);
SldDocument read_sld_file(const std::string& path);

/// Canonical text: edges by smallest dart, orient lines for reversed
/// components only.
std::string serialize_sld(const SurfaceDiagram& d);
std::string serialize_sld(const SurfaceDiagram& d, const LinkOrientation& o);

}  // namespace glpair

#endif  // GLPAIR_SLD_FORMAT_HPP
