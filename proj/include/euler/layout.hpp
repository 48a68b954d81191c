#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "euler/diagram.hpp"

namespace euler {

struct Point2 {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Axis-aligned ellipse.
struct Ellipse {
  Point2 center;
  double rx = 1;
  double ry = 1;

  /// Implicit form: negative inside, zero on the boundary, positive outside.
  double level(const Point2& p) const;
  friend bool operator==(const Ellipse&, const Ellipse&) = default;
};

/// Plane geometry of a diagram: one ellipse per circle, one position per
/// point, on a width x height canvas (y grows downwards, as in SVG).
struct ConcreteDiagram {
  std::map<std::string, Ellipse> shapes;
  std::map<std::string, Point2> points;
  double width = 400;
  double height = 400;

  double clearance() const;  // 1e-6 of the canvas diagonal
  friend bool operator==(const ConcreteDiagram&, const ConcreteDiagram&) = default;
};

class LayoutError : public Error {
 public:
  explicit LayoutError(const std::string& constraint)
      : Error("layout failed: " + constraint), constraint_(constraint) {}
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string constraint_;
};

class DegenerateGeometry : public Error {
 public:
  using Error::Error;
};

inline constexpr std::uint64_t kDefaultLayoutSeed = 0;
inline constexpr int kLayoutRestarts = 64;

/// Places circles outermost first (fewest supersets), sampling each ellipse
/// until its relations to the shapes already placed hold with margin, then
/// places points by rejection sampling. Each attempt is checked with
/// recover_relations; up to kLayoutRestarts attempts are made.
/// Throws LayoutError naming the constraint that failed last.
ConcreteDiagram layout(const AbstractDiagram& d, std::uint64_t seed = kDefaultLayoutSeed);

/// Reads the relations back from the geometry. Ellipse pairs are classified
/// by sampling each boundary against the other's implicit form, with a
/// Lipschitz bound certifying that no sign change hides between samples.
/// Throws DegenerateGeometry when boundaries touch or a point sits on a
/// boundary or on another point.
std::set<EulRelation> recover_relations(const ConcreteDiagram& c);

/// Standalone SVG 1.1 document. Output depends only on `c` and `labels`.
std::string render_svg(const ConcreteDiagram& c, bool labels = true);

/// Coarse character-grid view: boundary cells show the circle's initial,
/// point cells the point's initial.
std::string render_ascii(const ConcreteDiagram& c, int columns = 60, int rows = 24);

}  // namespace euler
