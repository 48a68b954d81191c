#include "euler/layout.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <random>
#include <vector>

namespace euler {

double Ellipse::level(const Point2& p) const {
  double u = (p.x - center.x) / rx;
  double v = (p.y - center.y) / ry;
  return u * u + v * v - 1.0;
}

double ConcreteDiagram::clearance() const { return 1e-6 * std::hypot(width, height); }

namespace {

constexpr double kPi = 3.14159265358979323846;

Point2 on_boundary(const Ellipse& e, double theta) {
  return {e.center.x + e.rx * std::cos(theta), e.center.y + e.ry * std::sin(theta)};
}

// Sign census of b's implicit form along a's boundary.
struct BoundaryCensus {
  std::size_t inside = 0;   // samples with level < 0
  std::size_t outside = 0;  // samples with level > 0
  double min_abs = INFINITY;
  double margin = 0;  // |level| above this at every sample certifies the sign in between
};

BoundaryCensus census(const Ellipse& a, const Ellipse& b, std::size_t samples) {
  BoundaryCensus c;
  double dx = std::abs(a.center.x - b.center.x) + a.rx;
  double dy = std::abs(a.center.y - b.center.y) + a.ry;
  double grad = 2.0 * std::hypot(dx / (b.rx * b.rx), dy / (b.ry * b.ry));
  double lipschitz = grad * std::max(a.rx, a.ry);
  c.margin = lipschitz * kPi / static_cast<double>(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    double v = b.level(on_boundary(a, 2.0 * kPi * static_cast<double>(i) / static_cast<double>(samples)));
    if (v < 0) ++c.inside;
    else ++c.outside;
    c.min_abs = std::min(c.min_abs, std::abs(v));
  }
  return c;
}

enum class PairRelation { FirstInside, SecondInside, Disjoint, Crossing };

// Certified classification; throws DegenerateGeometry when the sampling
// cannot separate the boundaries.
PairRelation classify(const Ellipse& a, const Ellipse& b, const std::string& na, const std::string& nb) {
  auto side = [&](const Ellipse& p, const Ellipse& q) -> std::optional<bool> {
    for (std::size_t n = 256; n <= (1u << 16); n *= 4) {
      auto c = census(p, q, n);
      if (c.inside && c.outside) return std::nullopt;  // boundaries cross
      if (c.min_abs > c.margin) return c.inside > 0;   // certified: true = inside
    }
    throw DegenerateGeometry("boundaries of " + na + " and " + nb + " touch");
  };
  auto ab = side(a, b);
  if (!ab) return PairRelation::Crossing;
  if (*ab) return PairRelation::FirstInside;
  auto ba = side(b, a);
  if (!ba) throw DegenerateGeometry("inconsistent boundary census for " + na + " and " + nb);
  return *ba ? PairRelation::SecondInside : PairRelation::Disjoint;
}

// Approximate distance from p to the boundary of e, to first order.
double boundary_distance(const Ellipse& e, const Point2& p) {
  double gx = 2.0 * (p.x - e.center.x) / (e.rx * e.rx);
  double gy = 2.0 * (p.y - e.center.y) / (e.ry * e.ry);
  double g = std::hypot(gx, gy);
  double v = std::abs(e.level(p));
  return g > 0 ? v / g : INFINITY;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// ---------------------------------------------------------------------------

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) {
    double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 rng_;
};

struct Box {
  double x0, y0, x1, y1;
  bool empty() const { return x1 <= x0 || y1 <= y0; }
};

Box box_of(const Ellipse& e) {
  return {e.center.x - e.rx, e.center.y - e.ry, e.center.x + e.rx, e.center.y + e.ry};
}

Box intersect(const Box& a, const Box& b) {
  return {std::max(a.x0, b.x0), std::max(a.y0, b.y0), std::min(a.x1, b.x1), std::min(a.y1, b.y1)};
}

constexpr double kLevelMargin = 0.04;   // separation demanded for nesting/disjointness
constexpr double kCrossShare = 0.12;    // minimum share of a boundary on each side when crossing
constexpr std::size_t kQuickSamples = 96;
constexpr int kShapeAttempts = 400;
constexpr int kPointAttempts = 3000;


bool relation_holds(RelationTag tag, bool candidate_left, const Ellipse& cand, const Ellipse& other) {
  auto co = census(cand, other, kQuickSamples);
  auto oc = census(other, cand, kQuickSamples);
  double share_co = static_cast<double>(co.inside) / kQuickSamples;
  double share_oc = static_cast<double>(oc.inside) / kQuickSamples;
  switch (tag) {
    case RelationTag::Inside:
      if (candidate_left) return co.outside == 0 && co.min_abs > kLevelMargin;
      return oc.outside == 0 && oc.min_abs > kLevelMargin;
    case RelationTag::Exclusion:
      return co.inside == 0 && oc.inside == 0 && co.min_abs > kLevelMargin && oc.min_abs > kLevelMargin;
    case RelationTag::Crossing:
      return share_co > kCrossShare && share_co < 1 - kCrossShare && share_oc > kCrossShare &&
             share_oc < 1 - kCrossShare;
  }
  return false;
}

std::optional<ConcreteDiagram> attempt(const AbstractDiagram& d, Sampler& rng, std::string& failure) {
  ConcreteDiagram c;
  const Box canvas{20, 20, c.width - 20, c.height - 20};
  auto circles = d.circles();
  auto supersets = [&](const std::string& a) {
    std::vector<std::string> out;
    for (const auto& b : circles)
      if (b != a && holds(d, EulRelation::inside(a, b))) out.push_back(b);
    return out;
  };
  std::map<std::string, std::size_t> depth;
  for (const auto& a : circles) depth[a] = supersets(a).size();
  std::stable_sort(circles.begin(), circles.end(),
                   [&](const std::string& a, const std::string& b) { return depth[a] < depth[b]; });

  if (circles.size() == 1) {
    c.shapes[circles[0]] = Ellipse{{c.width / 2, c.height / 2}, 150, 110};
  } else {
    for (const auto& name : circles) {
      Box box = canvas;
      for (const auto& s : supersets(name)) box = intersect(box, box_of(c.shapes.at(s)));
      if (box.empty()) {
        failure = "circle " + name + ": containers have no common area";
        return std::nullopt;
      }
      double span = std::min(box.x1 - box.x0, box.y1 - box.y0);
      bool placed = false;
      for (int k = 0; k < kShapeAttempts && !placed; ++k) {
        double rx = rng.uniform(0.15, 0.5) * span;
        double ry = rng.uniform(0.15, 0.5) * span;
        if (rx < 6 || ry < 6) continue;
        // Crossing circles may leave their containers' boxes but never the canvas.
        Box centers = intersect({box.x0 + 0.5 * rx, box.y0 + 0.5 * ry, box.x1 - 0.5 * rx, box.y1 - 0.5 * ry},
                                {canvas.x0 + rx, canvas.y0 + ry, canvas.x1 - rx, canvas.y1 - ry});
        if (centers.empty()) continue;
        Ellipse e{{rng.uniform(centers.x0, centers.x1), rng.uniform(centers.y0, centers.y1)}, rx, ry};
        placed = std::all_of(c.shapes.begin(), c.shapes.end(), [&](const auto& kv) {
          auto r = d.relation_between(name, kv.first);
          if (!r) return false;
          return relation_holds(r->tag, r->left == name, e, kv.second);
        });
        if (placed) c.shapes[name] = e;
      }
      if (!placed) {
        failure = "circle " + name + ": no ellipse satisfies its relations to the circles already placed";
        return std::nullopt;
      }
    }
  }

  for (const auto& p : d.points()) {
    std::vector<const Ellipse*> in, out;
    Box box = canvas;
    for (const auto& [name, e] : c.shapes) {
      if (holds(d, EulRelation::inside(p, name))) {
        in.push_back(&e);
        box = intersect(box, box_of(e));
      } else {
        out.push_back(&e);
      }
    }
    bool placed = false;
    for (int k = 0; k < kPointAttempts && !placed && !box.empty(); ++k) {
      Point2 q{rng.uniform(box.x0, box.x1), rng.uniform(box.y0, box.y1)};
      placed = std::all_of(in.begin(), in.end(), [&](const Ellipse* e) { return e->level(q) < -kLevelMargin; }) &&
               std::all_of(out.begin(), out.end(), [&](const Ellipse* e) { return e->level(q) > kLevelMargin; }) &&
               std::all_of(c.points.begin(), c.points.end(), [&](const auto& kv) {
                 return std::hypot(kv.second.x - q.x, kv.second.y - q.y) > 12;
               });
      if (placed) c.points[p] = q;
    }
    if (!placed) {
      failure = "point " + p + ": its region is empty or too small";
      return std::nullopt;
    }
  }

  try {
    if (recover_relations(c) != d.relations()) {
      failure = "recovered relations differ from the diagram";
      return std::nullopt;
    }
  } catch (const DegenerateGeometry& e) {
    failure = e.what();
    return std::nullopt;
  }
  return c;
}

}  // namespace

ConcreteDiagram layout(const AbstractDiagram& d, std::uint64_t seed) {
  std::string failure = "no attempt made";
  for (int i = 0; i < kLayoutRestarts; ++i) {
    Sampler rng(seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(i));
    if (auto c = attempt(d, rng, failure)) return *c;
  }
  throw LayoutError(failure);
}

std::set<EulRelation> recover_relations(const ConcreteDiagram& c) {
  std::set<EulRelation> out;
  for (auto i = c.shapes.begin(); i != c.shapes.end(); ++i) {
    for (auto j = std::next(i); j != c.shapes.end(); ++j) {
      switch (classify(i->second, j->second, i->first, j->first)) {
        case PairRelation::FirstInside: out.insert(EulRelation::inside(i->first, j->first)); break;
        case PairRelation::SecondInside: out.insert(EulRelation::inside(j->first, i->first)); break;
        case PairRelation::Disjoint: out.insert(EulRelation::exclusion(i->first, j->first)); break;
        case PairRelation::Crossing: out.insert(EulRelation::crossing(i->first, j->first)); break;
      }
    }
  }
  const double eps = c.clearance();
  for (auto i = c.points.begin(); i != c.points.end(); ++i) {
    for (auto j = std::next(i); j != c.points.end(); ++j)
      if (std::hypot(i->second.x - j->second.x, i->second.y - j->second.y) < eps)
        throw DegenerateGeometry("points " + i->first + " and " + j->first + " coincide");
    for (const auto& [name, e] : c.shapes) {
      if (boundary_distance(e, i->second) < eps)
        throw DegenerateGeometry("point " + i->first + " lies on the boundary of " + name);
      out.insert(e.level(i->second) < 0 ? EulRelation::inside(i->first, name)
                                        : EulRelation::exclusion(i->first, name));
    }
  }
  return out;
}

std::string render_svg(const ConcreteDiagram& c, bool labels) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(c.width) +
         "\" height=\"" + fmt(c.height) + "\" viewBox=\"0 0 " + fmt(c.width) + " " + fmt(c.height) + "\">\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"" + fmt(c.width) + "\" height=\"" + fmt(c.height) +
         "\" fill=\"white\"/>\n";
  for (const auto& [name, e] : c.shapes) {
    out += "  <ellipse cx=\"" + fmt(e.center.x) + "\" cy=\"" + fmt(e.center.y) + "\" rx=\"" + fmt(e.rx) +
           "\" ry=\"" + fmt(e.ry) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    if (labels) {
      // Just outside the upper-left arc.
      double x = e.center.x - 0.78 * e.rx;
      double y = e.center.y - 0.78 * e.ry;
      out += "  <text x=\"" + fmt(x) + "\" y=\"" + fmt(y) +
             "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"end\">" + name + "</text>\n";
    }
  }
  for (const auto& [name, p] : c.points) {
    out += "  <circle cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) + "\" r=\"3\" fill=\"black\"/>\n";
    if (labels)
      out += "  <text x=\"" + fmt(p.x + 5) + "\" y=\"" + fmt(p.y - 5) +
             "\" font-family=\"sans-serif\" font-size=\"12\">" + name + "</text>\n";
  }
  return out + "</svg>\n";
}

std::string render_ascii(const ConcreteDiagram& c, int columns, int rows) {
  std::vector<std::string> grid(static_cast<std::size_t>(rows), std::string(static_cast<std::size_t>(columns), ' '));
  double cw = c.width / columns;
  double ch = c.height / rows;
  for (int r = 0; r < rows; ++r) {
    for (int col = 0; col < columns; ++col) {
      for (const auto& [name, e] : c.shapes) {
        double x0 = col * cw, y0 = r * ch;
        bool any_in = false, any_out = false;
        for (auto [x, y] : {std::pair{x0, y0}, {x0 + cw, y0}, {x0, y0 + ch}, {x0 + cw, y0 + ch}}) {
          if (e.level({x, y}) < 0) any_in = true;
          else any_out = true;
        }
        if (any_in && any_out) {
          grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = name[0];
          break;
        }
      }
    }
  }
  for (const auto& [name, p] : c.points) {
    auto col = std::clamp(static_cast<int>(p.x / cw), 0, columns - 1);
    auto r = std::clamp(static_cast<int>(p.y / ch), 0, rows - 1);
    grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = name[0];
  }
  std::string out;
  for (auto& line : grid) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  return out;
}

}  // namespace euler
