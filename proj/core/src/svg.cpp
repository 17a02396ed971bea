#include "brickforge/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

#include "brickforge/errors.hpp"

namespace brickforge::svg {
namespace {

using brick::BrickPolyhedron;
using coxeter::CoxeterSystem;
using geometry::QVec;
using num::Rational;

struct P2 {
  double x = 0;
  double y = 0;
};

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string fmt(double v) {
  char buf[32];
  // avoid "-0.00"
  if (std::abs(v) < 5e-3) v = 0;
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Monotone chain; collinear points are dropped.  Input order is canonical,
// so the output is deterministic.
std::vector<P2> convex_hull(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end(), [](const P2& a, const P2& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const P2& a, const P2& b) {
                          return std::abs(a.x - b.x) < 1e-9 && std::abs(a.y - b.y) < 1e-9;
                        }),
            pts.end());
  if (pts.size() < 3) return pts;
  const auto cross = [](const P2& o, const P2& a, const P2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<P2> hull(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 1e-9) --k;
    hull[k++] = pts[i];
  }
  const size_t lower = k + 1;
  for (size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 1e-9) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

std::string render_rank2(const BrickPolyhedron& bp) {
  const subword::Complex& sc = *bp.instance;
  const CoxeterSystem& sys = sc.system();
  if (sys.rank() != 2) throw DimensionMismatch("SVG rendering needs a rank-2 system");

  // isometric embedding of the root basis: columns of the Cholesky factor
  const double g00 = static_cast<double>(sys.gram(0, 0));
  const double g01 = static_cast<double>(sys.gram(0, 1));
  const double g11 = static_cast<double>(sys.gram(1, 1));
  const double a = std::sqrt(g00);
  const double b = g01 / a;
  const double d = std::sqrt(g11 - b * b);
  const auto embed = [&](double c0, double c1) { return P2{a * c0 + b * c1, d * c1}; };
  const auto embed_q = [&](const QVec& v) {
    return embed(to_double(v[0]), to_double(v[1]));
  };
  const auto unit = [](P2 v) {
    const double len = std::hypot(v.x, v.y);
    return P2{v.x / len, v.y / len};
  };

  // brick vectors grouped by coordinates; vertex set from the pointed facets
  std::map<QVec, std::vector<int>> groups;
  for (size_t fi = 0; fi < bp.brick_vectors.size(); ++fi)
    groups[bp.brick_vectors[fi]].push_back(static_cast<int>(fi));
  std::vector<QVec> vertex_vecs;
  for (int fi : bp.vertex_facets) vertex_vecs.push_back(bp.brick_vectors[static_cast<size_t>(fi)]);
  geometry::sort_unique(vertex_vecs);

  std::vector<P2> base;
  for (const auto& [v, fs] : groups) base.push_back(embed_q(v));
  double lox = base.front().x, hix = base.front().x;
  double loy = base.front().y, hiy = base.front().y;
  for (const P2& p : base) {
    lox = std::min(lox, p.x), hix = std::max(hix, p.x);
    loy = std::min(loy, p.y), hiy = std::max(hiy, p.y);
  }
  const double reach = std::max(2.5, std::hypot(hix - lox, hiy - loy)) * 1.6;

  // region = conv(points) + cone(rays), displayed as the hull of the points
  // together with far translates along the recession directions
  std::vector<P2> region = base;
  for (const QVec& ray : bp.recession_rays) {
    const P2 dir = unit(embed_q(ray));
    for (const P2& p : base) region.push_back({p.x + reach * dir.x, p.y + reach * dir.y});
  }
  const std::vector<P2> hull = convex_hull(region);
  for (const P2& p : hull) {
    lox = std::min(lox, p.x), hix = std::max(hix, p.x);
    loy = std::min(loy, p.y), hiy = std::max(hiy, p.y);
  }

  const double scale = 70.0;
  const double pad = 60.0;
  const double width = (hix - lox) * scale + 2 * pad;
  const double height = (hiy - loy) * scale + 2 * pad;
  const auto sx = [&](double x) { return (x - lox) * scale + pad; };
  const auto sy = [&](double y) { return (hiy - y) * scale + pad; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(width) << " "
      << fmt(height) << "\">\n";
  out << "<defs>\n"
      << "<marker id=\"aroot\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"5\""
         " markerHeight=\"5\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#b03030\"/>"
         "</marker>\n"
      << "<marker id=\"aray\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"5\""
         " markerHeight=\"5\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#2e7d32\"/>"
         "</marker>\n"
      << "</defs>\n";
  out << "<style>.region{fill:#e8eef9;stroke:#3b5b92;stroke-width:1.5}"
         ".root{stroke:#b03030;stroke-width:1.6}"
         ".ray{stroke:#2e7d32;stroke-width:1.6;stroke-dasharray:5 3}"
         ".pt{fill:#1a1a1a}.ptopen{fill:#ffffff;stroke:#1a1a1a;stroke-width:1.4}"
         ".lbl{font:12px sans-serif;fill:#1a1a1a}</style>\n";

  if (hull.size() >= 3) {
    out << "<polygon class=\"region\" points=\"";
    for (size_t i = 0; i < hull.size(); ++i)
      out << (i ? " " : "") << fmt(sx(hull[i].x)) << "," << fmt(sy(hull[i].y));
    out << "\"/>\n";
  } else if (hull.size() == 2) {
    out << "<line class=\"region\" x1=\"" << fmt(sx(hull[0].x)) << "\" y1=\"" << fmt(sy(hull[0].y))
        << "\" x2=\"" << fmt(sx(hull[1].x)) << "\" y2=\"" << fmt(sy(hull[1].y)) << "\"/>\n";
  }

  // recession arrows anchored at the vertices
  for (const QVec& vx : vertex_vecs) {
    const P2 p = embed_q(vx);
    for (const QVec& ray : bp.recession_rays) {
      const P2 dir = unit(embed_q(ray));
      out << "<line class=\"ray\" marker-end=\"url(#aray)\" x1=\"" << fmt(sx(p.x)) << "\" y1=\""
          << fmt(sy(p.y)) << "\" x2=\"" << fmt(sx(p.x + 1.1 * dir.x)) << "\" y2=\""
          << fmt(sy(p.y + 1.1 * dir.y)) << "\"/>\n";
    }
  }

  // root-configuration arrows at each brick vector
  const std::vector<std::vector<int16_t>>& rids = sc.facet_root_ids();
  for (const auto& [v, fs] : groups) {
    const P2 p = embed_q(v);
    for (int fi : fs)
      for (int pos : sc.facets()[static_cast<size_t>(fi)]) {
        const coxeter::Root r = sys.root_of(rids[static_cast<size_t>(fi)][static_cast<size_t>(pos) - 1]);
        const P2 dir = unit(embed(r[0], r[1]));
        out << "<line class=\"root\" marker-end=\"url(#aroot)\" x1=\"" << fmt(sx(p.x))
            << "\" y1=\"" << fmt(sy(p.y)) << "\" x2=\"" << fmt(sx(p.x + 0.6 * dir.x))
            << "\" y2=\"" << fmt(sy(p.y + 0.6 * dir.y)) << "\"/>\n";
      }
  }

  // brick vectors: vertices filled, interior/non-pointed ones open
  for (const auto& [v, fs] : groups) {
    const P2 p = embed_q(v);
    const bool is_vertex = std::binary_search(vertex_vecs.begin(), vertex_vecs.end(), v,
                                              geometry::qvec_less);
    out << "<circle class=\"" << (is_vertex ? "pt" : "ptopen") << "\" cx=\"" << fmt(sx(p.x))
        << "\" cy=\"" << fmt(sy(p.y)) << "\" r=\"4\"/>\n";
    std::string label = "b";
    for (size_t i = 0; i < fs.size(); ++i) {
      const subword::Facet& f = sc.facets()[static_cast<size_t>(fs[i])];
      label += i ? "=b{" : "{";
      for (size_t j = 0; j < f.size(); ++j)
        label += (j ? "," : "") + std::to_string(f[j]);
      label += "}";
    }
    out << "<text class=\"lbl\" x=\"" << fmt(sx(p.x) + 7) << "\" y=\"" << fmt(sy(p.y) - 7)
        << "\">" << label << "</text>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace brickforge::svg
