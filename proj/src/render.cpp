#include "shadows/render.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace shadows {

namespace {

struct Vec2 {
  double x = 0, y = 0;
};

Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

// Euclidean coordinates of the two simple coroots, at the conventional angle
// for the type. Used only here; the core never sees these.
std::array<Vec2, 2> coroot_frame(const RootSystem& rs) {
  const double s2 = std::sqrt(2.0);
  switch (rs.family) {
    case Family::A:
      return {Vec2{s2, 0}, Vec2{-s2 / 2, s2 * std::sqrt(3.0) / 2}};  // 120 degrees
    case Family::B:
    case Family::C:
      return {Vec2{1, -1}, Vec2{0, 2}};  // 135 degrees
    case Family::G: {
      double r = std::sqrt(2.0 / 3.0);  // 150 degrees
      return {Vec2{s2, 0}, Vec2{-r * std::sqrt(3.0) / 2, r / 2}};
    }
    default:
      throw std::invalid_argument("no rank-2 embedding for family " +
                                  std::string(1, static_cast<char>(rs.family)));
  }
}

struct Embedding {
  std::array<Vec2, 2> coroot;  // columns of E
  std::array<Vec2, 2> dual;    // rows of E^{-1}

  Vec2 point(const RatVector& p) const {
    return p[0].to_double() * coroot[0] + p[1].to_double() * coroot[1];
  }
  Vec2 point(const IntVector& p) const {
    return static_cast<double>(p[0]) * coroot[0] + static_cast<double>(p[1]) * coroot[1];
  }
  // Root direction gamma_E with dot(gamma_E, v_E) = <gamma, v>.
  Vec2 root(const RootSystem& rs, int root_index) const {
    const IntVector& c = rs.positive_roots[root_index].root;
    IntVector row = rs.cartan.transpose() * c;  // <gamma, alpha_i^vee> entries
    return static_cast<double>(row[0]) * dual[0] + static_cast<double>(row[1]) * dual[1];
  }
};

Embedding make_embedding(const RootSystem& rs) {
  Embedding e;
  e.coroot = coroot_frame(rs);
  double det = e.coroot[0].x * e.coroot[1].y - e.coroot[0].y * e.coroot[1].x;
  e.dual[0] = {e.coroot[1].y / det, -e.coroot[1].x / det};
  e.dual[1] = {-e.coroot[0].y / det, e.coroot[0].x / det};
  return e;
}

std::string fmt(double v) {
  if (v > -0.00005 && v < 0) v = 0;  // avoid "-0.0000"
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

// SVG user coordinates: math x right, math y up.
std::string pt(Vec2 v) { return fmt(v.x) + "," + fmt(-v.y); }

std::vector<Vec2> clip_half_plane(const std::vector<Vec2>& poly, Vec2 normal, double offset,
                                  int side) {
  // Keep { p : side*(dot(normal,p) - offset) >= 0 }.
  std::vector<Vec2> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 a = poly[i], b = poly[(i + 1) % n];
    double da = side * (dot(normal, a) - offset);
    double db = side * (dot(normal, b) - offset);
    if (da >= 0) out.push_back(a);
    if ((da > 0 && db < 0) || (da < 0 && db > 0)) {
      double t = da / (da - db);
      out.push_back(a + t * (b - a));
    }
  }
  return out;
}

std::string polygon_points(const std::vector<Vec2>& poly) {
  std::string s;
  for (const auto& v : poly) {
    if (!s.empty()) s += " ";
    s += pt(v);
  }
  return s;
}

const char* kGalleryColors[] = {"#1f6fb2", "#c23b22", "#2e8b57", "#8e44ad",
                                "#d4860b", "#16a2b8", "#79443b", "#5d6d7e"};

}  // namespace

std::string render_svg(const Scene& scene) {
  const RootSystem& rs = scene.rs;
  if (rs.rank != 2)
    throw std::invalid_argument("render_svg: only rank-2 scenes can be drawn (got rank " +
                                std::to_string(rs.rank) + ")");
  if (scene.window < 1) throw std::invalid_argument("render_svg: window must be >= 1");
  Embedding em = make_embedding(rs);
  const double W = scene.window;
  const double pxscale = 60.0;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"" << fmt(2 * W * pxscale) << "\" height=\"" << fmt(2 * W * pxscale) << "\" "
      << "viewBox=\"" << fmt(-W) << " " << fmt(-W) << " " << fmt(2 * W) << " " << fmt(2 * W)
      << "\">\n";
  svg << "<defs><clipPath id=\"window\"><rect x=\"" << fmt(-W) << "\" y=\"" << fmt(-W)
      << "\" width=\"" << fmt(2 * W) << "\" height=\"" << fmt(2 * W)
      << "\"/></clipPath></defs>\n";
  svg << "<g clip-path=\"url(#window)\">\n";
  svg << "<rect x=\"" << fmt(-W) << "\" y=\"" << fmt(-W) << "\" width=\"" << fmt(2 * W)
      << "\" height=\"" << fmt(2 * W) << "\" fill=\"#ffffff\"/>\n";

  std::vector<Vec2> box = {{-W, -W}, {W, -W}, {W, W}, {-W, W}};

  // Hyperplanes, one polyline per wall meeting the window.
  svg << "<g stroke=\"#b0b0b0\" stroke-width=\"0.02\">\n";
  for (int g = 0; g < rs.num_positive_roots(); ++g) {
    Vec2 normal = em.root(rs, g);
    double lo = 1e18, hi = -1e18;
    for (const auto& corner : box) {
      double d = dot(normal, corner);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    for (Int k = static_cast<Int>(std::ceil(lo)); k <= static_cast<Int>(std::floor(hi)); ++k) {
      double n2 = dot(normal, normal);
      Vec2 base = (k / n2) * normal;
      Vec2 dir = {-normal.y, normal.x};
      double scale = 4 * W / std::sqrt(dot(dir, dir));
      Vec2 a = base - scale * dir, b = base + scale * dir;
      svg << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(-a.y) << "\" x2=\"" << fmt(b.x)
          << "\" y2=\"" << fmt(-b.y) << "\"/>\n";
    }
  }
  svg << "</g>\n";

  if (scene.chimney) {
    std::vector<Vec2> poly = box;
    for (const auto& half : sector_half_apartments(rs, *scene.chimney)) {
      Vec2 normal = em.root(rs, half.wall.root_index);
      poly = clip_half_plane(poly, normal, static_cast<double>(half.wall.level), half.side);
      if (poly.empty()) break;
    }
    if (!poly.empty())
      svg << "<polygon points=\"" << polygon_points(poly)
          << "\" fill=\"#c8c8c8\" fill-opacity=\"0.55\"/>\n";
  }

  for (const auto& alcove : scene.highlight_alcoves) {
    std::vector<Vec2> tri;
    for (const auto& v : face_vertices(rs, alcove_face())) tri.push_back(em.point(apply(alcove, v)));
    svg << "<polygon points=\"" << polygon_points(tri)
        << "\" fill=\"#f2b6c5\" stroke=\"#c23b60\" stroke-width=\"0.015\"/>\n";
  }

  if (scene.shadow) {
    const ShadowResult& sh = *scene.shadow;
    for (std::size_t i = 0; i < sh.simplices.size(); ++i) {
      const EndSimplex& s = sh.simplices[i];
      Int mult = sh.multiplicities ? (*sh.multiplicities)[i] : 1;
      auto verts = face_vertices(rs, s.face);
      if (verts.size() == 1) {
        Vec2 cpt = em.point(apply(s.rep, verts[0]));
        for (Int m = 0; m < mult; ++m) {
          double r = 0.09 + 0.055 * static_cast<double>(m);
          svg << "<circle cx=\"" << fmt(cpt.x) << "\" cy=\"" << fmt(-cpt.y) << "\" r=\"" << fmt(r)
              << "\" fill=\"" << (m == 0 ? "#c23b22" : "none")
              << "\" stroke=\"#c23b22\" stroke-width=\"0.025\"/>\n";
        }
      } else if (verts.size() == 3) {
        std::vector<Vec2> tri;
        for (const auto& v : verts) tri.push_back(em.point(apply(s.rep, v)));
        svg << "<polygon points=\"" << polygon_points(tri)
            << "\" fill=\"#e2a23b\" fill-opacity=\"0.8\" stroke=\"#9a6a12\" "
               "stroke-width=\"0.012\"/>\n";
      } else {
        std::vector<Vec2> seg;
        for (const auto& v : verts) seg.push_back(em.point(apply(s.rep, v)));
        svg << "<line x1=\"" << fmt(seg[0].x) << "\" y1=\"" << fmt(-seg[0].y) << "\" x2=\""
            << fmt(seg[1].x) << "\" y2=\"" << fmt(-seg[1].y)
            << "\" stroke=\"#e2a23b\" stroke-width=\"0.06\"/>\n";
      }
    }
  }

  for (std::size_t gi = 0; gi < scene.galleries.size(); ++gi) {
    const Gallery& g = scene.galleries[gi];
    std::vector<Vec2> path;
    auto centroid = [&](const AffineWeylElement& x, const FaceType& f) {
      auto verts = face_vertices(rs, f);
      Vec2 acc{0, 0};
      for (const auto& v : verts) acc = acc + em.point(apply(x, v));
      return (1.0 / static_cast<double>(verts.size())) * acc;
    };
    path.push_back(centroid(g.first_alcove, g.spec.start));
    AffineWeylElement cur = g.first_alcove;
    for (std::size_t i = 0; i < g.moves.size(); ++i) {
      // Route through the panel so folds are visible as a spike to the wall.
      int letter = g.spec.word[i];
      std::vector<RatVector> pverts;
      for (int vi = 0; vi <= rs.rank; ++vi) {
        if (letter >= 1 && vi == letter) continue;   // vertex off the type-s wall
        if (letter == 0 && vi == 0) continue;        // origin is off the level-1 wall
        pverts.push_back(rs.alcove_vertices[vi]);
      }
      Vec2 acc{0, 0};
      for (const auto& v : pverts) acc = acc + em.point(apply(cur, v));
      path.push_back((1.0 / static_cast<double>(pverts.size())) * acc);
      if (g.moves[i] == Move::cross) cur = compose(cur, generator(rs, letter));
      path.push_back(centroid(cur, alcove_face()));
    }
    path.push_back(centroid(cur, g.spec.end));
    svg << "<polyline points=\"" << polygon_points(path) << "\" fill=\"none\" stroke=\""
        << kGalleryColors[gi % 8] << "\" stroke-width=\"0.035\" stroke-linejoin=\"round\"/>\n";
  }

  // Simple coroot arrows with labels.
  svg << "<g stroke=\"#303030\" stroke-width=\"0.03\" fill=\"#303030\">\n";
  const char* names[2] = {"\xce\xb1", "\xce\xb2"};  // alpha, beta
  for (int i = 0; i < 2; ++i) {
    Vec2 tip = em.coroot[i];
    svg << "<line x1=\"0.0000\" y1=\"0.0000\" x2=\"" << fmt(tip.x) << "\" y2=\"" << fmt(-tip.y)
        << "\"/>\n";
    svg << "<text x=\"" << fmt(tip.x * 1.12) << "\" y=\"" << fmt(-tip.y * 1.12)
        << "\" font-size=\"0.28\" stroke=\"none\">" << names[i] << "&#8744;</text>\n";
  }
  svg << "</g>\n";

  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace shadows
