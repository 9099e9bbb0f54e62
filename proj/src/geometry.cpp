#include "drg/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "drg/error.hpp"

namespace drg {

FiniteField::FiniteField(int q) : q_(q) {
  if (q == 2 || q == 3) {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        add_[a][b] = (a + b) % q;
        mul_[a][b] = (a * b) % q;
      }
  } else if (q == 4) {
    // Elements as bit pairs c1*w + c0 with w^2 = w + 1.
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        add_[a][b] = a ^ b;
        int r = 0;
        int aa = a;
        for (int bit = 0; bit < 2; ++bit) {
          if ((b >> bit) & 1) r ^= aa;
          aa <<= 1;
          if (aa & 4) aa ^= 0b111;  // reduce by w^2 + w + 1
        }
        mul_[a][b] = r;
      }
  } else {
    throw GeometryError("unsupported field order " + std::to_string(q) + " (expected 2, 3 or 4)");
  }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (add_[a][b] == 0) neg_[a] = b;
      if (mul_[a][b] == 1) inv_[a] = b;
    }
}

std::vector<std::vector<Vertex>> Geometry::lines_through() const {
  std::vector<std::vector<Vertex>> out(num_points());
  for (Vertex l = 0; l < lines.size(); ++l)
    for (Vertex p : lines[l]) out[p].push_back(l);
  return out;
}

void Geometry::validate() const {
  const std::size_t np = num_points();
  if (line_labels.size() != lines.size())
    throw GeometryError(name + ": line label count mismatch");
  std::vector<int> on(np, 0);
  for (std::size_t l = 0; l < lines.size(); ++l) {
    if (lines[l].size() != static_cast<std::size_t>(s + 1))
      throw GeometryError(name + ": line " + std::to_string(l) + " has " +
                          std::to_string(lines[l].size()) + " points, expected " +
                          std::to_string(s + 1));
    for (Vertex p : lines[l]) {
      if (p >= np) throw GeometryError(name + ": point index out of range");
      ++on[p];
    }
  }
  for (std::size_t p = 0; p < np; ++p)
    if (on[p] != t + 1)
      throw GeometryError(name + ": point " + std::to_string(p) + " on " + std::to_string(on[p]) +
                          " lines, expected " + std::to_string(t + 1));
  std::vector<std::uint8_t> shared(np * np, 0);
  for (const auto& line : lines)
    for (std::size_t i = 0; i < line.size(); ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j)
        if (++shared[line[i] * np + line[j]] > 1)
          throw GeometryError(name + ": points " + std::to_string(line[i]) + " and " +
                              std::to_string(line[j]) + " share two lines");
}

namespace {

using Coords = std::vector<int>;

std::string coords_label(const Coords& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

std::string points_label(const std::vector<Vertex>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + std::to_string(pts[i]);
  return s + "}";
}

// Projective space PG(dim-1, q): normalized representatives (first nonzero
// coordinate 1) in lexicographic order, with a reverse lookup by base-q code.
class ProjectiveSpace {
 public:
  ProjectiveSpace(const FiniteField& f, int dim) : f_(f) {
    std::size_t total = 1;
    for (int i = 0; i < dim; ++i) total *= static_cast<std::size_t>(f.order());
    index_.assign(total, -1);
    Coords c(static_cast<std::size_t>(dim), 0);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t x = code;
      for (int i = dim - 1; i >= 0; --i) {
        c[static_cast<std::size_t>(i)] = static_cast<int>(x % static_cast<std::size_t>(f.order()));
        x /= static_cast<std::size_t>(f.order());
      }
      auto nz = std::find_if(c.begin(), c.end(), [](int v) { return v != 0; });
      if (nz != c.end() && *nz == 1) {
        index_[code] = static_cast<int>(points_.size());
        points_.push_back(c);
      }
    }
  }

  const std::vector<Coords>& points() const { return points_; }

  Coords normalize(Coords c) const {
    auto nz = std::find_if(c.begin(), c.end(), [](int v) { return v != 0; });
    if (nz == c.end()) throw GeometryError("zero vector has no projective point");
    const int inv = f_.inv(*nz);
    for (int& v : c) v = f_.mul(v, inv);
    return c;
  }

  Vertex index_of(const Coords& c) const {
    const Coords n = normalize(c);
    std::size_t code = 0;
    for (int v : n) code = code * static_cast<std::size_t>(f_.order()) + static_cast<std::size_t>(v);
    return static_cast<Vertex>(index_[code]);
  }

  /// Sorted indices of the points on the line spanned by x and y.
  std::vector<Vertex> span(const Coords& x, const Coords& y) const {
    std::set<Vertex> pts;
    const int q = f_.order();
    Coords c(x.size());
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        if (a == 0 && b == 0) continue;
        for (std::size_t i = 0; i < x.size(); ++i) c[i] = f_.add(f_.mul(a, x[i]), f_.mul(b, y[i]));
        pts.insert(index_of(c));
      }
    return {pts.begin(), pts.end()};
  }

 private:
  const FiniteField& f_;
  std::vector<int> index_;
  std::vector<Coords> points_;
};

void require_order(int q, std::initializer_list<int> allowed, const char* what) {
  if (std::find(allowed.begin(), allowed.end(), q) == allowed.end())
    throw GeometryError(std::string(what) + ": unsupported order q=" + std::to_string(q));
}

// Collects the lines spanned by all pairs of points accepted by `keep`,
// deduplicated and sorted.
template <class Keep>
std::vector<std::vector<Vertex>> lines_from_pairs(const ProjectiveSpace& ps,
                                                  const std::vector<Vertex>& candidates, Keep keep) {
  std::set<std::vector<Vertex>> found;
  const auto& pts = ps.points();
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const Coords& x = pts[candidates[i]];
      const Coords& y = pts[candidates[j]];
      if (keep(x, y)) found.insert(ps.span(x, y));
    }
  return {found.begin(), found.end()};
}

Geometry finish(std::string name, const std::vector<Coords>& coords,
                const std::vector<Vertex>& point_ids, std::vector<std::vector<Vertex>> lines,
                int s, int t) {
  // Re-index from projective-space indices to the geometry's own point list.
  std::map<Vertex, Vertex> remap;
  Geometry g;
  g.name = std::move(name);
  for (Vertex id : point_ids) {
    remap[id] = static_cast<Vertex>(g.point_labels.size());
    g.point_labels.push_back(coords_label(coords[id]));
  }
  for (auto& line : lines) {
    for (Vertex& p : line) p = remap.at(p);
    std::sort(line.begin(), line.end());
  }
  std::sort(lines.begin(), lines.end());
  g.lines = std::move(lines);
  for (const auto& line : g.lines) g.line_labels.push_back(points_label(line));
  g.s = s;
  g.t = t;
  g.validate();
  return g;
}

}  // namespace

Geometry projective_plane(int q) {
  require_order(q, {2, 3, 4}, "projective_plane");
  const FiniteField f(q);
  const ProjectiveSpace ps(f, 3);
  const auto& pts = ps.points();
  Geometry g;
  g.name = "PG(2," + std::to_string(q) + ")";
  for (const auto& p : pts) g.point_labels.push_back(coords_label(p));
  // Lines are the same normalized triples, read as dual coordinates.
  for (const auto& l : pts) {
    std::vector<Vertex> line;
    for (Vertex p = 0; p < pts.size(); ++p) {
      int dot = 0;
      for (int i = 0; i < 3; ++i) dot = f.add(dot, f.mul(l[static_cast<std::size_t>(i)], pts[p][static_cast<std::size_t>(i)]));
      if (dot == 0) line.push_back(p);
    }
    g.lines.push_back(std::move(line));
    g.line_labels.push_back("[" + coords_label(l).substr(1, coords_label(l).size() - 2) + "]");
  }
  g.s = g.t = q;
  g.validate();
  return g;
}

Geometry symplectic_gq(int q) {
  require_order(q, {2, 3, 4}, "symplectic_gq");
  const FiniteField f(q);
  const ProjectiveSpace ps(f, 4);
  auto form = [&](const Coords& x, const Coords& y) {
    int v = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
    v = f.add(v, f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2])));
    return v;
  };
  std::vector<Vertex> all(ps.points().size());
  for (Vertex i = 0; i < all.size(); ++i) all[i] = i;
  auto lines = lines_from_pairs(ps, all, [&](const Coords& x, const Coords& y) { return form(x, y) == 0; });
  return finish("W(" + std::to_string(q) + ")", ps.points(), all, std::move(lines), q, q);
}

Geometry split_cayley_hexagon(int q) {
  require_order(q, {2, 3}, "split_cayley_hexagon");
  const FiniteField f(q);
  const ProjectiveSpace ps(f, 7);
  auto quad = [&](const Coords& x) {
    int v = f.add(f.add(f.mul(x[0], x[4]), f.mul(x[1], x[5])), f.mul(x[2], x[6]));
    return f.sub(v, f.mul(x[3], x[3]));
  };
  std::vector<Vertex> on_quadric;
  for (Vertex i = 0; i < ps.points().size(); ++i)
    if (quad(ps.points()[i]) == 0) on_quadric.push_back(i);

  auto keep = [&](const Coords& x, const Coords& y) {
    Coords sum(7);
    for (std::size_t i = 0; i < 7; ++i) sum[i] = f.add(x[i], y[i]);
    // Polar form Q(x+y) - Q(x) - Q(y) must vanish for the line to lie on Q.
    if (f.sub(f.sub(quad(sum), quad(x)), quad(y)) != 0) return false;
    auto p = [&](int i, int j) {
      return f.sub(f.mul(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)]),
                   f.mul(x[static_cast<std::size_t>(j)], y[static_cast<std::size_t>(i)]));
    };
    // Grassmann-coordinate conditions selecting the hexagon lines.
    return p(1, 2) == p(3, 4) && p(5, 4) == p(3, 2) && p(2, 0) == p(3, 5) && p(6, 5) == p(3, 0) &&
           p(0, 1) == p(3, 6) && p(4, 6) == p(3, 1);
  };
  auto lines = lines_from_pairs(ps, on_quadric, keep);
  const std::size_t expected = static_cast<std::size_t>((q * q * q * q * q * q - 1) / (q - 1));
  if (on_quadric.size() != expected || lines.size() != expected)
    throw GeometryError("split Cayley model produced " + std::to_string(on_quadric.size()) +
                        " points and " + std::to_string(lines.size()) + " lines, expected " +
                        std::to_string(expected));
  return finish("H(" + std::to_string(q) + ")", ps.points(), on_quadric, std::move(lines), q, q);
}

Geometry duad_syntheme_gq() {
  Geometry g;
  g.name = "GQ(2,2) duads/synthemes";
  std::vector<std::pair<int, int>> duads;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) {
      duads.emplace_back(a, b);
      g.point_labels.push_back(std::to_string(a) + std::to_string(b));
    }
  auto duad_index = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return static_cast<Vertex>(std::find(duads.begin(), duads.end(), std::make_pair(a, b)) - duads.begin());
  };
  // Perfect matchings of K_6: pair 1 with a, then the smallest remaining with b.
  for (int a = 2; a <= 6; ++a) {
    std::vector<int> rest;
    for (int x = 2; x <= 6; ++x)
      if (x != a) rest.push_back(x);
    for (std::size_t j = 1; j < rest.size(); ++j) {
      std::vector<int> last;
      for (std::size_t x = 1; x < rest.size(); ++x)
        if (x != j) last.push_back(rest[x]);
      std::vector<Vertex> line{duad_index(1, a), duad_index(rest[0], rest[j]), duad_index(last[0], last[1])};
      std::sort(line.begin(), line.end());
      g.lines.push_back(line);
    }
  }
  std::sort(g.lines.begin(), g.lines.end());
  for (const auto& line : g.lines) {
    std::string s;
    for (std::size_t i = 0; i < line.size(); ++i) s += (i ? " " : "") + g.point_labels[line[i]];
    g.line_labels.push_back(s);
  }
  g.s = g.t = 2;
  g.validate();
  return g;
}

Geometry affine_plane_minus_parallel_class(int q) {
  require_order(q, {2, 3, 4}, "affine_plane_minus_parallel_class");
  const FiniteField f(q);
  Geometry g;
  g.name = "A(2," + std::to_string(q) + ") minus a parallel class";
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) g.point_labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
  // Lines y = m x + b; the vertical class is the one removed.
  for (int m = 0; m < q; ++m)
    for (int b = 0; b < q; ++b) {
      std::vector<Vertex> line;
      for (int x = 0; x < q; ++x) line.push_back(static_cast<Vertex>(x * q + f.add(f.mul(m, x), b)));
      std::sort(line.begin(), line.end());
      g.lines.push_back(line);
      g.line_labels.push_back("y=" + std::to_string(m) + "x+" + std::to_string(b));
    }
  g.s = g.t = q - 1;
  g.validate();
  return g;
}

Geometry double_geometry(const Geometry& plane) {
  plane.validate();
  const std::size_t np = plane.num_points();
  const auto q = static_cast<std::size_t>(plane.s);
  if (plane.s != plane.t || plane.num_lines() != np || np != q * q + q + 1)
    throw GeometryError(plane.name + " is not a projective plane");
  // Linear space: every pair of points on exactly one line.
  std::vector<std::uint8_t> covered(np * np, 0);
  for (const auto& line : plane.lines)
    for (Vertex a : line)
      for (Vertex b : line) covered[a * np + b] = 1;
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < np; ++b)
      if (!covered[a * np + b]) throw GeometryError(plane.name + " is not a linear space");

  Geometry d;
  d.name = "double of " + plane.name;
  for (const auto& l : plane.point_labels) d.point_labels.push_back("p" + l);
  for (const auto& l : plane.line_labels) d.point_labels.push_back("L" + l);
  const auto through = plane.lines_through();
  for (Vertex p = 0; p < np; ++p)
    for (Vertex l : through[p]) {
      d.lines.push_back({p, static_cast<Vertex>(np + l)});
      d.line_labels.push_back("flag(" + plane.point_labels[p] + "," + plane.line_labels[l] + ")");
    }
  d.s = 1;
  d.t = plane.s;
  d.validate();
  return d;
}

Geometry dual(const Geometry& g) {
  Geometry d;
  d.name = "dual of " + g.name;
  d.point_labels = g.line_labels;
  d.line_labels = g.point_labels;
  d.lines = g.lines_through();
  d.s = g.t;
  d.t = g.s;
  return d;
}

Graph incidence_graph(const Geometry& g) {
  const auto np = static_cast<Vertex>(g.num_points());
  std::vector<Edge> edges;
  for (Vertex l = 0; l < g.lines.size(); ++l)
    for (Vertex p : g.lines[l]) edges.emplace_back(p, np + l);
  std::vector<std::string> labels;
  for (const auto& s : g.point_labels) labels.push_back("p:" + s);
  for (const auto& s : g.line_labels) labels.push_back("L:" + s);
  return Graph(np + g.num_lines(), edges, std::move(labels));
}

Graph point_graph(const Geometry& g) {
  std::vector<Edge> edges;
  for (const auto& line : g.lines)
    for (std::size_t i = 0; i < line.size(); ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j) edges.emplace_back(line[i], line[j]);
  return Graph(g.num_points(), edges, g.point_labels);
}

}  // namespace drg
