// SPDX-License-Identifier: Apache-2.0
#include "hnbound/graded_systems.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hnbound/errors.hpp"
#include "hnbound/kernels.hpp"

namespace hnb {

namespace {

struct Hull {
  int dim = 0;
  std::vector<RationalVector> vertices;
  std::vector<Facet> facets;
  std::vector<std::vector<int>> facet_vertices;  // indices into vertices
};

int affine_rank(const std::vector<RationalVector>& pts, const std::vector<int>& idx) {
  if (idx.size() <= 1) return 0;
  RationalMatrix m;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    RationalVector row(pts[idx[0]].size());
    for (std::size_t k = 0; k < row.size(); ++k) row[k] = pts[idx[i]][k] - pts[idx[0]][k];
    m.push_back(std::move(row));
  }
  return matrix_rank(std::move(m));
}

Rational dot(const std::vector<long long>& n, const RationalVector& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < n.size(); ++i) s += Rational(Integer(static_cast<long>(n[i]))) * x[i];
  return s;
}

// Scales a rational normal to a primitive integer vector.
std::vector<long long> primitive(const RationalVector& v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, Integer(q.get_den()));
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& q : v) {
    Integer z = Integer(q.get_num()) * (l / Integer(q.get_den()));
    g = gcd(g, z);
    ints.push_back(z);
  }
  std::vector<long long> out;
  for (auto& z : ints) {
    Integer w = z / g;
    if (!w.fits_slong_p()) throw InvalidArgument("polytope facet normal too large");
    out.push_back(w.get_si());
  }
  return out;
}

// All k-subsets of {0..n-1} in lexicographic order.
void for_each_subset(int n, int k, const auto& fn) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Facets of conv(pts) for a full-dimensional point set: every hyperplane
// through d affinely independent points that leaves all points on one side.
std::vector<Facet> find_facets(const std::vector<RationalVector>& pts, int d) {
  std::vector<Facet> facets;
  std::set<std::pair<std::vector<long long>, std::string>> seen;
  const int n = static_cast<int>(pts.size());
  for_each_subset(n, d, [&](const std::vector<int>& idx) {
    RationalMatrix m;
    for (int i = 1; i < d; ++i) {
      RationalVector row(d);
      for (int k = 0; k < d; ++k) row[k] = pts[idx[i]][k] - pts[idx[0]][k];
      m.push_back(std::move(row));
    }
    if (matrix_rank(m) != d - 1) return;
    auto nv = null_vector(m, d);
    if (!nv) return;
    auto normal = primitive(*nv);
    Rational offset = dot(normal, pts[idx[0]]);
    bool all_le = true, all_ge = true;
    for (const auto& p : pts) {
      int c = cmp(dot(normal, p), offset);
      if (c > 0) all_le = false;
      if (c < 0) all_ge = false;
    }
    if (!all_le && !all_ge) return;
    if (!all_le) {
      for (auto& x : normal) x = -x;
      offset = -offset;
    }
    if (seen.insert({normal, offset.get_str()}).second) facets.push_back({normal, offset});
  });
  return facets;
}

Hull compute_hull(std::vector<RationalVector> pts) {
  if (pts.empty()) throw InvalidArgument("polytope needs at least one point");
  const int d = static_cast<int>(pts[0].size());
  if (d < 1) throw InvalidArgument("polytope dimension must be >= 1");
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != d) throw InvalidArgument("polytope points have mixed dimension");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<int> all(pts.size());
  std::iota(all.begin(), all.end(), 0);
  if (affine_rank(pts, all) != d) throw InvalidArgument("polytope is not full-dimensional");

  Hull h;
  h.dim = d;
  h.facets = find_facets(pts, d);

  // A point is a vertex iff the face cut out by the facets through it is the point itself.
  std::vector<std::vector<bool>> on(h.facets.size(), std::vector<bool>(pts.size()));
  for (std::size_t f = 0; f < h.facets.size(); ++f)
    for (std::size_t i = 0; i < pts.size(); ++i)
      on[f][i] = dot(h.facets[f].normal, pts[i]) == h.facets[f].offset;
  std::vector<int> vertex_of(pts.size(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<bool> in_face(pts.size(), true);
    bool any = false;
    for (std::size_t f = 0; f < h.facets.size(); ++f) {
      if (!on[f][i]) continue;
      any = true;
      for (std::size_t k = 0; k < pts.size(); ++k) in_face[k] = in_face[k] && on[f][k];
    }
    if (!any) continue;
    if (std::count(in_face.begin(), in_face.end(), true) == 1) {
      vertex_of[i] = static_cast<int>(h.vertices.size());
      h.vertices.push_back(pts[i]);
    }
  }
  for (std::size_t f = 0; f < h.facets.size(); ++f) {
    std::vector<int> vs;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (on[f][i] && vertex_of[i] >= 0) vs.push_back(vertex_of[i]);
    h.facet_vertices.push_back(std::move(vs));
  }
  return h;
}

// Pulling triangulation: cone the first vertex of each face over the
// triangulations of the sub-faces that miss it.
void triangulate(const Hull& h, const std::vector<int>& face, int k,
                 std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.push_back({face[0]});
    return;
  }
  const int apex = face[0];
  std::set<std::vector<int>> subfaces;
  for (const auto& fv : h.facet_vertices) {
    std::vector<int> inter;
    std::set_intersection(face.begin(), face.end(), fv.begin(), fv.end(),
                          std::back_inserter(inter));
    if (static_cast<int>(inter.size()) < k) continue;
    if (affine_rank(h.vertices, inter) != k - 1) continue;
    subfaces.insert(std::move(inter));
  }
  for (const auto& sub : subfaces) {
    if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
    std::vector<std::vector<int>> simplices;
    triangulate(h, sub, k - 1, simplices);
    for (auto& s : simplices) {
      s.push_back(apex);
      out.push_back(std::move(s));
    }
  }
}

Rational hull_normalized_volume(const Hull& h) {
  std::vector<int> all(h.vertices.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<int>> simplices;
  triangulate(h, all, h.dim, simplices);
  Rational total = 0;
  for (const auto& s : simplices) {
    RationalMatrix m;
    for (int i = 1; i <= h.dim; ++i) {
      RationalVector row(h.dim);
      for (int c = 0; c < h.dim; ++c) row[c] = h.vertices[s[i]][c] - h.vertices[s[0]][c];
      m.push_back(std::move(row));
    }
    Rational det = determinant(std::move(m));
    total += det < 0 ? Rational(-det) : det;
  }
  return total;
}

Integer floor_q(const Rational& q) {
  Integer z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z;
}

Integer ceil_q(const Rational& q) {
  Integer z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z;
}

long long to_ll(const Integer& z) {
  if (!z.fits_slong_p()) throw InvalidArgument("dilated polytope too large to enumerate");
  return z.get_si();
}

kernels::IntHalfspaces dilate(const ToricSeries& t, long n) {
  if (n < 0) throw InvalidArgument("toric_rank requires n >= 0");
  kernels::IntHalfspaces p;
  p.dim = t.dimension();
  for (const auto& f : t.facets()) {
    p.normals.push_back(f.normal);
    p.offsets.push_back(to_ll(floor_q(Rational(f.offset * n))));
  }
  for (int c = 0; c < p.dim; ++c) {
    Rational lo = t.vertices()[0][c], hi = lo;
    for (const auto& v : t.vertices()) {
      lo = std::min(lo, v[c]);
      hi = std::max(hi, v[c]);
    }
    p.box_lo.push_back(to_ll(ceil_q(Rational(lo * n))));
    p.box_hi.push_back(to_ll(floor_q(Rational(hi * n))));
  }
  return p;
}

}  // namespace

ToricSeries::ToricSeries(std::vector<RationalVector> points) {
  Hull h = compute_hull(std::move(points));
  dim_ = h.dim;
  vertices_ = std::move(h.vertices);
  facets_ = std::move(h.facets);
}

std::uint64_t toric_rank(const ToricSeries& t, long n) {
  return kernels::count_lattice_points(dilate(t, n));
}

std::uint64_t toric_rank_serial(const ToricSeries& t, long n) {
  return kernels::count_lattice_points_serial(dilate(t, n));
}

Rational toric_volume(const ToricSeries& t) { return hull_normalized_volume(compute_hull(t.vertices())); }

Rational normalized_volume(const std::vector<RationalVector>& points) {
  if (points.empty()) return 0;
  std::vector<int> all(points.size());
  std::iota(all.begin(), all.end(), 0);
  if (affine_rank(points, all) < static_cast<int>(points[0].size())) return 0;
  return hull_normalized_volume(compute_hull(points));
}

FiberedSeries::FiberedSeries(long a, long b, long e) : a_(a), b_(b), e_(e) {
  if (a < 0 || b < 1 || e < 0) throw InvalidArgument("fibered series requires a >= 0, b >= 1, e >= 0");
}

SplitBundle pushforward(const FiberedSeries& f, long n) {
  if (n < 1) throw InvalidArgument("pushforward requires n >= 1");
  std::vector<long> twists;
  for (long j = 0; j <= n * f.b(); ++j) twists.push_back(n * f.a() - f.e() * j);
  return SplitBundle(std::move(twists));
}

Rational mu_max_asy(const FiberedSeries& f) { return f.a(); }

long filtered_rank(const FiberedSeries& f, const Rational& t, long n) {
  if (n < 1) throw InvalidArgument("filtered_rank requires n >= 1");
  const long full = n * f.b() + 1;
  Rational room = Rational(n) * (Rational(f.a()) - t);  // n a - n t
  if (room < 0) return 0;
  if (f.e() == 0) return full;
  Integer jmax = floor_q(Rational(room / f.e()));
  if (jmax >= full - 1) return full;
  return jmax.get_si() + 1;
}

Rational filtered_volume(const FiberedSeries& f, const Rational& t) {
  if (t < 0) throw InvalidArgument("filtered_volume requires t >= 0");
  if (t > f.a()) return 0;
  if (f.e() == 0) return f.b();
  Rational v = (Rational(f.a()) - t) / f.e();
  return std::min(v, Rational(f.b()));
}

Rational filtered_volume_integral(const FiberedSeries& f) {
  const Rational a = f.a(), b = f.b();
  if (f.e() == 0) return a * b;
  // filtered_volume is b up to t* = a - e b, then (a - t) / e down to zero at t = a.
  Rational knee = std::max(Rational(0), Rational(a - f.e() * b));
  Rational tail = a - knee;
  return b * knee + tail * tail / (2 * f.e());
}

std::vector<RationalVector> trapezoid_points(const FiberedSeries& f) {
  if (!f.nef()) throw InvalidArgument("trapezoid requires a >= e b");
  const Rational a = f.a(), b = f.b();
  return {{0, 0}, {a, 0}, {a - f.e() * b, b}, {0, b}};
}

ToricSeries associated_trapezoid(const FiberedSeries& f) { return ToricSeries(trapezoid_points(f)); }

}  // namespace hnb
