#include "gridsight/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace gridsight {

namespace {

// Parameter interval of a line P + s*D inside a box [corner, corner+1]^d,
// closed slabs. Returns false when empty; lo/hi may be unbounded for
// degenerate directions (flags).
struct ParamInterval {
  bool empty = false;
  bool has_lo = false, has_hi = false;
  Rat lo, hi;

  void clamp_lo(const Rat& v) {
    if (!has_lo || lo < v) lo = v;
    has_lo = true;
  }
  void clamp_hi(const Rat& v) {
    if (!has_hi || v < hi) hi = v;
    has_hi = true;
  }
  void finish() {
    if (has_lo && has_hi && hi < lo) empty = true;
  }
};

ParamInterval clip_line_closed(const RatPoint& p, const RatPoint& dir,
                               const std::vector<long long>& corner) {
  ParamInterval iv;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rat lo_face(corner[i]), hi_face(corner[i] + 1);
    if (dir[i].num == 0) {
      if (p[i] < lo_face || hi_face < p[i]) {
        iv.empty = true;
        return iv;
      }
      continue;
    }
    Rat s0 = (lo_face - p[i]) / dir[i];
    Rat s1 = (hi_face - p[i]) / dir[i];
    if (s1 < s0) std::swap(s0, s1);
    iv.clamp_lo(s0);
    iv.clamp_hi(s1);
  }
  iv.finish();
  return iv;
}

std::uint64_t mix_corner(std::uint64_t seed, const std::vector<long long>& corner) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (long long c : corner) {
    h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

bool segment_hits_open_box(const RatPoint& a, const RatPoint& b,
                           const std::vector<long long>& corner) {
  if (a.size() != b.size() || a.size() != corner.size())
    throw std::invalid_argument("segment_hits_open_box: dimension mismatch");
  // Open-interval intersection: strict inequalities throughout.
  bool degenerate = true;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) degenerate = false;
  if (degenerate) return false;

  Rat lo(0), hi(1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rat lo_face(corner[i]), hi_face(corner[i] + 1);
    Rat dir = b[i] - a[i];
    if (dir.num == 0) {
      if (!(lo_face < a[i]) || !(a[i] < hi_face)) return false;
      continue;
    }
    Rat s0 = (lo_face - a[i]) / dir;
    Rat s1 = (hi_face - a[i]) / dir;
    if (s1 < s0) std::swap(s0, s1);
    if (lo < s0) lo = s0;
    if (s1 < hi) hi = s1;
  }
  return lo < hi;
}

bool segment_blocked(const RatPoint& a, const RatPoint& b, const Configuration& c,
                     const std::vector<long long>* skip_cube) {
  for (const auto& cube : c.cubes) {
    if (skip_cube && cube == *skip_cube) continue;
    if (segment_hits_open_box(a, b, cube)) return true;
  }
  return false;
}

RatPoint project_corner(long long k, const ResidueVector& t) {
  if (k < 0 || k >= t.p) throw std::invalid_argument("project_corner: need 0 <= k < p");
  RatPoint out;
  for (long long ti : t.t) {
    long long r = (ti * k) % t.p;
    out.push_back(Rat(t.p - r, t.p));
  }
  return out;
}

RestrictedVisibility restricted_visible_set(const ResidueVector& t) {
  const long long p = t.p;
  Poset P;
  P.d = t.d;
  for (long long k = 0; k < p; ++k) {
    PosetElement e;
    for (long long ti : t.t) e.coords.push_back(Rat((ti * k) % p));
    e.coords.push_back(Rat(k));
    e.k_index = k;
    P.elements.push_back(std::move(e));
  }

  RestrictedVisibility out;
  out.blocks.assign(p, std::vector<bool>(p, false));
  for (long long k2 = 0; k2 < p; ++k2)
    for (long long k1 = 0; k1 < p; ++k1)
      out.blocks[k2][k1] = P.less(static_cast<std::size_t>(k1), static_cast<std::size_t>(k2));

  WidthResult w = width_exact(P);
  out.count = w.width;
  for (std::size_t idx : w.antichain.members)
    out.heights.push_back(P.elements[idx].k_index);
  std::sort(out.heights.begin(), out.heights.end());
  return out;
}

namespace {

RatPoint int_point(const std::vector<long long>& v) {
  RatPoint out;
  for (long long c : v) out.push_back(Rat(c));
  return out;
}

// Can the observer square reach the target square along some free segment?
// Candidate segments run through pairs of event corners (supporting-line
// argument); touching closed squares count as visible.
bool square_visible(const Configuration& c, std::size_t target,
                    const std::vector<RatPoint>& events) {
  const std::vector<long long>& tc = c.cubes[target];
  std::vector<long long> obs(c.d, 0);

  for (std::size_t i = 0; i < events.size(); ++i) {
    for (std::size_t j = 0; j < events.size(); ++j) {
      if (i == j) continue;
      RatPoint dir(c.d);
      bool zero = true;
      for (int k = 0; k < c.d; ++k) {
        dir[k] = events[j][k] - events[i][k];
        if (dir[k].num != 0) zero = false;
      }
      if (zero) continue;
      ParamInterval io = clip_line_closed(events[i], dir, obs);
      ParamInterval it = clip_line_closed(events[i], dir, tc);
      if (io.empty || it.empty) continue;
      if (!io.has_lo || !io.has_hi || !it.has_lo || !it.has_hi) continue;

      // nearest facing endpoints of the two intervals
      Rat s, u;
      if (io.hi < it.lo) {
        s = io.hi;
        u = it.lo;
      } else if (it.hi < io.lo) {
        s = io.lo;
        u = it.hi;
      } else {
        return true;  // intervals meet: the squares touch along this line
      }
      RatPoint a(c.d), b(c.d);
      for (int k = 0; k < c.d; ++k) {
        a[k] = events[i][k] + s * dir[k];
        b[k] = events[i][k] + u * dir[k];
      }
      if (!segment_blocked(a, b, c)) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::size_t> visible_2d_exact(const Configuration& c) {
  if (c.d != 2) throw std::invalid_argument("visible_2d_exact: d must be 2");
  if (c.n > 64) throw std::invalid_argument("visible_2d_exact: n too large");

  std::vector<RatPoint> events;
  auto add_corners = [&](const std::vector<long long>& corner) {
    for (int dx = 0; dx <= 1; ++dx)
      for (int dy = 0; dy <= 1; ++dy)
        events.push_back(int_point({corner[0] + dx, corner[1] + dy}));
  };
  add_corners({0, 0});
  for (const auto& cube : c.cubes) add_corners(cube);
  std::sort(events.begin(), events.end(),
            [](const RatPoint& a, const RatPoint& b) {
              for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] < b[i]) return true;
                if (b[i] < a[i]) return false;
              }
              return false;
            });
  events.erase(std::unique(events.begin(), events.end(),
                           [](const RatPoint& a, const RatPoint& b) {
                             for (std::size_t i = 0; i < a.size(); ++i)
                               if (!(a[i] == b[i])) return false;
                             return true;
                           }),
               events.end());

  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.cubes.size(); ++i)
    if (square_visible(c, i, events)) out.push_back(i);
  return out;
}

std::vector<std::size_t> visible_2d_dense_rays(const Configuration& c, int grid) {
  if (c.d != 2) throw std::invalid_argument("visible_2d_dense_rays: d must be 2");
  if (grid < 1) throw std::invalid_argument("visible_2d_dense_rays: grid >= 1");

  auto boundary = [&](const std::vector<long long>& corner) {
    std::vector<RatPoint> pts;
    for (int e = 0; e <= grid; ++e) {
      Rat s(e, grid);
      pts.push_back({Rat(corner[0]) + s, Rat(corner[1])});
      pts.push_back({Rat(corner[0]) + s, Rat(corner[1] + 1)});
      pts.push_back({Rat(corner[0]), Rat(corner[1]) + s});
      pts.push_back({Rat(corner[0] + 1), Rat(corner[1]) + s});
    }
    return pts;
  };
  std::vector<RatPoint> obs_pts = boundary({0, 0});

  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.cubes.size(); ++i) {
    std::vector<RatPoint> tgt_pts = boundary(c.cubes[i]);
    bool vis = false;
    for (const RatPoint& a : obs_pts) {
      for (const RatPoint& b : tgt_pts) {
        bool same = a[0] == b[0] && a[1] == b[1];
        if (same || !segment_blocked(a, b, c, &c.cubes[i])) {
          vis = true;
          break;
        }
      }
      if (vis) break;
    }
    if (vis) out.push_back(i);
  }
  return out;
}

namespace {

// Corners, face centers, then stratified random face points.
std::vector<RatPoint> surface_points(const std::vector<long long>& corner, int d,
                                     int extra, std::mt19937_64& rng) {
  std::vector<RatPoint> pts;
  for (int mask = 0; mask < (1 << d); ++mask) {
    RatPoint p(d);
    for (int i = 0; i < d; ++i) p[i] = Rat(corner[i] + ((mask >> i) & 1));
    pts.push_back(p);
  }
  for (int axis = 0; axis < d; ++axis) {
    for (int side = 0; side <= 1; ++side) {
      RatPoint p(d);
      for (int i = 0; i < d; ++i)
        p[i] = i == axis ? Rat(corner[i] + side) : Rat(2 * corner[i] + 1, 2);
      pts.push_back(p);
    }
  }
  const long long q = 997;
  std::uniform_int_distribution<long long> coord(1, q - 1);
  std::uniform_int_distribution<int> pick_axis(0, d - 1), pick_side(0, 1);
  for (int s = 0; s < extra; ++s) {
    int axis = pick_axis(rng), side = pick_side(rng);
    RatPoint p(d);
    for (int i = 0; i < d; ++i)
      p[i] = i == axis ? Rat(corner[i] + side) : Rat(corner[i]) + Rat(coord(rng), q);
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

std::vector<std::size_t> visible_sampled(const Configuration& c, int rays_per_pair,
                                         std::uint64_t seed,
                                         const std::vector<SightlineHint>* hints) {
  if (c.d != 2 && c.d != 3) throw std::invalid_argument("visible_sampled: d in {2,3}");
  if (rays_per_pair < 1) throw std::invalid_argument("visible_sampled: budget >= 1");

  std::vector<long long> obs(c.d, 0);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.cubes.size(); ++i) {
    bool vis_hint = false;
    if (hints) {
      for (const SightlineHint& h : *hints) {
        if (h.first != c.cubes[i]) continue;
        if (!segment_blocked(h.second.first, h.second.second, c, &c.cubes[i])) {
          vis_hint = true;
          break;
        }
      }
    }
    if (vis_hint) {
      out.push_back(i);
      continue;
    }
    std::mt19937_64 rng(mix_corner(seed, c.cubes[i]));
    int extra = std::max(4, rays_per_pair / 4);
    std::vector<RatPoint> obs_pts = surface_points(obs, c.d, extra, rng);
    std::vector<RatPoint> tgt_pts = surface_points(c.cubes[i], c.d, extra, rng);

    auto try_segment = [&](const RatPoint& a, const RatPoint& b) {
      bool same = true;
      for (int k = 0; k < c.d; ++k)
        if (!(a[k] == b[k])) same = false;
      return same || !segment_blocked(a, b, c, &c.cubes[i]);
    };

    bool vis = false;
    const std::size_t ncorner = std::size_t(1) << c.d;
    for (std::size_t a = 0; a < ncorner && !vis; ++a)
      for (std::size_t b = 0; b < ncorner && !vis; ++b)
        if (try_segment(obs_pts[a], tgt_pts[b])) vis = true;
    std::uniform_int_distribution<std::size_t> po(0, obs_pts.size() - 1),
        pt(0, tgt_pts.size() - 1);
    for (int r = 0; r < rays_per_pair && !vis; ++r)
      if (try_segment(obs_pts[po(rng)], tgt_pts[pt(rng)])) vis = true;
    if (vis) out.push_back(i);
  }
  return out;
}

bool shallow_blocks(const RatPoint& direction, int normal_axis, double theta_deg) {
  if (normal_axis < 0 || normal_axis >= static_cast<int>(direction.size()))
    throw std::invalid_argument("shallow_blocks: bad axis");
  Rat num(0), den(0);
  for (std::size_t i = 0; i < direction.size(); ++i) den = den + direction[i] * direction[i];
  if (den.num == 0) throw std::invalid_argument("shallow_blocks: zero direction");
  num = direction[normal_axis] * direction[normal_axis];
  // angle <= 90 - theta  <=>  cos^2(angle) >= sin^2(theta)
  if (theta_deg == 45.0) {
    return !(num * Rat(2) < den);  // cos^2 >= 1/2, exact
  }
  double sin_t = std::sin(theta_deg * 3.14159265358979323846 / 180.0);
  return num.to_double() >= sin_t * sin_t * den.to_double();
}

bool is_primitive_obstruction(const std::vector<long long>& facet_corner,
                              const ResidueVector& t) {
  if (static_cast<int>(facet_corner.size()) != t.d)
    throw std::invalid_argument("is_primitive_obstruction: bad facet arity");
  const long long p = t.p;
  const long long a = facet_corner[t.d - 1];
  if (a < 1 || a >= p)
    throw std::invalid_argument("is_primitive_obstruction: height out of range");

  // Both line tests use the open facet interior: the counting argument is
  // strict, and a line riding the facet boundary (t_i = 1 makes the shifted
  // line graze the far edge at every height) does not cross it.
  // origin -> (t, p) at height a: x_i = t_i a / p
  for (int i = 0; i < t.d - 1; ++i) {
    Rat x(t.t[i] * a, p);
    if (!(Rat(facet_corner[i]) < x) || !(x < Rat(facet_corner[i] + 1)))
      throw std::invalid_argument("is_primitive_obstruction: facet misses the origin edge");
  }
  // (1,...,1,0) -> (t, p) at height a: x_i = 1 + (t_i - 1) a / p
  for (int i = 0; i < t.d - 1; ++i) {
    Rat x = Rat(1) + Rat((t.t[i] - 1) * a, p);
    if (!(Rat(facet_corner[i]) < x) || !(x < Rat(facet_corner[i] + 1))) return false;
  }
  return true;
}

std::vector<long long> primitive_heights_geometric(const ResidueVector& t) {
  std::vector<long long> out;
  for (long long a = 1; a < t.p; ++a) {
    std::vector<long long> corner(t.d);
    for (int i = 0; i < t.d - 1; ++i)
      corner[i] = (t.t[i] * a + t.p - 1) / t.p - 1;  // ceil(t_i a / p) - 1
    corner[t.d - 1] = a;
    if (is_primitive_obstruction(corner, t)) out.push_back(a);
  }
  return out;
}

}  // namespace gridsight
