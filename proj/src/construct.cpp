#include "gridsight/construct.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gridsight {

namespace {

bool threads_allow_parallel() {
  const char* env = std::getenv("GRIDSIGHT_THREADS");
  if (!env) return true;
  return std::atoi(env) != 1;
}

// Width witness of the induced subposet on heights k > (p-1)/2, reported as
// poset indices of the full poset.
IndexList upper_half_antichain(const Poset& P, long long p) {
  const long long mid = (p - 1) / 2;
  Poset sub;
  sub.d = P.d;
  IndexList back;
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (P.elements[i].k_index > mid) {
      sub.elements.push_back(P.elements[i]);
      back.push_back(i);
    }
  }
  if (sub.elements.empty()) return {};
  WidthResult w = width_exact(sub);
  IndexList out;
  for (std::size_t idx : w.antichain.members) out.push_back(back[idx]);
  return out;
}

FamilyPlan plan_family(const ResidueVector& base) {
  const long long p = base.p;
  const long long mid = (p - 1) / 2;

  FamilyBest exact = best_in_family(base);
  IndexList exact_sel = upper_half_antichain(exact.poset, p);

  std::vector<bool> lat_signs;
  IndexList lat_sel;
  Poset lat_poset;
  try {
    LatticeAntichain lat = antichain_from_lattice(base);
    lat_poset = lat.poset;
    lat_signs = lat.signs;
    for (std::size_t idx : lat.antichain.members)
      if (lat.poset.elements[idx].k_index > mid) lat_sel.push_back(idx);
  } catch (const std::exception&) {
    lat_sel.clear();  // lattice path unavailable; exact witness stands
  }

  FamilyPlan plan;
  plan.base = base;
  plan.lattice_won = lat_sel.size() >= exact_sel.size() && !lat_sel.empty();
  const Poset& chosen = plan.lattice_won ? lat_poset : exact.poset;
  const IndexList& sel = plan.lattice_won ? lat_sel : exact_sel;
  plan.signs = plan.lattice_won ? lat_signs : exact.signs;

  Antichain a{sel};
  if (!validate_antichain(chosen, a))
    throw std::logic_error("plan_family: selected set is not an antichain");
  plan.width = width_exact(chosen).width;
  for (std::size_t idx : sel) plan.heights.push_back(chosen.elements[idx].k_index);
  std::sort(plan.heights.begin(), plan.heights.end());
  for (int i = 0; i < base.d - 1; ++i)
    plan.t_signed.push_back(plan.signs[i] ? base.p - base.t[i] : base.t[i]);
  return plan;
}

std::vector<long long> cube_corner(const FamilyPlan& f, long long k) {
  std::vector<long long> c;
  for (long long ti : f.t_signed) c.push_back((ti * k) / f.base.p);
  c.push_back(k);
  return c;
}

}  // namespace

std::vector<ResidueVector> enumerate_families(long long p, int d, long long spacing) {
  if (!is_prime(p)) throw std::invalid_argument("enumerate_families: p must be prime");
  if (spacing < 1) throw std::invalid_argument("enumerate_families: spacing >= 1");
  std::vector<long long> axis;
  for (long long v = 1; v <= p - 1; v += spacing) axis.push_back(v);

  std::vector<ResidueVector> out;
  std::vector<std::size_t> pick(d - 1, 0);
  while (true) {
    std::vector<long long> t;
    for (int i = 0; i < d - 1; ++i) t.push_back(axis[pick[i]]);
    out.emplace_back(p, d, t);
    int i = 0;
    for (; i < d - 1; ++i) {
      if (++pick[i] < axis.size()) break;
      pick[i] = 0;
    }
    if (i == d - 1) break;
  }
  return out;
}

ConstructionResult build_lower_bound_config(long long p, int d) {
  if (!is_prime(p) || p < 5) throw std::invalid_argument("build_lower_bound_config: prime p >= 5");
  ConstructionResult res;
  res.p = p;
  res.d = d;

  std::vector<ResidueVector> bases = enumerate_families(p, d, 6);
  res.families.resize(bases.size());
  const bool par = threads_allow_parallel();
#pragma omp parallel for schedule(dynamic) if (par && bases.size() > 4)
  for (long long i = 0; i < static_cast<long long>(bases.size()); ++i)
    res.families[i] = plan_family(bases[i]);

  std::set<std::vector<long long>> seen;
  for (const FamilyPlan& f : res.families) {
    for (long long k : f.heights) {
      std::vector<long long> c = cube_corner(f, k);
      if (!seen.insert(c).second) {
        ++res.collisions;
        continue;
      }
      res.config.cubes.push_back(c);
    }
  }
  res.predicted_count = res.config.cubes.size();
  res.config.d = d;
  res.config.n = p + 1;  // the grid holds heights up to p-1 plus the cube body
  return res;
}

std::vector<SightlineHint> floor_witness_segments(const ConstructionResult& r) {
  const long long p = r.p;
  const Rat eps(1, 4 * p * p);
  std::vector<SightlineHint> out;
  std::set<std::vector<long long>> seen;
  for (const FamilyPlan& f : r.families) {
    for (long long k : f.heights) {
      std::vector<long long> c = cube_corner(f, k);
      if (!seen.insert(c).second) continue;
      RatPoint a(r.d), b(r.d);
      for (int i = 0; i < r.d - 1; ++i) {
        long long ri = (f.t_signed[i] * k) % p;
        a[i] = Rat(p - ri, p) - eps;  // 1 - {t'_i k / p} - eps
        b[i] = Rat(c[i] + 1) - eps;
      }
      a[r.d - 1] = Rat(0);
      b[r.d - 1] = Rat(k);
      out.push_back({c, {a, b}});
    }
  }
  return out;
}

std::size_t certify_floor(const ConstructionResult& r) {
  auto witnesses = floor_witness_segments(r);
  std::size_t ok = 0;
  for (const auto& w : witnesses)
    if (!segment_blocked(w.second.first, w.second.second, r.config, &w.first)) ++ok;
  return ok;
}

ScalingResult scaling_experiment(const std::vector<long long>& primes, int d,
                                 bool geometric, int rays_per_pair, std::uint64_t seed) {
  if (geometric && d != 3)
    throw std::invalid_argument("scaling_experiment: geometric mode needs d = 3");
  ScalingResult res;
  for (long long p : primes) {
    ConstructionResult c = build_lower_bound_config(p, d);
    ScalingRow row;
    row.p = p;
    row.families = c.families.size();
    row.predicted = c.predicted_count;
    if (geometric)
      row.sampled = static_cast<long long>(
          visible_sampled(c.config, rays_per_pair, seed).size());
    res.rows.push_back(row);
  }
  if (res.rows.size() >= 3) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (const ScalingRow& row : res.rows) {
      if (row.predicted == 0) continue;
      double x = std::log(static_cast<double>(row.p));
      double y = std::log(static_cast<double>(row.predicted));
      sx += x; sy += y; sxx += x * x; sxy += x * y;
      ++n;
    }
    if (n >= 3) {
      res.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
      res.intercept = (sy - res.slope * sx) / n;
      res.has_slope = true;
    }
  }
  return res;
}

std::string scaling_csv(const ScalingResult& r) {
  std::ostringstream os;
  os << "p,families,predicted,sampled,slope\n";
  for (const ScalingRow& row : r.rows) {
    os << row.p << ',' << row.families << ',' << row.predicted << ',';
    if (row.sampled >= 0) os << row.sampled;
    os << ',';
    if (r.has_slope) os << r.slope;
    os << '\n';
  }
  return os.str();
}

std::string scaling_svg(const ScalingResult& r) {
  const int W = 480, H = 360, M = 48;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  std::vector<std::pair<double, double>> pts;
  for (const ScalingRow& row : r.rows) {
    if (row.predicted == 0) continue;
    double x = std::log(static_cast<double>(row.p));
    double y = std::log(static_cast<double>(row.predicted));
    pts.push_back({x, y});
    xmin = std::min(xmin, x); xmax = std::max(xmax, x);
    ymin = std::min(ymin, y); ymax = std::max(ymax, y);
  }
  if (pts.empty()) { xmin = 0; xmax = 1; ymin = 0; ymax = 1; }
  if (xmax - xmin < 1e-12) xmax = xmin + 1;
  if (ymax - ymin < 1e-12) ymax = ymin + 1;
  auto px = [&](double x) { return M + (x - xmin) / (xmax - xmin) * (W - 2 * M); };
  auto py = [&](double y) { return H - M - (y - ymin) / (ymax - ymin) * (H - 2 * M); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << M << "\" y1=\"" << H - M << "\" x2=\"" << W - M << "\" y2=\""
     << H - M << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << M << "\" y1=\"" << M << "\" x2=\"" << M << "\" y2=\"" << H - M
     << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"" << H - 12
     << "\" font-size=\"12\" text-anchor=\"middle\">log p</text>\n";
  os << "<text x=\"14\" y=\"" << H / 2
     << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 14 " << H / 2
     << ")\">log predicted</text>\n";
  if (r.has_slope) {
    os << "<line x1=\"" << px(xmin) << "\" y1=\"" << py(r.intercept + r.slope * xmin)
       << "\" x2=\"" << px(xmax) << "\" y2=\"" << py(r.intercept + r.slope * xmax)
       << "\" stroke=\"steelblue\"/>\n";
    os << "<text x=\"" << W - M << "\" y=\"" << M
       << "\" font-size=\"12\" text-anchor=\"end\">slope " << r.slope << "</text>\n";
  }
  for (const auto& pt : pts)
    os << "<circle cx=\"" << px(pt.first) << "\" cy=\"" << py(pt.second)
       << "\" r=\"3\" fill=\"crimson\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace gridsight
