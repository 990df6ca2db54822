#include "skewbrane/search.hpp"

#include "skewbrane/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <ostream>
#include <thread>
#include <tuple>

namespace skewbrane {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Grid values within this of a neighbour still count as local minima, so that
// exact-zero families seed every member.
constexpr double kPlateau = 1e-12;
constexpr int kMaxHalvings = 30;

using Points = std::vector<Eigen::VectorXd>;
using ResidualFn = std::function<Eigen::VectorXd(const Points&)>;

double sign_factor(SignClass s) { return s == SignClass::kPositive ? 1.0 : -1.0; }

template <class Fn>
void parallel_for(int threads, long count, Fn&& fn) {
  threads = std::max(1, threads);
  if (threads == 1 || count < 2) {
    for (long i = 0; i < count; ++i) fn(0, i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (long i = t; i < count; i += threads) fn(t, i);
    });
  }
  for (auto& th : pool) th.join();
}

struct GnResult {
  Points points;
  double value = kInf;
  int iterations = 0;
};

// Damped Gauss–Newton on |r|² over the movable points, each moved in the local
// chart of the domain. Minimum-norm steps, step halved until |r| decreases.
GnResult gauss_newton(const ParamDomain& dom, Points pts, const std::vector<int>& movable, const ResidualFn& r,
                      const SearchConfig& cfg) {
  const int k = dom.dim();
  const int n = k * static_cast<int>(movable.size());
  auto moved = [&](const Points& base, const Eigen::VectorXd& t) {
    Points out = base;
    for (size_t m = 0; m < movable.size(); ++m) out[movable[m]] = dom.retract(base[movable[m]], t.segment(m * k, k));
    return out;
  };
  auto safe_eval = [&](const Points& at, Eigen::VectorXd& res) {
    try {
      res = r(at);
      return res.allFinite();
    } catch (const DegeneratePointError&) {
      return false;
    }
  };

  GnResult out;
  Eigen::VectorXd res;
  if (!safe_eval(pts, res)) {
    out.points = pts;
    return out;
  }
  double value = res.norm();
  int it = 0;
  for (; it < cfg.max_iterations && value >= cfg.tau_accept; ++it) {
    Eigen::MatrixXd jac(res.size(), n);
    bool ok = true;
    for (int c = 0; c < n && ok; ++c) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
      e(c) = cfg.fd_step;
      Eigen::VectorXd rp, rm;
      ok = safe_eval(moved(pts, e), rp) && safe_eval(moved(pts, -e), rm);
      if (ok) jac.col(c) = (rp - rm) / (2.0 * cfg.fd_step);
    }
    if (!ok) break;
    const Eigen::VectorXd step = -jac.completeOrthogonalDecomposition().solve(res);
    bool accepted = false;
    double lam = 1.0;
    for (int h = 0; h < kMaxHalvings && !accepted; ++h, lam *= 0.5) {
      const Points cand = moved(pts, lam * step);
      Eigen::VectorXd rc;
      if (safe_eval(cand, rc) && rc.norm() < value) {
        pts = cand;
        res = rc;
        value = rc.norm();
        accepted = true;
      }
    }
    if (!accepted) break;
  }
  out.points = std::move(pts);
  out.value = value;
  out.iterations = it;
  return out;
}

Eigen::VectorXd plucker_of(const Immersion& s, const Eigen::VectorXd& p) { return gauss_plane(s, p).plucker(); }

struct Seed {
  int i = 0;
  int j = 0;
  SignClass sign = SignClass::kNegative;
  double value = 0.0;
};

struct Refined {
  Eigen::VectorXd p, q;
  SignClass sign = SignClass::kNegative;
  double defect = kInf;
  int iterations = 0;
  long order = 0;
};

// Greedy clustering by increasing defect; each representative carries its
// cluster size.
std::vector<ParallelPair> cluster(const ParamDomain& dom, std::vector<Refined> results, double radius) {
  std::stable_sort(results.begin(), results.end(), [](const Refined& a, const Refined& b) {
    if (a.sign != b.sign) return a.sign < b.sign;
    if (a.defect != b.defect) return a.defect < b.defect;
    return a.order < b.order;
  });
  std::vector<ParallelPair> reps;
  for (const auto& r : results) {
    bool merged = false;
    for (auto& rep : reps) {
      if (rep.sign == r.sign && pair_distance(dom, rep.p, rep.q, r.p, r.q) < radius) {
        ++rep.cluster_size;
        merged = true;
        break;
      }
    }
    if (!merged) {
      ParallelPair pp;
      pp.p = r.p;
      pp.q = r.q;
      canonicalize(pp.p, pp.q);
      pp.sign = r.sign;
      pp.defect = r.defect;
      pp.iterations = r.iterations;
      reps.push_back(std::move(pp));
    }
  }
  return reps;
}

void finish_summary(SignSummary& s, double grid_min, const std::vector<ParallelPair>& clusters,
                    const std::vector<Refined>& results, SignClass sign, const SearchConfig& cfg) {
  s.min_defect = grid_min;
  for (const auto& r : results) {
    if (r.sign == sign) s.min_defect = std::min(s.min_defect, r.defect);
  }
  for (const auto& c : clusters) {
    if (c.sign != sign) continue;
    if (c.defect < cfg.tau_accept) {
      ++s.pairs;
    } else if (c.defect <= cfg.tau_reject) {
      ++s.unresolved;
    }
  }
  if (s.pairs > 0) {
    s.status = CertificateStatus::kPairsFound;
  } else if (s.min_defect > cfg.tau_reject) {
    s.status = CertificateStatus::kHeuristicallySkew;
  } else {
    s.status = CertificateStatus::kInconclusive;
  }
}

void finish_report(SkewReport& rep, const ParamDomain& dom, std::vector<Refined> results, const double grid_min[2],
                   const SearchConfig& cfg) {
  const std::vector<ParallelPair> clusters = cluster(dom, results, cfg.delta_cluster);
  finish_summary(rep.positive, grid_min[0], clusters, results, SignClass::kPositive, cfg);
  finish_summary(rep.negative, grid_min[1], clusters, results, SignClass::kNegative, cfg);
  for (const auto& c : clusters) {
    if (c.defect < cfg.tau_accept) rep.pairs.push_back(c);
  }
  if (rep.positive.status == CertificateStatus::kPairsFound || rep.negative.status == CertificateStatus::kPairsFound) {
    rep.status = CertificateStatus::kPairsFound;
  } else if (rep.positive.status == CertificateStatus::kHeuristicallySkew &&
             rep.negative.status == CertificateStatus::kHeuristicallySkew) {
    rep.status = CertificateStatus::kHeuristicallySkew;
  } else {
    rep.status = CertificateStatus::kInconclusive;
  }
}

void keep_lowest(std::vector<Seed>& seeds, long limit, bool& truncated) {
  if (static_cast<long>(seeds.size()) <= limit) return;
  truncated = true;
  std::stable_sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) { return a.value < b.value; });
  seeds.resize(limit);
  std::stable_sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) {
    return std::tie(a.i, a.j, a.sign) < std::tie(b.i, b.j, b.sign);
  });
}

double grid_lipschitz(const Grid& grid, const std::vector<Eigen::VectorXd>& emb,
                      const std::vector<Eigen::VectorXd>& planes) {
  double lip = 0.0;
  for (size_t i = 0; i < grid.points.size(); ++i) {
    for (int j : grid.neighbors[i]) {
      const double d = (emb[i] - emb[j]).norm();
      if (d > 0.0) lip = std::max(lip, (planes[i] - planes[j]).norm() / d);
    }
  }
  return lip;
}

}  // namespace

std::string to_string(SignClass s) { return s == SignClass::kPositive ? "positive" : "negative"; }

std::string to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::kPairsFound: return "pairs-found";
    case CertificateStatus::kHeuristicallySkew: return "heuristically-skew";
    case CertificateStatus::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

void SearchConfig::validate() const {
  if (resolution < 2) throw ConfigError("grid resolution must be >= 2");
  if (!(tau_accept > 0.0 && tau_accept < tau_reject && tau_reject <= tau_seed)) {
    throw ConfigError("tolerances must satisfy 0 < tau_accept < tau_reject <= tau_seed");
  }
  if (!(delta_cluster > 0.0 && delta_cluster < delta_diag)) {
    throw ConfigError("radii must satisfy 0 < delta_cluster < delta_diag");
  }
  if (max_iterations < 0) throw ConfigError("max_iterations must be >= 0");
  if (threads < 1) throw ConfigError("threads must be >= 1");
  if (max_seeds < 1) throw ConfigError("max_seeds must be >= 1");
  if (!(fd_step > 0.0)) throw ConfigError("fd_step must be positive");
}

void canonicalize(Eigen::VectorXd& p, Eigen::VectorXd& q) {
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) < q(i)) return;
    if (p(i) > q(i)) {
      std::swap(p, q);
      return;
    }
  }
}

double pair_distance(const ParamDomain& dom, const Eigen::VectorXd& p1, const Eigen::VectorXd& q1,
                     const Eigen::VectorXd& p2, const Eigen::VectorXd& q2) {
  const double same = std::max(dom.distance(p1, p2), dom.distance(q1, q2));
  const double swapped = std::max(dom.distance(p1, q2), dom.distance(q1, p2));
  return std::min(same, swapped);
}

SkewReport scan_pairs(const Immersion& surface, const SearchConfig& cfg) {
  cfg.validate();
  const ParamDomain& dom = surface.domain();
  const Grid grid = dom.grid(cfg.resolution);
  const int g = static_cast<int>(grid.points.size());

  std::vector<Eigen::VectorXd> planes(g), emb(g);
  parallel_for(cfg.threads, g, [&](int, long i) {
    planes[i] = plucker_of(surface, grid.points[i]);
    emb[i] = dom.embed(grid.points[i]);
  });

  // Stage 1: product grid.
  struct Partial {
    std::vector<Seed> seeds;
    double grid_min[2] = {kInf, kInf};
    long scanned = 0;
  };
  std::vector<Partial> parts(std::max(1, cfg.threads));
  auto defect = [&](int i, int j, int s) {
    return s == 0 ? (planes[i] - planes[j]).norm() : (planes[i] + planes[j]).norm();
  };
  parallel_for(cfg.threads, g, [&](int t, long il) {
    const int i = static_cast<int>(il);
    Partial& part = parts[t];
    for (int j = i + 1; j < g; ++j) {
      if ((emb[i] - emb[j]).norm() < cfg.delta_diag) continue;
      ++part.scanned;
      for (int s = 0; s < 2; ++s) {
        const double d = defect(i, j, s);
        part.grid_min[s] = std::min(part.grid_min[s], d);
        if (d >= cfg.tau_seed) continue;
        bool minimum = true;
        auto check = [&](int a, int b) {
          if (a == b || (emb[a] - emb[b]).norm() < cfg.delta_diag) return;
          if (defect(a, b, s) < d - kPlateau) minimum = false;
        };
        for (int a : grid.neighbors[i]) {
          check(a, j);
          for (int b : grid.neighbors[j]) check(a, b);
          if (!minimum) break;
        }
        for (int b : grid.neighbors[j]) check(i, b);
        if (minimum) part.seeds.push_back({i, j, s == 0 ? SignClass::kPositive : SignClass::kNegative, d});
      }
    }
  });

  SkewReport rep;
  rep.surface = surface.name();
  rep.resolution = cfg.resolution;
  rep.grid_points = g;
  rep.spacing = grid.spacing;
  rep.lipschitz = grid_lipschitz(grid, emb, planes);
  double grid_min[2] = {kInf, kInf};
  std::vector<Seed> seeds;
  for (auto& part : parts) {
    rep.pairs_scanned += part.scanned;
    for (int s = 0; s < 2; ++s) grid_min[s] = std::min(grid_min[s], part.grid_min[s]);
    seeds.insert(seeds.end(), part.seeds.begin(), part.seeds.end());
  }
  std::stable_sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) {
    return std::tie(a.i, a.j, a.sign) < std::tie(b.i, b.j, b.sign);
  });
  keep_lowest(seeds, cfg.max_seeds, rep.seeds_truncated);
  for (const auto& s : seeds) ++(s.sign == SignClass::kPositive ? rep.positive : rep.negative).seeds;

  // Stage 2: refinement.
  std::vector<Refined> results(seeds.size());
  const std::vector<int> both = {0, 1};
  parallel_for(cfg.threads, static_cast<long>(seeds.size()), [&](int, long n) {
    const Seed& sd = seeds[n];
    const double sf = sign_factor(sd.sign);
    const ResidualFn r = [&](const Points& pq) {
      return Eigen::VectorXd(plucker_of(surface, pq[0]) - sf * plucker_of(surface, pq[1]));
    };
    const GnResult gn = gauss_newton(dom, {grid.points[sd.i], grid.points[sd.j]}, both, r, cfg);
    Refined& out = results[n];
    out.sign = sd.sign;
    out.order = n;
    out.p = gn.points[0];
    out.q = gn.points[1];
    out.iterations = gn.iterations;
    out.defect = dom.distance(out.p, out.q) < cfg.delta_diag ? kInf : gn.value;
  });
  std::erase_if(results, [](const Refined& r) { return !std::isfinite(r.defect); });

  // Stage 3: clustering and classification.
  finish_report(rep, dom, std::move(results), grid_min, cfg);
  return rep;
}

std::vector<ParallelPair> scan_partners(const Immersion& surface, const Eigen::VectorXd& p0, const SearchConfig& cfg) {
  cfg.validate();
  const ParamDomain& dom = surface.domain();
  const Eigen::VectorXd p = dom.canonical(p0);
  const Grid grid = dom.grid(cfg.resolution);
  const int g = static_cast<int>(grid.points.size());
  const Eigen::VectorXd base = plucker_of(surface, p);
  std::vector<Eigen::VectorXd> planes(g);
  std::vector<bool> far(g);
  for (int j = 0; j < g; ++j) {
    planes[j] = plucker_of(surface, grid.points[j]);
    far[j] = dom.distance(p, grid.points[j]) >= cfg.delta_diag;
  }

  std::vector<Refined> results;
  for (int s = 0; s < 2; ++s) {
    const SignClass sign = s == 0 ? SignClass::kPositive : SignClass::kNegative;
    const double sf = sign_factor(sign);
    auto defect = [&](int j) { return (base - sf * planes[j]).norm(); };
    for (int j = 0; j < g; ++j) {
      if (!far[j]) continue;
      const double d = defect(j);
      if (d >= cfg.tau_seed) continue;
      bool minimum = true;
      for (int b : grid.neighbors[j]) {
        if (far[b] && defect(b) < d - kPlateau) minimum = false;
      }
      if (!minimum) continue;
      const ResidualFn r = [&](const Points& pq) {
        return Eigen::VectorXd(base - sf * plucker_of(surface, pq[1]));
      };
      const GnResult gn = gauss_newton(dom, {p, grid.points[j]}, {1}, r, cfg);
      if (dom.distance(p, gn.points[1]) < cfg.delta_diag) continue;
      results.push_back({p, gn.points[1], sign, gn.value, gn.iterations, static_cast<long>(results.size())});
    }
  }
  // Partners cluster by q alone; p is fixed, so no canonical reordering.
  std::stable_sort(results.begin(), results.end(), [](const Refined& a, const Refined& b) {
    if (a.sign != b.sign) return a.sign < b.sign;
    if (a.defect != b.defect) return a.defect < b.defect;
    return a.order < b.order;
  });
  std::vector<ParallelPair> out;
  for (const auto& r : results) {
    if (r.defect >= cfg.tau_accept) continue;
    bool merged = false;
    for (auto& o : out) {
      if (o.sign == r.sign && dom.distance(o.q, r.q) < cfg.delta_cluster) {
        ++o.cluster_size;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back({r.p, r.q, r.sign, r.defect, r.iterations, 1});
  }
  return out;
}

SkewReport antipodal_scan(const Immersion& section, const SearchConfig& cfg) {
  cfg.validate();
  if (!cfg.antipodal) throw ConfigError("antipodal_scan requires the antipodal flag");
  const ParamDomain& dom = section.domain();
  if (dom.kind() != DomainKind::kSphere) throw ContractError("antipodal_scan needs a sphere domain");
  const Grid grid = dom.grid(cfg.resolution);
  const int g = static_cast<int>(grid.points.size());

  std::vector<Eigen::VectorXd> at(g), opposite(g), emb(g);
  parallel_for(cfg.threads, g, [&](int, long i) {
    at[i] = plucker_of(section, grid.points[i]);
    opposite[i] = plucker_of(section, -grid.points[i]);
    emb[i] = grid.points[i];
  });

  SkewReport rep;
  rep.surface = section.name();
  rep.resolution = cfg.resolution;
  rep.grid_points = g;
  rep.pairs_scanned = g;
  rep.antipodal = true;
  rep.spacing = grid.spacing;
  rep.lipschitz = grid_lipschitz(grid, emb, at);

  double grid_min[2] = {kInf, kInf};
  std::vector<Seed> seeds;
  for (int s = 0; s < 2; ++s) {
    const double sf = s == 0 ? 1.0 : -1.0;
    auto defect = [&](int i) { return (at[i] - sf * opposite[i]).norm(); };
    for (int i = 0; i < g; ++i) {
      const double d = defect(i);
      grid_min[s] = std::min(grid_min[s], d);
      if (d >= cfg.tau_seed) continue;
      bool minimum = true;
      for (int b : grid.neighbors[i]) {
        if (defect(b) < d - kPlateau) {
          minimum = false;
          break;
        }
      }
      if (minimum) seeds.push_back({i, i, s == 0 ? SignClass::kPositive : SignClass::kNegative, d});
    }
  }
  keep_lowest(seeds, cfg.max_seeds, rep.seeds_truncated);
  for (const auto& s : seeds) ++(s.sign == SignClass::kPositive ? rep.positive : rep.negative).seeds;

  std::vector<Refined> results(seeds.size());
  parallel_for(cfg.threads, static_cast<long>(seeds.size()), [&](int, long n) {
    const Seed& sd = seeds[n];
    const double sf = sign_factor(sd.sign);
    const ResidualFn r = [&](const Points& x) {
      return Eigen::VectorXd(plucker_of(section, x[0]) - sf * plucker_of(section, -x[0]));
    };
    const GnResult gn = gauss_newton(dom, {grid.points[sd.i]}, {0}, r, cfg);
    results[n] = {gn.points[0], -gn.points[0], sd.sign, gn.value, gn.iterations, n};
  });
  finish_report(rep, dom, std::move(results), grid_min, cfg);
  return rep;
}

AntipodalResidualSummary antipodal_residual_scan(const CylinderSection& section, int resolution) {
  const int m = section.base().ambient();
  AntipodalResidualSummary out;
  out.min_residual = kInf;
  out.samples = cube_sphere_size(m, resolution);
  for (long i = 0; i < out.samples; ++i) {
    const Eigen::VectorXd x = cube_sphere_point(m, resolution, i);
    const double r = cylinder_parallel_residual(section, x).norm();
    if (r < out.min_residual) {
      out.min_residual = r;
      out.argmin = x;
    }
  }
  return out;
}

DoublePointReport find_double_points(const Immersion& surface, const SearchConfig& cfg) {
  cfg.validate();
  const ParamDomain& dom = surface.domain();
  const Grid grid = dom.grid(cfg.resolution);
  const int g = static_cast<int>(grid.points.size());
  std::vector<Eigen::VectorXd> img(g), emb(g);
  for (int i = 0; i < g; ++i) {
    img[i] = surface.map(grid.points[i]);
    emb[i] = dom.embed(grid.points[i]);
  }
  auto gap = [&](int a, int b) { return (img[a] - img[b]).norm(); };

  std::vector<Seed> seeds;
  for (int i = 0; i < g; ++i) {
    for (int j = i + 1; j < g; ++j) {
      if ((emb[i] - emb[j]).norm() < cfg.delta_diag) continue;
      const double d = gap(i, j);
      if (d >= cfg.tau_seed) continue;
      bool minimum = true;
      auto check = [&](int a, int b) {
        if (a == b || (emb[a] - emb[b]).norm() < cfg.delta_diag) return;
        if (gap(a, b) < d - kPlateau) minimum = false;
      };
      for (int a : grid.neighbors[i]) {
        check(a, j);
        for (int b : grid.neighbors[j]) check(a, b);
      }
      for (int b : grid.neighbors[j]) check(i, b);
      if (minimum) seeds.push_back({i, j, SignClass::kPositive, d});
    }
  }

  std::vector<Refined> results;
  const ResidualFn r = [&](const Points& pq) { return Eigen::VectorXd(surface.map(pq[0]) - surface.map(pq[1])); };
  for (size_t n = 0; n < seeds.size(); ++n) {
    const GnResult gn = gauss_newton(dom, {grid.points[seeds[n].i], grid.points[seeds[n].j]}, {0, 1}, r, cfg);
    if (gn.value >= cfg.tau_accept || dom.distance(gn.points[0], gn.points[1]) < cfg.delta_diag) continue;
    results.push_back({gn.points[0], gn.points[1], SignClass::kPositive, gn.value, gn.iterations,
                       static_cast<long>(n)});
  }
  const std::vector<ParallelPair> clusters = cluster(dom, std::move(results), cfg.delta_cluster);

  DoublePointReport rep;
  rep.surface = surface.name();
  const int k = dom.dim();
  for (const auto& c : clusters) {
    DoublePoint dp;
    dp.p = c.p;
    dp.q = c.q;
    dp.image = surface.map(c.p);
    dp.residual = c.defect;
    const Eigen::MatrixXd f1 = plane_from_frame(tangent_frame(surface, c.p)).frame();
    const Eigen::MatrixXd f2 = plane_from_frame(tangent_frame(surface, c.q)).frame();
    Eigen::MatrixXd stacked(surface.ambient_dim(), 2 * k);
    stacked << f1, f2;
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked);
    dp.margin = svd.singularValues().minCoeff();
    dp.transversal = dp.margin >= cfg.transversality_floor;
    if (surface.ambient_dim() == 2 * k) {
      const double det = stacked.determinant();
      dp.sign = det > 0 ? 1 : -1;
    }
    if (dp.transversal) {
      rep.signed_count += dp.sign;
    } else {
      ++rep.flagged;
    }
    rep.points.push_back(std::move(dp));
  }
  return rep;
}

BoundCheck bound_check(const SkewReport& report, int chi, int genus, int d, bool embedded) {
  BoundCheck out;
  out.chi = chi;
  out.genus = genus;
  out.d = d;
  out.negative_pairs = report.negative.pairs;
  if (embedded) {
    out.bound_kind = "chi^2/4";
    out.bound = chi * chi / 4.0;
  } else {
    out.bound_kind = "|d^2-(1-g)^2|";
    out.bound = std::abs(d * d - (1 - genus) * (1 - genus));
  }
  out.pass = out.negative_pairs >= out.bound;
  return out;
}

void write_defect_csv(const Immersion& surface, int resolution, std::ostream& out) {
  const ParamDomain& dom = surface.domain();
  const Grid grid = dom.grid(resolution);
  const int g = static_cast<int>(grid.points.size());
  const int c = dom.coord_size();
  std::vector<Eigen::VectorXd> planes(g);
  for (int i = 0; i < g; ++i) planes[i] = plucker_of(surface, grid.points[i]);
  std::vector<int> slice;
  for (int j = 0; j < g; ++j) {
    if (std::abs(grid.points[j](0) - grid.points[0](0)) < 1e-12) slice.push_back(j);
  }

  out << "p_index,q_index";
  for (int i = 0; i < c; ++i) out << ",p" << i;
  for (int i = 0; i < c; ++i) out << ",q" << i;
  out << ",positive_defect,negative_defect\r\n";
  out.precision(17);
  for (int i = 0; i < g; ++i) {
    for (int j : slice) {
      out << i << ',' << j;
      for (int a = 0; a < c; ++a) out << ',' << grid.points[i](a);
      for (int a = 0; a < c; ++a) out << ',' << grid.points[j](a);
      out << ',' << (planes[i] - planes[j]).norm() << ',' << (planes[i] + planes[j]).norm() << "\r\n";
    }
  }
}

}  // namespace skewbrane
