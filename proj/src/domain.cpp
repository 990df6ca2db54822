#include "skewbrane/domain.hpp"

#include "skewbrane/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

namespace skewbrane {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Cylinder points with |h| above this are refined in the sphere chart.
constexpr double kPoleChartThreshold = 0.9;

Eigen::Vector3d cylinder_to_s2(double alpha, double h) {
  const double r = std::sqrt(std::max(0.0, 1.0 - h * h));
  return {r * std::cos(alpha), r * std::sin(alpha), h};
}

// Index-space tensor grid neighbours (including diagonals) with wrap-around.
std::vector<std::vector<int>> torus_neighbors(int n, int dim) {
  int total = 1;
  for (int i = 0; i < dim; ++i) total *= n;
  std::vector<std::vector<int>> nb(total);
  std::vector<int> idx(dim), off(dim);
  int offsets = 1;
  for (int i = 0; i < dim; ++i) offsets *= 3;
  for (int p = 0; p < total; ++p) {
    int r = p;
    for (int i = 0; i < dim; ++i) { idx[i] = r % n; r /= n; }
    for (int o = 0; o < offsets; ++o) {
      int oo = o;
      bool centre = true;
      int q = 0, stride = 1;
      for (int i = 0; i < dim; ++i) {
        const int d = oo % 3 - 1;
        oo /= 3;
        if (d != 0) centre = false;
        q += ((idx[i] + d + n) % n) * stride;
        stride *= n;
      }
      if (!centre && q != p) nb[p].push_back(q);
    }
    std::sort(nb[p].begin(), nb[p].end());
    nb[p].erase(std::unique(nb[p].begin(), nb[p].end()), nb[p].end());
  }
  return nb;
}

// Neighbours within `radius` in the embedding, via a uniform spatial hash.
std::vector<std::vector<int>> radius_neighbors(const std::vector<Eigen::VectorXd>& pts,
                                               double radius) {
  const int m = static_cast<int>(pts.front().size());
  using Key = std::vector<int>;
  std::map<Key, std::vector<int>> cells;
  auto key_of = [&](const Eigen::VectorXd& x) {
    Key k(m);
    for (int i = 0; i < m; ++i) k[i] = static_cast<int>(std::floor(x(i) / radius));
    return k;
  };
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) cells[key_of(pts[i])].push_back(i);

  std::vector<std::vector<int>> nb(pts.size());
  int offsets = 1;
  for (int i = 0; i < m; ++i) offsets *= 3;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    const Key k = key_of(pts[i]);
    Key probe(m);
    for (int o = 0; o < offsets; ++o) {
      int oo = o;
      for (int d = 0; d < m; ++d) { probe[d] = k[d] + oo % 3 - 1; oo /= 3; }
      auto it = cells.find(probe);
      if (it == cells.end()) continue;
      for (int j : it->second) {
        if (j != i && (pts[i] - pts[j]).norm() <= radius) nb[i].push_back(j);
      }
    }
    std::sort(nb[i].begin(), nb[i].end());
  }
  return nb;
}

}  // namespace

long cube_sphere_size(int ambient, int n) {
  long face = 1;
  for (int i = 0; i < ambient - 1; ++i) face *= n;
  return 2L * ambient * face;
}

Eigen::VectorXd cube_sphere_point(int ambient, int n, long index) {
  long face_cells = 1;
  for (int i = 0; i < ambient - 1; ++i) face_cells *= n;
  const long face = index / face_cells;
  long r = index % face_cells;
  const int axis = static_cast<int>(face / 2);
  const double sign = face % 2 == 0 ? -1.0 : 1.0;
  Eigen::VectorXd x(ambient);
  for (int d = 0; d < ambient; ++d) {
    if (d == axis) {
      x(d) = sign;
    } else {
      x(d) = -1.0 + (2.0 * static_cast<double>(r % n) + 1.0) / n;
      r /= n;
    }
  }
  return x.normalized();
}

double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

double wrap_signed(double a) {
  double r = wrap_angle(a);
  if (r > std::numbers::pi) r -= kTwoPi;
  return r;
}

Eigen::MatrixXd sphere_tangent_basis(const Eigen::VectorXd& x) {
  const int m = static_cast<int>(x.size());
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(Eigen::MatrixXd(x.normalized()));
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd basis = q.rightCols(m - 1);
  Eigen::MatrixXd full(m, m);
  full << x.normalized(), basis;
  if (full.determinant() < 0) basis.col(m - 2) *= -1.0;
  return basis;
}

ParamDomain::ParamDomain(DomainKind kind, int dim) : kind_(kind), dim_(dim) {
  switch (kind) {
    case DomainKind::kTorus: periodic_.assign(dim, true); break;
    case DomainKind::kCylinderSphere: periodic_ = {true, false}; break;
    case DomainKind::kSphere: periodic_.assign(dim + 1, false); break;
  }
}

ParamDomain ParamDomain::torus(int dim) {
  if (dim < 1) throw ContractError("torus dimension must be >= 1");
  return {DomainKind::kTorus, dim};
}

ParamDomain ParamDomain::cylinder_sphere() { return {DomainKind::kCylinderSphere, 2}; }

ParamDomain ParamDomain::sphere(int ambient) {
  if (ambient < 2) throw ContractError("sphere ambient dimension must be >= 2");
  return {DomainKind::kSphere, ambient - 1};
}

std::string ParamDomain::name() const {
  switch (kind_) {
    case DomainKind::kTorus: return "torus^" + std::to_string(dim_);
    case DomainKind::kCylinderSphere: return "cylinder-sphere^2";
    case DomainKind::kSphere: return "sphere^" + std::to_string(dim_);
  }
  return "?";
}

std::vector<std::string> ParamDomain::degenerate_loci() const {
  if (kind_ == DomainKind::kCylinderSphere) return {"h=+1", "h=-1"};
  return {};
}

Eigen::VectorXd ParamDomain::canonical(const Eigen::VectorXd& p) const {
  if (p.size() != coord_size()) {
    throw ContractError(name() + ": expected " + std::to_string(coord_size()) +
                        " coordinates, got " + std::to_string(p.size()));
  }
  Eigen::VectorXd c = p;
  switch (kind_) {
    case DomainKind::kTorus:
      for (int i = 0; i < dim_; ++i) c(i) = wrap_angle(c(i));
      break;
    case DomainKind::kCylinderSphere:
      c(0) = wrap_angle(c(0));
      if (!(std::abs(c(1)) <= 1.0 + 1e-12)) {
        throw DomainError("cylinder-sphere: h = " + std::to_string(c(1)) + " outside [-1,1]");
      }
      c(1) = std::clamp(c(1), -1.0, 1.0);
      break;
    case DomainKind::kSphere: {
      const double n = c.norm();
      if (!(n > 1e-12)) throw DomainError("sphere: zero vector is not a point");
      c /= n;
      break;
    }
  }
  return c;
}

Eigen::VectorXd ParamDomain::embed(const Eigen::VectorXd& p) const {
  switch (kind_) {
    case DomainKind::kTorus: {
      Eigen::VectorXd e(2 * dim_);
      for (int i = 0; i < dim_; ++i) {
        e(2 * i) = std::cos(p(i));
        e(2 * i + 1) = std::sin(p(i));
      }
      return e;
    }
    case DomainKind::kCylinderSphere: return cylinder_to_s2(p(0), p(1));
    case DomainKind::kSphere: return p.normalized();
  }
  return p;
}

double ParamDomain::distance(const Eigen::VectorXd& p, const Eigen::VectorXd& q) const {
  return (embed(p) - embed(q)).norm();
}

Eigen::VectorXd ParamDomain::retract(const Eigen::VectorXd& p, const Eigen::VectorXd& t) const {
  switch (kind_) {
    case DomainKind::kTorus: return canonical(p + t);
    case DomainKind::kCylinderSphere: {
      if (std::abs(p(1)) <= kPoleChartThreshold) {
        Eigen::Vector2d q(p(0) + t(0), std::clamp(p(1) + t(1), -1.0, 1.0));
        return canonical(q);
      }
      const Eigen::Vector3d u = cylinder_to_s2(p(0), p(1));
      const Eigen::Vector3d v = (u + sphere_tangent_basis(u) * t).normalized();
      const double r = std::hypot(v(0), v(1));
      const double alpha = r > 1e-300 ? std::atan2(v(1), v(0)) : p(0);
      return canonical(Eigen::Vector2d(alpha, v(2)));
    }
    case DomainKind::kSphere: return (p + sphere_tangent_basis(p) * t).normalized();
  }
  return p;
}

Grid ParamDomain::grid(int resolution) const {
  if (resolution < 2) throw ContractError("grid resolution must be >= 2");
  const int n = resolution;
  Grid g;
  switch (kind_) {
    case DomainKind::kTorus: {
      int total = 1;
      for (int i = 0; i < dim_; ++i) total *= n;
      g.points.reserve(total);
      for (int p = 0; p < total; ++p) {
        Eigen::VectorXd x(dim_);
        int r = p;
        for (int i = 0; i < dim_; ++i) { x(i) = kTwoPi * (r % n) / n; r /= n; }
        g.points.push_back(x);
      }
      g.neighbors = torus_neighbors(n, dim_);
      break;
    }
    case DomainKind::kCylinderSphere: {
      // Row j has h_j = −1 + 2j/(n−1); the two pole rows collapse to one point.
      const int rows = n;
      auto index = [&](int i, int j) {
        if (j == 0) return 0;
        if (j == rows - 1) return 1 + (rows - 2) * n;
        return 1 + (j - 1) * n + ((i % n) + n) % n;
      };
      g.points.push_back(Eigen::Vector2d(0.0, -1.0));
      for (int j = 1; j < rows - 1; ++j) {
        const double h = -1.0 + 2.0 * j / (rows - 1);
        for (int i = 0; i < n; ++i) g.points.push_back(Eigen::Vector2d(kTwoPi * i / n, h));
      }
      g.points.push_back(Eigen::Vector2d(0.0, 1.0));
      g.neighbors.resize(g.points.size());
      for (int j = 1; j < rows - 1; ++j) {
        for (int i = 0; i < n; ++i) {
          const int p = index(i, j);
          for (int dj = -1; dj <= 1; ++dj) {
            for (int di = -1; di <= 1; ++di) {
              if (di == 0 && dj == 0) continue;
              const int q = index(i + di, j + dj);
              if (q != p) g.neighbors[p].push_back(q);
            }
          }
          if (j == 1) g.neighbors[0].push_back(p);
          if (j == rows - 2) g.neighbors[index(0, rows - 1)].push_back(p);
        }
      }
      for (auto& nb : g.neighbors) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      }
      break;
    }
    case DomainKind::kSphere: {
      // Cube-sphere: cell centres on each face of [−1,1]^m, projected radially.
      const int m = dim_ + 1;
      const long total = cube_sphere_size(m, n);
      g.points.reserve(static_cast<size_t>(total));
      for (long i = 0; i < total; ++i) g.points.push_back(cube_sphere_point(m, n, i));
      g.neighbors = radius_neighbors(g.points, 1.8 * 2.0 / n);
      break;
    }
  }
  double spacing = 0.0;
  for (size_t p = 0; p < g.points.size(); ++p) {
    double best = std::numeric_limits<double>::infinity();
    for (int q : g.neighbors[p]) best = std::min(best, distance(g.points[p], g.points[q]));
    if (std::isfinite(best)) spacing = std::max(spacing, best);
  }
  g.spacing = spacing;
  return g;
}

}  // namespace skewbrane
