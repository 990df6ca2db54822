#include "skewbrane/immersion.hpp"

#include "skewbrane/errors.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace skewbrane {

Immersion::Immersion(std::string name, ParamDomain domain, int ambient_dim, PointMap map,
                     JacobianMap jacobian, JacobianMap pole_jacobian, Params params)
    : name_(std::move(name)),
      domain_(std::move(domain)),
      ambient_dim_(ambient_dim),
      map_(std::move(map)),
      jacobian_(std::move(jacobian)),
      pole_jacobian_(std::move(pole_jacobian)),
      params_(std::move(params)) {
  if (!map_) throw ContractError("immersion '" + name_ + "' has no point map");
}

TangentFrame TangentFrame::swapped(int i, int j) const {
  TangentFrame out = *this;
  if (i != j) {
    out.vectors.col(i).swap(out.vectors.col(j));
    out.positive = !positive;
  }
  return out;
}

Eigen::VectorXd eval_immersion(const Immersion& surface, const Eigen::VectorXd& p) {
  return surface.map(surface.domain().canonical(p));
}

Eigen::MatrixXd fd_frame(const Immersion& surface, const Eigen::VectorXd& p, double step) {
  const ParamDomain& dom = surface.domain();
  const Eigen::VectorXd x = dom.canonical(p);
  const int k = dom.dim();
  Eigen::MatrixXd frame(surface.ambient_dim(), k);

  if (dom.kind() == DomainKind::kSphere) {
    const Eigen::MatrixXd basis = sphere_tangent_basis(x);
    for (int i = 0; i < k; ++i) {
      const Eigen::VectorXd fp = surface.map((x + step * basis.col(i)).normalized());
      const Eigen::VectorXd fm = surface.map((x - step * basis.col(i)).normalized());
      frame.col(i) = (fp - fm) / (2.0 * step);
    }
    return frame;
  }

  for (int i = 0; i < k; ++i) {
    const bool bounded = !dom.periodic()[i];
    Eigen::VectorXd e = Eigen::VectorXd::Zero(k);
    e(i) = step;
    if (bounded && x(i) + step > 1.0) {
      // one-sided, second order
      frame.col(i) = (3.0 * surface.map(x) - 4.0 * surface.map(x - e) + surface.map(x - 2.0 * e)) /
                     (2.0 * step);
    } else if (bounded && x(i) - step < -1.0) {
      frame.col(i) = (-3.0 * surface.map(x) + 4.0 * surface.map(x + e) - surface.map(x + 2.0 * e)) /
                     (2.0 * step);
    } else {
      frame.col(i) = (surface.map(x + e) - surface.map(x - e)) / (2.0 * step);
    }
  }
  return frame;
}

Eigen::MatrixXd analytic_frame(const Immersion& surface, const Eigen::VectorXd& p) {
  if (!surface.has_analytic_jacobian()) {
    throw ContractError("immersion '" + surface.name() + "' has no analytic Jacobian");
  }
  const Eigen::VectorXd x = surface.domain().canonical(p);
  const Eigen::MatrixXd j = surface.jacobian()(x);
  if (surface.domain().kind() == DomainKind::kSphere) return j * sphere_tangent_basis(x);
  return j;
}

TangentFrame tangent_frame(const Immersion& surface, const Eigen::VectorXd& p) {
  const ParamDomain& dom = surface.domain();
  const Eigen::VectorXd x = dom.canonical(p);
  Eigen::MatrixXd frame;
  std::string locus;

  if (dom.kind() == DomainKind::kCylinderSphere && std::abs(x(1)) > 1.0 - kPoleBand) {
    const double h = x(1);
    locus = h > 0 ? "pole h=+1" : "pole h=-1";
    if (surface.pole_jacobian()) {
      frame = surface.pole_jacobian()(x);
    } else if (std::abs(h) < 1.0) {
      frame = surface.has_analytic_jacobian() ? analytic_frame(surface, x) : fd_frame(surface, x);
      frame.col(0) /= (1.0 - h * h);
    } else {
      throw DegeneratePointError("immersion '" + surface.name() + "': no limit frame at " + locus);
    }
  } else {
    frame = surface.has_analytic_jacobian() ? analytic_frame(surface, x) : fd_frame(surface, x);
  }

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(frame);
  const auto& sv = svd.singularValues();
  const double smax = sv(0), smin = sv(sv.size() - 1);
  if (!(smax > 0.0) || smin < kRankThreshold * smax) {
    if (locus.empty()) locus = "rank-deficient point";
    throw DegeneratePointError("immersion '" + surface.name() + "' degenerate at " + locus +
                               " (relative sigma_min " + std::to_string(smax > 0 ? smin / smax : 0.0) +
                               ")");
  }
  return {surface.map(x), frame, true};
}

RankReport immersion_rank_scan(const Immersion& surface, int resolution) {
  const Grid grid = surface.domain().grid(resolution);
  RankReport report;
  report.min_singular = std::numeric_limits<double>::infinity();
  report.min_relative = std::numeric_limits<double>::infinity();
  for (const auto& p : grid.points) {
    ++report.samples;
    double smin = 0.0, rel = 0.0;
    try {
      const TangentFrame f = tangent_frame(surface, p);
      const Eigen::JacobiSVD<Eigen::MatrixXd> svd(f.vectors);
      const auto& sv = svd.singularValues();
      smin = sv(sv.size() - 1);
      rel = smin / sv(0);
    } catch (const DegeneratePointError&) {
      report.flagged.push_back(p);
    }
    if (smin < report.min_singular) {
      report.min_singular = smin;
      report.worst_point = p;
    }
    report.min_relative = std::min(report.min_relative, rel);
  }
  return report;
}

}  // namespace skewbrane
