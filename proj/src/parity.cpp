#include "skewbrane/parity.hpp"

#include "skewbrane/errors.hpp"

#include <numbers>

namespace skewbrane {

Eigen::Vector2d torus_action(int element, const Eigen::Vector2d& p) {
  const double pi = std::numbers::pi;
  switch (element) {
    case 0: return p;
    case 1: return {p(0) + pi, p(1)};
    case 2: return {p(0), p(1) + pi};
    case 3: return {p(0) + pi, p(1) + pi};
    default: throw ContractError("torus_action: element must be 0..3");
  }
}

double ParityParts::sum(const Eigen::VectorXd& p) const {
  if (kind == DomainKind::kSphere) return even(p) + odd(p);
  double s = 0.0;
  for (const auto& row : part) {
    for (const auto& fn : row) s += fn(p);
  }
  return s;
}

ParityParts parity_decompose(ScalarField f, const ParamDomain& domain) {
  ParityParts out;
  out.kind = domain.kind();
  if (domain.kind() == DomainKind::kSphere) {
    out.even = [f](const Eigen::VectorXd& x) { return 0.5 * (f(x) + f(-x)); };
    out.odd = [f](const Eigen::VectorXd& x) { return 0.5 * (f(x) - f(-x)); };
    return out;
  }
  if (domain.kind() != DomainKind::kTorus || domain.dim() != 2) {
    throw ContractError("parity_decompose: supported domains are spheres and the 2-torus");
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.part[i][j] = [f, i, j](const Eigen::VectorXd& p) {
        const Eigen::Vector2d q = p.head<2>();
        double acc = 0.0;
        for (int e = 0; e < 4; ++e) {
          const int a = e & 1, b = (e >> 1) & 1;
          const double chi = ((i * a + j * b) % 2 == 0) ? 1.0 : -1.0;
          acc += chi * f(torus_action(e, q));
        }
        return 0.25 * acc;
      };
    }
  }
  return out;
}

}  // namespace skewbrane
