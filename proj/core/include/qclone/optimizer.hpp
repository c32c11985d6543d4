#pragma once

// Optimal cloners: analytic trade-off curves, the Lagrange solution of the
// symmetric three-basis cloner, a 1-D constrained maximizer for the
// asymmetric three-basis trade-off and a brute-force grid oracle.

#include "qclone/families.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qclone {

/// Best second-clone fidelity f_b at first-clone fidelity f_a.
struct TradeoffPoint {
  double f_a = 0.0;
  double f_b = 0.0;
  FamilyParams params;
};

/// Raised when an iterative search fails; carries the final bracket.
class OptimizerError : public std::runtime_error {
public:
  OptimizerError(const std::string& what, double lo, double hi, int iterations)
      : std::runtime_error(what + " (bracket [" + std::to_string(lo) + ", " + std::to_string(hi) + "] after " +
                           std::to_string(iterations) + " iterations)"),
        lo_(lo), hi_(hi), iterations_(iterations) {}

  double bracket_lo() const { return lo_; }
  double bracket_hi() const { return hi_; }
  int iterations() const { return iterations_; }

private:
  double lo_, hi_;
  int iterations_;
};

/// v = F, x = sqrt(F(1-F)/2), y = (1-F)/2. Throws std::domain_error unless
/// 1/3 <= F <= 1.
TradeoffPoint two_basis_tradeoff(double F);

/// v = F, x = sqrt(F(1-F)), y = 1-F. Throws std::domain_error unless
/// 1/2 <= F <= 1.
TradeoffPoint qubit_phase_cov_tradeoff(double F);

/// Stationary point of F = x^2+2y^2+2z^2+2xy+2yz+2xz on x^2+2y^2+2z^2 = 1/3.
struct LagrangePoint {
  double lambda = 0.0;
  ThreeBasisSymParams params;
  double fidelity = 0.0;
};

/// All stationary branches: y = z with lambda = (1 +- sqrt 17)/4, and
/// lambda = -1/2 (x = 0, y = -z).
std::vector<LagrangePoint> three_basis_symmetric_stationary_points();

/// Largest residual of y+z = lambda x, x+z = 2 lambda y, x+y = 2 lambda z.
double lagrange_residual(const ThreeBasisSymParams& params, double lambda);

/// The maximizing stationary point, F_max = (5 + sqrt 17)/12.
LagrangePoint three_basis_symmetric_optimal();

/// Maximizes (v^2+12x^2+2y^2+4vx+8xy)/3 subject to v^2+2x^2 = F and
/// v^2+6x^2+2y^2 = 1 over nonnegative (v, x, y). Eliminates v and y, scans x
/// to bracket the optimum and refines by golden-section search to 1e-12.
/// Throws std::domain_error unless 1/3 <= F <= 1; OptimizerError if the
/// refinement does not converge.
TradeoffPoint three_basis_asym_tradeoff(double F);

/// Universal cloner at weight alpha in [0, 1]; beta is the nonnegative root
/// of alpha^2 + (2/N) alpha beta + beta^2 = 1.
TradeoffPoint universal_tradeoff(double alpha, std::size_t dim = 3);

/// Universal cloner whose first clone has fidelity F in [1/N, 1].
TradeoffPoint universal_tradeoff_at_fidelity(double F, std::size_t dim = 3);

struct BruteForceOptions {
  std::size_t resolution = 400; ///< grid points per angle (>= 100)
  bool signed_params = false;   ///< also scan negative parameters
  bool polish = true;           ///< local coordinate descent after the scan
};

/// Independent oracle: scans the family's normalization surface on a
/// resolution x resolution angular grid, keeps points whose fidelity is
/// within one grid step of F, returns the best second-clone fidelity and
/// optionally polishes it on the exact constraint curve.
/// Supports two_basis, three_basis_asym and qubit_phase_cov.
TradeoffPoint brute_force_optimal(Family family, double F, const BruteForceOptions& options = {});

/// Domain [F_min, 1] of the first-clone fidelity for a trade-off family.
std::pair<double, double> tradeoff_domain(Family family, std::size_t dim = 3);

/// Optimal trade-off evaluated on `grid` uniformly spaced F values spanning
/// tradeoff_domain(family). Throws for families without a trade-off.
std::vector<TradeoffPoint> tradeoff_curve(Family family, std::size_t grid = 101, std::size_t dim = 3);

} // namespace qclone
