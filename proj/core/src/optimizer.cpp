#include "qclone/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

namespace qclone {

namespace {

constexpr double kDomainSlack = 1e-12;
constexpr double kTieTolerance = 1e-10;

double clamp_to_domain(double F, double lo, double hi, const char* who) {
  if (!(F >= lo - kDomainSlack && F <= hi + kDomainSlack))
    throw std::domain_error(std::string(who) + ": fidelity " + std::to_string(F) + " outside [" + std::to_string(lo) +
                            ", " + std::to_string(hi) + "]");
  return std::clamp(F, lo, hi);
}

double safe_sqrt(double x) { return std::sqrt(std::max(x, 0.0)); }

// ---- asymmetric three-basis objective along the constraint curve, as a
// function of x for fixed F.
ThreeBasisAsymParams asym_params(double F, double x) {
  return ThreeBasisAsymParams{safe_sqrt(F - 2 * x * x), x, safe_sqrt((1 - F - 4 * x * x) / 2)};
}

double asym_objective(double F, double x) { return family_fidelities(asym_params(F, x)).f_tilde; }

// ---- brute-force parametrization. Every supported family has the form
// v = cos(theta), x = sin(theta) cos(phi) / sx, y = sin(theta) sin(phi) / sy
// with first-clone fidelity F = v^2 + sin^2(theta) cos^2(phi) / k.
struct Surface {
  double sx, sy, k;
};

Surface surface_for(Family family) {
  switch (family) {
  case Family::two_basis: return {2.0, 2.0, 2.0};
  case Family::three_basis_asym: return {std::sqrt(6.0), std::sqrt(2.0), 3.0};
  case Family::qubit_phase_cov: return {std::sqrt(2.0), 1.0, 2.0};
  default: throw std::invalid_argument("brute_force_optimal: unsupported family " + std::string(to_string(family)));
  }
}

FamilyParams make_params(Family family, double v, double x, double y) {
  switch (family) {
  case Family::two_basis: return TwoBasisParams{v, x, y};
  case Family::three_basis_asym: return ThreeBasisAsymParams{v, x, y};
  default: return QubitPhaseCovParams{v, x, y};
  }
}

// Inline closed forms for the scan's hot loop; identical to family_fidelities.
std::pair<double, double> scan_fidelities(Family family, double v, double x, double y) {
  switch (family) {
  case Family::two_basis:
    return {v * v + 2 * x * x, (v * v + 6 * x * x + 8 * y * y + 4 * v * x + 8 * x * y) / 3};
  case Family::three_basis_asym:
    return {v * v + 2 * x * x, (v * v + 12 * x * x + 2 * y * y + 4 * v * x + 8 * x * y) / 3};
  default:
    return {v * v + x * x, 0.5 + v * x + x * y};
  }
}

struct Candidate {
  double v = 0, x = 0, y = 0;
  double f_b = -std::numeric_limits<double>::infinity();
};

// Point on the exact constraint F for a given v, keeping the signs of the
// (cos phi, sin phi) pair. Returns nullopt when v is infeasible.
std::optional<Candidate> on_constraint(Family family, const Surface& s, double F, double v, double sign_c,
                                       double sign_s) {
  const double s2 = 1.0 - v * v;
  double c2 = 0.0;
  if (s2 > 1e-300) {
    c2 = s.k * (F - v * v) / s2;
  } else if (std::abs(F - 1.0) > 1e-12) {
    return std::nullopt;
  }
  if (c2 < -1e-15 || c2 > 1.0 + 1e-15) return std::nullopt;
  c2 = std::clamp(c2, 0.0, 1.0);
  const double st = safe_sqrt(s2);
  Candidate c;
  c.v = v;
  c.x = st * sign_c * std::sqrt(c2) / s.sx;
  c.y = st * sign_s * safe_sqrt(1.0 - c2) / s.sy;
  c.f_b = scan_fidelities(family, c.v, c.x, c.y).second;
  return c;
}

} // namespace

// ------------------------------------------------------------ analytic curves

TradeoffPoint two_basis_tradeoff(double F) {
  F = clamp_to_domain(F, 1.0 / 3.0, 1.0, "two_basis_tradeoff");
  const double f_b = (2.0 - F) / 3.0 + 2.0 * std::numbers::sqrt2 / 3.0 * std::sqrt(F * (1.0 - F));
  return TradeoffPoint{F, f_b, TwoBasisParams{F, std::sqrt(F * (1.0 - F) / 2.0), (1.0 - F) / 2.0}};
}

TradeoffPoint qubit_phase_cov_tradeoff(double F) {
  F = clamp_to_domain(F, 0.5, 1.0, "qubit_phase_cov_tradeoff");
  const double f_b = 0.5 + std::sqrt(F * (1.0 - F));
  return TradeoffPoint{F, f_b, QubitPhaseCovParams{F, std::sqrt(F * (1.0 - F)), 1.0 - F}};
}

// --------------------------------------------------- symmetric three-basis

std::vector<LagrangePoint> three_basis_symmetric_stationary_points() {
  std::vector<LagrangePoint> points;
  const double r17 = std::sqrt(17.0);
  // y = z branch: 2y = lambda x and x = (2 lambda - 1) y, so
  // 2 lambda^2 - lambda - 2 = 0; scale from 3x^2 + 12y^2 = 1.
  for (double lambda : {(1.0 + r17) / 4.0, (1.0 - r17) / 4.0}) {
    const double ratio = 2.0 * lambda - 1.0;
    const double y = 1.0 / std::sqrt(3.0 * (ratio * ratio + 4.0));
    const ThreeBasisSymParams p{ratio * y, y, y};
    points.push_back(LagrangePoint{lambda, p, family_fidelities(p).f});
  }
  // lambda = -1/2 branch: x = 0, y = -z, 12 y^2 = 1.
  const double y = 1.0 / std::sqrt(12.0);
  const ThreeBasisSymParams p{0.0, y, -y};
  points.push_back(LagrangePoint{-0.5, p, family_fidelities(p).f});
  return points;
}

double lagrange_residual(const ThreeBasisSymParams& p, double lambda) {
  return std::max({std::abs(p.y + p.z - lambda * p.x), std::abs(p.x + p.z - 2 * lambda * p.y),
                   std::abs(p.x + p.y - 2 * lambda * p.z)});
}

LagrangePoint three_basis_symmetric_optimal() {
  const auto points = three_basis_symmetric_stationary_points();
  return *std::max_element(points.begin(), points.end(),
                           [](const LagrangePoint& a, const LagrangePoint& b) { return a.fidelity < b.fidelity; });
}

// -------------------------------------------------- asymmetric three-basis

TradeoffPoint three_basis_asym_tradeoff(double F) {
  F = clamp_to_domain(F, 1.0 / 3.0, 1.0, "three_basis_asym_tradeoff");
  const double x_max = std::min(safe_sqrt((1.0 - F) / 4.0), safe_sqrt(F / 2.0));
  if (x_max < 1e-15) {
    const ThreeBasisAsymParams p = asym_params(F, 0.0);
    return TradeoffPoint{F, family_fidelities(p).f_tilde, p};
  }

  // Coarse scan to bracket the maximum. x = 0 gives the largest v, so
  // scanning upward and requiring a strict improvement beyond kTieTolerance
  // keeps the largest-v point among ties.
  constexpr int kScan = 4000;
  const double h = x_max / kScan;
  int best = 0;
  double best_val = asym_objective(F, 0.0);
  for (int i = 1; i <= kScan; ++i) {
    const double val = asym_objective(F, i * h);
    if (val > best_val + kTieTolerance) {
      best_val = val;
      best = i;
    }
  }

  double lo = std::max(0, best - 1) * h;
  double hi = std::min(kScan, best + 1) * h;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = asym_objective(F, c);
  double fd = asym_objective(F, d);
  constexpr int kMaxIter = 200;
  int iter = 0;
  for (; iter < kMaxIter && hi - lo > 1e-12; ++iter) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = asym_objective(F, c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = asym_objective(F, d);
    }
  }
  if (hi - lo > 1e-12 || !std::isfinite(fc) || !std::isfinite(fd))
    throw OptimizerError("three_basis_asym_tradeoff: golden-section search did not converge", lo, hi, iter);

  double x = 0.5 * (lo + hi);
  double val = asym_objective(F, x);
  if (val < best_val) {
    x = best * h;
    val = best_val;
  }
  return TradeoffPoint{F, val, asym_params(F, x)};
}

// --------------------------------------------------------------- universal

TradeoffPoint universal_tradeoff(double alpha, std::size_t dim) {
  if (dim < 2) throw std::invalid_argument("universal_tradeoff: dimension must be >= 2");
  if (!(alpha >= -kDomainSlack && alpha <= 1.0 + kDomainSlack))
    throw std::domain_error("universal_tradeoff: alpha " + std::to_string(alpha) + " outside [0, 1]");
  alpha = std::clamp(alpha, 0.0, 1.0);
  const double n = static_cast<double>(dim);
  const double disc = alpha * alpha / (n * n) - alpha * alpha + 1.0;
  if (disc < 0.0) throw std::domain_error("universal_tradeoff: no real beta for this alpha");
  const double beta = -alpha / n + std::sqrt(disc);
  if (beta < -kDomainSlack) throw std::domain_error("universal_tradeoff: no nonnegative beta for this alpha");
  const UniversalParams p{alpha, std::max(beta, 0.0), dim};
  const FamilyFidelities f = family_fidelities(p);
  return TradeoffPoint{f.f, f.f_tilde, p};
}

TradeoffPoint universal_tradeoff_at_fidelity(double F, std::size_t dim) {
  if (dim < 2) throw std::invalid_argument("universal_tradeoff_at_fidelity: dimension must be >= 2");
  F = clamp_to_domain(F, 1.0 / static_cast<double>(dim), 1.0, "universal_tradeoff_at_fidelity");
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (universal_tradeoff(mid, dim).f_a < F ? lo : hi) = mid;
  }
  return universal_tradeoff(0.5 * (lo + hi), dim);
}

// ------------------------------------------------------------- brute force

TradeoffPoint brute_force_optimal(Family family, double F, const BruteForceOptions& options) {
  const Surface s = surface_for(family);
  const auto [f_lo, f_hi] = tradeoff_domain(family);
  F = clamp_to_domain(F, f_lo, f_hi, "brute_force_optimal");
  if (options.resolution < 100) throw std::invalid_argument("brute_force_optimal: resolution must be >= 100");

  const std::size_t R = options.resolution;
  const double theta_span = options.signed_params ? std::numbers::pi : std::numbers::pi / 2;
  const double phi_span = options.signed_params ? 2 * std::numbers::pi : std::numbers::pi / 2;
  const double step = std::max(theta_span, phi_span) / static_cast<double>(R - 1);
  const double tol = step;

  Candidate best;
  std::size_t feasible = 0;
  for (std::size_t i = 0; i < R; ++i) {
    const double theta = theta_span * static_cast<double>(i) / static_cast<double>(R - 1);
    const double ct = std::cos(theta), st = std::sin(theta);
    for (std::size_t j = 0; j < R; ++j) {
      const double phi = phi_span * static_cast<double>(j) / static_cast<double>(R - 1);
      const double v = ct;
      const double x = st * std::cos(phi) / s.sx;
      const double y = st * std::sin(phi) / s.sy;
      const auto [fa, fb] = scan_fidelities(family, v, x, y);
      if (std::abs(fa - F) >= tol) continue;
      ++feasible;
      if (fb > best.f_b + kTieTolerance || (std::abs(fb - best.f_b) <= kTieTolerance && v > best.v)) best = {v, x, y, fb};
    }
  }
  if (feasible == 0)
    throw OptimizerError("brute_force_optimal: no grid point within tolerance of F=" + std::to_string(F) +
                             " at resolution " + std::to_string(R),
                         F - tol, F + tol, 0);

  if (options.polish) {
    const double sign_c = best.x < 0 ? -1.0 : 1.0;
    const double sign_s = best.y < 0 ? -1.0 : 1.0;
    const double sign_v = best.v < 0 ? -1.0 : 1.0;
    // |v| ranges over [sqrt(max(0, (kF-1)/(k-1))), sqrt(F)] on the constraint.
    const double v_min = std::sqrt(std::max(0.0, (s.k * F - 1.0) / (s.k - 1.0)));
    const double v_max = std::sqrt(F);
    auto eval = [&](double mag) -> std::optional<Candidate> {
      mag = std::clamp(mag, v_min, v_max);
      return on_constraint(family, s, F, sign_v * mag, sign_c, sign_s);
    };
    double mag = std::clamp(std::abs(best.v), v_min, v_max);
    std::optional<Candidate> cur = eval(mag);
    if (!cur) cur = eval(0.5 * (v_min + v_max));
    if (cur) {
      mag = std::abs(cur->v);
      double h = std::max(step, 1e-6);
      int iter = 0;
      while (h > 1e-15 && iter++ < 100000) {
        bool moved = false;
        for (double dir : {+1.0, -1.0}) {
          const double trial = std::clamp(mag + dir * h, v_min, v_max);
          if (trial == mag) continue;
          auto c = eval(trial);
          if (c && c->f_b > cur->f_b) {
            cur = c;
            mag = trial;
            moved = true;
            break;
          }
        }
        if (!moved) h *= 0.5;
      }
      best = *cur;
    }
  }

  const FamilyParams params = make_params(family, best.v, best.x, best.y);
  return TradeoffPoint{scan_fidelities(family, best.v, best.x, best.y).first, best.f_b, params};
}

// ------------------------------------------------------------------- curves

std::pair<double, double> tradeoff_domain(Family family, std::size_t dim) {
  switch (family) {
  case Family::two_basis:
  case Family::three_basis_asym: return {1.0 / 3.0, 1.0};
  case Family::qubit_phase_cov: return {0.5, 1.0};
  case Family::universal: return {1.0 / static_cast<double>(dim), 1.0};
  case Family::three_basis_sym: break;
  }
  throw std::invalid_argument("family " + std::string(to_string(family)) + " has no trade-off curve");
}

std::vector<TradeoffPoint> tradeoff_curve(Family family, std::size_t grid, std::size_t dim) {
  if (grid < 2) throw std::invalid_argument("tradeoff_curve: grid must have at least 2 points");
  const auto [lo, hi] = tradeoff_domain(family, dim);
  std::vector<TradeoffPoint> out;
  out.reserve(grid);
  for (std::size_t i = 0; i < grid; ++i) {
    const double F = i + 1 == grid ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid - 1);
    switch (family) {
    case Family::two_basis: out.push_back(two_basis_tradeoff(F)); break;
    case Family::three_basis_asym: out.push_back(three_basis_asym_tradeoff(F)); break;
    case Family::qubit_phase_cov: out.push_back(qubit_phase_cov_tradeoff(F)); break;
    case Family::universal: out.push_back(universal_tradeoff_at_fidelity(F, dim)); break;
    case Family::three_basis_sym: break;
    }
  }
  return out;
}

} // namespace qclone
