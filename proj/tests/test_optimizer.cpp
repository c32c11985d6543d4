#include <doctest.h>

#include "qclone/cloner.hpp"
#include "qclone/optimizer.hpp"
#include "test_support.hpp"

#include <cmath>
#include <variant>

using namespace qclone;

namespace {

const double kSym3 = (5 + std::sqrt(17.0)) / 12;
const double kTwo = 0.5 + 1 / std::sqrt(12.0);
const double kQubit = 0.5 + 1 / std::sqrt(8.0);

double two_basis_closed(double F) { return (2 - F) / 3 + 2 * std::sqrt(2.0) / 3 * std::sqrt(F * (1 - F)); }
double qubit_closed(double F) { return 0.5 + std::sqrt(F * (1 - F)); }

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
  return out;
}

// Moves along the constraint surface of `family` by perturbing one free
// parameter at fixed F and returns f_b there (nullopt if infeasible).
std::optional<double> asym_neighbor(double F, double x) {
  if (x < 0) return std::nullopt;
  const double v2 = F - 2 * x * x, y2 = (1 - F - 4 * x * x) / 2;
  if (v2 < 0 || y2 < 0) return std::nullopt;
  return family_fidelities(ThreeBasisAsymParams{std::sqrt(v2), x, std::sqrt(y2)}).f_tilde;
}

} // namespace

TEST_CASE("two-basis trade-off closed form") {
  CHECK(two_basis_tradeoff(1.0).f_b == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(two_basis_tradeoff(kTwo).f_b - kTwo) < 1e-12);
  CHECK(std::abs(two_basis_tradeoff(0.9).f_b - 0.64951) < 1e-5);
  CHECK(std::abs(two_basis_tradeoff(0.9).f_b - (1.1 / 3 + 2 * std::sqrt(2.0) / 3 * 0.3)) < 1e-12);
  CHECK_THROWS_AS(two_basis_tradeoff(0.2), std::domain_error);
  CHECK_THROWS_AS(two_basis_tradeoff(1.01), std::domain_error);
  // fixed-point consistency
  const double back = two_basis_tradeoff(two_basis_tradeoff(kTwo).f_b).f_b;
  CHECK(back >= kTwo - 1e-9);
}

TEST_CASE("qubit phase-covariant trade-off closed form") {
  CHECK(qubit_phase_cov_tradeoff(1.0).f_b == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(qubit_phase_cov_tradeoff(0.5).f_b == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(qubit_phase_cov_tradeoff(kQubit).f_b - kQubit) < 1e-12);
  CHECK(std::abs(qubit_phase_cov_tradeoff(0.75).f_b - 0.93301) < 1e-5);
  CHECK_THROWS_AS(qubit_phase_cov_tradeoff(0.4), std::domain_error);
}

TEST_CASE("achieving parameters are normalized and reproduce f_a") {
  for (double F : grid(1.0 / 3, 1.0, 11)) {
    for (const auto& pt : {two_basis_tradeoff(F), three_basis_asym_tradeoff(F), universal_tradeoff_at_fidelity(F)}) {
      CHECK(std::abs(normalization(pt.params) - 1) < 1e-10);
      const auto f = family_fidelities(pt.params);
      CHECK(std::abs(f.f - pt.f_a) < 1e-10);
      CHECK(std::abs(f.f_tilde - pt.f_b) < 1e-10);
    }
  }
  for (double F : grid(0.5, 1.0, 11)) {
    const auto pt = qubit_phase_cov_tradeoff(F);
    CHECK(std::abs(normalization(pt.params) - 1) < 1e-10);
  }
}

TEST_CASE("symmetric three-basis Lagrange solution") {
  const auto opt = three_basis_symmetric_optimal();
  CHECK(std::abs(opt.fidelity - kSym3) < 1e-12);
  CHECK(opt.fidelity == doctest::Approx(0.76026).epsilon(1e-5));
  CHECK(std::abs(opt.lambda - (1 + std::sqrt(17.0)) / 4) < 1e-12);
  CHECK(lagrange_residual(opt.params, opt.lambda) < 1e-9);
  const auto& p = opt.params;
  CHECK(std::abs(p.x - std::sqrt((17 - std::sqrt(17.0)) / 102)) < 1e-12);
  CHECK(std::abs(p.y - std::sqrt((17 + std::sqrt(17.0)) / 408)) < 1e-12);
  CHECK(std::abs(p.y - p.z) < 1e-12);
  CHECK(std::abs(3 * p.x * p.x + 6 * p.y * p.y + 6 * p.z * p.z - 1) < 1e-12);

  const auto pts = three_basis_symmetric_stationary_points();
  bool saw_minimum = false;
  for (const auto& s : pts) {
    CHECK(lagrange_residual(s.params, s.lambda) < 1e-9);
    CHECK(s.fidelity <= opt.fidelity + 1e-12);
    if (std::abs(s.lambda + 0.5) < 1e-12) {
      saw_minimum = true;
      CHECK(std::abs(s.fidelity - 1.0 / 6.0) < 1e-12);
    }
  }
  CHECK(saw_minimum);
}

TEST_CASE("asymmetric three-basis trade-off") {
  CHECK(std::abs(three_basis_asym_tradeoff(1.0).f_b - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(three_basis_asym_tradeoff(kSym3).f_b - kSym3) < 1e-6);
  CHECK_THROWS_AS(three_basis_asym_tradeoff(0.3), std::domain_error);

  // 10^6-point sweep plus polish as the reference at F = 0.85
  BruteForceOptions opts;
  opts.resolution = 1000;
  const auto oracle = brute_force_optimal(Family::three_basis_asym, 0.85, opts);
  const auto got = three_basis_asym_tradeoff(0.85);
  CHECK(std::abs(oracle.f_b - got.f_b) < 1e-6);
  CHECK(std::abs(oracle.f_a - 0.85) < 1e-9);
}

TEST_CASE("asymmetric trade-off curve is monotone non-increasing") {
  const auto curve = tradeoff_curve(Family::three_basis_asym, 101);
  REQUIRE(curve.size() == 101);
  CHECK(curve.front().f_a == doctest::Approx(1.0 / 3.0));
  CHECK(curve.back().f_a == doctest::Approx(1.0));
  for (std::size_t i = 1; i < curve.size(); ++i) CHECK(curve[i].f_b <= curve[i - 1].f_b + 1e-12);
}

TEST_CASE("universal trade-off") {
  for (std::size_t N : {2u, 3u, 5u}) {
    const double n = static_cast<double>(N);
    const double alpha_sym = std::sqrt(n / (2 * (1 + n)));
    const auto sym = universal_tradeoff(alpha_sym, N);
    CHECK(std::abs(sym.f_a - (3 + n) / (2 * (1 + n))) < 1e-12);
    CHECK(std::abs(sym.f_b - sym.f_a) < 1e-12);
    const auto id = universal_tradeoff(1.0, N);
    CHECK(std::abs(id.f_a - 1) < 1e-12);
    CHECK(std::abs(id.f_b - 1 / n) < 1e-12);
    for (double F : grid(1 / n + 1e-3, 1.0, 7)) CHECK(std::abs(universal_tradeoff_at_fidelity(F, N).f_a - F) < 1e-10);
  }
  CHECK(std::abs(universal_tradeoff(std::sqrt(0.375), 3).f_a - 0.75) < 1e-12);
  CHECK(std::abs(universal_tradeoff(std::sqrt(1.0 / 3.0), 2).f_a - 5.0 / 6.0) < 1e-12);
  CHECK_THROWS_AS(universal_tradeoff(1.5, 3), std::domain_error);
}

TEST_CASE("brute-force oracle matches closed forms within 2/resolution") {
  BruteForceOptions opts;
  opts.resolution = 400;
  const double tol = 2.0 / static_cast<double>(opts.resolution);
  for (double F : grid(1.0 / 3 + 0.01, 0.99, 10))
    CHECK(std::abs(brute_force_optimal(Family::two_basis, F, opts).f_b - two_basis_closed(F)) < tol);
  for (double F : grid(0.51, 0.99, 10))
    CHECK(std::abs(brute_force_optimal(Family::qubit_phase_cov, F, opts).f_b - qubit_closed(F)) < tol);
  for (double F : grid(1.0 / 3 + 0.01, 0.99, 10))
    CHECK(std::abs(brute_force_optimal(Family::three_basis_asym, F, opts).f_b - three_basis_asym_tradeoff(F).f_b) <
          tol);
}

TEST_CASE("brute-force oracle: quoted examples") {
  CHECK(std::abs(brute_force_optimal(Family::two_basis, 0.7887).f_b - two_basis_closed(0.7887)) < 1e-3);
  CHECK(std::abs(brute_force_optimal(Family::qubit_phase_cov, kQubit).f_b - kQubit) < 1e-3);
  CHECK(std::abs(brute_force_optimal(Family::three_basis_asym, kSym3).f_b - kSym3) < 1e-3);
}

TEST_CASE("brute-force oracle without polish stays within 2/resolution") {
  BruteForceOptions opts;
  opts.polish = false;
  CHECK(std::abs(brute_force_optimal(Family::qubit_phase_cov, 0.8, opts).f_b - qubit_closed(0.8)) < 2.0 / 400);
}

TEST_CASE("brute-force argument checks") {
  BruteForceOptions opts;
  opts.resolution = 50;
  CHECK_THROWS_AS(brute_force_optimal(Family::two_basis, 0.8, opts), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_optimal(Family::universal, 0.8), std::invalid_argument);
}

TEST_CASE("signed scan finds no better optimum") {
  BruteForceOptions opts;
  opts.resolution = 200;
  opts.signed_params = true;
  for (Family f : {Family::two_basis, Family::three_basis_asym}) {
    for (double F : {0.5, 0.7, 0.9}) {
      const double reference = f == Family::two_basis ? two_basis_closed(F) : three_basis_asym_tradeoff(F).f_b;
      CHECK(brute_force_optimal(f, F, opts).f_b <= reference + 1e-9);
    }
  }
  for (double F : {0.6, 0.8})
    CHECK(brute_force_optimal(Family::qubit_phase_cov, F, opts).f_b <= qubit_closed(F) + 1e-9);
}

TEST_CASE("symmetric fidelities decrease with stronger requirements") {
  const double two = two_basis_tradeoff(kTwo).f_b;
  const double three = three_basis_symmetric_optimal().fidelity;
  const double uni3 = universal_tradeoff(std::sqrt(0.375), 3).f_a;
  const double qubit = qubit_phase_cov_tradeoff(kQubit).f_b;
  const double uni2 = universal_tradeoff(std::sqrt(1.0 / 3.0), 2).f_a;
  CHECK(two > three);
  CHECK(three > uni3);
  CHECK(qubit > uni2);
  CHECK(two == doctest::Approx(0.789).epsilon(1e-3));
  CHECK(three == doctest::Approx(0.760).epsilon(1e-3));
  CHECK(qubit == doctest::Approx(0.854).epsilon(1e-3));
}

TEST_CASE("optimality certificates under constraint-preserving perturbations") {
  for (double F : grid(0.4, 0.95, 8)) {
    const auto pt = three_basis_asym_tradeoff(F);
    const auto& p = std::get<ThreeBasisAsymParams>(pt.params);
    for (double dx : {+1e-4, -1e-4})
      if (auto fb = asym_neighbor(F, p.x + dx)) CHECK(*fb <= pt.f_b + 1e-8);

    const auto tb = two_basis_tradeoff(F);
    const auto& q = std::get<TwoBasisParams>(tb.params);
    // two-basis at fixed F: v^2 + 2x^2 = F, x^2 + 2y^2 ... vary x, re-solve v and y
    for (double dx : {+1e-4, -1e-4}) {
      const double x = q.x + dx, v2 = F - 2 * x * x, y2 = (1 - F - 2 * x * x) / 4;
      if (x < 0 || v2 < 0 || y2 < 0) continue;
      CHECK(family_fidelities(TwoBasisParams{std::sqrt(v2), x, std::sqrt(y2)}).f_tilde <= tb.f_b + 1e-8);
    }
  }
}

TEST_CASE("tradeoff_curve domains") {
  CHECK(tradeoff_curve(Family::qubit_phase_cov, 3).front().f_b == doctest::Approx(1.0));
  CHECK(tradeoff_curve(Family::qubit_phase_cov, 3).back().f_b == doctest::Approx(0.5));
  CHECK_THROWS_AS(tradeoff_curve(Family::three_basis_sym), std::invalid_argument);
  CHECK_THROWS_AS(tradeoff_curve(Family::two_basis, 1), std::invalid_argument);
  const auto two = tradeoff_curve(Family::two_basis, 101);
  for (const auto& pt : two) CHECK(std::abs(pt.f_b - two_basis_closed(pt.f_a)) < 1e-12);
}

// The asymmetric shape is assumed to contain the optimum among all cloners of
// the general canonical form (v x x / y y y / z z z). This is only logged.
TEST_CASE("general canonical three-basis shape (logged)") {
  auto& gen = qclone::testing::rng();
  std::normal_distribution<double> g;
  const double F = 0.85, band = 5e-3;
  double excess = -1;
  int hits = 0;
  for (int t = 0; t < 200000; ++t) {
    double v = std::abs(g(gen)), x = std::abs(g(gen)), y = std::abs(g(gen)), z = std::abs(g(gen));
    const double norm = std::sqrt(v * v + 2 * x * x + 3 * y * y + 3 * z * z);
    v /= norm, x /= norm, y /= norm, z /= norm;
    CMatrix a(3, 3);
    a << v, x, x, y, y, y, z, z, z;
    const AmplitudeMatrix am(a);
    const auto p = am.probabilities();
    const double fa = fidelity_in_basis(p, 2).f;
    if (std::abs(fa - F) > band) continue;
    const auto q = fourier_dual(am).probabilities();
    double fb = 1;
    for (int b = 2; b <= 4; ++b) fb = std::min(fb, fidelity_in_basis(q, b).f);
    excess = std::max(excess, fb - three_basis_asym_tradeoff(fa).f_b);
    ++hits;
  }
  MESSAGE("general shape near F=0.85: " << hits << " samples, max F_tilde above the asymmetric curve " << excess);
  CHECK(hits > 0);
}
