// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include "qclone/qclone.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace qclone;

namespace {

const double kTwo = 0.5 + 1 / std::sqrt(12.0);
const double kThree = (5 + std::sqrt(17.0)) / 12;
const double kQubit = 0.5 + 1 / std::sqrt(8.0);

std::mt19937_64 gen(7);

StateVector random_state(std::size_t dim) {
  std::normal_distribution<double> g;
  CVector v(static_cast<Eigen::Index>(dim));
  for (auto& z : v) z = Complex(g(gen), g(gen));
  return StateVector::renormalize(v);
}

AmplitudeMatrix random_amplitudes(std::size_t dim) {
  std::normal_distribution<double> g;
  const auto n = static_cast<Eigen::Index>(dim);
  CMatrix a(n, n);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = Complex(g(gen), g(gen));
  return AmplitudeMatrix(a / a.norm());
}

AmplitudeMatrix universal_symmetric(std::size_t N) {
  const double n = static_cast<double>(N);
  const double ab = std::sqrt(n / (2 * (1 + n)));
  return build(UniversalParams{ab, ab, N});
}

std::pair<double, double> clone_fidelities(const AmplitudeMatrix& a, const StateVector& psi) {
  const auto o = clone_outputs_mixture(a, psi);
  return {fidelity(psi, o.rho_a), fidelity(psi, o.rho_b)};
}

double two_basis_closed(double F) { return (2 - F) / 3 + 2 * std::sqrt(2.0) / 3 * std::sqrt(F * (1 - F)); }

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome two_basis_symmetric() {
  const auto mubs = qutrit_mubs();
  const auto pt = two_basis_tradeoff(kTwo);
  const auto a = build(pt.params);
  double worst = std::abs(pt.f_b - kTwo);
  for (std::size_t b : {2u, 3u})
    for (std::size_t k = 0; k < 3; ++k) {
      const auto [fa, fb] = clone_fidelities(a, mubs[b][k]);
      worst = std::max({worst, std::abs(fa - kTwo), std::abs(fb - kTwo)});
    }
  const double lower = 0.5 + 1 / (2 * std::sqrt(12.0));
  double worst_low = 0;
  for (std::size_t b : {0u, 1u})
    for (std::size_t k = 0; k < 3; ++k) {
      const auto [fa, fb] = clone_fidelities(a, mubs[b][k]);
      worst_low = std::max({worst_low, std::abs(fa - lower), std::abs(fb - lower)});
    }
  return {worst < 1e-9 && worst_low < 1e-9, fmt("F=%.12f max|d|=%.1e; bases 1,2 max|d|=%.1e", kTwo, worst, worst_low)};
}

Outcome two_basis_tradeoff_curve() {
  const auto psi = qutrit_mubs()[2][0];
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const double F = 1.0 / 3 + (2.0 / 3) * i / 19;
    const auto [fa, fb] = clone_fidelities(build(two_basis_tradeoff(F).params), psi);
    worst = std::max({worst, std::abs(fa - F), std::abs(fb - two_basis_closed(F))});
  }
  const auto [fa1, fb1] = clone_fidelities(build(two_basis_tradeoff(1.0).params), psi);
  const double end = std::max(std::abs(fa1 - 1), std::abs(fb1 - 1.0 / 3));
  return {worst < 1e-9 && end < 1e-10, fmt("20 points max|d|=%.1e; endpoint |d|=%.1e", worst, end)};
}

Outcome three_basis_symmetric() {
  const auto opt = three_basis_symmetric_optimal();
  const auto& p = opt.params;
  const double s = std::sqrt(17.0);
  const bool closed_form = std::abs(p.x - std::sqrt((17 - s) / 102)) < 1e-12 &&
                       std::abs(p.y - std::sqrt((17 + s) / 408)) < 1e-12 && std::abs(p.z - p.y) < 1e-12;
  const auto a = build(p);
  double worst = std::abs(opt.fidelity - kThree);
  const auto mubs = qutrit_mubs();
  for (std::size_t b = 1; b < 4; ++b) {
    const auto [fa, fb] = clone_fidelities(a, mubs[b][0]);
    worst = std::max({worst, std::abs(fa - kThree), std::abs(fb - kThree)});
  }
  const double lagrange = lagrange_residual(p, opt.lambda);
  const double dual = (fourier_dual(a).entries() - a.entries()).cwiseAbs().maxCoeff();
  return {closed_form && worst < 1e-9 && lagrange < 1e-9 && dual < 1e-10,
          fmt("F_max=%.12f max|d|=%.1e, Lagrange residual %.1e", kThree, worst, lagrange) +
              fmt(", |b-a|=%.1e", dual)};
}

Outcome equator_covariance() {
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  const auto sym = build(three_basis_symmetric_optimal().params);
  const auto asym = build(three_basis_asym_tradeoff(0.85).params);
  double spread = 0;
  for (const auto* a : {&sym, &asym}) {
    double lo = 1, hi = 0;
    for (int t = 0; t < 50; ++t) {
      const double f = clone_fidelities(*a, equator_state({angle(gen), angle(gen)}, 0)).first;
      lo = std::min(lo, f);
      hi = std::max(hi, f);
    }
    spread = std::max(spread, hi - lo);
  }
  return {spread < 1e-9, fmt("max-min over 50 equator states = %.1e", spread)};
}

Outcome universal() {
  double worst = 0;
  for (std::size_t N : {2u, 3u}) {
    const double expect = N == 3 ? 0.75 : 5.0 / 6;
    const auto a = universal_symmetric(N);
    for (int t = 0; t < 30; ++t) {
      const auto [fa, fb] = clone_fidelities(a, random_state(N));
      worst = std::max({worst, std::abs(fa - expect), std::abs(fb - expect)});
    }
  }
  double formula = 0;
  for (std::size_t N : {2u, 3u, 5u}) {
    const double n = static_cast<double>(N);
    const double f = clone_fidelities(universal_symmetric(N), random_state(N)).first;
    formula = std::max(formula, std::abs(f - (3 + n) / (2 * (1 + n))));
  }
  return {worst < 1e-9 && formula < 1e-9, fmt("symmetric max|d|=%.1e; (3+N)/(2(1+N)) max|d|=%.1e", worst, formula)};
}

Outcome qubit_phase_covariant() {
  const auto mubs = qubit_mubs();
  const auto a = build(qubit_phase_cov_tradeoff(kQubit).params);
  double worst = 0, third = 0;
  for (std::size_t b = 0; b < 2; ++b)
    for (std::size_t k = 0; k < 2; ++k) {
      const auto [fa, fb] = clone_fidelities(a, mubs[b][k]);
      worst = std::max({worst, std::abs(fa - kQubit), std::abs(fb - kQubit)});
    }
  for (std::size_t k = 0; k < 2; ++k) third = std::max(third, std::abs(clone_fidelities(a, mubs[2][k]).first - 0.75));
  BruteForceOptions opts;
  opts.resolution = 400;
  double oracle = 0;
  for (double F : {0.55, 0.65, 0.75, 0.854, 0.95}) {
    const double closed = 0.5 + std::sqrt(F * (1 - F));
    oracle = std::max(oracle, std::abs(brute_force_optimal(Family::qubit_phase_cov, F, opts).f_b - closed));
  }
  return {worst < 1e-9 && third < 1e-9 && oracle < 2.5e-3,
          fmt("symmetric |d|=%.1e, third basis |d|=%.1e, oracle max|d|=%.1e", worst, third, oracle)};
}

Outcome mixture_projection() {
  double worst = 0;
  for (std::size_t N : {2u, 3u})
    for (int t = 0; t < 50; ++t) {
      const auto a = random_amplitudes(N);
      const auto psi = random_state(N);
      const auto m = clone_outputs_mixture(a, psi);
      const auto p = clone_by_projection(a, psi);
      worst = std::max({worst, (m.rho_a.entries() - p.rho_a.entries()).cwiseAbs().maxCoeff(),
                        (m.rho_b.entries() - p.rho_b.entries()).cwiseAbs().maxCoeff()});
    }
  return {worst < 1e-10, fmt("100 cloners, max entry |d|=%.1e", worst)};
}

Outcome fourier_structure() {
  double worst = 0;
  for (std::size_t N : {2u, 3u})
    for (int t = 0; t < 100; ++t) {
      const auto a = random_amplitudes(N);
      const CMatrix aF = row_fourier(a, FourierDirection::forward).entries();
      const CMatrix bF = row_fourier(fourier_dual(a), FourierDirection::forward).entries();
      worst = std::max(worst, (bF - aF.transpose()).cwiseAbs().maxCoeff());
    }
  return {worst < 1e-10, fmt("200 matrices, max |b^F - (a^F)^T|=%.1e", worst)};
}

Outcome entropic() {
  double slack = 1e9;
  bool ok = true;
  for (std::size_t N : {2u, 3u})
    for (int t = 0; t < 100; ++t) {
      const auto a = random_amplitudes(N);
      const auto c = entropic_check(a.probabilities(), fourier_dual(a).probabilities());
      slack = std::min(slack, c.entropy_sum - c.bound);
      ok = ok && c.entropy_sum >= c.bound - 1e-9;
    }
  double eq = 0;
  for (std::size_t N : {2u, 3u}) {
    const auto id = AmplitudeMatrix::identity(N);
    const auto c = entropic_check(id.probabilities(), fourier_dual(id).probabilities());
    eq = std::max(eq, std::abs(c.entropy_sum - c.bound));
  }
  return {ok && eq < 1e-9, fmt("200 cloners, min H[p]+H[q]-bound=%.3e; identity |d|=%.1e", slack, eq)};
}

Outcome asym_tradeoff() {
  const auto start = std::chrono::steady_clock::now();
  const auto curve = tradeoff_curve(Family::three_basis_asym, 101);
  bool monotone = true;
  for (std::size_t i = 1; i < curve.size(); ++i) monotone = monotone && curve[i].f_b <= curve[i - 1].f_b + 1e-12;
  const double end = std::abs(three_basis_asym_tradeoff(1.0).f_b - 1.0 / 3);
  const double sym = std::abs(three_basis_asym_tradeoff(kThree).f_b - kThree);
  BruteForceOptions opts;
  opts.resolution = 400;
  double oracle = 0;
  for (int i = 0; i < 10; ++i) {
    const double F = 0.35 + 0.064 * i;
    oracle = std::max(oracle, std::abs(brute_force_optimal(Family::three_basis_asym, F, opts).f_b -
                                       three_basis_asym_tradeoff(F).f_b));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {monotone && end < 1e-6 && sym < 1e-6 && oracle < 1e-6 && secs <= 60,
          fmt("monotone=%g, (1,1/3) |d|=%.1e, symmetric |d|=%.1e", monotone ? 1.0 : 0.0, end, sym) +
              fmt(", oracle max|d|=%.1e, %.2f s", oracle, secs)};
}

Outcome ordering() {
  const double two = two_basis_tradeoff(kTwo).f_b;
  const double three = three_basis_symmetric_optimal().fidelity;
  const double uni = universal_tradeoff(std::sqrt(0.375), 3).f_a;
  return {two > three && three > uni, fmt("%.6f > %.6f > %.6f", two, three, uni)};
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"two-basis symmetric fidelity", two_basis_symmetric},
      {"two-basis trade-off", two_basis_tradeoff_curve},
      {"three-basis symmetric optimum", three_basis_symmetric},
      {"generalized-equator covariance", equator_covariance},
      {"universal cloner", universal},
      {"qubit phase-covariant cloner", qubit_phase_covariant},
      {"mixture-projection equivalence", mixture_projection},
      {"Fourier-duality structure", fourier_structure},
      {"entropic no-cloning", entropic},
      {"three-basis asymmetric trade-off", asym_tradeoff},
      {"ordering of symmetric fidelities", ordering},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
