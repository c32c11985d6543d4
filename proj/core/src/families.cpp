#include "qclone/families.hpp"

#include "qclone/weyl_bell.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qclone {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

CMatrix real_pattern(std::size_t n, auto&& entry) {
  CMatrix a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k) a(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)) = entry(m, k);
  return a;
}

void require_normalized(const FamilyParams& params) {
  const double n = normalization(params);
  if (std::abs(n - 1.0) > kTolerance)
    throw std::invalid_argument(std::string("build: ") + std::string(to_string(family_of(params))) +
                                " parameters violate the normalization condition (got " + std::to_string(n) + ")");
}

bool is_real(const CMatrix& a, double tol) { return a.imag().cwiseAbs().maxCoeff() <= tol; }

} // namespace

std::string_view to_string(Family family) {
  switch (family) {
  case Family::two_basis: return "two_basis";
  case Family::three_basis_sym: return "three_basis_sym";
  case Family::three_basis_asym: return "three_basis_asym";
  case Family::universal: return "universal";
  case Family::qubit_phase_cov: return "qubit_phase_cov";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::two_basis, Family::three_basis_sym, Family::three_basis_asym, Family::universal,
                   Family::qubit_phase_cov})
    if (to_string(f) == name) return f;
  throw std::invalid_argument("unknown cloner family '" + std::string(name) + "'");
}

Family family_of(const FamilyParams& params) {
  return std::visit(overloaded{
                        [](const TwoBasisParams&) { return Family::two_basis; },
                        [](const ThreeBasisSymParams&) { return Family::three_basis_sym; },
                        [](const ThreeBasisAsymParams&) { return Family::three_basis_asym; },
                        [](const UniversalParams&) { return Family::universal; },
                        [](const QubitPhaseCovParams&) { return Family::qubit_phase_cov; },
                    },
                    params);
}

std::size_t dim_of(const FamilyParams& params) {
  return std::visit(overloaded{
                        [](const UniversalParams& u) { return u.dim; },
                        [](const QubitPhaseCovParams&) { return std::size_t{2}; },
                        [](const auto&) { return std::size_t{3}; },
                    },
                    params);
}

double normalization(const FamilyParams& params) {
  return std::visit(overloaded{
                        [](const TwoBasisParams& p) { return p.v * p.v + 4 * p.x * p.x + 4 * p.y * p.y; },
                        [](const ThreeBasisSymParams& p) { return 3 * p.x * p.x + 6 * p.y * p.y + 6 * p.z * p.z; },
                        [](const ThreeBasisAsymParams& p) { return p.v * p.v + 6 * p.x * p.x + 2 * p.y * p.y; },
                        [](const UniversalParams& p) {
                          return p.alpha * p.alpha + 2.0 / static_cast<double>(p.dim) * p.alpha * p.beta +
                                 p.beta * p.beta;
                        },
                        [](const QubitPhaseCovParams& p) { return p.v * p.v + 2 * p.x * p.x + p.y * p.y; },
                    },
                    params);
}

AmplitudeMatrix build(const FamilyParams& params) {
  require_normalized(params);
  const CMatrix a = std::visit(
      overloaded{
          [](const TwoBasisParams& p) {
            return real_pattern(3, [&](std::size_t m, std::size_t n) {
              if (m == 0 && n == 0) return p.v;
              return (m == 0 || n == 0) ? p.y : p.x;
            });
          },
          [](const ThreeBasisSymParams& p) {
            const Complex g = root_of_unity(1, 3);
            const Complex g2 = root_of_unity(2, 3);
            CMatrix m(3, 3);
            m.row(0) << p.x + p.y + p.z, p.x + g * p.y + g2 * p.z, p.x + g2 * p.y + g * p.z;
            m.row(1).setConstant(p.y);
            m.row(2).setConstant(p.z);
            return m;
          },
          [](const ThreeBasisAsymParams& p) {
            return real_pattern(3, [&](std::size_t m, std::size_t n) {
              if (m == 0) return n == 0 ? p.v : p.y;
              return p.x;
            });
          },
          [](const UniversalParams& p) {
            const double off = p.beta / static_cast<double>(p.dim);
            return real_pattern(p.dim, [&](std::size_t m, std::size_t n) { return (m == 0 && n == 0) ? p.alpha + off : off; });
          },
          [](const QubitPhaseCovParams& p) {
            CMatrix m(2, 2);
            m << p.v, p.x, p.x, p.y;
            return m;
          },
      },
      params);
  return AmplitudeMatrix(a);
}

FamilyParams dual_params(const FamilyParams& params) {
  return std::visit(overloaded{
                        [](const TwoBasisParams& p) -> FamilyParams {
                          return TwoBasisParams{(p.v + 4 * p.x + 4 * p.y) / 3, (p.v + p.x - 2 * p.y) / 3,
                                                (p.v - 2 * p.x + p.y) / 3};
                        },
                        [](const ThreeBasisSymParams& p) -> FamilyParams { return p; },
                        [](const ThreeBasisAsymParams& p) -> FamilyParams {
                          return ThreeBasisAsymParams{(p.v + 6 * p.x + 2 * p.y) / 3, (p.v - p.y) / 3,
                                                      (p.v - 3 * p.x + 2 * p.y) / 3};
                        },
                        [](const UniversalParams& p) -> FamilyParams { return UniversalParams{p.beta, p.alpha, p.dim}; },
                        [](const QubitPhaseCovParams& p) -> FamilyParams {
                          return QubitPhaseCovParams{(p.v + 2 * p.x + p.y) / 2, (p.v - p.y) / 2,
                                                     (p.v - 2 * p.x + p.y) / 2};
                        },
                    },
                    params);
}

std::optional<FamilyParams> match_family(const AmplitudeMatrix& a, Family family) {
  const double tol = kTolerance;
  const CMatrix& e = a.entries();
  const std::size_t N = a.dim();
  std::optional<FamilyParams> candidate;

  switch (family) {
  case Family::two_basis:
    if (N != 3 || !is_real(e, tol)) return std::nullopt;
    candidate = TwoBasisParams{e(0, 0).real(), e(1, 1).real(), e(0, 1).real()};
    break;
  case Family::three_basis_sym: {
    if (N != 3) return std::nullopt;
    // (x, y, z) from the constant rows and the row-0 mean.
    const double y = e(1, 0).real();
    const double z = e(2, 0).real();
    const double x = (e(0, 0).real() - y - z);
    candidate = ThreeBasisSymParams{x, y, z};
    break;
  }
  case Family::three_basis_asym:
    if (N != 3 || !is_real(e, tol)) return std::nullopt;
    candidate = ThreeBasisAsymParams{e(0, 0).real(), e(1, 0).real(), e(0, 1).real()};
    break;
  case Family::universal: {
    if (!is_real(e, tol)) return std::nullopt;
    const double off = e(0, 1).real();
    const double beta = off * static_cast<double>(N);
    candidate = UniversalParams{e(0, 0).real() - off, beta, N};
    break;
  }
  case Family::qubit_phase_cov:
    if (N != 2 || !is_real(e, tol)) return std::nullopt;
    candidate = QubitPhaseCovParams{e(0, 0).real(), e(0, 1).real(), e(1, 1).real()};
    break;
  }

  if (std::abs(normalization(*candidate) - 1.0) > tol) return std::nullopt;
  const CMatrix rebuilt = build(*candidate).entries();
  if ((rebuilt - e).cwiseAbs().maxCoeff() > tol) return std::nullopt;
  return candidate;
}

FamilyFidelities family_fidelities(const FamilyParams& params) {
  require_normalized(params);
  return std::visit(
      overloaded{
          [](const TwoBasisParams& p) {
            const double v = p.v, x = p.x, y = p.y;
            return FamilyFidelities{v * v + 2 * x * x, x * x + 2 * y * y,
                                    (v * v + 6 * x * x + 8 * y * y + 4 * v * x + 8 * x * y) / 3,
                                    (v * v + 3 * x * x + 2 * y * y - 2 * v * x - 4 * x * y) / 3};
          },
          [](const ThreeBasisSymParams& p) {
            const double x = p.x, y = p.y, z = p.z;
            const double f = x * x + 2 * y * y + 2 * z * z + 2 * x * y + 2 * y * z + 2 * x * z;
            const double d = x * x + 2 * y * y + 2 * z * z - x * y - y * z - x * z;
            return FamilyFidelities{f, d, f, d};
          },
          [](const ThreeBasisAsymParams& p) {
            const double v = p.v, x = p.x, y = p.y;
            return FamilyFidelities{v * v + 2 * x * x, 2 * x * x + y * y,
                                    (v * v + 12 * x * x + 2 * y * y + 4 * v * x + 8 * x * y) / 3,
                                    (v * v + 3 * x * x + 2 * y * y - 2 * v * x - 4 * x * y) / 3};
          },
          [](const UniversalParams& p) {
            const double n = static_cast<double>(p.dim);
            const double a = p.alpha, b = p.beta;
            return FamilyFidelities{(a + b / n) * (a + b / n) + (n - 1) * (b / n) * (b / n), b * b / n,
                                    (b + a / n) * (b + a / n) + (n - 1) * (a / n) * (a / n), a * a / n};
          },
          [](const QubitPhaseCovParams& p) {
            const double v = p.v, x = p.x, y = p.y;
            return FamilyFidelities{v * v + x * x, x * x + y * y, 0.5 + v * x + x * y, 0.5 - v * x - x * y};
          },
      },
      params);
}

// ----------------------------------------------------------------- predicates

bool check_two_basis_constraints(const ProbabilityMatrix& p, double tol) {
  if (p.dim() != 3) return false;
  const auto& P = p;
  return near(P(1, 1) + P(2, 2), P(1, 2) + P(2, 1), tol) && near(P(1, 2) + P(2, 0), P(1, 0) + P(2, 2), tol) &&
         near(P(1, 0) + P(2, 1), P(1, 1) + P(2, 0), tol);
}

bool check_three_basis_constraints(const ProbabilityMatrix& p, double tol) {
  if (p.dim() != 3) return false;
  const auto& P = p;
  const auto all_equal = [&](double a, double b, double c) { return near(a, b, tol) && near(b, c, tol); };
  return near(P(0, 1) + P(1, 1) + P(2, 1), P(0, 2) + P(1, 2) + P(2, 2), tol) &&
         all_equal(P(1, 0) + P(2, 0), P(1, 1) + P(2, 2), P(1, 2) + P(2, 1)) &&
         all_equal(P(1, 1) + P(2, 1), P(1, 2) + P(2, 0), P(1, 0) + P(2, 2)) &&
         all_equal(P(1, 2) + P(2, 2), P(1, 0) + P(2, 1), P(1, 1) + P(2, 0));
}

bool is_three_basis_canonical(const ProbabilityMatrix& p, double tol) {
  if (p.dim() != 3) return false;
  const auto& P = p;
  return near(P(0, 1), P(0, 2), tol) && near(P(1, 0), P(1, 1), tol) && near(P(1, 1), P(1, 2), tol) &&
         near(P(2, 0), P(2, 1), tol) && near(P(2, 1), P(2, 2), tol);
}

bool check_four_basis_constraints(const ProbabilityMatrix& p, double tol) {
  if (!check_three_basis_constraints(p, tol)) return false;
  const auto& P = p;
  return near(P(0, 1) + P(0, 2), P(1, 0) + P(2, 0), tol) && near(P(1, 0) + P(1, 2), P(0, 1) + P(2, 1), tol) &&
         near(P(2, 0) + P(2, 1), P(0, 2) + P(1, 2), tol);
}

} // namespace qclone
