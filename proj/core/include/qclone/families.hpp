#pragma once

// Parametric cloner families and the probability-matrix constraints that
// characterize cloners copying two, three or four qutrit bases equally well.

#include "qclone/cloner.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>

namespace qclone {

enum class Family { two_basis, three_basis_sym, three_basis_asym, universal, qubit_phase_cov };

std::string_view to_string(Family family);
/// Throws std::invalid_argument on an unknown name.
Family family_from_string(std::string_view name);

/// Qutrit cloner copying bases 3 and 4 equally well:
///   (v y y / y x x / y x x),  v^2 + 4x^2 + 4y^2 = 1.
struct TwoBasisParams {
  double v = 1.0, x = 0.0, y = 0.0;
};

/// Self-dual qutrit cloner copying bases 2, 3, 4 equally well:
///   first row (x+y+z, x+g y+g^2 z, x+g^2 y+g z), rows 1, 2 constant y and z;
///   3x^2 + 6y^2 + 6z^2 = 1.
struct ThreeBasisSymParams {
  double x = 0.0, y = 0.0, z = 0.0;
};

/// Asymmetric cloner copying bases 2, 3, 4 equally well:
///   (v y y / x x x / x x x),  v^2 + 6x^2 + 2y^2 = 1.
struct ThreeBasisAsymParams {
  double v = 1.0, x = 0.0, y = 0.0;
};

/// Universal N-level cloner a_{m,n} = alpha delta_{m,0} delta_{n,0} + beta / N,
/// alpha^2 + (2/N) alpha beta + beta^2 = 1. Real alpha and beta only.
struct UniversalParams {
  double alpha = 1.0, beta = 0.0;
  std::size_t dim = 3;
};

/// Qubit cloner copying the z and x bases equally well:
///   (v x / x y),  v^2 + 2x^2 + y^2 = 1.
struct QubitPhaseCovParams {
  double v = 1.0, x = 0.0, y = 0.0;
};

using FamilyParams =
    std::variant<TwoBasisParams, ThreeBasisSymParams, ThreeBasisAsymParams, UniversalParams, QubitPhaseCovParams>;

Family family_of(const FamilyParams& params);
std::size_t dim_of(const FamilyParams& params);

/// Left-hand side of the family normalization condition (should equal 1).
double normalization(const FamilyParams& params);

/// Throws std::invalid_argument if the normalization is off by more than
/// kTolerance.
AmplitudeMatrix build(const FamilyParams& params);

/// Parameters of the Fourier-dual matrix b, which stays inside the family.
FamilyParams dual_params(const FamilyParams& params);

/// Reads family parameters back from a matrix of the family's exact shape
/// (entries real, pattern matched within kTolerance).
std::optional<FamilyParams> match_family(const AmplitudeMatrix& a, Family family);

/// Closed-form clone qualities for the states the family is designed for:
/// bases 3, 4 (two_basis), bases 2-4 / the equator (three_basis_*), all
/// states (universal), z and x bases (qubit_phase_cov).
/// `d` and `d_tilde` are the per-error disturbances.
struct FamilyFidelities {
  double f = 0.0;
  double d = 0.0;
  double f_tilde = 0.0;
  double d_tilde = 0.0;
};

FamilyFidelities family_fidelities(const FamilyParams& params);

/// The three equalities making bases 3 and 4 equally well cloned.
bool check_two_basis_constraints(const ProbabilityMatrix& p, double tol = kTolerance);
/// Equal cloning of bases 2, 3, 4 with D1 = D2.
bool check_three_basis_constraints(const ProbabilityMatrix& p, double tol = kTolerance);
/// Canonical solution shape of the three-basis constraints: rows 1 and 2
/// constant and p_{0,1} = p_{0,2}.
bool is_three_basis_canonical(const ProbabilityMatrix& p, double tol = kTolerance);
/// Three-basis constraints plus equal cloning of the computational basis.
bool check_four_basis_constraints(const ProbabilityMatrix& p, double tol = kTolerance);

} // namespace qclone
