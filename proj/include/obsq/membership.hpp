#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "obsq/numeric.hpp"

namespace obsq {

// How membership amplitudes map to membership-function values.
enum class MembershipModel { BornLike, Arc, CircleSquare };

// Names used by the DSL and CLI: "born", "arc", "circle-square".
std::optional<MembershipModel> parse_membership_model(std::string_view name);
std::string_view membership_model_name(MembershipModel model);

// Membership-function values, one per basis state, each in [0,1] for inputs
// in the documented domain of the producing model.
using MembershipVector = std::vector<double>;

// Born-rule analogue on membership amplitudes: mu_i = alpha_i^2. Defined for
// any dimension and any real inputs; scaling the amplitudes scales the result
// (this model is not scale-invariant).
MembershipVector born_membership(std::span<const double> alpha);

// Two-state arctangent model:
//   mu_0 = (2/pi) * arctan(alpha_1 / alpha_0)
//   mu_1 = (2/pi) * arctan(alpha_0 / alpha_1)
// evaluated with the two-argument arctangent, so a zero denominator yields
// pi/2 (membership 1) instead of dividing by zero. Note the deliberate
// inversion: (1,0) maps to (0,1). The pair always sums to 1, and the model is
// scale-invariant: only the ratio of the amplitudes matters.
// Requires alpha_0, alpha_1 >= 0 (within tol) and not both zero.
std::pair<double, double> arc_membership(double alpha0, double alpha1,
                                         double tol = kDefaultTolerance);

// Two-state arcsine model with signed squares (sign(0) = 0):
//   mu_0 = (2/pi) * arcsin(sqrt((alpha_0^2 sgn alpha_0 - alpha_1^2 sgn alpha_1 + 1)/2))
//   mu_1 = (2/pi) * arcsin(sqrt((alpha_0^2 sgn alpha_0 + alpha_1^2 sgn alpha_1 + 1)/2))
// Defined whenever both arcsine arguments land in [0,1] (within tol), which
// alpha_0^2 + alpha_1^2 <= 1 guarantees. For nonnegative normalized
// amplitudes mu_1 is identically 1.
std::pair<double, double> circle_square_membership(
    double alpha0, double alpha1, double tol = kDefaultTolerance);

// Fuzzy bounds for the equivalent measurement-outcome membership, combining a
// membership pair with its complements:
//   upper = max(min(mu0, 1-mu1), min(1-mu0, mu1))
//   lower = min(max(mu0, 1-mu1), max(1-mu0, mu1))
// Returned as {lower, upper}. When mu0 + mu1 = 1 this degenerates to
// {min(mu0, mu1), max(mu0, mu1)}.
std::pair<double, double> outcome_bounds(double mu0, double mu1);

// Model dispatch. Arc and CircleSquare take exactly two amplitudes; BornLike
// accepts any dimension.
MembershipVector evaluate_membership(MembershipModel model,
                                     std::span<const double> alpha,
                                     double tol = kDefaultTolerance);

}  // namespace obsq
