#include "obsq/membership.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "obsq/errors.hpp"

namespace obsq {
namespace {

// pi/4 and pi/2 differ only in exponent, so atan2's exact quarter/half turns
// divide to exact 0.5 / 1.0 here.
constexpr double kHalfPi = std::numbers::pi / 2.0;

double sign_of(double x) { return static_cast<double>((x > 0.0) - (x < 0.0)); }

}  // namespace

std::optional<MembershipModel> parse_membership_model(std::string_view name) {
  if (name == "born") return MembershipModel::BornLike;
  if (name == "arc") return MembershipModel::Arc;
  if (name == "circle-square") return MembershipModel::CircleSquare;
  return std::nullopt;
}

std::string_view membership_model_name(MembershipModel model) {
  switch (model) {
    case MembershipModel::BornLike: return "born";
    case MembershipModel::Arc: return "arc";
    case MembershipModel::CircleSquare: return "circle-square";
  }
  return "born";
}

MembershipVector born_membership(std::span<const double> alpha) {
  MembershipVector mu(alpha.size());
  std::transform(alpha.begin(), alpha.end(), mu.begin(),
                 [](double a) { return a * a; });
  return mu;
}

std::pair<double, double> arc_membership(double alpha0, double alpha1,
                                         double tol) {
  if (alpha0 < -tol || alpha1 < -tol)
    throw DomainError("arc membership requires non-negative amplitudes");
  alpha0 = std::max(alpha0, 0.0);
  alpha1 = std::max(alpha1, 0.0);
  if (alpha0 == 0.0 && alpha1 == 0.0)
    throw DomainError("arc membership is undefined when both amplitudes are zero");
  return {std::atan2(alpha1, alpha0) / kHalfPi,
          std::atan2(alpha0, alpha1) / kHalfPi};
}

std::pair<double, double> circle_square_membership(double alpha0, double alpha1,
                                                   double tol) {
  const double s0 = alpha0 * alpha0 * sign_of(alpha0);
  const double s1 = alpha1 * alpha1 * sign_of(alpha1);
  const double arg0 = (s0 - s1 + 1.0) / 2.0;
  const double arg1 = (s0 + s1 + 1.0) / 2.0;
  for (double arg : {arg0, arg1}) {
    if (arg < -tol || arg > 1.0 + tol)
      throw DomainError(
          "circle-square membership: arcsine argument outside [0,1]");
  }
  const auto mu = [](double arg) {
    return std::asin(std::sqrt(std::clamp(arg, 0.0, 1.0))) / kHalfPi;
  };
  return {mu(arg0), mu(arg1)};
}

std::pair<double, double> outcome_bounds(double mu0, double mu1) {
  const double upper =
      std::max(std::min(mu0, 1.0 - mu1), std::min(1.0 - mu0, mu1));
  const double lower =
      std::min(std::max(mu0, 1.0 - mu1), std::max(1.0 - mu0, mu1));
  return {lower, upper};
}

MembershipVector evaluate_membership(MembershipModel model,
                                     std::span<const double> alpha,
                                     double tol) {
  switch (model) {
    case MembershipModel::BornLike:
      return born_membership(alpha);
    case MembershipModel::Arc: {
      if (alpha.size() != 2)
        throw DomainError("arc membership is defined for two amplitudes");
      auto [m0, m1] = arc_membership(alpha[0], alpha[1], tol);
      return {m0, m1};
    }
    case MembershipModel::CircleSquare: {
      if (alpha.size() != 2)
        throw DomainError(
            "circle-square membership is defined for two amplitudes");
      auto [m0, m1] = circle_square_membership(alpha[0], alpha[1], tol);
      return {m0, m1};
    }
  }
  throw DomainError("unknown membership model");
}

}  // namespace obsq
