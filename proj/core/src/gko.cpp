#include "kmw/gko.hpp"

#include "kmw/error.hpp"

namespace kmw {

namespace {

void require_positive(const Rational& level_value, std::string_view what) {
  if (level_value <= 0) {
    throw Error(ErrorCode::PositiveLevelRequired,
                std::string(what) + " level must be positive, got " + to_string(level_value));
  }
}

}  // namespace

Rational central_charge(const AffineCartanData& data, const Rational& l, const Rational& m) {
  require_positive(l, "first");
  require_positive(m, "second");
  const Rational h = data.dual_coxeter();
  const Rational c = data.dim_finite() * (l / (l + h) + m / (m + h) - (l + m) / (l + m + h));
  if (c < 0) throw Error(ErrorCode::Internal, "negative GKO central charge");
  return c;
}

Rational casimir(const Weight& w) { return bilinear(w, w + rho(w.data()) * Rational(2)); }

Rational string_rule_value(const Weight& lam, const Weight& mu, const Weight& nu) {
  require_same_type(lam, mu);
  require_same_type(lam, nu);
  const Rational l = level(lam);
  const Rational m = level(mu);
  require_positive(l, "lambda");
  require_positive(m, "mu");
  if (level(nu) != l + m) {
    throw Error(ErrorCode::LevelMismatch, "nu has level " + to_string(level(nu)) + ", expected " +
                                              to_string(l + m));
  }
  const Rational h = lam.cartan().dual_coxeter();
  return casimir(lam) / (l + h) + casimir(mu) / (m + h) - casimir(nu) / (l + m + h);
}

Rational l0_eigenvalue(const Weight& lam, const Weight& mu, const Weight& nu) {
  return string_rule_value(lam, mu, nu) / 2;
}

std::string_view to_string(StringRule rule) {
  return rule == StringRule::AllShiftsPresent ? "AllShiftsPresent" : "GapAtOne";
}

StringRule delta_string_rule(const Weight& lam, const Weight& mu, const Weight& nu) {
  return string_rule_value(lam, mu, nu) != 0 ? StringRule::AllShiftsPresent : StringRule::GapAtOne;
}

KostantValue kostant_positivity(int m_scale, const Weight& lam) {
  if (m_scale < 1) throw Error(ErrorCode::PreconditionFailed, "M must be a positive integer");
  const auto& data = lam.data();
  if (!is_dominant(lam)) {
    throw Error(ErrorCode::PreconditionFailed, "lambda must be dominant integral: " + to_string(lam));
  }
  const Weight r = rho(data);
  if (!dominance_leq(lam, r * Rational(2 * m_scale))) {
    throw Error(ErrorCode::PreconditionFailed,
                to_string(lam) + " is not below 2M rho for M = " + std::to_string(m_scale));
  }
  const Rational h = data->dual_coxeter();
  const Rational mm = m_scale;
  const Rational value = 2 * bilinear(r * mm, r * (mm + 2)) / ((mm + 1) * h) - casimir(lam) / ((2 * mm + 1) * h);
  return {value, value > 0};
}

GkoReport gko_report(const Weight& lam, const Weight& mu, const Weight& nu) {
  return {central_charge(lam.cartan(), level(lam), level(mu)), l0_eigenvalue(lam, mu, nu),
          delta_string_rule(lam, mu, nu)};
}

}  // namespace kmw
