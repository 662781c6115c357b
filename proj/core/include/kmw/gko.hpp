#pragma once

#include "kmw/cartan.hpp"
#include "kmw/rational.hpp"
#include "kmw/weight.hpp"

#include <string_view>

namespace kmw {

/// dim g * (l/(l+h) + m/(m+h) - (l+m)/(l+m+h)) for positive levels l, m.
Rational central_charge(const AffineCartanData& data, const Rational& l, const Rational& m);

/// (w | w + 2 rho), the Casimir scalar on V(w).
Rational casimir(const Weight& w);

/// Scalar of L_0 on the V(nu)-isotypic top of V(lam) (x) V(mu).
/// Throws LevelMismatch unless level(nu) = level(lam) + level(mu).
Rational l0_eigenvalue(const Weight& lam, const Weight& mu, const Weight& nu);

enum class StringRule { AllShiftsPresent, GapAtOne };
std::string_view to_string(StringRule rule);

/// (lam|lam+2rho)/(l+h) + (mu|mu+2rho)/(m+h) - (nu|nu+2rho)/(l+m+h); twice l0_eigenvalue.
Rational string_rule_value(const Weight& lam, const Weight& mu, const Weight& nu);

/// Which shifts nu - k delta accompany a delta-maximal component nu:
/// all k >= 0 when the value above is nonzero, else k = 0 and k >= 2.
/// Delta-maximality of nu is the caller's responsibility.
StringRule delta_string_rule(const Weight& lam, const Weight& mu, const Weight& nu);

struct KostantValue {
  Rational value;
  /// False flags a counterexample to strict positivity.
  bool positive;
};

/// 2(M rho | (M+2) rho) / ((M+1) h) - (lam | lam + 2 rho) / ((2M+1) h).
/// Throws PreconditionFailed unless lam is dominant integral and lam <= 2 M rho.
KostantValue kostant_positivity(int m_scale, const Weight& lam);

struct GkoReport {
  Rational central_charge;
  Rational l0;
  StringRule rule;
};

GkoReport gko_report(const Weight& lam, const Weight& mu, const Weight& nu);

}  // namespace kmw
