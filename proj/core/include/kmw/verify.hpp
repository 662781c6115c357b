#pragma once

#include "kmw/cartan.hpp"
#include "kmw/character_cache.hpp"
#include "kmw/weight.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kmw {

enum class CheckStatus { Pass, Fail, Skipped };
std::string_view to_string(CheckStatus status);

struct Check {
  std::string name;
  std::string subject;
  CheckStatus status = CheckStatus::Skipped;
  nlohmann::json witness;
  double seconds = 0;
};

struct Report {
  std::string kind;
  std::string type_label;
  int depth = 0;
  std::vector<Check> checks;
  /// One entry per failed check: the subject weight and the offending value.
  std::vector<nlohmann::json> counterexamples;
  nlohmann::json metadata = nlohmann::json::object();
  /// Wall-clock figures outside the checks; emitted only with timing.
  nlohmann::json timing = nlohmann::json::object();

  bool passed() const;
  std::size_t count(CheckStatus status) const;
  nlohmann::json to_json(bool include_timing = true) const;
  std::string to_table() const;
  std::string to_csv() const;
};

struct VerifyOptions {
  int threads = 1;
  /// Shared character store; a private memory cache is used when null.
  CharacterCache* cache = nullptr;
  /// Fault injection: zero out the component at these root coordinates of
  /// the decomposition before checking.
  std::optional<IntCoords> corrupt_component;
};

/// Default truncation depth: 2 for rank <= 2, otherwise 1.
int default_depth(const AffineType& type);

/// Dominant integral mu <= lam whose alpha_0-coefficient in lam - mu is at
/// most depth, in grade order.
std::vector<Weight> enumerate_dominant_below(const Weight& lam, int depth);

/// beta := lam - M rho lies in P(M rho). Throws PreconditionFailed unless lam
/// is dominant integral with lam <= 2 M rho.
bool verify_rho_decomposition(const Weight& lam, int m_scale = 1);

/// Every dominant lam <= 2 rho in the window occurs in V(rho) (x) V(rho);
/// also runs the rho-decomposition and positivity checks per lam.
Report verify_conjecture(const AffineType& type, int depth, const VerifyOptions& options = {});

/// Every delta-maximal dominant lam <= 2 rho of grade <= depth has V(d lam)
/// inside V(d rho) (x) V(d rho); decomposes to depth d * depth.
Report verify_saturated(const AffineType& type, int saturation, int depth, const VerifyOptions& options = {});

/// For each delta-maximal component nu of V(rho) (x) V(rho) in the window:
/// the string rule says AllShiftsPresent and every nu - k delta in the window occurs.
Report verify_delta_strings(const AffineType& type, int depth, const VerifyOptions& options = {});

}  // namespace kmw
