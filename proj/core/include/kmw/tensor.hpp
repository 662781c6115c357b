#pragma once

#include "kmw/character_cache.hpp"
#include "kmw/characters.hpp"
#include "kmw/weight.hpp"

#include <map>
#include <optional>
#include <vector>

namespace kmw {

struct GradeLess {
  bool operator()(const IntCoords& a, const IntCoords& b) const;
};

/// Multiplicities m^nu of V(nu) in V(lam) (x) V(mu) for every nu whose grade
/// (alpha_0-coefficient of lam + mu - nu) is at most depth. Keys are the root
/// coordinates of lam + mu - nu.
class Decomposition {
 public:
  struct Component {
    IntCoords coords;
    Weight nu;
    int grade;
    BigInt mult;
  };

  Decomposition(Weight lam, Weight mu, int depth, std::map<IntCoords, BigInt, GradeLess> comps);

  const Weight& lhs() const { return lam_; }
  const Weight& rhs() const { return mu_; }
  Weight top() const { return lam_ + mu_; }
  int depth() const { return depth_; }
  const std::map<IntCoords, BigInt, GradeLess>& entries() const { return comps_; }

  /// Zero for nu not below lam + mu; OutOfWindow when the grade exceeds depth.
  BigInt multiplicity(const Weight& nu) const;
  BigInt multiplicity_at(const IntCoords& c) const;

  /// m^nu >= 1 and m^{nu + delta} = 0.
  bool is_delta_maximal_component(const Weight& nu) const;

  std::vector<Component> components() const;

  /// Copy with one multiplicity overwritten (fault injection for harness tests).
  Decomposition with_multiplicity(const IntCoords& c, const BigInt& value) const;

 private:
  Weight lam_;
  Weight mu_;
  int depth_;
  std::map<IntCoords, BigInt, GradeLess> comps_;
};

/// Windowed product of two characters keyed by root coordinates of
/// (lam + mu) - weight, restricted to grade <= depth.
MultiplicityMap multiply(const TruncatedCharacter& a, const TruncatedCharacter& b, int depth);

/// Decomposes V(lam) (x) V(mu) up to the given depth by peeling irreducible
/// characters off the product, highest components first. Uses `cache` for
/// characters when given, otherwise a private in-memory cache.
Decomposition tensor_decompose(const Weight& lam, const Weight& mu, int depth, CharacterCache* cache = nullptr);

/// w(lam) + v(mu) when it is dominant integral.
std::optional<Weight> prv(const Weight& lam, const Weight& mu, const std::vector<int>& w_word,
                          const std::vector<int>& v_word);

inline BigInt multiplicity(const Decomposition& dec, const Weight& nu) { return dec.multiplicity(nu); }
inline bool is_delta_maximal_component(const Decomposition& dec, const Weight& nu) {
  return dec.is_delta_maximal_component(nu);
}

}  // namespace kmw
