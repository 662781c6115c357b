#pragma once

#include "kmw/weight.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace kmw {

/// A subset J of the node set I = {0,...,l}, kept sorted and duplicate-free.
class ParabolicSubset {
 public:
  ParabolicSubset() = default;
  explicit ParabolicSubset(std::vector<int> nodes);

  /// Sorted comma list such as "0,2"; the empty string is the empty subset.
  static ParabolicSubset parse(std::string_view text);
  /// All proper subsets of {0,...,size-1}, ordered by bitmask.
  static std::vector<ParabolicSubset> all_proper(int size);

  const std::vector<int>& nodes() const { return nodes_; }
  bool contains(int i) const;
  bool empty() const { return nodes_.empty(); }
  /// J != I for a diagram with `size` nodes.
  bool is_proper(int size) const { return static_cast<int>(nodes_.size()) < size; }
  std::string to_string() const;

  friend bool operator==(const ParabolicSubset&, const ParabolicSubset&) = default;
  friend bool operator<(const ParabolicSubset& a, const ParabolicSubset& b);

 private:
  std::vector<int> nodes_;
};

/// s_i(w) = w - <w, alpha_i^vee> alpha_i.
Weight reflect(int i, const Weight& w);

/// Applies s_{word[0]} s_{word[1]} ... s_{word[k-1]} to w (rightmost first).
Weight apply_word(const std::vector<int>& word, const Weight& w);

struct DominantForm {
  Weight weight;
  /// Reflections in the order they were applied to the input; the input is
  /// recovered as apply_word(word, weight). Not necessarily reduced.
  std::vector<int> word;
};

/// Moves w into the dominant chamber by repeatedly reflecting in the smallest
/// node index with a negative pairing. Requires positive level unless w is
/// already dominant.
DominantForm to_dominant(const Weight& w);

/// Orbit of w under W_J (J proper) by breadth-first closure, sorted.
std::vector<Weight> parabolic_orbit(const ParabolicSubset& j, const Weight& w);

/// Average of lam over its W_J-orbit.
Weight vertex_candidate(const ParabolicSubset& j, const Weight& lam);

/// lam - sum_{k in J} n_k alpha_k with n solving the restricted Cartan system.
/// Throws NegativeCoefficient when some n_k < 0.
Weight vertex_candidate_by_solve(const ParabolicSubset& j, const Weight& lam);

/// rho + w_0^J(rho), with w_0^J(rho) reached by descents inside J.
Weight rho_plus_longest(const ParabolicSubset& j, const CartanPtr& data);

/// 2 rho minus the sum of the positive roots of the finite root system on J.
Weight rho_plus_longest_by_roots(const ParabolicSubset& j, const CartanPtr& data);

/// Cartan submatrix on J in the A_ij = <alpha_j, alpha_i^vee> convention.
IntMatrix restricted_cartan(const AffineCartanData& data, const ParabolicSubset& j);

}  // namespace kmw
