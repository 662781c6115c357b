#pragma once

#include "kmw/rational.hpp"
#include "kmw/weight.hpp"

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kmw {

/// A positive affine root in simple-root coordinates. Real roots have
/// multiplicity 1; n*delta has multiplicity l.
struct AffineRoot {
  IntCoords coords;
  int multiplicity = 1;
  bool imaginary = false;
};

/// All positive roots whose alpha_0-coefficient is at most max_grade: beta + n
/// delta for finite roots beta (n >= 1 when beta < 0), and n delta for n >= 1.
std::vector<AffineRoot> positive_roots_up_to(const AffineCartanData& data, int max_grade);

using MultiplicityMap = std::unordered_map<IntCoords, BigInt, IntCoordsHash>;

/// Formal character of V(lam) restricted to weights lam - sum c_i alpha_i with
/// c_0 <= depth. Keys are the root coordinates c; every stored value is > 0.
class TruncatedCharacter {
 public:
  TruncatedCharacter(Weight highest, int depth, MultiplicityMap mults);

  const Weight& highest_weight() const { return highest_; }
  int depth() const { return depth_; }
  const MultiplicityMap& entries() const { return mults_; }
  std::size_t size() const { return mults_.size(); }

  /// Multiplicity at root coordinates c. Throws OutOfWindow when c_0 > depth.
  BigInt mult_at(const IntCoords& c) const;

  /// Multiplicity of mu. Zero when lam - mu is not a nonnegative integral
  /// root combination with c_0 >= 0; OutOfWindow when c_0 > depth.
  BigInt mult(const Weight& mu) const;

  /// Keys whose weight is dominant, in grade order.
  std::vector<IntCoords> dominant_keys() const;
  /// All keys in grade order.
  std::vector<IntCoords> sorted_keys() const;

  TruncatedCharacter truncated(int depth) const;
  /// Same multiplicities attached to another highest weight with equal
  /// Lambda-coordinates (a delta-twist).
  TruncatedCharacter rebased(const Weight& highest) const;

  /// Cache record format, version 1: header lines then "c_0,...,c_l:mult".
  std::string serialize() const;
  static TruncatedCharacter deserialize(const CartanPtr& data, std::string_view text);

 private:
  Weight highest_;
  int depth_;
  MultiplicityMap mults_;
};

enum class FreudenthalStrategy {
  /// Recursion on dominant weights only; other weights by W-orbit expansion.
  DominantOrbits,
  /// Recursion on every weight of the window; support from the membership test.
  AllWeights,
};

/// Exact multiplicities of V(lam) for c_0 <= depth via the Freudenthal
/// recursion. lam must be dominant integral of positive level.
TruncatedCharacter freudenthal(const Weight& lam, int depth,
                               FreudenthalStrategy strategy = FreudenthalStrategy::DominantOrbits);

/// Moves the weight lam - c to the dominant chamber in root coordinates.
/// Returns false as soon as a coordinate turns negative (the weight is then not in P(lam)).
bool dominant_coords(const Weight& lam, IntCoords& c);

inline BigInt mult(const TruncatedCharacter& chr, const Weight& mu) { return chr.mult(mu); }

}  // namespace kmw
