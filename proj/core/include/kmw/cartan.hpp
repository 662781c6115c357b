#pragma once

#include "kmw/linalg.hpp"
#include "kmw/rational.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace kmw {

enum class Family { A, B, C, D, E, F, G };

/// An untwisted affine type X_l^(1), written "Xl~" in text form.
struct AffineType {
  Family family = Family::A;
  int rank = 1;

  /// Validates the family/rank pair. B2 is rejected here; parse() maps it to C2.
  static AffineType make(Family family, int rank);
  /// Accepts "A1~", "C2~", "G2~" (the trailing '~' is optional). "B2~" becomes "C2~".
  static AffineType parse(std::string_view label);

  std::string label() const;

  friend bool operator==(const AffineType&, const AffineType&) = default;
  friend auto operator<=>(const AffineType&, const AffineType&) = default;
};

/// Every admissible type with finite rank at most `max_rank`, E/F/G included.
std::vector<AffineType> admissible_types(int max_rank);

/// Positive roots of a finite-type Cartan matrix in simple-root coordinates.
/// The matrix uses the convention A_ij = <alpha_j, alpha_i^vee>. Roots are
/// sorted by height, then lexicographically.
std::vector<std::vector<int>> finite_positive_roots(const IntMatrix& cartan);

/// Immutable root datum of an untwisted affine algebra. Node 0 is the affine
/// node; nodes 1..l follow Bourbaki numbering of the finite diagram.
class AffineCartanData {
 public:
  static std::shared_ptr<const AffineCartanData> build(const AffineType& type);

  const AffineType& type() const { return type_; }
  std::string label() const { return type_.label(); }
  int rank() const { return type_.rank; }
  int size() const { return type_.rank + 1; }

  /// A_ij = <alpha_j, alpha_i^vee>.
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  const std::vector<int>& marks() const { return marks_; }
  const std::vector<int>& comarks() const { return comarks_; }
  /// d_i with (alpha_i|alpha_j) = d_i A_ij and (theta|theta) = 2.
  const RationalVector& symmetrizers() const { return symmetrizers_; }
  int dual_coxeter() const { return dual_coxeter_; }
  int dim_finite() const { return dim_finite_; }
  /// (Lambda-bar_i | Lambda-bar_j) for finite nodes, indexed 0..l-1.
  const RatMatrix& finite_gram() const { return finite_gram_; }
  /// Inverse of the finite Cartan matrix (nodes 1..l), indexed 0..l-1.
  const RatMatrix& finite_cartan_inverse() const { return finite_cartan_inv_; }
  /// Positive roots of the finite algebra over alpha_1..alpha_l (length l vectors).
  const std::vector<std::vector<int>>& finite_positive_roots() const { return finite_roots_; }
  /// Highest root theta over alpha_1..alpha_l.
  const std::vector<int>& highest_root() const { return finite_roots_.back(); }

  /// (alpha_i | alpha_j) in the normalized form.
  Rational root_form(int i, int j) const { return symmetrizers_[i] * cartan_[i][j]; }
  /// Common denominator L of the symmetrizers; L * d_i is an integer for all i.
  int form_denominator() const { return form_den_; }
  /// L * d_i.
  const std::vector<long>& scaled_symmetrizers() const { return scaled_sym_; }

 private:
  AffineCartanData() = default;

  AffineType type_;
  IntMatrix cartan_;
  std::vector<int> marks_;
  std::vector<int> comarks_;
  RationalVector symmetrizers_;
  int dual_coxeter_ = 0;
  int dim_finite_ = 0;
  RatMatrix finite_gram_;
  RatMatrix finite_cartan_inv_;
  std::vector<std::vector<int>> finite_roots_;
  int form_den_ = 1;
  std::vector<long> scaled_sym_;
};

using CartanPtr = std::shared_ptr<const AffineCartanData>;

/// Interned construction: repeated calls for one type share the same instance.
CartanPtr cartan_data(const AffineType& type);

inline int dual_coxeter(const AffineCartanData& data) { return data.dual_coxeter(); }

}  // namespace kmw
