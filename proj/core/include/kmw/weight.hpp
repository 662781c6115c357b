#pragma once

#include "kmw/cartan.hpp"
#include "kmw/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace kmw {

/// A weight sum_i m_i Lambda_i + c * delta with exact rational coordinates.
/// Weights remember their root datum; mixing types raises TypeMismatch.
class Weight {
 public:
  Weight(CartanPtr data, RationalVector lambda_coords, Rational delta_coord = 0);

  static Weight zero(CartanPtr data);
  static Weight fundamental(CartanPtr data, int i);
  static Weight delta(CartanPtr data);
  static Weight simple_root(CartanPtr data, int j);

  const CartanPtr& data() const { return data_; }
  const AffineCartanData& cartan() const { return *data_; }
  int size() const { return static_cast<int>(lambda_.size()); }

  const RationalVector& lambda_coords() const { return lambda_; }
  const Rational& delta_coord() const { return delta_; }
  /// <w, alpha_i^vee>
  const Rational& operator[](int i) const { return lambda_[i]; }
  /// <w, d>
  const Rational& d_pairing() const { return delta_; }

  bool is_integral() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Rational& scalar);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Weight a, const Rational& s) { return a *= s; }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }

  friend bool operator==(const Weight& a, const Weight& b);
  /// Lexicographic on (lambda coords, delta coord); only meaningful within one type.
  friend bool operator<(const Weight& a, const Weight& b);

  /// Same weight with <w, d> = 0.
  Weight normalized() const;

 private:
  CartanPtr data_;
  RationalVector lambda_;
  Rational delta_;
};

/// Coefficients c_i of a level-zero vector sum_i c_i alpha_i.
struct RootCoords {
  RationalVector coords;

  bool all_nonnegative() const;
  bool all_integral() const;
  Rational height() const;
  friend bool operator==(const RootCoords&, const RootCoords&) = default;
};

/// Integer root coordinates; the key type for characters and decompositions.
using IntCoords = std::vector<int>;

struct IntCoordsHash {
  std::size_t operator()(const IntCoords& c) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int v : c) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(v));
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

void require_same_type(const Weight& a, const Weight& b);

Weight rho(CartanPtr data);
Rational level(const Weight& w);
/// Normalized invariant form: finite part via finite_gram plus the delta cross terms.
Rational bilinear(const Weight& a, const Weight& b);

/// Solves diff = sum c_i alpha_i. Throws NotInRootSpan when level(diff) != 0.
RootCoords to_root_coords(const Weight& diff);
Weight from_root_coords(const CartanPtr& data, const RationalVector& coords);
Weight from_root_coords(const CartanPtr& data, const IntCoords& coords);

/// mu <= lam in dominance order. Unequal levels compare false.
bool dominance_leq(const Weight& mu, const Weight& lam);

/// Integral with every m_i >= 0 (membership in P^+).
bool is_dominant(const Weight& w);
/// Integral with every m_i > 0.
bool is_regular_dominant(const Weight& w);
/// Every m_i >= 0, rational coordinates allowed.
bool is_rational_dominant(const Weight& w);

/// Text form "m0,m1,...,ml;c" with rationals as p/q. A missing ";c" reads as 0.
Weight parse_weight(const CartanPtr& data, std::string_view text);
std::string to_string(const Weight& w);
std::string to_string(const IntCoords& c);

}  // namespace kmw
