#include "kmw/weight.hpp"

#include "kmw/error.hpp"

#include <algorithm>

namespace kmw {

Weight::Weight(CartanPtr data, RationalVector lambda_coords, Rational delta_coord)
    : data_(std::move(data)), lambda_(std::move(lambda_coords)), delta_(std::move(delta_coord)) {
  if (static_cast<int>(lambda_.size()) != data_->size()) {
    throw Error(ErrorCode::Parse, "weight for " + data_->label() + " needs " +
                                      std::to_string(data_->size()) + " Lambda-coordinates, got " +
                                      std::to_string(lambda_.size()));
  }
}

Weight Weight::zero(CartanPtr data) {
  const int n = data->size();
  return Weight(std::move(data), RationalVector(n), 0);
}

Weight Weight::fundamental(CartanPtr data, int i) {
  RationalVector m(data->size());
  m.at(i) = 1;
  return Weight(std::move(data), std::move(m), 0);
}

Weight Weight::delta(CartanPtr data) {
  const int n = data->size();
  return Weight(std::move(data), RationalVector(n), 1);
}

Weight Weight::simple_root(CartanPtr data, int j) {
  const int n = data->size();
  RationalVector m(n);
  for (int i = 0; i < n; ++i) m[i] = data->cartan(i, j);
  return Weight(std::move(data), std::move(m), j == 0 ? 1 : 0);
}

bool Weight::is_integral() const {
  return std::all_of(lambda_.begin(), lambda_.end(), [](const Rational& r) { return is_integer(r); });
}

void require_same_type(const Weight& a, const Weight& b) {
  if (a.data() != b.data() && a.cartan().type() != b.cartan().type()) {
    throw Error(ErrorCode::TypeMismatch,
                "weights of " + a.cartan().label() + " and " + b.cartan().label() + " are not comparable");
  }
}

Weight& Weight::operator+=(const Weight& other) {
  require_same_type(*this, other);
  for (std::size_t i = 0; i < lambda_.size(); ++i) lambda_[i] += other.lambda_[i];
  delta_ += other.delta_;
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  require_same_type(*this, other);
  for (std::size_t i = 0; i < lambda_.size(); ++i) lambda_[i] -= other.lambda_[i];
  delta_ -= other.delta_;
  return *this;
}

Weight& Weight::operator*=(const Rational& scalar) {
  for (auto& m : lambda_) m *= scalar;
  delta_ *= scalar;
  return *this;
}

bool operator==(const Weight& a, const Weight& b) {
  return a.cartan().type() == b.cartan().type() && a.lambda_ == b.lambda_ && a.delta_ == b.delta_;
}

bool operator<(const Weight& a, const Weight& b) {
  require_same_type(a, b);
  if (a.lambda_ != b.lambda_) {
    return std::lexicographical_compare(a.lambda_.begin(), a.lambda_.end(), b.lambda_.begin(),
                                        b.lambda_.end());
  }
  return a.delta_ < b.delta_;
}

Weight Weight::normalized() const { return Weight(data_, lambda_, 0); }

bool RootCoords::all_nonnegative() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c >= 0; });
}

bool RootCoords::all_integral() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return is_integer(c); });
}

Rational RootCoords::height() const {
  Rational h = 0;
  for (const auto& c : coords) h += c;
  return h;
}

Weight rho(CartanPtr data) {
  const int n = data->size();
  return Weight(std::move(data), RationalVector(n, Rational(1)), 0);
}

Rational level(const Weight& w) {
  Rational k = 0;
  const auto& comarks = w.cartan().comarks();
  for (int i = 0; i < w.size(); ++i) k += comarks[i] * w[i];
  return k;
}

Rational bilinear(const Weight& a, const Weight& b) {
  require_same_type(a, b);
  const auto& gram = a.cartan().finite_gram();
  const int l = a.cartan().rank();
  Rational s = 0;
  for (int i = 0; i < l; ++i) {
    if (a[i + 1] == 0) continue;
    for (int j = 0; j < l; ++j) s += a[i + 1] * gram[i][j] * b[j + 1];
  }
  s += level(a) * b.delta_coord() + level(b) * a.delta_coord();
  return s;
}

RootCoords to_root_coords(const Weight& diff) {
  const auto& data = diff.cartan();
  if (level(diff) != 0) {
    throw Error(ErrorCode::NotInRootSpan,
                "weight " + to_string(diff) + " has level " + to_string(level(diff)) + ", not 0");
  }
  const int l = data.rank();
  RootCoords out;
  out.coords.assign(l + 1, Rational(0));
  out.coords[0] = diff.delta_coord();
  // Finite rows: sum_{j>=1} A_ij c_j = m_i - A_i0 c_0.
  RationalVector rhs(l);
  for (int i = 1; i <= l; ++i) rhs[i - 1] = diff[i] - data.cartan(i, 0) * out.coords[0];
  const auto fin = multiply(data.finite_cartan_inverse(), rhs);
  for (int i = 1; i <= l; ++i) out.coords[i] = fin[i - 1];
  return out;
}

Weight from_root_coords(const CartanPtr& data, const RationalVector& coords) {
  const int n = data->size();
  RationalVector m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i] += data->cartan(i, j) * coords[j];
  return Weight(data, std::move(m), coords[0]);
}

Weight from_root_coords(const CartanPtr& data, const IntCoords& coords) {
  RationalVector r(coords.begin(), coords.end());
  return from_root_coords(data, r);
}

bool dominance_leq(const Weight& mu, const Weight& lam) {
  require_same_type(mu, lam);
  const Weight diff = lam - mu;
  if (level(diff) != 0) return false;
  const auto c = to_root_coords(diff);
  return c.all_integral() && c.all_nonnegative();
}

bool is_rational_dominant(const Weight& w) {
  return std::all_of(w.lambda_coords().begin(), w.lambda_coords().end(),
                     [](const Rational& m) { return m >= 0; });
}

bool is_dominant(const Weight& w) { return w.is_integral() && is_rational_dominant(w); }

bool is_regular_dominant(const Weight& w) {
  return w.is_integral() && std::all_of(w.lambda_coords().begin(), w.lambda_coords().end(),
                                        [](const Rational& m) { return m > 0; });
}

namespace {

Rational parse_component(std::string_view part, std::string_view text) {
  try {
    return parse_rational(part);
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, "in weight '" + std::string(text) + "': " + e.what());
  }
}

}  // namespace

Weight parse_weight(const CartanPtr& data, std::string_view text) {
  std::string_view lam_part = text;
  Rational delta = 0;
  if (const auto semi = text.find(';'); semi != std::string_view::npos) {
    lam_part = text.substr(0, semi);
    delta = parse_component(text.substr(semi + 1), text);
  }
  RationalVector coords;
  std::size_t start = 0;
  while (true) {
    const auto comma = lam_part.find(',', start);
    coords.push_back(parse_component(lam_part.substr(start, comma - start), text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(coords.size()) != data->size()) {
    throw Error(ErrorCode::Parse, "weight '" + std::string(text) + "' has " + std::to_string(coords.size()) +
                                      " coordinates; " + data->label() + " needs " +
                                      std::to_string(data->size()));
  }
  return Weight(data, std::move(coords), std::move(delta));
}

std::string to_string(const Weight& w) {
  std::string out;
  for (int i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += to_string(w[i]);
  }
  out += ';';
  out += to_string(w.delta_coord());
  return out;
}

std::string to_string(const IntCoords& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

}  // namespace kmw
