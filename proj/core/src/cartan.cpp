#include "kmw/cartan.hpp"

#include "kmw/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace kmw {

namespace {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

// Simple roots of the finite diagram as Euclidean vectors (Bourbaki planches).
std::vector<RationalVector> simple_root_vectors(const AffineType& t) {
  const int l = t.rank;
  auto e = [](int dim, int i) {
    RationalVector v(dim);
    v[i] = 1;
    return v;
  };
  auto sub = [](RationalVector a, const RationalVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
  };
  auto add = [](RationalVector a, const RationalVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  std::vector<RationalVector> roots;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < l; ++i) roots.push_back(sub(e(l + 1, i), e(l + 1, i + 1)));
      break;
    case Family::B:
    case Family::C:
    case Family::D: {
      for (int i = 0; i + 1 < l; ++i) roots.push_back(sub(e(l, i), e(l, i + 1)));
      RationalVector last = e(l, l - 1);
      if (t.family == Family::C) {
        for (auto& v : last) v *= 2;
      } else if (t.family == Family::D) {
        last = add(e(l, l - 2), e(l, l - 1));
      }
      roots.push_back(last);
      break;
    }
    case Family::E: {
      const int dim = 8;
      RationalVector a1(dim);
      for (int i = 0; i < dim; ++i) a1[i] = Rational(-1, 2);
      a1[0] = Rational(1, 2);
      a1[7] = Rational(1, 2);
      roots.push_back(a1);
      roots.push_back(add(e(dim, 0), e(dim, 1)));
      for (int i = 3; i <= l; ++i) roots.push_back(sub(e(dim, i - 2), e(dim, i - 3)));
      break;
    }
    case Family::F: {
      roots.push_back(sub(e(4, 1), e(4, 2)));
      roots.push_back(sub(e(4, 2), e(4, 3)));
      roots.push_back(e(4, 3));
      RationalVector a4(4, Rational(-1, 2));
      a4[0] = Rational(1, 2);
      roots.push_back(a4);
      break;
    }
    case Family::G:
      roots.push_back(sub(e(3, 0), e(3, 1)));
      roots.push_back(RationalVector{-2, 1, 1});
      break;
  }
  return roots;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

AffineType AffineType::make(Family family, int rank) {
  bool ok = false;
  std::string rule;
  switch (family) {
    case Family::A: ok = rank >= 1; rule = "A requires l >= 1"; break;
    case Family::B:
      ok = rank >= 3;
      rule = rank == 2 ? "B2 is isomorphic to C2; use C2~" : "B requires l >= 3";
      break;
    case Family::C: ok = rank >= 2; rule = "C requires l >= 2"; break;
    case Family::D: ok = rank >= 4; rule = "D requires l >= 4"; break;
    case Family::E: ok = rank >= 6 && rank <= 8; rule = "E requires l in {6,7,8}"; break;
    case Family::F: ok = rank == 4; rule = "F requires l = 4"; break;
    case Family::G: ok = rank == 2; rule = "G requires l = 2"; break;
  }
  if (!ok) {
    throw Error(ErrorCode::InvalidType, std::string("inadmissible type ") + family_letter(family) +
                                            std::to_string(rank) + "~: " + rule);
  }
  return AffineType{family, rank};
}

AffineType AffineType::parse(std::string_view label) {
  std::string_view s = label;
  if (!s.empty() && s.back() == '~') s.remove_suffix(1);
  if (s.size() < 2) throw Error(ErrorCode::InvalidType, "malformed type label '" + std::string(label) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  const auto pos = std::string_view("ABCDEFG").find(letter);
  if (pos == std::string_view::npos) {
    throw Error(ErrorCode::InvalidType, "unknown family in type label '" + std::string(label) + "'");
  }
  int rank = 0;
  for (char c : s.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || rank > 1000) {
      throw Error(ErrorCode::InvalidType, "malformed rank in type label '" + std::string(label) + "'");
    }
    rank = rank * 10 + (c - '0');
  }
  auto family = static_cast<Family>(pos);
  if (family == Family::B && rank == 2) family = Family::C;
  return make(family, rank);
}

std::string AffineType::label() const {
  return std::string(1, family_letter(family)) + std::to_string(rank) + "~";
}

std::vector<AffineType> admissible_types(int max_rank) {
  std::vector<AffineType> out;
  for (int f = 0; f < 7; ++f) {
    for (int r = 1; r <= max_rank; ++r) {
      const auto family = static_cast<Family>(f);
      try {
        out.push_back(AffineType::make(family, r));
      } catch (const Error&) {
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> finite_positive_roots(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.size());
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> r(n, 0);
    r[i] = 1;
    layer.push_back(r);
    known.insert(r);
  }
  std::vector<std::vector<int>> all = layer;
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (int j = 0; j < n; ++j) {
        // p: how far the alpha_j-string through beta extends downward.
        int p = 0;
        auto down = beta;
        while (true) {
          down[j] -= 1;
          if (down[j] < 0 || !known.count(down)) break;
          ++p;
        }
        int pairing = 0;  // <beta, alpha_j^vee>
        for (int i = 0; i < n; ++i) pairing += beta[i] * cartan[j][i];
        if (p - pairing > 0) {
          auto up = beta;
          up[j] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) {
      known.insert(r);
      all.push_back(r);
    }
    if (all.size() > 100000) throw Error(ErrorCode::InfiniteGroup, "Cartan matrix is not of finite type");
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return all;
}

std::shared_ptr<const AffineCartanData> AffineCartanData::build(const AffineType& type_in) {
  const AffineType type = AffineType::make(type_in.family, type_in.rank);
  const int l = type.rank;
  const auto vecs = simple_root_vectors(type);

  IntMatrix finite(l, std::vector<int>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      const Rational a = 2 * dot(vecs[j], vecs[i]) / dot(vecs[i], vecs[i]);
      finite[i][j] = static_cast<int>(to_int64(a));
    }
  }

  std::shared_ptr<AffineCartanData> data(new AffineCartanData());
  data->type_ = type;
  data->finite_roots_ = kmw::finite_positive_roots(finite);
  const auto& theta = data->finite_roots_.back();

  RationalVector theta_vec(vecs[0].size());
  for (int i = 0; i < l; ++i)
    for (std::size_t k = 0; k < theta_vec.size(); ++k) theta_vec[k] += theta[i] * vecs[i][k];
  const Rational theta_norm = dot(theta_vec, theta_vec);
  const Rational scale = 2 / theta_norm;

  const int n = l + 1;
  data->cartan_.assign(n, std::vector<int>(n, 0));
  data->cartan_[0][0] = 2;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) data->cartan_[i][j] = finite[i - 1][j - 1];
    // <alpha_j, alpha_0^vee> = -<alpha_j, theta^vee>
    data->cartan_[0][i] = static_cast<int>(to_int64(-2 * dot(vecs[i - 1], theta_vec) / theta_norm));
    // <alpha_0, alpha_i^vee> = -<theta, alpha_i^vee>
    int pairing = 0;
    for (int k = 0; k < l; ++k) pairing += theta[k] * finite[i - 1][k];
    data->cartan_[i][0] = -pairing;
  }

  data->marks_.assign(n, 1);
  data->symmetrizers_.assign(n, Rational(1));
  data->comarks_.assign(n, 1);
  for (int i = 1; i < n; ++i) {
    data->marks_[i] = theta[i - 1];
    data->symmetrizers_[i] = scale * dot(vecs[i - 1], vecs[i - 1]) / 2;
    data->comarks_[i] = static_cast<int>(to_int64(data->marks_[i] * data->symmetrizers_[i]));
  }
  data->dual_coxeter_ = std::accumulate(data->comarks_.begin(), data->comarks_.end(), 0);
  data->dim_finite_ = l + 2 * static_cast<int>(data->finite_roots_.size());

  auto inv = inverse(to_rational(finite));
  if (!inv) throw Error(ErrorCode::Internal, "finite Cartan matrix is singular");
  data->finite_cartan_inv_ = *inv;
  data->finite_gram_.assign(l, RationalVector(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) data->finite_gram_[i][j] = (*inv)[j][i] * data->symmetrizers_[j + 1];

  BigInt den = 1;
  for (const auto& d : data->symmetrizers_) den = lcm(den, BigInt(d.get_den()));
  data->form_den_ = static_cast<int>(to_int64(den));
  for (const auto& d : data->symmetrizers_) data->scaled_sym_.push_back(to_int64(d * den));
  return data;
}

CartanPtr cartan_data(const AffineType& type) {
  static std::mutex mutex;
  static std::map<AffineType, CartanPtr> interned;
  std::lock_guard lock(mutex);
  auto it = interned.find(type);
  if (it != interned.end()) return it->second;
  auto data = AffineCartanData::build(type);
  interned.emplace(data->type(), data);
  return data;
}

}  // namespace kmw
