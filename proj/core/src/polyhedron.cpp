#include "kmw/polyhedron.hpp"

#include "kmw/error.hpp"
#include "kmw/simplex.hpp"

#include <algorithm>
#include <numeric>

namespace kmw {

bool grade_order_less(const IntCoords& a, const IntCoords& b) {
  if (a[0] != b[0]) return a[0] < b[0];
  const int ha = std::accumulate(a.begin(), a.end(), 0);
  const int hb = std::accumulate(b.begin(), b.end(), 0);
  if (ha != hb) return ha < hb;
  return a < b;
}

DominantPolyhedron build_polyhedron(const Weight& lam) {
  if (!is_regular_dominant(lam)) {
    throw Error(ErrorCode::NotRegular, "build_polyhedron needs regular dominant integral lambda, got " +
                                           to_string(lam));
  }
  const Weight base = lam.normalized();
  const Weight shift = Weight::delta(lam.data()) * lam.d_pairing();
  DominantPolyhedron poly{lam, lam.d_pairing(), {}, -Weight::delta(lam.data())};
  for (const auto& j : ParabolicSubset::all_proper(lam.size())) {
    poly.vertices.emplace(j, vertex_candidate(j, base) + shift);
  }
  return poly;
}

std::vector<std::pair<ParabolicSubset, Weight>> build_polyhedron_conjectural(const Weight& lam) {
  if (!is_dominant(lam)) {
    throw Error(ErrorCode::PreconditionFailed, "candidate vertices need dominant integral lambda");
  }
  std::vector<std::pair<ParabolicSubset, Weight>> out;
  for (const auto& j : ParabolicSubset::all_proper(lam.size())) out.emplace_back(j, vertex_candidate(j, lam));
  return out;
}

bool contains_root_test(const Weight& lam, const Weight& mu) {
  require_same_type(lam, mu);
  if (!is_rational_dominant(mu)) return false;
  const Weight diff = lam - mu;
  if (level(diff) != 0) return false;
  return to_root_coords(diff).all_nonnegative();
}

std::optional<DecompositionCertificate> decomposition_certificate(const DominantPolyhedron& poly,
                                                                  const Weight& mu) {
  require_same_type(poly.lam, mu);
  const int n = mu.size();
  const std::size_t nv = poly.vertices.size();
  // Unknowns: u_J for each vertex, then t. Rows: n Lambda-coordinates,
  // the delta coordinate, and sum u_J = 1.
  RatMatrix a(n + 2, RationalVector(nv + 1));
  RationalVector b(n + 2);
  std::size_t col = 0;
  for (const auto& [j, v] : poly.vertices) {
    for (int i = 0; i < n; ++i) a[i][col] = v[i];
    a[n][col] = v.delta_coord();
    a[n + 1][col] = 1;
    ++col;
  }
  for (int i = 0; i < n; ++i) {
    a[i][nv] = poly.ray[i];
    b[i] = mu[i];
  }
  a[n][nv] = poly.ray.delta_coord();
  b[n] = mu.delta_coord();
  b[n + 1] = 1;
  const auto x = find_nonnegative_solution(a, b);
  if (!x) return std::nullopt;
  DecompositionCertificate cert;
  col = 0;
  for (const auto& [j, v] : poly.vertices) {
    if ((*x)[col] != 0) cert.weights.emplace(j, (*x)[col]);
    ++col;
  }
  cert.ray_length = (*x)[nv];
  return cert;
}

bool contains_decomposition_test(const DominantPolyhedron& poly, const Weight& mu) {
  return decomposition_certificate(poly, mu).has_value();
}

bool weight_membership(const Weight& lam, const Weight& mu) {
  require_same_type(lam, mu);
  if (!mu.is_integral() || level(mu) != level(lam)) return false;
  if (level(lam) <= 0) {
    throw Error(ErrorCode::PositiveLevelRequired, "weight membership is implemented for positive level");
  }
  return dominance_leq(to_dominant(mu).weight, lam);
}

std::vector<int> box_bound(const Weight& lam, int depth) {
  const auto poly = build_polyhedron(lam);
  const auto& marks = lam.cartan().marks();
  std::vector<Rational> best(lam.size());
  for (const auto& [j, v] : poly.vertices) {
    const auto c = to_root_coords(poly.lam - v);
    for (int i = 0; i < lam.size(); ++i) best[i] = std::max(best[i], c.coords[i]);
  }
  std::vector<int> out(lam.size());
  for (int i = 0; i < lam.size(); ++i) {
    out[i] = static_cast<int>(to_int64(floor_div(best[i]))) + depth * marks[i];
  }
  return out;
}

namespace {

bool coords_dominant(const Weight& lam, const IntCoords& c) {
  const auto& data = lam.cartan();
  const int n = lam.size();
  for (int i = 0; i < n; ++i) {
    long m = to_int64(lam[i]);
    for (int j = 0; j < n; ++j) m -= static_cast<long>(data.cartan(i, j)) * c[j];
    if (m < 0) return false;
  }
  return true;
}

void require_positive_dominant(const Weight& lam) {
  if (!is_dominant(lam)) {
    throw Error(ErrorCode::PreconditionFailed, "expected dominant integral weight, got " + to_string(lam));
  }
  if (level(lam) <= 0) {
    throw Error(ErrorCode::PositiveLevelRequired, "expected positive level, got " + to_string(lam));
  }
}

}  // namespace

std::vector<IntCoords> dominant_coords_by_box(const Weight& lam, int depth) {
  require_positive_dominant(lam);
  const auto bound = box_bound(lam, depth);
  const int n = lam.size();
  std::vector<IntCoords> out;
  IntCoords c(n, 0);
  while (true) {
    if (c[0] <= depth && coords_dominant(lam, c)) out.push_back(c);
    int i = 0;
    while (i < n && c[i] == bound[i]) c[i++] = 0;
    if (i == n) break;
    ++c[i];
  }
  std::sort(out.begin(), out.end(), grade_order_less);
  return out;
}

namespace {

// Visits every level-k dominant finite part mu-bar with lam - mu in the root
// lattice. The callback receives the root coordinates at the smallest
// admissible c_0; raising c_0 by one adds delta = sum a_i alpha_i.
template <class Fn>
void for_each_finite_part(const Weight& lam, Fn&& fn) {
  const auto& data = lam.cartan();
  const int l = data.rank();
  const long k = to_int64(level(lam));
  const auto& comarks = data.comarks();
  const auto& marks = data.marks();
  const auto& inv = data.finite_cartan_inverse();

  std::vector<long> m(l, 0);
  auto visit = [&](auto&& self, int pos, long budget) -> void {
    if (pos == l) {
      RationalVector gamma(l);
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) gamma[i] += inv[i][j] * (lam[j + 1] - m[j]);
      for (const auto& g : gamma)
        if (!is_integer(g)) return;
      long c0 = 0;
      for (int i = 0; i < l; ++i) c0 = std::max(c0, static_cast<long>(to_int64(ceil_of(-gamma[i] / marks[i + 1]))));
      IntCoords c(l + 1);
      c[0] = static_cast<int>(c0);
      for (int i = 0; i < l; ++i) c[i + 1] = static_cast<int>(c0 * marks[i + 1] + to_int64(gamma[i]));
      fn(std::move(c));
      return;
    }
    for (long v = 0; v * comarks[pos + 1] <= budget; ++v) {
      m[pos] = v;
      self(self, pos + 1, budget - v * comarks[pos + 1]);
    }
  };
  visit(visit, 0, k);
}

}  // namespace

std::vector<IntCoords> dominant_coords_by_alcove(const Weight& lam, int depth) {
  require_positive_dominant(lam);
  const auto& marks = lam.cartan().marks();
  std::vector<IntCoords> out;
  for_each_finite_part(lam, [&](IntCoords c) {
    while (c[0] <= depth) {
      out.push_back(c);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += marks[i];
    }
  });
  std::sort(out.begin(), out.end(), grade_order_less);
  return out;
}

std::vector<Weight> delta_maximal_dominant(const Weight& lam) {
  require_positive_dominant(lam);
  const auto& marks = lam.cartan().marks();
  const int n = lam.size();
  std::vector<IntCoords> coords;
  if (is_regular_dominant(lam)) {
    const auto bound = box_bound(lam, 1);
    IntCoords c(n, 0);
    while (true) {
      bool support = false;
      for (int i = 0; i < n; ++i) support = support || c[i] < marks[i];
      if (support && coords_dominant(lam, c)) coords.push_back(c);
      int i = 0;
      while (i < n && c[i] == bound[i]) c[i++] = 0;
      if (i == n) break;
      ++c[i];
    }
  } else {
    for_each_finite_part(lam, [&](IntCoords c) { coords.push_back(std::move(c)); });
  }
  std::sort(coords.begin(), coords.end(), grade_order_less);
  std::vector<Weight> out;
  out.reserve(coords.size());
  for (const auto& c : coords) out.push_back(lam - from_root_coords(lam.data(), c));
  return out;
}

}  // namespace kmw
