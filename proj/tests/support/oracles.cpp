#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace kmw::oracle {

BigInt colored_partitions(int n, int colors) {
  if (n < 0) return 0;
  // prod_k (1 - q^k)^(-colors): multiply by 1/(1 - q^k) once per color.
  std::vector<BigInt> p(n + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int c = 0; c < colors; ++c)
      for (int i = k; i <= n; ++i) p[i] += p[i - k];
  return p[n];
}

BigInt basic_module_multiplicity(const AffineCartanData& data, const IntCoords& c) {
  const int l = data.rank();
  std::vector<long> gamma(l);
  for (int i = 0; i < l; ++i) gamma[i] = static_cast<long>(c[0]) * data.highest_root()[i] - c[i + 1];
  long norm = 0;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) norm += gamma[i] * data.cartan(i + 1, j + 1) * gamma[j];
  return colored_partitions(static_cast<int>(c[0] - norm / 2), l);
}

std::vector<std::vector<int>> finite_roots_by_reflection(const AffineCartanData& data) {
  const int l = data.rank();
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < l; ++i) {
    std::vector<int> e(l, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (int j = 0; j < l; ++j) {
      int pairing = 0;
      for (int k = 0; k < l; ++k) pairing += data.cartan(j + 1, k + 1) * v[k];
      auto w = v;
      w[j] -= pairing;
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  std::vector<std::vector<int>> positive;
  for (const auto& v : seen)
    if (std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; })) positive.push_back(v);
  return positive;
}

namespace {

// Dense array over the box 0 <= c_i <= bound[i].
struct BoxSeries {
  IntCoords bound;
  std::vector<BigInt> data;

  explicit BoxSeries(IntCoords b) : bound(std::move(b)) {
    std::size_t size = 1;
    for (int x : bound) size *= static_cast<std::size_t>(x + 1);
    data.assign(size, 0);
  }
  std::optional<std::size_t> index(const IntCoords& c) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < bound.size(); ++i) {
      if (c[i] < 0 || c[i] > bound[i]) return std::nullopt;
      idx = idx * static_cast<std::size_t>(bound[i] + 1) + static_cast<std::size_t>(c[i]);
    }
    return idx;
  }
  IntCoords coords(std::size_t idx) const {
    IntCoords c(bound.size());
    for (std::size_t i = bound.size(); i-- > 0;) {
      c[i] = static_cast<int>(idx % static_cast<std::size_t>(bound[i] + 1));
      idx /= static_cast<std::size_t>(bound[i] + 1);
    }
    return c;
  }
  // Multiply by 1 / (1 - x^root): g(c) = f(c) + g(c - root), filled in
  // increasing lexicographic order, which respects c - root < c.
  void divide_by(const IntCoords& root) {
    for (std::size_t idx = 0; idx < data.size(); ++idx) {
      IntCoords c = coords(idx);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] -= root[i];
      if (auto j = index(c)) data[idx] += data[*j];
    }
  }
};

}  // namespace

CoordMap weyl_kac_character(const Weight& lam, const IntCoords& bound) {
  const auto& data = lam.cartan();
  const int n = data.size();
  const int l = data.rank();

  // Numerator: sum over w of sign(w) e^{w(lam+rho) - (lam+rho)}, by BFS on the
  // regular orbit. Pairings with coroots and root coordinates are tracked as
  // integers; s_i moves the point down by its pairing along alpha_i.
  struct Node {
    std::vector<long> pairing;
    IntCoords coords;
  };
  BoxSeries series(bound);
  std::vector<long> start(n);
  for (int i = 0; i < n; ++i) start[i] = to_int64(lam[i]) + 1;
  std::map<IntCoords, int> sign;
  std::deque<Node> queue{{start, IntCoords(n, 0)}};
  sign[IntCoords(n, 0)] = 1;
  while (!queue.empty()) {
    Node node = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      const long p = node.pairing[i];
      if (p <= 0) continue;  // only downward steps lengthen w
      Node next = node;
      next.coords[i] += static_cast<int>(p);
      if (next.coords[0] > bound[0]) continue;
      for (int j = 0; j < n; ++j) next.pairing[j] -= p * data.cartan(j, i);
      if (sign.count(next.coords)) continue;
      sign[next.coords] = -sign[node.coords];
      queue.push_back(next);
    }
  }
  for (const auto& [c, s] : sign)
    if (auto idx = series.index(c)) series.data[*idx] += s;

  // Denominator: prod over positive roots of (1 - e^{-alpha})^{mult}.
  std::vector<IntCoords> real;
  const auto finite = finite_roots_by_reflection(data);
  const auto& theta = data.highest_root();
  for (int k = 0; k <= bound[0]; ++k) {
    for (const auto& beta : finite) {
      IntCoords up(n), down(n);
      up[0] = down[0] = k;
      for (int i = 0; i < l; ++i) {
        up[i + 1] = beta[i] + k * theta[i];
        down[i + 1] = k * theta[i] - beta[i];
      }
      real.push_back(up);
      if (k >= 1) real.push_back(down);
    }
    if (k >= 1) {
      IntCoords d(n);
      for (int i = 0; i < n; ++i) d[i] = k * data.marks()[i];
      for (int m = 0; m < l; ++m) real.push_back(d);
    }
  }
  for (const auto& root : real) series.divide_by(root);

  CoordMap out;
  for (std::size_t idx = 0; idx < series.data.size(); ++idx)
    if (series.data[idx] != 0) out[series.coords(idx)] = series.data[idx];
  return out;
}

namespace {

CoordMap brauer_klimyk_once(const Weight& lam, const TruncatedCharacter& mu_char, int depth) {
  const auto& data = lam.cartan();
  const int n = data.size();
  const Weight& mu = mu_char.highest_weight();
  CoordMap out;
  for (const auto& [c, m] : mu_char.entries()) {
    // x = lam + (mu - c) + rho; coords of (lam + mu + rho) - x start at c.
    const Weight nu = mu - from_root_coords(mu.data(), c);
    std::vector<long> pairing(n);
    for (int i = 0; i < n; ++i) pairing[i] = to_int64(lam[i] + nu[i]) + 1;
    IntCoords coords = c;
    int sign = 1;
    for (;;) {
      int i = 0;
      while (i < n && pairing[i] >= 0) ++i;
      if (i == n) break;
      const long p = pairing[i];
      coords[i] += static_cast<int>(p);
      for (int j = 0; j < n; ++j) pairing[j] -= p * data.cartan(j, i);
      sign = -sign;
    }
    if (std::any_of(pairing.begin(), pairing.end(), [](long p) { return p == 0; })) continue;
    if (coords[0] <= depth) out[coords] += sign * m;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

CoordMap brauer_klimyk(const Weight& lam, const Weight& mu, int depth) {
  int extra = depth + 2;
  CoordMap previous = brauer_klimyk_once(lam, freudenthal(mu, depth + extra), depth);
  for (;;) {
    extra *= 2;
    CoordMap next = brauer_klimyk_once(lam, freudenthal(mu, depth + extra), depth);
    if (next == previous) return next;
    if (extra > 64) throw Error(ErrorCode::Internal, "Brauer-Klimyk sum did not stabilize");
    previous = std::move(next);
  }
}

std::vector<IntCoords> support_by_strings(const Weight& lam, int depth) {
  // Every weight other than lam lies on an alpha_i-string whose top is a
  // higher weight, and a string with top t contains t - k alpha_i for
  // 0 <= k <= <t, alpha_i^vee>. Closing under those steps from lam gives P(lam).
  const auto& data = lam.cartan();
  const int n = data.size();
  std::set<IntCoords> seen{IntCoords(n, 0)};
  std::deque<IntCoords> queue{IntCoords(n, 0)};
  auto pairing = [&](const IntCoords& c, int i) {
    long p = to_int64(lam[i]);
    for (int j = 0; j < n; ++j) p -= static_cast<long>(data.cartan(i, j)) * c[j];
    return p;
  };
  while (!queue.empty()) {
    IntCoords c = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      const long p = pairing(c, i);
      for (long k = 1; k <= p; ++k) {
        IntCoords d = c;
        d[i] += static_cast<int>(k);
        if (d[0] > depth) break;
        if (seen.insert(d).second) queue.push_back(d);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

CoordMap recompose(const Decomposition& dec) {
  const int depth = dec.depth();
  CoordMap out;
  for (const auto& comp : dec.components()) {
    const auto chr = freudenthal(comp.nu, depth - comp.grade);
    for (const auto& [c, m] : chr.entries()) {
      IntCoords key = c;
      for (std::size_t i = 0; i < key.size(); ++i) key[i] += comp.coords[i];
      out[key] += comp.mult * m;
    }
  }
  return out;
}

CoordMap product(const Weight& lam, const Weight& mu, int depth) {
  const auto a = freudenthal(lam, depth);
  const auto b = freudenthal(mu, depth);
  CoordMap out;
  for (const auto& [ca, ma] : a.entries())
    for (const auto& [cb, mb] : b.entries()) {
      IntCoords key = ca;
      for (std::size_t i = 0; i < key.size(); ++i) key[i] += cb[i];
      if (key[0] <= depth) out[key] += ma * mb;
    }
  return out;
}

}  // namespace kmw::oracle
