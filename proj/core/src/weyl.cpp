#include "kmw/weyl.hpp"

#include "kmw/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace kmw {

ParabolicSubset::ParabolicSubset(std::vector<int> nodes) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
}

ParabolicSubset ParabolicSubset::parse(std::string_view text) {
  std::vector<int> nodes;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    if (token.empty()) throw Error(ErrorCode::Parse, "empty node in subset '" + std::string(text) + "'");
    int v = 0;
    for (char c : token) {
      if (c < '0' || c > '9') throw Error(ErrorCode::Parse, "bad node '" + std::string(token) + "'");
      v = v * 10 + (c - '0');
    }
    nodes.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ParabolicSubset(std::move(nodes));
}

std::vector<ParabolicSubset> ParabolicSubset::all_proper(int size) {
  std::vector<ParabolicSubset> out;
  const unsigned full = (1u << size) - 1;
  for (unsigned mask = 0; mask < full; ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < size; ++i)
      if (mask & (1u << i)) nodes.push_back(i);
    out.emplace_back(std::move(nodes));
  }
  return out;
}

bool ParabolicSubset::contains(int i) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), i);
}

std::string ParabolicSubset::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(nodes_[i]);
  }
  return out;
}

bool operator<(const ParabolicSubset& a, const ParabolicSubset& b) {
  if (a.nodes_.size() != b.nodes_.size()) return a.nodes_.size() < b.nodes_.size();
  return a.nodes_ < b.nodes_;
}

namespace {

void require_proper(const ParabolicSubset& j, const AffineCartanData& data) {
  for (int i : j.nodes()) {
    if (i < 0 || i >= data.size()) {
      throw Error(ErrorCode::PreconditionFailed, "node " + std::to_string(i) + " outside I for " + data.label());
    }
  }
  if (!j.is_proper(data.size())) {
    throw Error(ErrorCode::InfiniteGroup, "W_I is the full affine Weyl group, which is infinite");
  }
}

}  // namespace

Weight reflect(int i, const Weight& w) {
  const Rational m = w[i];
  if (m == 0) return w;
  const auto& data = w.cartan();
  RationalVector coords = w.lambda_coords();
  for (int k = 0; k < w.size(); ++k) coords[k] -= m * data.cartan(k, i);
  Rational delta = w.delta_coord();
  if (i == 0) delta -= m;
  return Weight(w.data(), std::move(coords), std::move(delta));
}

Weight apply_word(const std::vector<int>& word, const Weight& w) {
  Weight out = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = reflect(*it, out);
  return out;
}

DominantForm to_dominant(const Weight& w) {
  if (!is_rational_dominant(w) && level(w) <= 0) {
    throw Error(ErrorCode::PositiveLevelRequired,
                "to_dominant needs positive level; " + to_string(w) + " has level " + to_string(level(w)));
  }
  DominantForm out{w, {}};
  while (true) {
    int node = -1;
    for (int i = 0; i < out.weight.size(); ++i) {
      if (out.weight[i] < 0) {
        node = i;
        break;
      }
    }
    if (node < 0) break;
    out.weight = reflect(node, out.weight);
    out.word.push_back(node);
  }
  return out;
}

std::vector<Weight> parabolic_orbit(const ParabolicSubset& j, const Weight& w) {
  require_proper(j, w.cartan());
  std::set<Weight> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (int node : j.nodes()) {
      Weight next = reflect(node, cur);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

Weight vertex_candidate(const ParabolicSubset& j, const Weight& lam) {
  const auto orbit = parabolic_orbit(j, lam);
  Weight sum = Weight::zero(lam.data());
  for (const auto& w : orbit) sum += w;
  return sum * Rational(1, static_cast<long>(orbit.size()));
}

IntMatrix restricted_cartan(const AffineCartanData& data, const ParabolicSubset& j) {
  const auto& nodes = j.nodes();
  IntMatrix sub(nodes.size(), std::vector<int>(nodes.size()));
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = 0; b < nodes.size(); ++b) sub[a][b] = data.cartan(nodes[a], nodes[b]);
  return sub;
}

Weight vertex_candidate_by_solve(const ParabolicSubset& j, const Weight& lam) {
  require_proper(j, lam.cartan());
  if (j.empty()) return lam;
  const auto& nodes = j.nodes();
  // <lam - sum_k n_k alpha_k, alpha_a^vee> = 0 for a in J.
  RationalVector rhs;
  for (int a : nodes) rhs.push_back(lam[a]);
  const auto n = solve(to_rational(restricted_cartan(lam.cartan(), j)), rhs);
  if (!n) throw Error(ErrorCode::Internal, "restricted Cartan matrix on J is singular");
  Weight out = lam;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if ((*n)[k] < 0) {
      throw Error(ErrorCode::NegativeCoefficient, "solved coefficient n_" + std::to_string(nodes[k]) + " = " +
                                                      to_string((*n)[k]) + " is negative");
    }
    out -= Weight::simple_root(lam.data(), nodes[k]) * (*n)[k];
  }
  return out;
}

Weight rho_plus_longest(const ParabolicSubset& j, const CartanPtr& data) {
  require_proper(j, *data);
  Weight w = rho(data);
  // Descend inside W_J until w is J-antidominant; that point is w_0^J(rho).
  while (true) {
    int node = -1;
    for (int i : j.nodes()) {
      if (w[i] > 0) {
        node = i;
        break;
      }
    }
    if (node < 0) break;
    w = reflect(node, w);
  }
  return rho(data) + w;
}

Weight rho_plus_longest_by_roots(const ParabolicSubset& j, const CartanPtr& data) {
  require_proper(j, *data);
  Weight out = rho(data) * Rational(2);
  if (j.empty()) return out;
  const auto roots = finite_positive_roots(restricted_cartan(*data, j));
  const auto& nodes = j.nodes();
  for (const auto& beta : roots) {
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (beta[k]) out -= Weight::simple_root(data, nodes[k]) * Rational(beta[k]);
    }
  }
  return out;
}

}  // namespace kmw
