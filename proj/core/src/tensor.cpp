#include "kmw/tensor.hpp"

#include "kmw/error.hpp"
#include "kmw/polyhedron.hpp"
#include "kmw/weyl.hpp"

#include <algorithm>

namespace kmw {

bool GradeLess::operator()(const IntCoords& a, const IntCoords& b) const { return grade_order_less(a, b); }

Decomposition::Decomposition(Weight lam, Weight mu, int depth, std::map<IntCoords, BigInt, GradeLess> comps)
    : lam_(std::move(lam)), mu_(std::move(mu)), depth_(depth), comps_(std::move(comps)) {}

BigInt Decomposition::multiplicity_at(const IntCoords& c) const {
  if (c[0] > depth_) {
    throw Error(ErrorCode::OutOfWindow, "component at " + to_string(c) + " lies below depth " +
                                            std::to_string(depth_));
  }
  const auto it = comps_.find(c);
  return it == comps_.end() ? BigInt(0) : it->second;
}

BigInt Decomposition::multiplicity(const Weight& nu) const {
  require_same_type(lam_, nu);
  const Weight diff = top() - nu;
  if (level(diff) != 0) return 0;
  const auto rc = to_root_coords(diff);
  if (!rc.all_integral()) return 0;
  if (rc.coords[0] > depth_) {
    throw Error(ErrorCode::OutOfWindow, "component " + to_string(nu) + " lies below depth " +
                                            std::to_string(depth_));
  }
  if (!rc.all_nonnegative()) return 0;
  IntCoords c;
  for (const auto& v : rc.coords) c.push_back(static_cast<int>(to_int64(v)));
  return multiplicity_at(c);
}

bool Decomposition::is_delta_maximal_component(const Weight& nu) const {
  if (multiplicity(nu) < 1) return false;
  return multiplicity(nu + Weight::delta(nu.data())) == 0;
}

std::vector<Decomposition::Component> Decomposition::components() const {
  std::vector<Component> out;
  const Weight t = top();
  for (const auto& [c, m] : comps_) {
    out.push_back({c, t - from_root_coords(t.data(), c), c[0], m});
  }
  return out;
}

Decomposition Decomposition::with_multiplicity(const IntCoords& c, const BigInt& value) const {
  auto comps = comps_;
  if (value == 0) {
    comps.erase(c);
  } else {
    comps[c] = value;
  }
  return Decomposition(lam_, mu_, depth_, std::move(comps));
}

MultiplicityMap multiply(const TruncatedCharacter& a, const TruncatedCharacter& b, int depth) {
  std::vector<std::vector<std::pair<const IntCoords*, const BigInt*>>> by_grade(depth + 1);
  for (const auto& [c, m] : b.entries())
    if (c[0] <= depth) by_grade[c[0]].emplace_back(&c, &m);
  MultiplicityMap out;
  IntCoords sum;
  for (const auto& [ca, ma] : a.entries()) {
    if (ca[0] > depth) continue;
    for (int g = 0; g + ca[0] <= depth; ++g) {
      for (const auto& [cb, mb] : by_grade[g]) {
        sum = ca;
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += (*cb)[i];
        out[sum] += ma * *mb;
      }
    }
  }
  return out;
}

Decomposition tensor_decompose(const Weight& lam, const Weight& mu, int depth, CharacterCache* cache) {
  require_same_type(lam, mu);
  for (const Weight* w : {&lam, &mu}) {
    if (!is_dominant(*w)) {
      throw Error(ErrorCode::PreconditionFailed, "tensor factors must be dominant integral: " + to_string(*w));
    }
    if (level(*w) <= 0) throw Error(ErrorCode::PositiveLevelRequired, "tensor factors need positive level");
  }
  if (depth < 0) throw Error(ErrorCode::PreconditionFailed, "depth must be nonnegative");
  CharacterCache local;
  CharacterCache& chars = cache ? *cache : local;

  const auto cha = chars.get(lam, depth);
  const auto chb = chars.get(mu, depth);
  MultiplicityMap residual = multiply(*cha, *chb, depth);

  const Weight top = lam + mu;
  const auto& data = top.cartan();
  const int n = top.size();
  std::vector<IntCoords> candidates;
  for (const auto& [c, m] : residual) {
    bool dominant = true;
    for (int i = 0; i < n && dominant; ++i) {
      long v = to_int64(top[i]);
      for (int j = 0; j < n; ++j) v -= static_cast<long>(data.cartan(i, j)) * c[j];
      dominant = v >= 0;
    }
    if (dominant) candidates.push_back(c);
  }
  // A component only receives contributions from strictly higher components,
  // so reading residuals in grade order makes each value final when read.
  std::sort(candidates.begin(), candidates.end(), grade_order_less);

  std::map<IntCoords, BigInt, GradeLess> comps;
  IntCoords shifted(n);
  for (const auto& c : candidates) {
    const BigInt r = residual[c];
    if (r < 0) {
      throw Error(ErrorCode::Internal, "negative residual " + r.get_str() + " at " + to_string(c));
    }
    if (r == 0) continue;
    comps.emplace(c, r);
    const Weight nu = top - from_root_coords(top.data(), c);
    const auto chn = chars.get(nu, depth - c[0]);
    for (const auto& [cn, mn] : chn->entries()) {
      for (int i = 0; i < n; ++i) shifted[i] = c[i] + cn[i];
      residual[shifted] -= r * mn;
    }
  }
  for (const auto& [c, m] : residual) {
    if (m != 0) {
      throw Error(ErrorCode::Internal, "peeling left residual " + m.get_str() + " at " + to_string(c));
    }
  }
  return Decomposition(lam, mu, depth, std::move(comps));
}

std::optional<Weight> prv(const Weight& lam, const Weight& mu, const std::vector<int>& w_word,
                          const std::vector<int>& v_word) {
  require_same_type(lam, mu);
  Weight nu = apply_word(w_word, lam) + apply_word(v_word, mu);
  if (!is_dominant(nu)) return std::nullopt;
  return nu;
}

}  // namespace kmw
