#include "kmw/characters.hpp"

#include "kmw/error.hpp"
#include "kmw/polyhedron.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace kmw {

std::vector<AffineRoot> positive_roots_up_to(const AffineCartanData& data, int max_grade) {
  const int l = data.rank();
  const auto& theta = data.highest_root();
  std::vector<AffineRoot> out;
  for (int n = 0; n <= max_grade; ++n) {
    for (const auto& beta : data.finite_positive_roots()) {
      // beta + n delta, with delta = alpha_0 + theta.
      IntCoords c(l + 1);
      c[0] = n;
      for (int i = 0; i < l; ++i) c[i + 1] = beta[i] + n * theta[i];
      out.push_back({c, 1, false});
      if (n >= 1) {
        IntCoords d(l + 1);
        d[0] = n;
        for (int i = 0; i < l; ++i) d[i + 1] = n * theta[i] - beta[i];
        out.push_back({d, 1, false});
      }
    }
    if (n >= 1) {
      IntCoords c(l + 1);
      for (int i = 0; i <= l; ++i) c[i] = n * data.marks()[i];
      out.push_back({c, l, true});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const AffineRoot& a, const AffineRoot& b) { return grade_order_less(a.coords, b.coords); });
  return out;
}

TruncatedCharacter::TruncatedCharacter(Weight highest, int depth, MultiplicityMap mults)
    : highest_(std::move(highest)), depth_(depth), mults_(std::move(mults)) {}

BigInt TruncatedCharacter::mult_at(const IntCoords& c) const {
  if (c[0] > depth_) {
    throw Error(ErrorCode::OutOfWindow, "coordinates " + to_string(c) + " lie below the truncation depth " +
                                            std::to_string(depth_));
  }
  const auto it = mults_.find(c);
  return it == mults_.end() ? BigInt(0) : it->second;
}

BigInt TruncatedCharacter::mult(const Weight& mu) const {
  require_same_type(highest_, mu);
  const Weight diff = highest_ - mu;
  if (level(diff) != 0) return 0;
  const auto rc = to_root_coords(diff);
  if (!rc.all_integral()) return 0;
  if (rc.coords[0] > depth_) {
    throw Error(ErrorCode::OutOfWindow, "weight " + to_string(mu) + " lies below the truncation depth " +
                                            std::to_string(depth_));
  }
  if (!rc.all_nonnegative()) return 0;
  IntCoords c;
  for (const auto& v : rc.coords) c.push_back(static_cast<int>(to_int64(v)));
  return mult_at(c);
}

namespace {

// m_i(lam - c) for all i.
std::vector<long> lambda_pairings(const Weight& lam, const IntCoords& c) {
  const auto& data = lam.cartan();
  const int n = lam.size();
  std::vector<long> m(n);
  for (int i = 0; i < n; ++i) {
    long v = to_int64(lam[i]);
    for (int j = 0; j < n; ++j) v -= static_cast<long>(data.cartan(i, j)) * c[j];
    m[i] = v;
  }
  return m;
}

}  // namespace

bool dominant_coords(const Weight& lam, IntCoords& c) {
  const auto& data = lam.cartan();
  const int n = lam.size();
  auto m = lambda_pairings(lam, c);
  while (true) {
    int node = -1;
    for (int i = 0; i < n; ++i) {
      if (m[i] < 0) {
        node = i;
        break;
      }
    }
    if (node < 0) return true;
    const long shift = m[node];
    c[node] += static_cast<int>(shift);
    if (c[node] < 0) return false;
    for (int k = 0; k < n; ++k) m[k] -= static_cast<long>(data.cartan(k, node)) * shift;
  }
}

std::vector<IntCoords> TruncatedCharacter::sorted_keys() const {
  std::vector<IntCoords> keys;
  keys.reserve(mults_.size());
  for (const auto& [c, m] : mults_) keys.push_back(c);
  std::sort(keys.begin(), keys.end(), grade_order_less);
  return keys;
}

std::vector<IntCoords> TruncatedCharacter::dominant_keys() const {
  std::vector<IntCoords> keys;
  for (const auto& c : sorted_keys()) {
    const auto m = lambda_pairings(highest_, c);
    if (std::all_of(m.begin(), m.end(), [](long v) { return v >= 0; })) keys.push_back(c);
  }
  return keys;
}

TruncatedCharacter TruncatedCharacter::truncated(int depth) const {
  if (depth >= depth_) return *this;
  MultiplicityMap out;
  for (const auto& [c, m] : mults_)
    if (c[0] <= depth) out.emplace(c, m);
  return TruncatedCharacter(highest_, depth, std::move(out));
}

TruncatedCharacter TruncatedCharacter::rebased(const Weight& highest) const {
  require_same_type(highest_, highest);
  if (highest.lambda_coords() != highest_.lambda_coords()) {
    throw Error(ErrorCode::PreconditionFailed, "rebased character must keep Lambda-coordinates");
  }
  return TruncatedCharacter(highest, depth_, mults_);
}

std::string TruncatedCharacter::serialize() const {
  std::ostringstream out;
  out << "kmw-character 1\n";
  out << "type " << highest_.cartan().label() << "\n";
  out << "lambda " << to_string(highest_) << "\n";
  out << "depth " << depth_ << "\n";
  out << "entries " << mults_.size() << "\n";
  for (const auto& c : sorted_keys()) out << to_string(c) << ':' << mults_.at(c).get_str() << "\n";
  return out.str();
}

TruncatedCharacter TruncatedCharacter::deserialize(const CartanPtr& data, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto expect = [&](std::string_view key) {
    if (!std::getline(in, line) || line.rfind(key, 0) != 0) {
      throw Error(ErrorCode::Cache, "character record: expected '" + std::string(key) + "'");
    }
    return line.substr(key.size());
  };
  if (expect("kmw-character ") != "1") throw Error(ErrorCode::Cache, "unsupported character format version");
  if (expect("type ") != data->label()) throw Error(ErrorCode::Cache, "character record is for another type");
  Weight highest = parse_weight(data, expect("lambda "));
  const int depth = std::stoi(expect("depth "));
  const auto count = std::stoul(expect("entries "));
  MultiplicityMap mults;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::Cache, "malformed character line '" + line + "'");
    IntCoords c;
    std::istringstream cs(line.substr(0, colon));
    std::string tok;
    while (std::getline(cs, tok, ',')) c.push_back(std::stoi(tok));
    if (static_cast<int>(c.size()) != data->size()) throw Error(ErrorCode::Cache, "bad key arity in '" + line + "'");
    mults.emplace(std::move(c), BigInt(line.substr(colon + 1)));
  }
  if (mults.size() != count) throw Error(ErrorCode::Cache, "character record truncated");
  return TruncatedCharacter(std::move(highest), depth, std::move(mults));
}

namespace {

// Integer-scaled form data: every (x|alpha) below is multiplied by L.
struct ScaledRoot {
  IntCoords coords;
  long multiplicity;
  long lam_pair;               // L (lam | alpha)
  std::vector<long> form_row;  // L (alpha_i | alpha) for each i
};

class FreudenthalEngine {
 public:
  FreudenthalEngine(const Weight& lam, int depth) : lam_(lam), depth_(depth) {
    const auto& data = lam.cartan();
    const int n = lam.size();
    const auto& sd = data.scaled_symmetrizers();
    for (const auto& root : positive_roots_up_to(data, depth)) {
      ScaledRoot r{root.coords, root.multiplicity, 0, std::vector<long>(n, 0)};
      for (int j = 0; j < n; ++j) r.lam_pair += root.coords[j] * sd[j] * to_int64(lam[j]);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.form_row[i] += sd[i] * data.cartan(i, j) * root.coords[j];
      roots_.push_back(std::move(r));
    }
    lam_rho_.resize(n);
    for (int i = 0; i < n; ++i) lam_rho_[i] = sd[i] * (to_int64(lam[i]) + 1);
  }

  // L * ((lam+rho|lam+rho) - (mu+rho|mu+rho)) = L (c | 2(lam+rho) - c).
  long prefactor(const IntCoords& c) const {
    const auto& data = lam_.cartan();
    const auto& sd = data.scaled_symmetrizers();
    const int n = lam_.size();
    long s = 0;
    for (int i = 0; i < n; ++i) {
      s += 2 * c[i] * lam_rho_[i];
      for (int j = 0; j < n; ++j) s -= c[i] * sd[i] * data.cartan(i, j) * c[j];
    }
    return s;
  }

  template <class Lookup>
  BigInt compute(const IntCoords& c, Lookup&& lookup) const {
    const int n = lam_.size();
    BigInt sum = 0;
    IntCoords shifted(n);
    for (const auto& root : roots_) {
      bool fits = true;
      for (int i = 0; i < n && fits; ++i) fits = root.coords[i] <= c[i];
      if (!fits) continue;
      for (int k = 1;; ++k) {
        bool ok = true;
        for (int i = 0; i < n; ++i) {
          shifted[i] = c[i] - k * root.coords[i];
          ok = ok && shifted[i] >= 0;
        }
        if (!ok) break;
        const BigInt m = lookup(shifted);
        if (m == 0) continue;
        long pair = root.lam_pair;  // L (lam - shifted | alpha)
        for (int i = 0; i < n; ++i) pair -= shifted[i] * root.form_row[i];
        sum += m * (pair * root.multiplicity);
      }
    }
    const long pre = prefactor(c);
    if (pre <= 0) {
      if (sum == 0) return 0;
      throw Error(ErrorCode::Internal, "Freudenthal prefactor vanished at " + to_string(c) + " for " +
                                           to_string(lam_));
    }
    BigInt num = 2 * sum;
    if (num % pre != 0) {
      throw Error(ErrorCode::Internal, "Freudenthal division inexact at " + to_string(c));
    }
    return num / pre;
  }

 private:
  const Weight& lam_;
  int depth_;
  std::vector<ScaledRoot> roots_;
  std::vector<long> lam_rho_;
};

void require_highest(const Weight& lam, int depth) {
  if (!is_dominant(lam)) {
    throw Error(ErrorCode::PreconditionFailed, "highest weight must be dominant integral: " + to_string(lam));
  }
  if (level(lam) <= 0) throw Error(ErrorCode::PositiveLevelRequired, "highest weight needs positive level");
  if (depth < 0) throw Error(ErrorCode::PreconditionFailed, "depth must be nonnegative");
}

MultiplicityMap expand_orbits(const Weight& lam, int depth,
                              const std::unordered_map<IntCoords, BigInt, IntCoordsHash>& dominant) {
  MultiplicityMap full;
  const int n = lam.size();
  for (const auto& [start, m] : dominant) {
    std::deque<IntCoords> queue{start};
    std::unordered_set<IntCoords, IntCoordsHash> seen{start};
    while (!queue.empty()) {
      IntCoords c = std::move(queue.front());
      queue.pop_front();
      const auto pairings = lambda_pairings(lam, c);
      for (int i = 0; i < n; ++i) {
        if (pairings[i] <= 0) continue;
        IntCoords next = c;
        next[i] += static_cast<int>(pairings[i]);
        if (next[0] > depth) continue;
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
      full.emplace(std::move(c), m);
    }
  }
  return full;
}

TruncatedCharacter freudenthal_dominant(const Weight& lam, int depth) {
  FreudenthalEngine engine(lam, depth);
  std::unordered_map<IntCoords, BigInt, IntCoordsHash> dominant;
  auto lookup = [&](const IntCoords& c) -> BigInt {
    IntCoords d = c;
    if (!dominant_coords(lam, d)) return 0;
    const auto it = dominant.find(d);
    return it == dominant.end() ? BigInt(0) : it->second;
  };
  for (const auto& c : dominant_coords_by_alcove(lam, depth)) {
    if (std::all_of(c.begin(), c.end(), [](int v) { return v == 0; })) {
      dominant.emplace(c, 1);
      continue;
    }
    BigInt m = engine.compute(c, lookup);
    // Dominant weights below lam all lie in P(lam).
    if (m <= 0) throw Error(ErrorCode::Internal, "non-positive dominant multiplicity at " + to_string(c));
    dominant.emplace(c, std::move(m));
  }
  return TruncatedCharacter(lam, depth, expand_orbits(lam, depth, dominant));
}

TruncatedCharacter freudenthal_all(const Weight& lam, int depth) {
  const int n = lam.size();
  // Support: weights of the window reachable from lam by subtracting simple
  // roots whose dominant representative stays below lam.
  std::vector<IntCoords> support;
  std::unordered_set<IntCoords, IntCoordsHash> seen;
  std::deque<IntCoords> queue{IntCoords(n, 0)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    IntCoords c = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      IntCoords next = c;
      next[i] += 1;
      if (next[0] > depth || seen.count(next)) continue;
      IntCoords d = next;
      if (!dominant_coords(lam, d)) continue;
      seen.insert(next);
      queue.push_back(next);
    }
    support.push_back(std::move(c));
  }
  std::sort(support.begin(), support.end(), grade_order_less);

  FreudenthalEngine engine(lam, depth);
  MultiplicityMap mults;
  auto lookup = [&](const IntCoords& c) -> BigInt {
    const auto it = mults.find(c);
    return it == mults.end() ? BigInt(0) : it->second;
  };
  for (const auto& c : support) {
    if (std::all_of(c.begin(), c.end(), [](int v) { return v == 0; })) {
      mults.emplace(c, 1);
      continue;
    }
    BigInt m = engine.compute(c, lookup);
    if (m <= 0) throw Error(ErrorCode::Internal, "non-positive multiplicity inside P(lambda) at " + to_string(c));
    mults.emplace(c, std::move(m));
  }
  return TruncatedCharacter(lam, depth, std::move(mults));
}

}  // namespace

TruncatedCharacter freudenthal(const Weight& lam, int depth, FreudenthalStrategy strategy) {
  require_highest(lam, depth);
  return strategy == FreudenthalStrategy::DominantOrbits ? freudenthal_dominant(lam, depth)
                                                         : freudenthal_all(lam, depth);
}

}  // namespace kmw
