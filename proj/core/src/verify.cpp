#include "kmw/verify.hpp"

#include "kmw/error.hpp"
#include "kmw/gko.hpp"
#include "kmw/polyhedron.hpp"
#include "kmw/tensor.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

namespace kmw {

using nlohmann::json;

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

bool Report::passed() const { return count(CheckStatus::Fail) == 0; }

std::size_t Report::count(CheckStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == status; }));
}

json Report::to_json(bool include_timing) const {
  json out;
  out["schema_version"] = 1;
  out["kind"] = kind;
  out["type"] = type_label;
  out["depth"] = depth;
  out["verified_to_depth"] = depth;
  out["passed"] = passed();
  out["summary"] = {{"pass", count(CheckStatus::Pass)},
                    {"fail", count(CheckStatus::Fail)},
                    {"skipped", count(CheckStatus::Skipped)}};
  json list = json::array();
  for (const auto& c : checks) {
    json entry = {{"name", c.name}, {"subject", c.subject}, {"status", to_string(c.status)}, {"witness", c.witness}};
    if (include_timing) entry["seconds"] = c.seconds;
    list.push_back(std::move(entry));
  }
  out["checks"] = std::move(list);
  out["counterexamples"] = counterexamples;
  out["metadata"] = metadata;
  if (include_timing) out["timing"] = timing;
  return out;
}

std::string Report::to_table() const {
  std::size_t name_w = 5, subj_w = 7;
  for (const auto& c : checks) {
    name_w = std::max(name_w, c.name.size());
    subj_w = std::max(subj_w, c.subject.size());
  }
  std::ostringstream out;
  out << kind << " " << type_label << " depth " << depth << ": " << (passed() ? "PASS" : "FAIL") << " ("
      << count(CheckStatus::Pass) << " pass, " << count(CheckStatus::Fail) << " fail, "
      << count(CheckStatus::Skipped) << " skipped)\n";
  out << std::left << std::setw(static_cast<int>(name_w)) << "check" << "  " << std::setw(static_cast<int>(subj_w))
      << "subject" << "  " << std::setw(7) << "status" << "  witness\n";
  for (const auto& c : checks) {
    out << std::setw(static_cast<int>(name_w)) << c.name << "  " << std::setw(static_cast<int>(subj_w)) << c.subject
        << "  " << std::setw(7) << to_string(c.status) << "  " << c.witness.dump() << "\n";
  }
  return out.str();
}

std::string Report::to_csv() const {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  };
  std::ostringstream out;
  out << "check,subject,status,witness\n";
  for (const auto& c : checks) {
    out << c.name << ',' << quote(c.subject) << ',' << to_string(c.status) << ',' << quote(c.witness.dump()) << "\n";
  }
  return out.str();
}

int default_depth(const AffineType& type) { return type.rank <= 2 ? 2 : 1; }

std::vector<Weight> enumerate_dominant_below(const Weight& lam, int depth) {
  const auto coords = is_regular_dominant(lam) ? dominant_coords_by_box(lam, depth)
                                               : dominant_coords_by_alcove(lam, depth);
  std::vector<Weight> out;
  out.reserve(coords.size());
  for (const auto& c : coords) out.push_back(lam - from_root_coords(lam.data(), c));
  return out;
}

bool verify_rho_decomposition(const Weight& lam, int m_scale) {
  if (m_scale < 1) throw Error(ErrorCode::PreconditionFailed, "M must be positive");
  const Weight mrho = rho(lam.data()) * Rational(m_scale);
  if (!is_dominant(lam) || !dominance_leq(lam, mrho * Rational(2))) {
    throw Error(ErrorCode::PreconditionFailed, to_string(lam) + " is not a dominant weight below 2M rho");
  }
  return weight_membership(mrho, lam - mrho);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs body(i) for i in [0, n) on up to `threads` workers; results are
// written by index so the merge order is deterministic.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct Harness {
  const VerifyOptions& options;
  CharacterCache local;
  CharacterCache& cache;

  explicit Harness(const VerifyOptions& opts) : options(opts), cache(opts.cache ? *opts.cache : local) {}

  Decomposition decompose(const Weight& lam, const Weight& mu, int depth) {
    Decomposition dec = tensor_decompose(lam, mu, depth, &cache);
    if (options.corrupt_component) dec = dec.with_multiplicity(*options.corrupt_component, 0);
    return dec;
  }
};

Check run_check(std::string name, std::string subject, const std::function<CheckStatus(json&)>& body) {
  Check check{std::move(name), std::move(subject), CheckStatus::Skipped, json::object(), 0};
  const auto start = Clock::now();
  try {
    check.status = body(check.witness);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PreconditionFailed && e.code() != ErrorCode::OutOfWindow) throw;
    check.status = CheckStatus::Skipped;
    check.witness["reason"] = e.what();
  }
  check.seconds = seconds_since(start);
  return check;
}

void collect_counterexamples(Report& report) {
  for (const auto& c : report.checks) {
    if (c.status != CheckStatus::Fail) continue;
    json entry = c.witness;
    entry["check"] = c.name;
    entry["lambda"] = c.subject;
    report.counterexamples.push_back(std::move(entry));
  }
}

json decomposition_summary(const Decomposition& dec) {
  return {{"lhs", to_string(dec.lhs())},
          {"rhs", to_string(dec.rhs())},
          {"depth", dec.depth()},
          {"components", dec.entries().size()}};
}

}  // namespace

Report verify_conjecture(const AffineType& type, int depth, const VerifyOptions& options) {
  const auto data = cartan_data(type);
  Harness harness(options);
  const Weight r = rho(data);
  const Weight two_rho = r * Rational(2);

  const auto start = Clock::now();
  const Decomposition dec = harness.decompose(r, r, depth);
  const double decompose_seconds = seconds_since(start);
  const auto lambdas = enumerate_dominant_below(two_rho, depth);

  std::vector<std::vector<Check>> per_lambda(lambdas.size());
  parallel_for(lambdas.size(), options.threads, [&](std::size_t idx) {
    const Weight& lam = lambdas[idx];
    const std::string subject = to_string(lam);
    auto& out = per_lambda[idx];
    out.push_back(run_check("component", subject, [&](json& w) {
      const BigInt m = dec.multiplicity(lam);
      w["multiplicity"] = m.get_str();
      w["grade"] = to_int64(to_root_coords(two_rho - lam).coords[0]);
      return m >= 1 ? CheckStatus::Pass : CheckStatus::Fail;
    }));
    out.push_back(run_check("rho-decomposition", subject, [&](json& w) {
      w["beta"] = to_string(lam - r);
      return verify_rho_decomposition(lam, 1) ? CheckStatus::Pass : CheckStatus::Fail;
    }));
    out.push_back(run_check("kostant-positivity", subject, [&](json& w) {
      const auto k = kostant_positivity(1, lam);
      w["value"] = to_string(k.value);
      return k.positive ? CheckStatus::Pass : CheckStatus::Fail;
    }));
  });

  Report report{"conjecture", type.label(), depth, {}, {}, json::object(), json::object()};
  for (auto& group : per_lambda)
    for (auto& c : group) report.checks.push_back(std::move(c));
  collect_counterexamples(report);
  report.metadata["decomposition"] = decomposition_summary(dec);
  report.timing["decomposition_seconds"] = decompose_seconds;
  report.metadata["lambda_count"] = lambdas.size();
  return report;
}

Report verify_saturated(const AffineType& type, int saturation, int depth, const VerifyOptions& options) {
  if (saturation < 1) throw Error(ErrorCode::PreconditionFailed, "saturation factor must be >= 1");
  const auto data = cartan_data(type);
  Harness harness(options);
  const Weight r = rho(data);
  const Weight two_rho = r * Rational(2);
  const Rational d = saturation;

  std::vector<Weight> lambdas;
  for (const auto& lam : delta_maximal_dominant(two_rho)) {
    if (to_root_coords(two_rho - lam).coords[0] <= depth) lambdas.push_back(lam);
  }
  const Decomposition dec = harness.decompose(r * d, r * d, saturation * depth);

  std::vector<Check> checks(lambdas.size());
  parallel_for(lambdas.size(), options.threads, [&](std::size_t idx) {
    const Weight& lam = lambdas[idx];
    checks[idx] = run_check("saturated-component", to_string(lam), [&](json& w) {
      const Weight scaled = lam * d;
      const BigInt m = dec.multiplicity(scaled);
      w["scaled"] = to_string(scaled);
      w["multiplicity"] = m.get_str();
      return m >= 1 ? CheckStatus::Pass : CheckStatus::Fail;
    });
  });

  Report report{"saturated", type.label(), depth, std::move(checks), {}, json::object(), json::object()};
  collect_counterexamples(report);
  report.metadata["saturation_factor"] = saturation;
  report.metadata["decomposition"] = decomposition_summary(dec);
  report.metadata["lambda_count"] = lambdas.size();
  return report;
}

Report verify_delta_strings(const AffineType& type, int depth, const VerifyOptions& options) {
  const auto data = cartan_data(type);
  Harness harness(options);
  const Weight r = rho(data);
  const Weight delta = Weight::delta(data);
  const Decomposition dec = harness.decompose(r, r, depth);

  std::vector<Decomposition::Component> maximal;
  for (const auto& comp : dec.components()) {
    if (dec.is_delta_maximal_component(comp.nu)) maximal.push_back(comp);
  }

  std::vector<std::vector<Check>> per_nu(maximal.size());
  parallel_for(maximal.size(), options.threads, [&](std::size_t idx) {
    const auto& comp = maximal[idx];
    const std::string subject = to_string(comp.nu);
    auto& out = per_nu[idx];
    out.push_back(run_check("string-rule", subject, [&](json& w) {
      const Rational value = string_rule_value(r, r, comp.nu);
      w["value"] = to_string(value);
      w["rule"] = std::string(to_string(delta_string_rule(r, r, comp.nu)));
      return value != 0 ? CheckStatus::Pass : CheckStatus::Fail;
    }));
    out.push_back(run_check("string-complete", subject, [&](json& w) {
      // In the gap branch only nu - delta is expected to be missing; whether the
      // data agrees is recorded, not enforced.
      const bool gap = delta_string_rule(r, r, comp.nu) == StringRule::GapAtOne;
      json shifts = json::array();
      bool ok = true;
      for (int k = 0; comp.grade + k <= depth; ++k) {
        const BigInt m = dec.multiplicity(comp.nu - delta * Rational(k));
        shifts.push_back({{"k", k}, {"multiplicity", m.get_str()}});
        if (gap && k == 1) {
          w["gap_at_one"] = m == 0 ? "confirmed" : "contradicted";
        } else {
          ok = ok && m >= 1;
        }
      }
      if (gap && !w.contains("gap_at_one")) w["gap_at_one"] = "out-of-window";
      w["shifts"] = std::move(shifts);
      return ok ? CheckStatus::Pass : CheckStatus::Fail;
    }));
  });

  Report report{"delta-strings", type.label(), depth, {}, {}, json::object(), json::object()};
  for (auto& group : per_nu)
    for (auto& c : group) report.checks.push_back(std::move(c));
  collect_counterexamples(report);
  report.metadata["decomposition"] = decomposition_summary(dec);
  report.metadata["delta_maximal_components"] = maximal.size();
  return report;
}

}  // namespace kmw
