#include "wzcheck/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>

namespace wzcheck {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Item {
  size_t claim_idx;
  long p;  // prime, or n for identity claims
};

std::vector<const Claim*> select_claims(const std::vector<std::string>& ids) {
  std::vector<const Claim*> selected;
  if (ids.empty()) {
    for (const Claim& c : registry()) selected.push_back(&c);
    return selected;
  }
  for (const std::string& id : ids) {
    const Claim* c = find_claim(id);
    if (!c) throw ConfigError("unknown claim id: " + id);
    if (std::find(selected.begin(), selected.end(), c) == selected.end())
      selected.push_back(c);
  }
  return selected;
}

// Evaluates one (claim, p) item, widening unit precision once and then
// falling back to the exact path if the factored representation runs dry.
std::vector<VerificationOutcome> eval_item(const Claim& c, long p, EvalPath path,
                                           const ClaimTables& tables,
                                           PrimePowerContext* shared) {
  try {
    return evaluate_claim(c, p, path, tables, shared);
  } catch (const PrecisionExhaustedError&) {
    try {
      PrimePowerContext wide(p, claim_unit_prec(c) + 6);
      return evaluate_claim(c, p, path, tables, &wide);
    } catch (const PrecisionExhaustedError&) {
      return evaluate_claim(c, p, EvalPath::Exact, tables);
    }
  }
}

}  // namespace

std::vector<long> primes_in(long lo, long hi) {
  if (lo < 2) throw ConfigError("primes_in: lower bound must be at least 2");
  if (hi < lo) throw ConfigError("primes_in: empty-ordered range");
  std::vector<long> out;
  for (long n = lo; n <= hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

Report run_suite(const RunConfig& config) {
  if (config.p_min < 2) throw ConfigError("run_suite: p_min must be at least 2");
  if (config.p_max < config.p_min) throw ConfigError("run_suite: p_min exceeds p_max");
  if (config.oracle_max < 0) throw ConfigError("run_suite: oracle_max must be nonnegative");
  if (config.identity_n_max < 1) throw ConfigError("run_suite: identity_n_max must be positive");
  if (config.worker_count < 1) throw ConfigError("run_suite: worker_count must be positive");

  auto wall0 = Clock::now();
  std::vector<const Claim*> selected = select_claims(config.claim_ids);

  int shared_prec = kDefaultUnitPrecision;
  for (const Claim* c : selected) shared_prec = std::max(shared_prec, claim_unit_prec(*c));

  ClaimTables tables(config.p_max);
  std::vector<long> primes = primes_in(config.p_min, config.p_max);

  std::vector<Item> items;
  for (size_t ci = 0; ci < selected.size(); ++ci) {
    const Claim& c = *selected[ci];
    if (c.modulus_exponent == 0) {
      for (long n = 1; n <= config.identity_n_max; ++n) items.push_back({ci, n});
    } else {
      for (long p : primes)
        if (in_domain(c, p)) items.push_back({ci, p});
    }
  }
  // Group by p so a worker sweeping consecutive items reuses its context.
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.p != b.p ? a.p < b.p : a.claim_idx < b.claim_idx;
  });

  std::vector<std::vector<VerificationOutcome>> slots(items.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex merge_mu;
  std::exception_ptr mismatch;
  std::map<std::string, double> claim_ms;

  auto worker = [&] {
    std::optional<PrimePowerContext> ctx;
    long ctx_p = -1;
    std::map<std::string, double> local_ms;
    while (!stop.load(std::memory_order_relaxed)) {
      size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= items.size()) break;
      const Item& it = items[i];
      const Claim& c = *selected[it.claim_idx];
      auto t0 = Clock::now();
      try {
        if (c.modulus_exponent == 0) {
          slots[i] = evaluate_claim(c, it.p, EvalPath::Exact, tables);
        } else {
          if (ctx_p != it.p) {
            ctx.emplace(it.p, shared_prec);
            ctx_p = it.p;
          }
          EvalPath path = it.p <= config.oracle_max ? EvalPath::Both : EvalPath::Fast;
          slots[i] = eval_item(c, it.p, path, tables, &*ctx);
        }
      } catch (const InternalMismatchError&) {
        std::lock_guard<std::mutex> g(merge_mu);
        if (!mismatch) mismatch = std::current_exception();
        stop.store(true, std::memory_order_relaxed);
      } catch (const Error&) {
        VerificationOutcome o;
        o.claim = c.id;
        o.p = it.p;
        o.holds = false;
        o.diff_valuation = Valuation(0);
        o.path = "error";
        slots[i] = {std::move(o)};
      }
      local_ms[c.id] += ms_since(t0);
    }
    std::lock_guard<std::mutex> g(merge_mu);
    for (const auto& [id, ms] : local_ms) claim_ms[id] += ms;
  };

  size_t n_workers = std::min<size_t>(static_cast<size_t>(config.worker_count),
                                      std::max<size_t>(items.size(), 1));
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (mismatch) std::rethrow_exception(mismatch);

  // Deterministic merge: order items by (claim id, p); instance order within
  // an item is already fixed by the claim's enumeration.
  std::vector<size_t> order(items.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const std::string& ca = selected[items[a].claim_idx]->id;
    const std::string& cb = selected[items[b].claim_idx]->id;
    if (ca != cb) return ca < cb;
    return items[a].p < items[b].p;
  });

  Report report;
  report.config = config;
  for (size_t i : order)
    for (VerificationOutcome& o : slots[i]) report.outcomes.push_back(std::move(o));

  std::map<std::string, ClaimStats> stats;
  for (const Claim* c : selected) stats[c->id] = ClaimStats{};
  for (const VerificationOutcome& o : report.outcomes) {
    ClaimStats& s = stats[o.claim];
    if (o.path == "error") {
      ++s.error;
      ++report.error;
    } else if (o.holds) {
      ++s.pass;
      ++report.pass;
    } else {
      ++s.fail;
      ++report.fail;
    }
  }
  for (auto& [id, ms] : claim_ms) stats[id].ms = ms;
  for (auto& [id, s] : stats) report.per_claim.emplace_back(id, s);
  report.wall_ms = ms_since(wall0);
  return report;
}

}  // namespace wzcheck
