#include "achain/scholz.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "achain/algebra.hpp"
#include "achain/families.hpp"

namespace achain {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::exact_search: return "exact-search";
    case Provenance::theorem_formula: return "theorem-formula";
    case Provenance::upper_bound: return "upper-bound";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::proven: return "PROVEN";
    case Verdict::conditional: return "CONDITIONAL";
    case Verdict::fail: return "FAIL";
  }
  return "?";
}

std::string_view to_string(Route r) {
  switch (r) {
    case Route::star_lift: return "star-lift";
    case Route::family_theorem_3: return "family-theorem-3";
    case Route::family_theorem_5: return "family-theorem-5";
    case Route::doubling_transfer: return "doubling-transfer";
  }
  return "?";
}

std::optional<Route> parse_route(std::string_view name) {
  for (Route r : {Route::star_lift, Route::family_theorem_3, Route::family_theorem_5,
                  Route::doubling_transfer}) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

namespace {

Verdict decide(Provenance p, std::uint64_t lifted_length, std::uint64_t bound) {
  if (p == Provenance::upper_bound) return Verdict::conditional;
  return lifted_length <= bound ? Verdict::proven : Verdict::fail;
}

ScholzReport make_report(std::uint64_t n, std::size_t ell, Provenance p, Chain chain,
                         LiftedChain lifted, Route route) {
  const std::uint64_t lifted_length = lifted.length();
  const std::uint64_t bound = n - 1 + ell;
  return ScholzReport{
      .n = n,
      .ell_n = ell,
      .ell_n_provenance = p,
      .chain_for_n = std::move(chain),
      .lifted = std::move(lifted),
      .lifted_length = lifted_length,
      .bound = bound,
      .verdict = decide(p, lifted_length, bound),
      .route = route,
  };
}

ScholzReport via_family2(std::uint64_t n, const Family2& f) {
  Chain chain = family2_chain(f.m, f.k);
  const std::size_t ell = lambda(n) + 4;
  if (chain.length() != ell) throw std::logic_error("family2 chain length off formula");
  return make_report(n, ell, Provenance::theorem_formula, std::move(chain),
                     family2_mersenne_chain(f.m, f.k), Route::family_theorem_5);
}

ScholzReport via_u_family(std::uint64_t n, std::uint64_t m) {
  Chain chain = u_chain(m);
  const std::size_t ell = m + 8;
  return make_report(n, ell, Provenance::theorem_formula, std::move(chain), u_mersenne_chain(m),
                     Route::family_theorem_3);
}

ScholzReport via_star_lift(std::uint64_t n, const ScholzOptions& opts) {
  if (n > opts.search_threshold) {
    Chain chain = binary_chain(n);
    const std::size_t ell = chain.length();
    LiftedChain lifted = lift_star(chain);
    return make_report(n, ell, Provenance::upper_bound, std::move(chain), std::move(lifted),
                       Route::star_lift);
  }
  const SearchOutcome exact = exact_length(n, opts.search);
  const SearchOutcome star = minimal_star_length(n, opts.search);
  const bool exact_known = exact.proven_minimal;
  const std::size_t ell = exact_known ? exact.length : std::min(exact.length, star.length);
  LiftedChain lifted = lift_star(star.certificate);
  return make_report(n, ell, exact_known ? Provenance::exact_search : Provenance::upper_bound,
                     star.certificate, std::move(lifted), Route::star_lift);
}

}  // namespace

ScholzReport scholz_check(std::uint64_t n, std::optional<Route> route, const ScholzOptions& opts) {
  if (n == 0) throw DomainError("scholz_check needs n >= 1");
  const BigInt big = n;
  const auto f2 = match_family2(big);
  const auto u = match_u_family(big);
  const bool u_applies = u && *u >= 6;

  if (!route) {
    if (f2) {
      route = Route::family_theorem_5;
    } else if (u_applies) {
      route = Route::family_theorem_3;
    } else {
      route = Route::star_lift;
    }
  }

  switch (*route) {
    case Route::family_theorem_5:
      if (!f2) throw std::invalid_argument(std::to_string(n) + " is not in family2");
      return via_family2(n, *f2);
    case Route::family_theorem_3:
      if (!u_applies) {
        throw std::invalid_argument(std::to_string(n) + " is not 23 * 2^m + 7 with m >= 6");
      }
      return via_u_family(n, *u);
    case Route::star_lift:
      return via_star_lift(n, opts);
    case Route::doubling_transfer:
      break;
  }
  throw std::invalid_argument("doubling-transfer needs a report for n/2; use doubling_transfer");
}

ScholzReport doubling_transfer(const ScholzReport& rep, std::size_t ell_2n_known) {
  if (rep.verdict != Verdict::proven) {
    throw std::invalid_argument("doubling_transfer needs a PROVEN report");
  }
  if (ell_2n_known != rep.ell_n + 1) {
    throw HypothesisViolated("l(2n) = " + std::to_string(ell_2n_known) + " but l(n) + 1 = " +
                             std::to_string(rep.ell_n + 1));
  }
  const std::uint64_t n2 = 2 * rep.n;
  LiftedChain lifted = lift_double(rep.lifted);
  if (lifted.length() != rep.lifted_length + rep.n + 1) {
    throw std::logic_error("doubling transfer length accounting broke");
  }
  return make_report(n2, ell_2n_known, rep.ell_n_provenance, double_extend(rep.chain_for_n),
                     std::move(lifted), Route::doubling_transfer);
}

SweepSummary sweep(std::uint64_t limit, const ScholzOptions& opts, unsigned workers) {
  if (limit > opts.search_threshold) {
    throw std::invalid_argument("sweep limit " + std::to_string(limit) +
                                " exceeds search threshold " +
                                std::to_string(opts.search_threshold));
  }
  std::vector<std::optional<ScholzReport>> slots(limit);
  std::atomic<std::uint64_t> next{1};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      for (std::uint64_t n = next++; n <= limit; n = next++) {
        slots[n - 1] = scholz_check(n, std::nullopt, opts);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = limit + 1;
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  SweepSummary summary;
  summary.reports.reserve(limit);
  for (auto& slot : slots) {
    ScholzReport& r = *slot;
    switch (r.verdict) {
      case Verdict::proven: ++summary.proven; break;
      case Verdict::conditional: ++summary.conditional; break;
      case Verdict::fail: ++summary.fail; break;
    }
    if (r.lifted_length == r.bound) ++summary.equality;
    summary.reports.push_back(std::move(r));
  }
  return summary;
}

}  // namespace achain
