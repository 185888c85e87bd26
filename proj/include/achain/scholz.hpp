#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "achain/chain.hpp"
#include "achain/lift.hpp"
#include "achain/search.hpp"

namespace achain {

enum class Provenance { exact_search, theorem_formula, upper_bound };
enum class Verdict { proven, conditional, fail };
enum class Route { star_lift, family_theorem_3, family_theorem_5, doubling_transfer };

std::string_view to_string(Provenance p);
std::string_view to_string(Verdict v);
std::string_view to_string(Route r);
std::optional<Route> parse_route(std::string_view name);

/// Verdict on l(2^n - 1) <= l(n) + n - 1 for one n, with witnesses.
///
/// PROVEN: l(n) is exact (search or a published formula) and the lifted
/// chain meets the bound. CONDITIONAL: l(n) is only an upper bound, so
/// the comparison proves nothing. FAIL: exact l(n) and the construction
/// exceeds the bound.
struct ScholzReport {
  std::uint64_t n = 1;
  std::size_t ell_n = 0;
  Provenance ell_n_provenance = Provenance::upper_bound;
  Chain chain_for_n;
  LiftedChain lifted;
  std::uint64_t lifted_length = 0;
  std::uint64_t bound = 0;
  Verdict verdict = Verdict::conditional;
  Route route = Route::star_lift;
};

struct ScholzOptions {
  /// Targets up to this size get an exact search; larger ones fall back to
  /// the binary method unless a family formula applies.
  std::uint64_t search_threshold = 5000;
  SearchConfig search;
};

/// Route selection when none is forced: family2 formula match, then
/// U_m with m >= 6, then exact search for n <= search_threshold, then the
/// binary method. A forced route that does not apply to n throws
/// std::invalid_argument.
ScholzReport scholz_check(std::uint64_t n, std::optional<Route> route = std::nullopt,
                          const ScholzOptions& opts = {});

/// Witness for 2n from a PROVEN witness for n when l(2n) = l(n) + 1:
/// 2^{2n} - 1 = (2^n - 1)(2^n + 1) costs n + 1 extra steps.
/// Throws HypothesisViolated when ell_2n_known != rep.ell_n + 1.
ScholzReport doubling_transfer(const ScholzReport& rep, std::size_t ell_2n_known);

struct SweepSummary {
  std::vector<ScholzReport> reports;  // ordered by n
  std::size_t proven = 0;
  std::size_t conditional = 0;
  std::size_t fail = 0;
  /// Reports whose lifted length equals the bound.
  std::size_t equality = 0;
};

/// scholz_check for n = 1..limit, limit <= opts.search_threshold.
SweepSummary sweep(std::uint64_t limit, const ScholzOptions& opts = {}, unsigned workers = 1);

}  // namespace achain
