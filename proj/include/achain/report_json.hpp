#pragma once

#include "json.hpp"

#include "achain/lift.hpp"
#include "achain/scholz.hpp"
#include "achain/search.hpp"

namespace achain {

/// Keys in fixed order: n, ell_n, ell_n_provenance, chain_length,
/// lifted_length, bound, verdict, route.
nlohmann::ordered_json to_json(const ScholzReport& r);

/// Lift sidecar: shifts_total, adds_total, length, source_length, n.
nlohmann::ordered_json accounting_json(const LiftedChain& l);

nlohmann::ordered_json to_json(const SearchOutcome& o);

}  // namespace achain
