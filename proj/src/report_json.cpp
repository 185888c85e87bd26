#include "achain/report_json.hpp"

#include <string>

namespace achain {

nlohmann::ordered_json to_json(const ScholzReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["ell_n"] = r.ell_n;
  j["ell_n_provenance"] = std::string(to_string(r.ell_n_provenance));
  j["chain_length"] = r.chain_for_n.length();
  j["lifted_length"] = r.lifted_length;
  j["bound"] = r.bound;
  j["verdict"] = std::string(to_string(r.verdict));
  j["route"] = std::string(to_string(r.route));
  return j;
}

nlohmann::ordered_json accounting_json(const LiftedChain& l) {
  nlohmann::ordered_json j;
  j["shifts_total"] = l.shifts_total();
  j["adds_total"] = l.adds_total();
  j["length"] = l.length();
  j["source_length"] = l.source().length();
  j["n"] = l.exponent();
  return j;
}

nlohmann::ordered_json to_json(const SearchOutcome& o) {
  nlohmann::ordered_json j;
  j["n"] = o.n;
  j["length"] = o.length;
  j["proven_minimal"] = o.proven_minimal;
  j["nodes_expanded"] = o.nodes_expanded;
  nlohmann::ordered_json chain = nlohmann::ordered_json::array();
  for (const BigInt& v : o.certificate.elements()) chain.push_back(static_cast<std::uint64_t>(v));
  j["certificate"] = std::move(chain);
  return j;
}

}  // namespace achain
