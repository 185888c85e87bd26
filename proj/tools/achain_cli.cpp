#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "achain/chain_io.hpp"
#include "achain/families.hpp"
#include "achain/lift.hpp"
#include "achain/report_json.hpp"
#include "achain/scholz.hpp"
#include "achain/search.hpp"

namespace {

using namespace achain;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFail = 2;

void print_stats(std::ostream& out, const Chain& c) {
  ChainStats s = stats(c);
  out << "target " << c.target() << "\nlength " << c.length() << "\nlambda " << s.lambda
      << "\nnu " << s.nu << "\nsmall_steps " << s.small_steps << "\nstar "
      << (s.star ? "true" : "false") << '\n';
}

void print_lift_summary(std::ostream& out, const LiftedChain& l) {
  auto j = accounting_json(l);
  j["verified"] = static_cast<bool>(verify_lift(l));
  out << j.dump() << '\n';
}

int report_exit(const ScholzReport& r) { return r.verdict == Verdict::fail ? kExitFail : kExitOk; }

void print_report(std::ostream& out, const ScholzReport& r) {
  out << "n " << r.n << "\nell_n " << r.ell_n << " (" << to_string(r.ell_n_provenance)
      << ")\nchain_length " << r.chain_for_n.length() << "\nlifted_length " << r.lifted_length
      << "\nbound " << r.bound << "\nroute " << to_string(r.route) << "\nverdict "
      << to_string(r.verdict) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Addition chains and the Scholz bound l(2^n - 1) <= l(n) + n - 1"};
  app.require_subcommand(1);

  // verify
  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Validate a chain-v1 file and print its statistics");
  verify->add_option("file", verify_path, "chain-v1 file")->required();

  // search
  std::uint64_t search_n = 0;
  SearchConfig search_cfg;
  bool search_json = false;
  bool nondeterministic = false;
  auto* search = app.add_subcommand("search", "Exact minimal chain length for n");
  search->add_option("n", search_n, "target")->required()->check(CLI::PositiveNumber);
  search->add_option("--max-nodes", search_cfg.max_nodes, "node budget")
      ->check(CLI::PositiveNumber);
  search->add_flag("--star-only", search_cfg.star_only, "restrict to star chains");
  search->add_option("--workers", search_cfg.worker_count, "worker threads")
      ->check(CLI::PositiveNumber);
  search->add_flag("--nondeterministic", nondeterministic,
                   "let workers cancel each other as soon as any finds a chain");
  search->add_flag("--json", search_json, "print the outcome as JSON");

  // table
  std::uint64_t table_limit = 0;
  bool table_oracle = false;
  auto* table = app.add_subcommand("table", "Print n<TAB>l(n) for n = 1..limit");
  table->add_option("limit", table_limit, "largest n")->required()->check(CLI::PositiveNumber);
  table->add_flag("--oracle", table_oracle, "use the layered enumeration (limit <= 4096)");

  // lift
  std::string lift_path;
  std::string lift_out;
  std::string lift_accounting;
  bool lift_use_star = false;
  auto* lift = app.add_subcommand("lift", "Lift a chain for n to a chain for 2^n - 1");
  lift->add_option("file", lift_path, "chain-v1 file for n")->required();
  lift->add_flag("--star", lift_use_star, "re-justify as a star chain first");
  lift->add_option("-o,--output", lift_out, "write the lifted chain here instead of stdout");
  lift->add_option("--accounting", lift_accounting, "write the JSON accounting sidecar here");

  // family
  std::uint64_t fam_m = 0;
  std::uint64_t fam_k = 3;
  bool fam_lift = false;
  bool fam_listing = false;
  auto* family = app.add_subcommand("family", "Chains for the U_m and family2 integers");
  family->require_subcommand(1);
  auto add_u = [&](CLI::App* parent) {
    auto* u = parent->add_subcommand("u", "U_m = 23 * 2^m + 7");
    u->add_option("--m", fam_m, "m >= 1")->required();
    u->add_flag("--lift", fam_lift, "build and verify the chain for 2^{U_m} - 1");
    return u;
  };
  auto add_family2 = [&](CLI::App* parent) {
    auto* f2 = parent->add_subcommand("family2", "seven-bit family with l(n) = lambda(n) + 4");
    f2->add_option("--m", fam_m, "m >= 1")->required();
    f2->add_option("--k", fam_k, "k >= 3")->required();
    f2->add_flag("--lift", fam_lift, "build and verify the chain for 2^n - 1");
    f2->add_flag("--listing-steps", fam_listing,
                 "justify 2^{m+3} + 1 as 2^{m+2} + (2^{m+2} + 1) instead of the star step");
    return f2;
  };
  auto* fam_u = add_u(family);
  auto* fam_f2 = add_family2(family);
  auto* top_u = add_u(&app);
  auto* top_f2 = add_family2(&app);

  // scholz
  std::uint64_t scholz_n = 0;
  bool scholz_json = false;
  std::string scholz_route;
  ScholzOptions opts;
  auto* scholz = app.add_subcommand("scholz", "Check l(2^n - 1) <= l(n) + n - 1 for one n");
  scholz->add_option("n", scholz_n, "n")->required()->check(CLI::PositiveNumber);
  scholz->add_flag("--json", scholz_json, "print the report as JSON");
  scholz->add_option("--route", scholz_route,
                     "force star-lift | family-theorem-3 | family-theorem-5");
  scholz->add_option("--threshold", opts.search_threshold, "largest n searched exactly");
  scholz->add_option("--max-nodes", opts.search.max_nodes, "node budget per search")
      ->check(CLI::PositiveNumber);

  // sweep
  std::uint64_t sweep_limit = 0;
  bool sweep_json = false;
  unsigned sweep_workers = 1;
  auto* sweep_cmd = app.add_subcommand("sweep", "scholz for every n = 1..limit");
  sweep_cmd->add_option("limit", sweep_limit, "largest n")->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--json", sweep_json, "one JSON report per line");
  sweep_cmd->add_option("--workers", sweep_workers, "worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--threshold", opts.search_threshold, "largest n searched exactly");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*verify) {
      Chain c = read_chain_file(verify_path);
      std::cout << "valid\n";
      print_stats(std::cout, c);
      return kExitOk;
    }

    if (*search) {
      search_cfg.deterministic = !nondeterministic;
      SearchOutcome o = exact_length(search_n, search_cfg);
      if (search_json) {
        std::cout << to_json(o).dump() << '\n';
      } else {
        std::cout << "n " << o.n << "\nlength " << o.length << "\nproven_minimal "
                  << (o.proven_minimal ? "true" : "false") << "\nnodes_expanded "
                  << o.nodes_expanded << '\n';
        write_chain(std::cout, o.certificate);
      }
      return kExitOk;
    }

    if (*table) {
      if (table_oracle) {
        auto t = bfs_oracle(table_limit);
        for (std::uint64_t n = 1; n <= table_limit; ++n) std::cout << n << '\t' << t[n] << '\n';
      } else {
        for (std::uint64_t n = 1; n <= table_limit; ++n) {
          std::cout << n << '\t' << exact_length(n).length << '\n';
        }
      }
      return kExitOk;
    }

    if (*lift) {
      Chain c = read_chain_file(lift_path);
      LiftedChain l = lift_use_star ? lift_star(c) : lift_general(c);
      if (lift_out.empty()) {
        write_lifted(std::cout, l);
      } else {
        std::ofstream out(lift_out);
        if (!out) throw std::runtime_error("cannot write " + lift_out);
        write_lifted(out, l);
      }
      if (!lift_accounting.empty()) {
        std::ofstream out(lift_accounting);
        if (!out) throw std::runtime_error("cannot write " + lift_accounting);
        out << accounting_json(l).dump(2) << '\n';
      }
      return kExitOk;
    }

    if (*fam_u || *top_u) {
      Chain c = u_chain(fam_m);
      write_chain(std::cout, c);
      if (fam_lift) print_lift_summary(std::cout, u_mersenne_chain(fam_m));
      return kExitOk;
    }

    if (*fam_f2 || *top_f2) {
      Chain c = fam_listing ? family2_listing_chain(fam_m, fam_k) : family2_chain(fam_m, fam_k);
      write_chain(std::cout, c);
      if (fam_lift) {
        print_lift_summary(std::cout, fam_listing ? family2_mersenne_chain(fam_m, fam_k)
                                                : lift_star(c));
      }
      return kExitOk;
    }

    if (*scholz) {
      std::optional<Route> route;
      if (!scholz_route.empty()) {
        route = parse_route(scholz_route);
        if (!route) {
          std::cerr << "unknown route '" << scholz_route << "'\n";
          return kExitError;
        }
      }
      ScholzReport r = scholz_check(scholz_n, route, opts);
      if (scholz_json) {
        std::cout << to_json(r).dump() << '\n';
      } else {
        print_report(std::cout, r);
      }
      return report_exit(r);
    }

    if (*sweep_cmd) {
      SweepSummary s = sweep(sweep_limit, opts, sweep_workers);
      for (const ScholzReport& r : s.reports) {
        if (sweep_json) {
          std::cout << to_json(r).dump() << '\n';
        } else {
          std::cout << r.n << '\t' << r.ell_n << '\t' << r.lifted_length << '\t' << r.bound << '\t'
                    << to_string(r.verdict) << '\n';
        }
      }
      std::cerr << "proven " << s.proven << " conditional " << s.conditional << " fail " << s.fail
                << " equality " << s.equality << '\n';
      return s.fail > 0 ? kExitFail : kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
