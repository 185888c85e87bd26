#include <optional>
#include <sstream>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "achain/algebra.hpp"
#include "achain/chain.hpp"
#include "achain/chain_io.hpp"
#include "achain/errors.hpp"
#include "achain/families.hpp"
#include "achain/lift.hpp"
#include "achain/report_json.hpp"
#include "achain/scholz.hpp"
#include "achain/search.hpp"

namespace py = pybind11;
using namespace achain;

// Python int <-> BigInt through decimal text; chains are small enough that
// the conversion cost does not matter.
namespace pybind11::detail {
template <>
struct type_caster<BigInt> {
  PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = BigInt(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const BigInt& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

py::tuple step_tuple(const Step& s) { return py::make_tuple(s.i, s.j); }

std::vector<py::tuple> steps_list(std::span<const Step> steps) {
  std::vector<py::tuple> out;
  out.reserve(steps.size());
  for (const Step& s : steps) out.push_back(step_tuple(s));
  return out;
}

Chain parse_text(const std::string& text) {
  std::istringstream in(text);
  return read_chain(in);
}

}  // namespace

PYBIND11_MODULE(_achain, m) {
  m.doc() = "Addition chains, Mersenne lifts and the Scholz bound";

  py::register_exception<ChainError>(m, "ChainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NotStarError>(m, "NotStarError", PyExc_ValueError);
  py::register_exception<HypothesisViolated>(m, "HypothesisViolated", PyExc_ValueError);
  py::register_exception<LimitTooLarge>(m, "LimitTooLarge", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<Chain>(m, "Chain")
      .def_property_readonly("elements",
                             [](const Chain& c) {
                               return std::vector<BigInt>(c.elements().begin(),
                                                          c.elements().end());
                             })
      .def_property_readonly("steps", [](const Chain& c) { return steps_list(c.steps()); })
      .def_property_readonly("length", &Chain::length)
      .def_property_readonly("target", &Chain::target)
      .def("step", [](const Chain& c, std::size_t k) { return step_tuple(c.step(k)); })
      .def("__len__", [](const Chain& c) { return c.elements().size(); })
      .def("__getitem__",
           [](const Chain& c, std::size_t k) {
             if (k >= c.elements().size()) throw py::index_error();
             return c[k];
           })
      .def("__eq__", [](const Chain& a, const Chain& b) { return a == b; })
      .def("to_text", [](const Chain& c, bool with_steps) { return to_chain_text(c, with_steps); },
           py::arg("with_steps") = true)
      .def("__repr__", [](const Chain& c) {
        std::ostringstream s;
        s << "Chain(target=" << c.target() << ", length=" << c.length() << ")";
        return s.str();
      });

  py::class_<ChainStats>(m, "ChainStats")
      .def_readonly("lambda_", &ChainStats::lambda)
      .def_readonly("nu", &ChainStats::nu)
      .def_readonly("small_steps", &ChainStats::small_steps)
      .def_readonly("star", &ChainStats::star);

  m.def("validate", [](std::vector<BigInt> e) { return validate(std::move(e)); },
        py::arg("elements"));
  m.def("canonicalize", [](std::vector<BigInt> e) { return canonicalize(std::move(e)); },
        py::arg("elements"));
  m.def("with_steps",
        [](std::vector<BigInt> elements, const std::vector<std::pair<std::size_t, std::size_t>>& s) {
          std::vector<Step> steps;
          for (auto [i, j] : s) steps.push_back(Step{i, j});
          return Chain::with_steps(std::move(elements), std::move(steps));
        },
        py::arg("elements"), py::arg("steps"));
  m.def("stats", &stats);
  m.def("lambda_", [](const BigInt& n) { return lambda(n); });
  m.def("nu", [](const BigInt& n) { return nu(n); });
  m.def("lower_bound", [](const BigInt& n) { return lower_bound(n); });
  m.def("binary_chain", &binary_chain);
  m.def("is_star", &is_star);
  m.def("star_assignment", &star_assignment);
  m.def("read_chain", &parse_text, py::arg("text"));

  m.def("product", &product);
  m.def("double_extend", &double_extend);
  m.def("increment_extend", &increment_extend);
  m.def("pow2_plus1_chain", &pow2_plus1_chain);

  py::class_<LiftedChain>(m, "LiftedChain")
      .def_property_readonly("length", &LiftedChain::length)
      .def_property_readonly("exponent", &LiftedChain::exponent)
      .def_property_readonly("shifts_total", &LiftedChain::shifts_total)
      .def_property_readonly("adds_total", &LiftedChain::adds_total)
      .def_property_readonly("source", &LiftedChain::source)
      .def_property_readonly("steps", [](const LiftedChain& l) { return steps_list(l.steps()); })
      .def("values", &LiftedChain::values)
      .def("to_chain", &LiftedChain::to_chain)
      .def("verify", [](const LiftedChain& l) { return static_cast<bool>(verify_lift(l)); })
      .def("accounting", [](const LiftedChain& l) { return accounting_json(l).dump(); })
      .def("to_text", [](const LiftedChain& l) {
        std::ostringstream s;
        write_lifted(s, l);
        return s.str();
      });

  m.def("lift_star", &lift_star);
  m.def("lift_general", &lift_general);
  m.def("star_lift_length", &star_lift_length);

  m.def("x3_chain", &x3_chain, py::arg("m"));
  m.def("u_chain", &u_chain, py::arg("m"));
  m.def("u_value", [](std::uint64_t k) { return UFamily{k}.u(); }, py::arg("m"));
  m.def("u_mersenne_chain", &u_mersenne_chain, py::arg("m"));
  m.def("family2_n", &family2_n, py::arg("m"), py::arg("k"));
  m.def("family2_chain", &family2_chain, py::arg("m"), py::arg("k"));
  m.def("family2_listing_chain", &family2_listing_chain, py::arg("m"), py::arg("k"));
  m.def("family2_mersenne_chain", &family2_mersenne_chain, py::arg("m"), py::arg("k"));
  m.def("match_u_family", &match_u_family);
  m.def("match_family2", [](const BigInt& n) -> std::optional<std::pair<std::uint64_t, std::uint64_t>> {
    auto f = match_family2(n);
    if (!f) return std::nullopt;
    return std::make_pair(f->m, f->k);
  });

  py::class_<SearchOutcome>(m, "SearchOutcome")
      .def_readonly("n", &SearchOutcome::n)
      .def_readonly("length", &SearchOutcome::length)
      .def_readonly("certificate", &SearchOutcome::certificate)
      .def_readonly("nodes_expanded", &SearchOutcome::nodes_expanded)
      .def_readonly("proven_minimal", &SearchOutcome::proven_minimal)
      .def("to_json", [](const SearchOutcome& o) { return to_json(o).dump(); });

  auto make_config = [](std::uint64_t max_nodes, bool star_only, unsigned workers,
                        bool deterministic) {
    SearchConfig cfg;
    cfg.max_nodes = max_nodes;
    cfg.star_only = star_only;
    cfg.worker_count = workers;
    cfg.deterministic = deterministic;
    return cfg;
  };
  const SearchConfig defaults;
  m.def(
      "exact_length",
      [make_config](std::uint64_t n, std::uint64_t max_nodes, bool star_only, unsigned workers,
                    bool deterministic) {
        SearchConfig cfg = make_config(max_nodes, star_only, workers, deterministic);
        py::gil_scoped_release release;
        return exact_length(n, cfg);
      },
      py::arg("n"), py::arg("max_nodes") = defaults.max_nodes, py::arg("star_only") = false,
      py::arg("workers") = 1u, py::arg("deterministic") = true);
  m.def(
      "minimal_star_length",
      [](std::uint64_t n) {
        py::gil_scoped_release release;
        return minimal_star_length(n);
      },
      py::arg("n"));
  m.def("bfs_oracle", &bfs_oracle, py::arg("limit"), py::call_guard<py::gil_scoped_release>());

  py::class_<ScholzReport>(m, "ScholzReport")
      .def_readonly("n", &ScholzReport::n)
      .def_readonly("ell_n", &ScholzReport::ell_n)
      .def_readonly("chain_for_n", &ScholzReport::chain_for_n)
      .def_readonly("lifted", &ScholzReport::lifted)
      .def_readonly("lifted_length", &ScholzReport::lifted_length)
      .def_readonly("bound", &ScholzReport::bound)
      .def_property_readonly("ell_n_provenance",
                             [](const ScholzReport& r) { return std::string(to_string(r.ell_n_provenance)); })
      .def_property_readonly("verdict",
                             [](const ScholzReport& r) { return std::string(to_string(r.verdict)); })
      .def_property_readonly("route",
                             [](const ScholzReport& r) { return std::string(to_string(r.route)); })
      .def("to_json", [](const ScholzReport& r) { return to_json(r).dump(); });

  auto make_opts = [](std::uint64_t threshold, std::uint64_t max_nodes) {
    ScholzOptions opts;
    opts.search_threshold = threshold;
    opts.search.max_nodes = max_nodes;
    return opts;
  };
  const ScholzOptions scholz_defaults;
  m.def(
      "scholz_check",
      [make_opts](std::uint64_t n, std::optional<std::string> route, std::uint64_t threshold,
                  std::uint64_t max_nodes) {
        std::optional<Route> r;
        if (route) {
          r = parse_route(*route);
          if (!r) throw py::value_error("unknown route '" + *route + "'");
        }
        ScholzOptions opts = make_opts(threshold, max_nodes);
        py::gil_scoped_release release;
        return scholz_check(n, r, opts);
      },
      py::arg("n"), py::arg("route") = py::none(),
      py::arg("threshold") = scholz_defaults.search_threshold,
      py::arg("max_nodes") = scholz_defaults.search.max_nodes);
  m.def("doubling_transfer", &doubling_transfer, py::arg("report"), py::arg("ell_2n"));
  m.def(
      "sweep",
      [make_opts](std::uint64_t limit, unsigned workers, std::uint64_t threshold) {
        ScholzOptions opts = make_opts(threshold, ScholzOptions{}.search.max_nodes);
        py::gil_scoped_release release;
        return sweep(limit, opts, workers).reports;
      },
      py::arg("limit"), py::arg("workers") = 1u,
      py::arg("threshold") = scholz_defaults.search_threshold);
}
