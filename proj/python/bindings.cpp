#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "pnw/critstats.hpp"
#include "pnw/generator.hpp"
#include "pnw/infinite.hpp"
#include "pnw/ops.hpp"
#include "pnw/word.hpp"

namespace py = pybind11;

namespace {

pnw::Order parse_order(const std::string& name) {
  if (name == "lex") return pnw::Order::Lex;
  if (name == "gray") return pnw::Order::Gray;
  throw py::value_error("order must be 'lex' or 'gray', got '" + name + "'");
}

py::tuple fraction(const pnw::Rational& q) { return py::make_tuple(q.num(), q.den()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Prefix normal words: generation, critical prefixes, flip extensions.";

  py::register_exception<pnw::PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<pnw::CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  m.def(
      "is_prefix_normal",
      [](const std::string& w) { return pnw::is_prefix_normal(pnw::Word::parse(w)); }, py::arg("w"));

  m.def(
      "compute_phi", [](const std::string& w) { return pnw::compute_phi(pnw::Word::parse(w)).value; },
      py::arg("w"), "phi(w); |w| + 1 when no position after the last 1 can be set.");

  m.def(
      "critical_prefix",
      [](const std::string& w) {
        const pnw::CritPrefix c = pnw::critical_prefix(pnw::Word::parse(w));
        return py::make_tuple(c.s, c.t);
      },
      py::arg("w"), "(s, t) with 1^s 0^t the critical prefix of w.");

  m.def(
      "density_profile",
      [](const std::string& w) {
        const pnw::DensityProfile d = pnw::density_profile(pnw::Word::parse(w));
        return py::make_tuple(fraction(d.delta), d.iota, d.kappa);
      },
      py::arg("w"), "((p, q), iota, kappa) with p/q the minimum prefix density.");

  m.def(
      "flipext", [](const std::string& w) { return pnw::flipext(pnw::Word::parse(w)).str(); },
      py::arg("w"));

  m.def(
      "extend",
      [](const std::string& w, std::size_t length) {
        pnw::FlipExtStream stream(pnw::Word::parse(w));
        return stream.prefix(length).str();
      },
      py::arg("w"), py::arg("length"), "Prefix of the infinite flip extension of w.");

  m.def(
      "generate",
      [](std::size_t n, const std::string& order, std::size_t cap) {
        if (n > cap) throw pnw::CapExceeded("n = " + std::to_string(n) + " is over the cap");
        std::vector<std::string> out;
        pnw::bubble_flip_all(n, parse_order(order), [&](const pnw::Word& w) { out.push_back(w.str()); });
        return out;
      },
      py::arg("n"), py::arg("order") = "lex", py::arg("cap") = 24,
      "All prefix normal words of length n as strings.");

  m.def(
      "count",
      [](std::size_t n, std::size_t cap) {
        py::gil_scoped_release release;
        return pnw::count_pn(n, cap);
      },
      py::arg("n"), py::arg("cap") = pnw::kDefaultGenerationCap);

  m.def(
      "critset",
      [](std::size_t s, std::size_t t, std::size_t n, const std::string& order) {
        std::vector<std::string> out;
        pnw::critset({s, t, n}, parse_order(order), [&](const pnw::Word& w) { out.push_back(w.str()); });
        return out;
      },
      py::arg("s"), py::arg("t"), py::arg("n"), py::arg("order") = "lex");

  m.def(
      "critset_count",
      [](std::size_t s, std::size_t t, std::size_t n) {
        py::gil_scoped_release release;
        return pnw::critset({s, t, n}, pnw::Order::Lex, [](const pnw::Word&) {});
      },
      py::arg("s"), py::arg("t"), py::arg("n"));

  m.def(
      "detect_period",
      [](const std::string& w, std::optional<std::uint64_t> scan_cap) {
        const pnw::ExtensionReport r = pnw::detect_period(pnw::Word::parse(w), scan_cap);
        py::dict d;
        d["seed"] = r.seed.str();
        d["delta"] = fraction(r.delta);
        d["iota"] = r.iota;
        d["kappa"] = r.kappa;
        d["preperiod"] = r.preperiod.str();
        d["period"] = r.period.str();
        d["m_blocks"] = r.m_blocks;
        d["preperiod_bound"] = r.preperiod_bound;
        d["scanned_length"] = r.scanned_length;
        d["certified"] = r.certified;
        d["checks_ok"] = r.checks.all();
        return d;
      },
      py::arg("w"), py::arg("scan_cap") = py::none());
}
