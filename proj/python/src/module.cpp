#include <optional>
#include <span>
#include <sstream>
#include <string>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tstar/core.hpp"
#include "tstar/fast.hpp"
#include "tstar/inference.hpp"

namespace py = pybind11;

namespace tstar::python {
namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

struct BoundResult {
  std::size_t n = 0;
  Rank m_x = 0;
  Rank m_y = 0;
  std::uint64_t n_c = 0;
  std::uint64_t n_d = 0;
  std::int64_t numerator = 0;
  std::int64_t denominator = 0;
  double tstar = 0.0;
  std::string method;
  std::optional<double> p_value;
  std::optional<std::uint64_t> permutations;
  std::optional<std::uint64_t> seed;

  explicit BoundResult(const TauStarResult& r)
      : n(r.n), m_x(r.m_x), m_y(r.m_y), n_c(r.n_c), n_d(r.n_d), numerator(r.numerator),
        denominator(r.denominator), tstar(r.tstar), method(method_label(r.method)) {}
};

std::span<const double> view(const Array& a) {
  if (a.ndim() != 1) throw py::value_error("expected a one-dimensional sequence");
  return {a.data(), static_cast<std::size_t>(a.size())};
}

BoundResult bound_tstar(const Array& xs, const Array& ys) {
  const auto x = view(xs);
  const auto y = view(ys);
  py::gil_scoped_release release;
  return BoundResult(tstar_fast(validate(x, y)));
}

BoundResult bound_permutation_test(const Array& xs, const Array& ys, long long permutations,
                                   std::uint64_t seed, unsigned threads) {
  const auto x = view(xs);
  const auto y = view(ys);
  py::gil_scoped_release release;
  PermutationOptions opts;
  opts.threads = threads;
  const auto pt = permutation_test(validate(x, y), permutations, seed, opts);
  BoundResult res(pt.observed);
  res.p_value = pt.p_value;
  res.permutations = pt.permutations;
  res.seed = pt.seed;
  return res;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bergsma-Dassios sign covariance t* computed in O(n^2)";

  static py::exception<Error> base(m, "TStarError", PyExc_ValueError);
  py::register_exception<LengthMismatch>(m, "LengthMismatch", base.ptr());
  py::register_exception<NonFiniteValue>(m, "NonFiniteValue", base.ptr());
  py::register_exception<TooFewSamples>(m, "TooFewSamples", base.ptr());
  py::register_exception<SampleTooLarge>(m, "SampleTooLarge", base.ptr());
  py::register_exception<GridTooLarge>(m, "GridTooLarge", base.ptr());
  py::register_exception<InvalidPermutationCount>(m, "InvalidPermutationCount", base.ptr());

  py::class_<BoundResult>(m, "BoundResult")
      .def_readonly("n", &BoundResult::n)
      .def_readonly("m_x", &BoundResult::m_x)
      .def_readonly("m_y", &BoundResult::m_y)
      .def_readonly("n_c", &BoundResult::n_c)
      .def_readonly("n_d", &BoundResult::n_d)
      .def_readonly("numerator", &BoundResult::numerator)
      .def_readonly("denominator", &BoundResult::denominator)
      .def_readonly("tstar", &BoundResult::tstar)
      .def_readonly("method", &BoundResult::method)
      .def_readonly("p_value", &BoundResult::p_value)
      .def_readonly("permutations", &BoundResult::permutations)
      .def_readonly("seed", &BoundResult::seed)
      .def("__repr__", [](const BoundResult& r) {
        std::ostringstream s;
        s.precision(17);
        s << "BoundResult(n=" << r.n << ", n_c=" << r.n_c << ", n_d=" << r.n_d
          << ", tstar=" << r.tstar << ", method='" << r.method << "'";
        if (r.p_value) s << ", p_value=" << *r.p_value;
        s << ")";
        return s.str();
      });

  m.def("bound_tstar", &bound_tstar, py::arg("xs"), py::arg("ys"),
        "t* with exact concordant/discordant counts.");
  m.def("bound_permutation_test", &bound_permutation_test, py::arg("xs"), py::arg("ys"),
        py::arg("permutations"), py::arg("seed"), py::arg("threads") = 1,
        "One-sided permutation test of independence; p = (1 + exceedances) / (B + 1).");
}

}  // namespace tstar::python
