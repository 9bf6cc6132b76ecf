// Python bindings. Words cross the boundary as strings, big integers as Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bsgroup/classifier.hpp"
#include "bsgroup/coset_dynamics.hpp"
#include "bsgroup/errors.hpp"
#include "bsgroup/invariants.hpp"
#include "bsgroup/normal_form.hpp"
#include "bsgroup/tree.hpp"

namespace py = pybind11;
using namespace bsgroup;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

Word word(std::int64_t m, std::int64_t n, const std::string& text) {
  return parse_word(text, make_params(m, n));
}

std::vector<BsParams> factors(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
  std::vector<BsParams> out;
  for (auto [m, n] : pairs) out.push_back(make_params(m, n));
  return out;
}

py::dict verdict(const IsoVerdict& v) {
  py::dict d;
  d["isomorphic"] = v.isomorphic;
  d["sigma"] = v.witness ? py::cast(*v.witness) : py::none();
  d["kind"] = std::string(to_string(v.kind));
  d["reason"] = v.reason;
  return d;
}

}  // namespace

PYBIND11_MODULE(_bsgroup, mod) {
  mod.doc() = "Baumslag-Solitar groups and their totally disconnected completions";

  auto error = py::register_exception<Error>(mod, "Error", PyExc_ValueError);
  py::register_exception<InvalidParameters>(mod, "InvalidParameters", error.ptr());
  py::register_exception<ParseError>(mod, "ParseError", error.ptr());
  py::register_exception<CapExceeded>(mod, "CapExceeded", error.ptr());
  py::register_exception<OutOfHypothesis>(mod, "OutOfHypothesis", error.ptr());

  mod.def("normalize", [](std::int64_t m, std::int64_t n) {
    const BsParams p = make_params(m, n);
    return std::make_pair(p.m(), p.n());
  }, py::arg("m"), py::arg("n"));

  mod.def("reduce", [](std::int64_t m, std::int64_t n, const std::string& w) {
    return britton_reduce(word(m, n, w)).to_string();
  }, py::arg("m"), py::arg("n"), py::arg("word"));

  mod.def("is_identity", [](std::int64_t m, std::int64_t n, const std::string& w) {
    return is_identity(word(m, n, w));
  }, py::arg("m"), py::arg("n"), py::arg("word"));

  mod.def("are_equal", [](std::int64_t m, std::int64_t n, const std::string& u, const std::string& v) {
    return are_equal(word(m, n, u), word(m, n, v));
  }, py::arg("m"), py::arg("n"), py::arg("u"), py::arg("v"));

  mod.def("normal_form", [](std::int64_t m, std::int64_t n, const std::string& w) {
    const NormalForm nf = normal_form(word(m, n, w));
    py::list prefix;
    for (const auto& e : nf.prefix()) prefix.append(py::make_tuple(e.t_sign, e.residue));
    py::dict d;
    d["prefix"] = prefix;
    d["tail"] = to_py(nf.tail());
    d["word"] = nf.to_string();
    return d;
  }, py::arg("m"), py::arg("n"), py::arg("word"));

  mod.def("ball_size", [](std::int64_t m, std::int64_t n, int radius, std::size_t cap) {
    return ball(make_params(m, n), radius, cap).size();
  }, py::arg("m"), py::arg("n"), py::arg("radius"), py::arg("cap") = kDefaultBallCap);

  mod.def("tree_dot", [](std::int64_t m, std::int64_t n, int radius, std::size_t cap) {
    return to_dot(ball(make_params(m, n), radius, cap));
  }, py::arg("m"), py::arg("n"), py::arg("radius"), py::arg("cap") = kDefaultBallCap);

  mod.def("distance", [](std::int64_t m, std::int64_t n, const std::string& u, const std::string& v) {
    return distance(vertex_of(word(m, n, u)), vertex_of(word(m, n, v)));
  }, py::arg("m"), py::arg("n"), py::arg("u"), py::arg("v"));

  mod.def("orbit_index", [](std::int64_t m, std::int64_t n, const std::string& w, std::uint64_t cap) {
    const IndexReport r = orbit_index(word(m, n, w), cap);
    return r.index ? py::cast(*r.index) : py::none();
  }, py::arg("m"), py::arg("n"), py::arg("word"), py::arg("cap") = kDefaultOrbitCap);

  mod.def("min_index", [](std::int64_t m, std::int64_t n, int max_syllables, std::uint64_t cap) {
    return min_index_over_words(make_params(m, n), max_syllables, cap);
  }, py::arg("m"), py::arg("n"), py::arg("max_syllables") = 3, py::arg("cap") = 10000);

  mod.def("commensuration_exponent", [](std::int64_t m, std::int64_t n, const std::string& w) {
    return commensuration_exponent(word(m, n, w));
  }, py::arg("m"), py::arg("n"), py::arg("word"));

  mod.def("finite_index_intersection", [](std::int64_t m, std::int64_t n, const std::vector<std::string>& ws) {
    std::vector<Word> reps;
    for (const auto& w : ws) reps.push_back(word(m, n, w));
    return to_py(finite_index_intersection(reps));
  }, py::arg("m"), py::arg("n"), py::arg("words"));

  mod.def("acts_trivially", [](std::int64_t m, std::int64_t n, const std::string& w, int radius) {
    return acts_trivially_on_ball(word(m, n, w), radius);
  }, py::arg("m"), py::arg("n"), py::arg("word"), py::arg("radius"));

  mod.def("modular_delta", [](std::int64_t m, std::int64_t n, const std::string& w) {
    const ModularValue v = modular_delta(word(m, n, w));
    return std::make_pair(to_py(v.numerator), to_py(v.denominator));
  }, py::arg("m"), py::arg("n"), py::arg("word"));

  mod.def("scale_set", [](std::int64_t m, std::int64_t n) {
    const ScaleSet s = scale_set(make_params(m, n));
    return std::make_pair(s.m0, s.n0);
  }, py::arg("m"), py::arg("n"));

  mod.def("scale_member", [](std::int64_t m, std::int64_t n, const py::int_& value) {
    return scale_member(scale_set(make_params(m, n)), from_py(value));
  }, py::arg("m"), py::arg("n"), py::arg("value"));

  mod.def("bs_isomorphic", [](std::int64_t m, std::int64_t n, std::int64_t p, std::int64_t q) {
    return bs_isomorphic({m, n}, {p, q});
  });

  mod.def("g_isomorphic", [](std::pair<std::int64_t, std::int64_t> x, std::pair<std::int64_t, std::int64_t> y) {
    return verdict(g_isomorphic(make_params(x.first, x.second), make_params(y.first, y.second)));
  }, py::arg("left"), py::arg("right"));

  mod.def("product_isomorphic", [](const std::vector<std::pair<std::int64_t, std::int64_t>>& left,
                                   const std::vector<std::pair<std::int64_t, std::int64_t>>& right) {
    return verdict(product_isomorphic(factors(left), factors(right)));
  }, py::arg("left"), py::arg("right"));
}
