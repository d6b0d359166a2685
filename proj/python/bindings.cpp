#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidlab/braid_word.hpp"
#include "braidlab/burau.hpp"
#include "braidlab/dehornoy.hpp"
#include "braidlab/errors.hpp"
#include "braidlab/exotic_order.hpp"
#include "braidlab/free_group.hpp"
#include "braidlab/probe.hpp"
#include "braidlab/stallings.hpp"

namespace py = pybind11;
using namespace braidlab;

namespace {

py::object big_int(const BigInt& v) {
  const std::string s = v.str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

std::vector<FreeWord> parse_all(const std::vector<std::string>& texts, int rank) {
  std::vector<FreeWord> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_free(t, rank));
  return out;
}

std::string show(const FreeWord& w, const ExoticContext& ctx) {
  return format_free(w, ctx.is_kn() ? FreeAlphabet::indexed : FreeAlphabet::automatic);
}

}  // namespace

PYBIND11_MODULE(_braidlab, m) {
  m.doc() = "Dehornoy ordering of B3, its free subgroups, and the induced left orders";

  auto base = py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  (void)base;

  // Braid words are passed as text ("s1 s2^-1" or "aB") and returned normalized.
  m.def("normalize_braid", [](const std::string& w, int strands) { return format_braid(parse_braid(w, strands)); },
        py::arg("word"), py::arg("strands") = 3);
  m.def("braid_letters", [](const std::string& w, int strands) {
    std::vector<std::pair<int, int>> out;
    for (const auto& l : parse_braid(w, strands).letters()) out.emplace_back(l.index, l.exponent);
    return out;
  }, py::arg("word"), py::arg("strands") = 3);
  m.def("exponent_sum", [](const std::string& w, int strands) { return exponent_sum(parse_braid(w, strands)); },
        py::arg("word"), py::arg("strands") = 3);
  m.def("handle_reduce", [](const std::string& w, int strands) {
    const ReductionResult r = handle_reduce_traced(parse_braid(w, strands));
    return std::make_pair(format_braid(r.word), r.steps);
  }, py::arg("word"), py::arg("strands") = 3, "Handle-free equivalent word and the number of reduction steps.");
  m.def("sign", [](const std::string& w, int strands) {
    const OrderVerdict v = dehornoy_sign(parse_braid(w, strands));
    return std::make_pair(static_cast<int>(v.kind), v.main_index);
  }, py::arg("word"), py::arg("strands") = 3, "(+1, i), (-1, i) or (0, 0).");
  m.def("compare", [](const std::string& u, const std::string& v, int strands) {
    return to_string(braid_compare(parse_braid(u, strands), parse_braid(v, strands)));
  }, py::arg("u"), py::arg("v"), py::arg("strands") = 3);
  m.def("braid_equal", [](const std::string& u, const std::string& v) {
    return braid_equal(parse_braid(u), parse_braid(v));
  });
  m.def("burau", [](const std::string& w) {
    const LaurentMatrix mat = burau_matrix(parse_braid(w));
    py::list rows;
    for (int r = 0; r < 2; ++r) {
      py::list row;
      for (int c = 0; c < 2; ++c) {
        py::dict poly;
        for (const auto& [e, coeff] : mat(r, c).terms()) poly[py::int_(e)] = big_int(coeff);
        row.append(poly);
      }
      rows.append(row);
    }
    return rows;
  }, "Reduced Burau matrix; entries map exponents of t to integer coefficients.");
  m.def("cofinal_bound", [](const std::string& w, int cap) { return cofinal_bound(parse_braid(w), cap); },
        py::arg("word"), py::arg("cap") = 64);

  // Free words: "x y^-1", "xYx", or "g1 g3^2" for higher ranks.
  m.def("normalize_free", [](const std::string& w, int rank) { return format_free(parse_free(w, rank)); },
        py::arg("word"), py::arg("rank") = 2);
  m.def("abelianize", [](const std::string& w, int rank) { return abelianize(parse_free(w, rank)); },
        py::arg("word"), py::arg("rank") = 2);
  m.def("apply_automorphism", [](const std::string& name, const std::string& w, long long power) {
    return format_free(apply_automorphism(automorphism_by_name(name), parse_free(w), power));
  }, py::arg("name"), py::arg("word"), py::arg("power") = 1);
  m.def("embed", [](const std::string& w) { return format_braid(embed(parse_free(w))); });
  m.def("commutator_rewrite", [](const std::string& w) { return format_free(commutator_rewrite(parse_braid(w))); });
  m.def("kn_member", [](const std::string& w, int n) { return kn_member(parse_free(w), n); });
  m.def("kn_basis", [](int n) {
    std::vector<std::string> out;
    for (const auto& g : kn_basis(n)) out.push_back(format_free(g));
    return out;
  });
  m.def("kn_rewrite", [](const std::string& w, int n) {
    return format_free(kn_rewrite(parse_free(w), n), FreeAlphabet::indexed);
  });
  m.def("subgroup_contains", [](const std::vector<std::string>& gens, const std::string& w, int rank) {
    return subgroup_contains(stallings_graph(parse_all(gens, rank), rank), parse_free(w, rank));
  }, py::arg("generators"), py::arg("word"), py::arg("rank") = 2);
  m.def("subgroup_rank", [](const std::vector<std::string>& gens, int rank) {
    return stallings_graph(parse_all(gens, rank), rank).subgroup_rank();
  }, py::arg("generators"), py::arg("rank") = 2);

  // Contexts are "f2" or "kn:<n>"; K_n words use g1..gn for the basis.
  m.def("exotic_compare", [](const std::string& u, const std::string& v, const std::string& ctx) {
    const ExoticContext c = ExoticContext::parse(ctx);
    return to_string(exotic_compare(parse_free(u, c.rank()), parse_free(v, c.rank()), c));
  }, py::arg("u"), py::arg("v"), py::arg("ctx") = "f2");
  m.def("convexity_probe", [](const std::vector<std::string>& gens, const std::string& ctx, std::size_t radius)
            -> py::object {
    const ExoticContext c = ExoticContext::parse(ctx);
    const auto words = parse_all(gens, c.rank());
    ConvexityOptions options;
    options.radius = radius;
    const ConvexityResult r = convexity_probe(words, c, options);
    if (!r.witness) return py::none();
    py::dict d;
    d["c_low"] = show(r.witness->c_low, c);
    d["g"] = show(r.witness->g, c);
    d["c_high"] = show(r.witness->c_high, c);
    d["ball_index"] = r.witness_index;
    d["valid"] = witness_is_valid(*r.witness, words);
    return d;
  }, py::arg("generators"), py::arg("ctx") = "f2", py::arg("radius") = 8);
  m.def("conradian_violation_search", [](const std::string& ctx, std::size_t radius) -> py::object {
    const ExoticContext c = ExoticContext::parse(ctx);
    const auto pair = conradian_violation_search(c, radius);
    if (!pair) return py::none();
    return py::make_tuple(show(pair->first, c), show(pair->second, c));
  }, py::arg("ctx") = "f2", py::arg("radius") = 6);
  m.def("verify_json", [](std::uint64_t seed, std::size_t trials, unsigned threads) {
    SuiteOptions o;
    o.seed = seed;
    o.trials = trials;
    o.threads = threads;
    py::gil_scoped_release release;
    return lemma_suite(o).to_json().dump(2);
  }, py::arg("seed") = 1, py::arg("trials") = 100, py::arg("threads") = 1);
}
