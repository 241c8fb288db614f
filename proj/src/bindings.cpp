#include <pybind11/pybind11.h>

#include "hlab/equivalence.hpp"
#include "hlab/errors.hpp"
#include "hlab/fuzz.hpp"
#include "hlab/herbrand.hpp"
#include "hlab/json_io.hpp"
#include "hlab/sld.hpp"
#include "hlab/syntax.hpp"

namespace py = pybind11;

namespace {

using namespace hlab;

// The bindings exchange JSON strings; the Python wrapper decodes them.

Signature effective_sig(const Program& p, const Signature& parsed,
                        const std::string& alphabet) {
  if (alphabet.empty()) return parsed;
  Signature sig;
  for (const auto& s : parse_symbol_list(alphabet)) sig.functions.insert(s);
  for (const auto& s : occurring_symbols(p)) sig.functions.insert(s);
  sig.predicates = parsed.predicates;
  return sig;
}

std::string py_solve(const std::string& program, const std::string& query,
                     int max_depth, std::uint64_t max_nodes,
                     bool keep_duplicates) {
  auto [p, sig] = parse_program(program);
  Query q = parse_query(query);
  return to_json(sld_answers(p, q, Budget{max_depth, max_nodes},
                             keep_duplicates))
      .dump();
}

std::string py_entails(const std::string& program, const std::string& query,
                       int max_depth, std::uint64_t max_nodes) {
  auto [p, sig] = parse_program(program);
  Query q = parse_query(query);
  return to_json(entails(p, q, Budget{max_depth, max_nodes})).dump();
}

std::string py_check(const std::string& program, const std::string& query,
                     const std::string& alphabet, int depth_cap, int max_depth,
                     std::uint64_t max_nodes) {
  auto [p, parsed] = parse_program(program);
  Query q = parse_query(query);
  Signature sig = effective_sig(p, parsed, alphabet);
  for (const auto& s : occurring_symbols(q)) sig.functions.insert(s);
  for (const auto& s : occurring_predicates(q)) sig.predicates.insert(s);
  return to_json(equivalence_verdict(p, q, sig, Budget{max_depth, max_nodes},
                                     depth_cap))
      .dump();
}

std::string py_generalize(const std::string& program,
                          const std::string& query) {
  auto [p, sig] = parse_program(program);
  return to_json(generalize(parse_query(query), p)).dump();
}

std::string py_aliens(const std::string& program, const std::string& query) {
  auto [p, sig] = parse_program(program);
  return to_json(maximal_aliens(parse_query(query), occurring_symbols(p)))
      .dump();
}

std::string py_model(const std::string& program, const std::string& alphabet,
                     int depth_cap) {
  auto [p, parsed] = parse_program(program);
  Signature sig = effective_sig(p, parsed, alphabet);
  return to_json(least_model_upto(p, sig, depth_cap)).dump();
}

std::string py_counterexample(const std::string& occurring,
                              const std::string& alphabet,
                              const std::string& query) {
  SymbolSet f0;
  for (const auto& s : parse_symbol_list(occurring)) f0.insert(s);
  Signature sig;
  for (const auto& s : parse_symbol_list(alphabet)) sig.functions.insert(s);
  Query q = parse_query(query);
  for (const auto& s : occurring_predicates(q)) sig.predicates.insert(s);
  return to_json(build_counterexample(f0, sig, q)).dump();
}

std::string py_fuzz(const std::string& property, int cases,
                    std::uint64_t seed, bool record_cases) {
  FuzzConfig cfg;
  cfg.property = property;
  cfg.cases = cases;
  cfg.seed = seed;
  cfg.record_cases = record_cases;
  return to_json(fuzz(cfg)).dump();
}

}  // namespace

PYBIND11_MODULE(_hlab, m) {
  m.doc() = "definite-program answer and Herbrand model laboratory";

  py::register_exception<ParseError>(m, "HlabParseError", PyExc_ValueError);
  py::register_exception<PremiseError>(m, "HlabPremiseError", PyExc_ValueError);
  py::register_exception<InternalInconsistencyError>(
      m, "HlabInconsistencyError", PyExc_RuntimeError);

  m.def("solve", &py_solve, py::arg("program"), py::arg("query"),
        py::arg("max_depth") = 128, py::arg("max_nodes") = 2'000'000,
        py::arg("keep_duplicates") = false);
  m.def("entails", &py_entails, py::arg("program"), py::arg("query"),
        py::arg("max_depth") = 128, py::arg("max_nodes") = 2'000'000);
  m.def("check", &py_check, py::arg("program"), py::arg("query"),
        py::arg("alphabet") = "", py::arg("depth_cap") = 3,
        py::arg("max_depth") = 128, py::arg("max_nodes") = 2'000'000);
  m.def("generalize", &py_generalize, py::arg("program"), py::arg("query"));
  m.def("aliens", &py_aliens, py::arg("program"), py::arg("query"));
  m.def("model", &py_model, py::arg("program"), py::arg("alphabet") = "",
        py::arg("depth_cap") = 3);
  m.def("counterexample", &py_counterexample, py::arg("occurring"),
        py::arg("alphabet"), py::arg("query"));
  m.def("fuzz", &py_fuzz, py::arg("property") = "theorem1",
        py::arg("cases") = 100, py::arg("seed") = 1,
        py::arg("record_cases") = false);
}
