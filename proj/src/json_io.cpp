#include "hlab/json_io.hpp"

namespace hlab {

namespace {

json path_json(const Path& p) { return json(p); }

json symbol_json(const Symbol& s) {
  return json{{"name", s.first}, {"arity", s.second}};
}

}  // namespace

json to_json(const Verdict& v) {
  json j;
  j["verdict"] = verdict_kind_name(v.kind);
  j["detail"] = v.detail;
  if (v.holds_up_to) j["holds_up_to"] = *v.holds_up_to;
  return j;
}

json to_json(const Subst& s) {
  json j = json::object();
  for (const auto& [v, t] : s.bindings()) j[v] = render_term(t);
  return j;
}

json to_json(const SldResult& r) {
  json j;
  j["answers"] = json::array();
  for (const auto& a : r.answers) j["answers"].push_back(to_json(a));
  j["exhausted"] = r.exhausted;
  j["nodes"] = r.nodes;
  j["depth_used"] = r.depth_used;
  return j;
}

json to_json(const std::vector<AlienOccurrences>& aliens) {
  json j = json::array();
  for (const auto& a : aliens) {
    json e;
    e["term"] = render_term(a.term);
    e["paths"] = json::array();
    for (const auto& p : a.paths) e["paths"].push_back(path_json(p));
    j.push_back(e);
  }
  return j;
}

json to_json(const GeneralizationResult& g) {
  json j;
  j["generalized"] = render_query(g.generalized);
  j["rho"] = to_json(g.rho);
  j["positions"] = json::array();
  for (const auto& p : g.positions) j["positions"].push_back(path_json(p));
  return j;
}

json to_json(const ModelApprox& m) {
  json j;
  j["atoms"] = json::array();
  for (const auto& a : m.atoms) j["atoms"].push_back(render_term(a));
  j["stage"] = m.stage;
  j["depth_cap"] = m.depth_cap;
  j["fixpoint_reached"] = m.fixpoint_reached;
  return j;
}

json to_json(const ConditionReport& c) {
  json j;
  j["cond_a"] = c.cond_a;
  if (c.cond_a_witness) j["cond_a_witness"] = symbol_json(*c.cond_a_witness);
  j["per_atom"] = json::array();
  for (const auto& a : c.per_atom) {
    j["per_atom"].push_back(json{{"atom", render_term(a.atom)},
                                 {"distinct_vars", a.distinct_vars},
                                 {"spare_constants", a.spare_constants},
                                 {"satisfied", a.satisfied}});
  }
  j["cond_b"] = c.cond_b;
  j["holds"] = c.holds;
  j["simple_sufficient"] = c.simple_sufficient;
  return j;
}

json to_json(const EquivalenceReport& r) {
  json j;
  j["model"] = to_json(r.model_verdict);
  j["entailment"] = to_json(r.entails_verdict);
  j["conditions"] = to_json(r.conditions);
  j["consistent_with_theorem"] = r.consistent_with_theorem;
  return j;
}

json to_json(const GeneralizationCheck& g) {
  json j;
  j["generalized"] = render_query(g.generalized);
  j["model"] = to_json(g.model_verdict);
  j["entailment"] = to_json(g.entails_verdict);
  j["both_definite"] = g.both_definite;
  j["iff_holds"] = g.iff_holds;
  return j;
}

json to_json(const Counterexample& c) {
  json j;
  j["program"] = render_program(c.program);
  j["selected_atom"] = c.selected_atom;
  j["template"] = render_term(c.template_atom);
  j["slot_vars"] = c.slot_vars;
  j["slot_constants"] = json::array();
  for (const auto& t : c.slot_constants)
    j["slot_constants"].push_back(t ? json(render_term(t)) : json(nullptr));
  j["spare_constants"] = json::array();
  for (const auto& t : c.spare_constants)
    j["spare_constants"].push_back(render_term(t));
  j["fresh_constants"] = json::array();
  for (const auto& s : c.fresh_constants)
    j["fresh_constants"].push_back(symbol_json(s));
  j["extended_alphabet"] = render_symbols(c.extended_sig.functions);
  j["witness"] = render_term(c.witness);
  return j;
}

json to_json(const FuzzCase& c) {
  json j;
  j["case_seed"] = c.case_seed;
  j["program"] = c.program;
  j["query"] = c.query;
  j["note"] = c.note;
  j["definite"] = c.definite;
  j["violation"] = c.violation;
  return j;
}

json to_json(const CampaignReport& r) {
  json j;
  j["property"] = r.config.property;
  j["seed"] = r.config.seed;
  j["cases"] = r.cases;
  j["definite"] = r.definite;
  j["unknown"] = r.unknown;
  j["violations"] = r.violations;
  j["records"] = json::array();
  for (const auto& c : r.records) j["records"].push_back(to_json(c));
  return j;
}

}  // namespace hlab
