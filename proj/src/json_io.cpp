#include "coxkit/json_io.hpp"

namespace coxkit {

using nlohmann::json;

json scalar_json(const Scalar& s) {
  if (s.is_rational()) return s.rational_part().get_str();
  return json{{"a", s.rational_part().get_str()},
              {"b", s.phi_part().get_str()}};
}

json root_system_json(const RootSystem& rs) {
  json roots = json::array();
  for (int i = 0; i < rs.num_roots(); ++i) {
    json row = json::array();
    for (const auto& c : rs.root(i)) row.push_back(scalar_json(c));
    roots.push_back(std::move(row));
  }
  json simple = json::array();
  for (auto id : rs.simple_ids()) simple.push_back(id);
  return json{{"type", family_name(rs.family())},
              {"rank", rs.rank()},
              {"ambient_dim", rs.ambient_dim()},
              {"roots", std::move(roots)},
              {"simple", std::move(simple)}};
}

json report_json(const VerificationReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back(json{{"element", f.element},
                            {"expected", f.expected},
                            {"got", f.got},
                            {"witness", f.witness}});
  return json{{"group", r.group_label},
              {"order", r.group_order},
              {"theorem", r.theorem},
              {"scope", r.scope},
              {"elements_checked", r.elements_checked},
              {"failures", std::move(failures)},
              {"caps_hit", r.caps_hit},
              {"success", r.success()},
              {"elapsed_ms", r.elapsed_ms}};
}

json classification_json(const CoxGroup& g, const ClassificationRecord& rec) {
  json out{{"group", g.label()},
           {"element", element_to_string(g, rec.element)},
           {"reflection_length", rec.reflection_length},
           {"is_quasi_coxeter", rec.quasi_coxeter},
           {"is_parabolic_quasi_coxeter", rec.parabolic_quasi_coxeter},
           {"parabolic_closure", rec.closure}};
  const auto& t = rec.transitivity;
  json tj{{"red_count", t.red_count}, {"orbit_size", t.orbit_size}};
  switch (t.verdict) {
    case TransitivityCheck::Verdict::transitive:
      tj["verdict"] = "transitive";
      break;
    case TransitivityCheck::Verdict::intransitive:
      tj["verdict"] = "intransitive";
      break;
    case TransitivityCheck::Verdict::indeterminate:
      tj["verdict"] = "indeterminate";
      break;
  }
  if (t.outside_witness) tj["outside_factorization"] = *t.outside_witness;
  out["transitivity"] = std::move(tj);
  if (!g.is_dihedral() && (g.family() == Family::B || g.family() == Family::D))
    out["signed_permutation"] = g.to_signed_perm(rec.element).str();
  return out;
}

json dn_report_json(const DnIntersectionReport& rep) {
  json pairs = json::array();
  for (const auto& p : rep.trivial_pairs)
    pairs.push_back(json{{"standard_parabolic_index", p.i_index},
                         {"stabilized_set_a", p.set_a},
                         {"stabilized_set_b", p.set_b}});
  return json{{"n", rep.n},
              {"pairs_checked", rep.pairs_checked},
              {"all_nontrivial", rep.all_nontrivial},
              {"trivially_intersecting_pairs", std::move(pairs)}};
}

}  // namespace coxkit
