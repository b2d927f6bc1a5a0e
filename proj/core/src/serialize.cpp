#include "bpw/serialize.hpp"

namespace bpw {

using nlohmann::json;

void to_json(json& j, const WeightSystem& ws) { j = json{{"p", ws.weights()}}; }

void to_json(json& j, const GradeElement& a) { j = json{{"coeffs", a.coeffs()}, {"level", a.level()}}; }

void to_json(json& j, const StableObject& o) {
  if (o.is_zero()) {
    j = json{{"zero", true}, {"text", o.to_string()}};
    return;
  }
  j = json{{"ell", o.ell().coeffs()}, {"twist", o.twist()}, {"shift", o.shift()}, {"text", o.to_string()}};
}

void to_json(json& j, const HomAnswer& h) { j = h.known() ? json(*h.dim) : json(nullptr); }

void to_json(json& j, const IntMatrix& m) {
  j = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    j.push_back(std::move(row));
  }
}

void to_json(json& j, const GradedModule& m) {
  json support = json::array();
  for (const auto& [x, d] : m.support()) support.push_back({{"degree", x}, {"dim", d}});
  json actions = json::array();
  for (int i = 0; i < m.weights().n(); ++i) {
    json triplets = json::array();
    for (const auto& [x, d] : m.support()) {
      const IntMatrix a = m.action(i, x);
      for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
          if (a.at(r, c) != 0) triplets.push_back({{"degree", x}, {"row", r}, {"col", c}, {"value", a.at(r, c)}});
        }
      }
    }
    actions.push_back(std::move(triplets));
  }
  j = json{{"weights", m.weights()}, {"support", std::move(support)}, {"actions", std::move(actions)}};
}

void to_json(json& j, const HomSample& s) {
  j = json{{"j", s.j},         {"k", s.k},
           {"a", s.a},         {"b", s.b},
           {"reduced", s.reduced}, {"inserted", s.inserted},
           {"via_oracle", s.via_oracle}, {"ok", s.ok()}};
}

void to_json(json& j, const AdjunctionSample& s) {
  j = json{{"j", s.j},
           {"m", s.m},
           {"n", s.n},
           {"left", {s.left_lhs, s.left_rhs}},
           {"right", {s.right_lhs, s.right_rhs}},
           {"ok", s.ok()}};
}

void to_json(json& j, const RecollementReport& r) {
  j = json{{"weights", r.weights},
           {"split", {r.p1n, r.p2n}},
           {"composite_zero", r.composite_zero},
           {"composite_failures", r.composite_failures},
           {"fully_faithful", r.fully_faithful()},
           {"fully_faithful_samples", r.fully_faithful_samples},
           {"periodicity", r.periodicity},
           {"periodicity_failures", r.periodicity_failures},
           {"partition", r.partition},
           {"adjunction_ok", r.adjunction_ok()},
           {"adjunction", r.adjunction},
           {"passed", r.passed()}};
}

void to_json(json& j, const FamilySpec& f) { j = f.to_string(); }

void to_json(json& j, const TiltingFamily& f) {
  j = json{{"weights", f.weights}, {"kind", f.spec}, {"size", f.objects.size()}, {"objects", f.objects}};
}

void to_json(json& j, const TiltingReport& r) {
  j = json{{"rigid", r.rigid},
           {"exceptional", r.exceptional},
           {"ordered", r.ordered},
           {"rigidity_failures", r.rigidity_failures},
           {"endo_failures", r.endo_failures},
           {"unknown_pairs", r.unknown_pairs},
           {"backward_homs", r.backward_homs},
           {"passed", r.passed()}};
}

void to_json(json& j, const GlueReport& r) {
  j = json{{"k1", r.k1},
           {"k2", r.k2},
           {"image1", r.image1},
           {"image2", r.image2},
           {"left_reduced", r.left_reduced},
           {"right_reduced", r.right_reduced},
           {"condition_b", r.condition_b},
           {"condition_b_prime", r.condition_b_prime},
           {"obstructions", r.obstructions},
           {"unknown_pairs", r.unknown_pairs},
           {"passed", r.passed()}};
}

void to_json(json& j, const IntPolynomial& p) { j = json{{"coeffs", p.coeffs}, {"text", p.to_string()}}; }

void to_json(json& j, const AlgebraPresentation& a) {
  static const char* kinds[] = {"commutativity", "nilpotency", "connecting"};
  json arrows = json::array();
  for (const Arrow& ar : a.arrows) arrows.push_back({{"from", ar.from}, {"to", ar.to}, {"label", ar.label}});
  json relations = json::array();
  for (const Relation& r : a.relations) {
    relations.push_back({{"kind", kinds[static_cast<int>(r.kind)]}, {"vertices", r.vertices}});
  }
  j = json{{"name", a.name},
           {"vertices", a.vertices},
           {"arrows", std::move(arrows)},
           {"relations", std::move(relations)},
           {"cartan", a.cartan}};
}

void to_json(json& j, const HomProfile& p) { j = json{{"probes", p.probes}, {"out", p.out}, {"in", p.in}}; }

void to_json(json& j, const AuditDisagreement& d) {
  j = json{{"a", d.a}, {"b", d.b}, {"calculus", d.calculus}, {"oracle", d.oracle},
           {"oracle_field_stable", d.oracle_field_stable}};
}

void to_json(json& j, const AuditReport& r) {
  j = json{{"weights", r.weights},
           {"field", r.field},
           {"pairs", r.pairs},
           {"agree", r.agree},
           {"disagree", r.disagree},
           {"unknown", r.unknown},
           {"unknown_rate", r.unknown_rate()},
           {"configuration_unknown", r.configuration_unknown},
           {"disagreements", r.disagreements},
           {"passed", r.passed()}};
}

void to_json(json& j, const InvariantCheck& c) {
  json members = json::array();
  for (size_t i = 0; i < c.names.size(); ++i) {
    members.push_back({{"name", c.names[i]}, {"coxeter", c.polys[i]}, {"abs_det", c.abs_dets[i]}});
  }
  j = json{{"label", c.label}, {"members", std::move(members)}, {"equal", c.equal()}};
}

}  // namespace bpw
