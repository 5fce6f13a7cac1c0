#include "drgcay/serialize.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>

namespace drgcay {

double report_real(double x) {
  const double r = std::round(x * 1e10) / 1e10;
  return r == 0.0 ? 0.0 : r;
}

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const GraphMetrics& m) {
  return Json{{"order", m.order},
              {"size", m.size},
              {"connected", m.connected},
              {"bipartite", m.bipartite},
              {"regular_degree", optional_json(m.regular_degree)},
              {"diameter", optional_json(m.diameter)},
              {"girth", optional_json(m.girth)},
              {"clique_number", optional_json(m.clique_number)}};
}

Json to_json(const Spectrum& s) {
  Json out = Json::array();
  for (const auto& e : s.entries) out.push_back(Json::array({report_real(e.value), e.multiplicity}));
  return out;
}

Json to_json(const SrgParams& p) { return Json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}}; }

Json to_json(const IntersectionArray& a) { return Json{{"b", a.b}, {"c", a.c}}; }

Json to_json(const KrauszDecomposition& k) {
  const auto m = metrics(k.root);
  return Json{{"cliques", k.cliques.size()},
              {"root", Json{{"order", m.order},
                            {"size", m.size},
                            {"regular_degree", optional_json(m.regular_degree)},
                            {"girth", optional_json(m.girth)},
                            {"bipartite", k.root_bipartite}}}};
}

Json to_json(const ConnectionStructureReport& r) {
  auto verdicts = [](const std::vector<ElementVerdict>& list) {
    Json out = Json::array();
    for (const auto& v : list) {
      Json e{{"element", v.element}, {"holds", v.holds}};
      if (v.witness) e["witness"] = *v.witness;
      out.push_back(e);
    }
    return out;
  };
  Json out{{"d", r.d},
           {"order2d_condition", verdicts(r.order2d_condition)},
           {"corollary_condition", verdicts(r.corollary_condition)},
           {"subgroup_cliques", r.subgroup_cliques}};
  out["hk"] = r.hk ? Json{{"H", r.hk->first}, {"K", r.hk->second}} : Json(nullptr);
  out["coset_form"] = r.coset_form ? Json{{"K", r.coset_form->first}, {"a", r.coset_form->second}} : Json(nullptr);
  return out;
}

std::string table_digest(const FiniteGroup& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (int x : g.table()) {
    for (int byte = 0; byte < 4; ++byte) {
      h ^= static_cast<std::uint64_t>((static_cast<unsigned>(x) >> (8 * byte)) & 0xff);
      h *= 0x100000001b3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const CayleyCertificate& c) {
  Json gens = Json::object();
  for (const auto& g : c.group->generators()) gens[g.name] = g.element;
  return Json{{"group", Json{{"order", c.group->order()},
                             {"tag", c.group->tag()},
                             {"abelian", c.group->is_abelian()},
                             {"table_fnv1a64", table_digest(*c.group)},
                             {"generators", gens}}},
              {"connection_set", c.connection_set->elements()},
              {"isomorphism", c.isomorphism}};
}

Json to_json(const ObstructionReport& r) {
  return Json{{"applicable", r.applicable},
              {"edges", r.edges},
              {"vertices", r.vertices},
              {"steps", r.steps},
              {"conclusion", r.conclusion}};
}

Json to_json(const GenerationScan& s) {
  Json w = Json::array();
  for (const auto& x : s.witnesses) w.push_back(Json{{"group", x.group}, {"H", x.h}, {"K", x.k}});
  return Json{{"n", s.n},
              {"k", s.k},
              {"groups_checked", s.groups_checked},
              {"pairs_checked", s.pairs_checked},
              {"impossible", s.impossible()},
              {"witnesses", w}};
}

Json to_json(const OrderAnalysis& a) {
  Json fact = Json::array();
  for (const auto& [p, e] : a.factorization) fact.push_back(Json::array({p, e}));
  Json sylow = Json::object();
  for (const auto& [p, c] : a.sylow) sylow[std::to_string(p)] = c;
  return Json{{"n", a.n},
              {"factorization", fact},
              {"sylow_candidates", sylow},
              {"all_abelian", to_string(a.all_abelian.verdict)},
              {"reason", a.all_abelian.reason},
              {"abelian_groups", a.abelian_names}};
}

}  // namespace drgcay
