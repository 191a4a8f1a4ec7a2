#include "theoria/exports.hpp"

namespace theoria {

namespace {

Json block_json(const Block& b) {
  Json j;
  if (auto* fs = std::get_if<FinsetBlock>(&b)) {
    j["kind"] = "finset";
    Json pts = Json::array();
    for (const auto& p : fs->points) pts.push_back(p.str());
    j["points"] = std::move(pts);
  } else if (auto* fan = std::get_if<FanBlock>(&b)) {
    j["kind"] = "fan";
    j["limit"] = fan->limit.str();
    j["stride"] = fan->stride;
    j["offset"] = fan->offset;
    j["dev"] = bits_to_string(fan->deviation);
    j["includeLimit"] = fan->include_limit;
  } else if (auto* cube = std::get_if<CubeBlock>(&b)) {
    j["kind"] = "cube";
    j["mask"] = cube->mask.str();
  } else {
    const auto& fa = std::get<FanArrayBlock>(b);
    j["kind"] = "fanarray";
    j["base"] = fa.base.str();
    j["c"] = fa.coding;
    j["includeBase"] = fa.include_base;
    j["excl"] = fa.excluded;
  }
  return j;
}

}  // namespace

Json family_json(const Family& f) {
  Json j;
  if (f.name()) j["name"] = *f.name();
  Json blocks = Json::array();
  for (const auto& b : f.blocks()) blocks.push_back(block_json(b));
  j["blocks"] = std::move(blocks);
  j["dsl"] = family_dsl(f);
  return j;
}

Json gen_set_report_json(const GenSetReport& r) {
  Json j;
  j["isolated"] = family_json(r.isolated);
  j["hasLeast"] = r.has_least;
  j["leastGenSet"] = r.least_gen_set ? family_json(*r.least_gen_set) : Json(nullptr);
  Json ws = Json::array();
  for (const auto& [p, phi] : r.witnesses) ws.push_back({{"point", p.str()}, {"sentence", phi.str()}});
  j["witnesses"] = std::move(ws);
  return j;
}

Json hasse_json(const GeneratedLattice& l) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < l.elements.size(); ++i)
    nodes.push_back({{"id", i}, {"name", family_label(l.elements[i].family())}});
  Json edges = Json::array();
  for (auto [lo, hi] : l.hasse) edges.push_back({lo, hi});
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

Json op_tables_json(const GeneratedLattice& l) {
  Json j;
  j["join"] = l.join_table;
  if (l.used_meet_prime) j["meetPrime"] = l.meet_prime_table;
  return j;
}

Json cb_profile_json(const CBProfile& p) {
  Json chain = Json::array();
  for (const auto& f : p.chain) chain.push_back(family_json(f));
  return {{"chain", std::move(chain)}, {"rank", p.rank}, {"kernelEmpty", p.kernel_empty}};
}

Json algebra_json(const BooleanAlgebra& a) {
  Json gens = Json::array();
  for (const auto& g : a.generators) gens.push_back(g.str());
  Json elems = Json::array();
  for (const auto& e : a.elements)
    elems.push_back({{"mask", e.gen_mask},
                     {"atom", a.is_atom(e.gen_mask)},
                     {"denotation", family_json(e.denotation)}});
  return {{"generators", std::move(gens)}, {"elements", std::move(elems)}};
}

Json decomposition_json(const LeqDecomposition& d) {
  return {{"part21", family_json(d.part21)},
          {"part22", family_json(d.part22)},
          {"part23", family_json(d.part23)}};
}

Json gallery_case_json(const GalleryCase& c) {
  Json fams = Json::array();
  for (const auto& [name, f] : c.families) fams.push_back({{"name", name}, {"family", family_json(f)}});
  Json exp = Json::object();
  for (const auto& [k, v] : c.expected) exp[k] = v;
  return {{"name", c.name}, {"title", c.title}, {"families", std::move(fams)}, {"expected", std::move(exp)}};
}

Json projection_json(const DepthProjection& p) {
  Json cells = Json::object();
  for (const auto& [w, tri] : p.cells) {
    if (tri.is_infinite()) {
      cells[w] = "INF";
    } else {
      Json pts = Json::array();
      for (const auto& q : tri.points) pts.push_back(q.str());
      cells[w] = std::move(pts);
    }
  }
  return {{"depth", p.depth}, {"cells", std::move(cells)}};
}

}  // namespace theoria
