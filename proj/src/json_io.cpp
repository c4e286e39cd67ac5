#include "dthrot/json_io.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "dthrot/error.hpp"

namespace dthrot {

namespace {

template <typename Body>
auto guarded(const char* what, Body&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string(what) + ": " + e.what());
  }
}

Json cell_json(GridCell c) { return Json::array({c.row, c.col}); }
GridCell cell_from(const Json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

}  // namespace

Json to_json(const Digraph& g) {
  Json arcs = Json::array();
  for (const auto& [u, v] : g.arcs()) arcs.push_back({u, v});
  return {{"n", g.order()}, {"arcs", std::move(arcs)}};
}

Json to_json(const UndirectedGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Digraph digraph_from_json(const Json& j) {
  return guarded("digraph JSON", [&] {
    const int n = j.at("n").get<int>();
    if (n < 0 || n > kMaxVertices) throw Error(ErrorKind::Range, "digraph JSON: order out of range");
    Digraph g(n);
    for (const Json& arc : j.at("arcs")) g.add_arc(arc.at(0).get<int>(), arc.at(1).get<int>());
    return g;
  });
}

UndirectedGraph graph_from_json(const Json& j) {
  return guarded("graph JSON", [&] {
    const int n = j.at("n").get<int>();
    if (n < 0 || n > kMaxVertices) throw Error(ErrorKind::Range, "graph JSON: order out of range");
    UndirectedGraph g(n);
    for (const Json& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
  });
}

Json to_json(const Timeline& tl) {
  Json layers = Json::array();
  for (VertexSet layer : tl.layers) layers.push_back(layer.to_vector());
  Json forces = Json::array();
  const ForceSet all = tl.forces();
  for (const Force& f : all.forces()) forces.push_back({f.forcer, f.target});
  Json pt = tl.pt.forcing() ? Json(tl.pt.value()) : Json(nullptr);
  return {{"pt", std::move(pt)}, {"layers", std::move(layers)}, {"forces", std::move(forces)}};
}

Json to_json(const ThrottlingCertificate& cert) {
  Json forces = Json::array();
  for (const Force& f : cert.forces.forces()) forces.push_back({f.forcer, f.target});
  return {{"th", cert.th}, {"pt", cert.pt}, {"initial", cert.initial.to_vector()}, {"forces", std::move(forces)}};
}

Json to_json(const OTIReport& r) {
  return {{"graph", r.graph},   {"m", r.m},           {"M", r.M},
          {"attained", r.attained}, {"full", r.full}, {"values", r.values},
          {"argmin", r.argmin}, {"argmax", r.argmax}, {"begin", r.begin},
          {"end", r.end},       {"total", r.total}};
}

OTIReport oti_from_json(const Json& j) {
  return guarded("OTI JSON", [&] {
    OTIReport r;
    r.graph = j.at("graph").get<std::string>();
    r.values = j.at("values").get<std::vector<int>>();
    r.total = j.value("total", static_cast<std::uint64_t>(r.values.size()));
    r.begin = j.value("begin", std::uint64_t{0});
    r.end = j.value("end", r.begin + r.values.size());
    r.m = j.at("m").get<int>();
    r.M = j.at("M").get<int>();
    r.attained = j.at("attained").get<std::vector<int>>();
    r.full = j.at("full").get<bool>();
    r.argmin = j.at("argmin").get<std::uint64_t>();
    r.argmax = j.at("argmax").get<std::uint64_t>();
    return r;
  });
}

Json to_json(const CharacterizationWitness& w) {
  Json contract = Json::array();
  for (GridCell c : w.contractions) contract.push_back(cell_json(c));
  Json del = Json::array();
  for (const auto& [from, to] : w.deletions) del.push_back({cell_json(from), cell_json(to)});
  Json placement = Json::object();
  for (std::size_t v = 0; v < w.placement.size(); ++v) {
    Json cells = Json::array();
    for (GridCell c : w.placement[v]) cells.push_back(cell_json(c));
    placement[std::to_string(v)] = std::move(cells);
  }
  return {{"a", w.a}, {"b", w.b}, {"contract", std::move(contract)}, {"delete", std::move(del)},
          {"placement", std::move(placement)}};
}

CharacterizationWitness witness_from_json(const Json& j) {
  return guarded("witness JSON", [&] {
    CharacterizationWitness w;
    w.a = j.at("a").get<int>();
    w.b = j.at("b").get<int>();
    for (const Json& c : j.at("contract")) w.contractions.push_back(cell_from(c));
    for (const Json& d : j.at("delete")) w.deletions.emplace_back(cell_from(d.at(0)), cell_from(d.at(1)));
    if (j.contains("placement")) {
      const Json& p = j.at("placement");
      w.placement.resize(p.size());
      for (const auto& [key, cells] : p.items()) {
        const std::size_t v = std::stoul(key);
        if (v >= w.placement.size()) throw Error(ErrorKind::Parse, "witness JSON: placement keys must be 0..n-1");
        for (const Json& c : cells) w.placement[v].push_back(cell_from(c));
      }
    }
    return w;
  });
}

Json to_json(const SuiteReport& r) {
  Json failures = Json::array();
  for (const SuiteFailure& f : r.failures)
    failures.push_back({{"instance", f.instance}, {"relation", f.relation}, {"observed", f.observed}});
  Json seed = r.seed ? Json(*r.seed) : Json(nullptr);
  return {{"suite", r.suite},         {"scope", r.scope}, {"seed", std::move(seed)},
          {"instances", r.instances}, {"failures", std::move(failures)}, {"stats", r.stats},
          {"examples", r.examples},   {"passed", r.passed()}, {"ms", r.ms}};
}

SuiteReport suite_from_json(const Json& j) {
  return guarded("suite JSON", [&] {
    SuiteReport r;
    r.suite = j.at("suite").get<std::string>();
    r.scope = j.at("scope").get<std::string>();
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    r.instances = j.at("instances").get<std::uint64_t>();
    for (const Json& f : j.at("failures"))
      r.failures.push_back({f.at("instance").get<std::string>(), f.at("relation").get<std::string>(),
                            f.at("observed").get<std::string>()});
    r.stats = j.value("stats", std::map<std::string, long long>{});
    r.examples = j.value("examples", std::vector<std::string>{});
    r.ms = j.value("ms", 0LL);
    return r;
  });
}

Json to_json(const CensusDistribution& d) {
  Json dist = Json::object();
  for (const auto& [value, count] : d.counts) dist[std::to_string(value)] = count;
  return {{"n", d.n},     {"stat", d.stat}, {"oriented", d.oriented}, {"begin", d.begin},
          {"end", d.end}, {"total", d.total}, {"distribution", std::move(dist)}};
}

CensusDistribution census_from_json(const Json& j) {
  return guarded("census JSON", [&] {
    CensusDistribution d;
    d.n = j.at("n").get<int>();
    d.stat = j.at("stat").get<std::string>();
    d.oriented = j.value("oriented", false);
    d.begin = j.at("begin").get<std::uint64_t>();
    d.end = j.at("end").get<std::uint64_t>();
    d.total = j.at("total").get<std::uint64_t>();
    for (const auto& [key, count] : j.at("distribution").items()) d.counts[std::stoi(key)] = count.get<std::uint64_t>();
    return d;
  });
}

Json conjecture_shard_json(const std::vector<OTIReport>& reports) {
  Json list = Json::array();
  for (const OTIReport& r : reports) list.push_back(to_json(r));
  return {{"kind", "conjecture_shard"}, {"reports", std::move(list)}};
}

Json merge_documents(const std::vector<Json>& docs) {
  if (docs.empty()) throw Error(ErrorKind::InvalidArgument, "merge: no documents");
  auto kind_of = [](const Json& d) -> std::string {
    if (!d.is_object()) return "unknown";
    if (d.value("kind", "") == "conjecture_shard") return "conjecture";
    if (d.contains("distribution")) return "census";
    if (d.contains("values") && d.contains("graph")) return "oti";
    return "unknown";
  };
  const std::string kind = kind_of(docs.front());
  for (const Json& d : docs)
    if (kind_of(d) != kind || kind == "unknown")
      throw Error(ErrorKind::InvalidArgument, "merge: documents must all be OTI reports, census parts or conjecture shards");

  if (kind == "oti") {
    std::vector<OTIReport> parts;
    for (const Json& d : docs) parts.push_back(oti_from_json(d));
    return to_json(merge(std::move(parts)));
  }
  if (kind == "census") {
    std::vector<CensusDistribution> parts;
    for (const Json& d : docs) parts.push_back(census_from_json(d));
    return to_json(merge(std::move(parts)));
  }
  std::map<std::string, std::vector<OTIReport>> by_graph;
  std::map<std::string, std::size_t> order;
  for (const Json& d : docs)
    for (const Json& r : guarded("conjecture shard", [&] { return d.at("reports"); })) {
      OTIReport rep = oti_from_json(r);
      const auto n = parse_compact_undirected(rep.graph).order();
      order.emplace(rep.graph, static_cast<std::size_t>(n));
      by_graph[rep.graph].push_back(std::move(rep));
    }
  std::vector<std::pair<std::size_t, OTIReport>> merged;
  for (auto& [graph, parts] : by_graph) merged.emplace_back(order[graph], merge(std::move(parts)));
  std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<OTIReport> reports;
  for (auto& [n, r] : merged) reports.push_back(std::move(r));
  return to_json(conjecture_from_reports(reports));
}

}  // namespace dthrot
