#ifndef QCDHOPF_GRAPH_JSON_HPP
#define QCDHOPF_GRAPH_JSON_HPP

// JSON exchange format for graphs:
//
//   {"bullet":false,
//    "edges":[{"from":"v0","id":"p0","kind":"e1","to":"v1"},...],
//    "externals":[{"at":"v0","dir":"in","id":"x0","kind":"e1"},...],
//    "vertices":[{"id":"v0","kind":"v1"},...]}
//
// Gluon legs carry "dir":"none" and gluon edges list their endpoints in
// ascending order.  Canonical output renumbers ids after canonicalize().

#include <cstdint>
#include <cstdio>
#include <map>
#include <string>

#include <json.hpp>

#include "canonical.hpp"
#include "graph.hpp"

namespace qcdhopf {

using json = nlohmann::json;

namespace detail {

inline const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw GraphError(std::string("schema error: missing field '") + key + "'");
  }
  return obj.at(key);
}

inline std::string require_string(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_string()) {
    throw GraphError(std::string("schema error: field '") + key +
                     "' must be a string");
  }
  return v.get<std::string>();
}

inline EdgeKind parse_edge_kind(const std::string& s) {
  if (s == "e1") return EdgeKind::Quark;
  if (s == "e2") return EdgeKind::Ghost;
  if (s == "e3") return EdgeKind::Gluon;
  throw GraphError("schema error: unknown edge kind '" + s + "'");
}

inline VertexKind parse_vertex_kind(const std::string& s) {
  if (s.size() == 2 && s[0] == 'v' && s[1] >= '1' && s[1] <= '5') {
    return static_cast<VertexKind>(s[1] - '0');
  }
  throw GraphError("schema error: unknown vertex kind '" + s + "'");
}

inline Dir parse_dir(const std::string& s) {
  if (s == "in") return Dir::In;
  if (s == "out") return Dir::Out;
  if (s == "none") return Dir::None;
  throw GraphError("schema error: unknown direction '" + s + "'");
}

}  // namespace detail

/// Reads a graph from JSON without validating the physics invariants.
inline FeynGraph graph_from_json(const json& j) {
  using namespace detail;
  if (!j.is_object()) throw GraphError("schema error: graph must be an object");
  FeynGraph g;
  std::map<std::string, int> ids;
  const json& vs = require(j, "vertices");
  if (!vs.is_array()) throw GraphError("schema error: 'vertices' must be an array");
  for (const auto& v : vs) {
    auto id = require_string(v, "id");
    if (!ids.emplace(id, g.num_vertices()).second) {
      throw GraphError("schema error: duplicate vertex id '" + id + "'");
    }
    g.vertices.push_back(parse_vertex_kind(require_string(v, "kind")));
  }
  auto lookup = [&](const std::string& id) {
    auto it = ids.find(id);
    if (it == ids.end()) throw GraphError("schema error: unknown vertex '" + id + "'");
    return it->second;
  };
  const json& es = require(j, "edges");
  if (!es.is_array()) throw GraphError("schema error: 'edges' must be an array");
  for (const auto& e : es) {
    Edge edge{parse_edge_kind(require_string(e, "kind")),
              lookup(require_string(e, "from")), lookup(require_string(e, "to"))};
    if (edge.kind == EdgeKind::Gluon && edge.from > edge.to) {
      std::swap(edge.from, edge.to);
    }
    g.edges.push_back(edge);
  }
  const json& xs = require(j, "externals");
  if (!xs.is_array()) throw GraphError("schema error: 'externals' must be an array");
  for (const auto& x : xs) {
    External leg{parse_edge_kind(require_string(x, "kind")), Dir::None,
                 lookup(require_string(x, "at"))};
    if (x.contains("dir")) leg.dir = parse_dir(require_string(x, "dir"));
    g.externals.push_back(leg);
  }
  if (j.contains("bullet")) {
    if (!j.at("bullet").is_boolean()) {
      throw GraphError("schema error: 'bullet' must be a boolean");
    }
    g.bullet = j.at("bullet").get<bool>();
  }
  return g;
}

/// parse_and_validate: text → FeynGraph satisfying every type invariant.
inline FeynGraph parse_graph(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GraphError(std::string("schema error: ") + e.what());
  }
  FeynGraph g = graph_from_json(j);
  validate(g);
  return g;
}

/// Serializes the graph as-is (ids follow the current numbering).
inline json graph_to_json(const FeynGraph& g) {
  json out = json::object();
  json vs = json::array();
  for (int v = 0; v < g.num_vertices(); ++v) {
    vs.push_back({{"id", "v" + std::to_string(v)}, {"kind", to_string(g.vertices[v])}});
  }
  json es = json::array();
  for (int i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edges[i];
    int a = e.from, b = e.to;
    if (e.kind == EdgeKind::Gluon && a > b) std::swap(a, b);
    es.push_back({{"id", "p" + std::to_string(i)},
                  {"kind", to_string(e.kind)},
                  {"from", "v" + std::to_string(a)},
                  {"to", "v" + std::to_string(b)}});
  }
  json xs = json::array();
  for (std::size_t k = 0; k < g.externals.size(); ++k) {
    const auto& x = g.externals[k];
    xs.push_back({{"id", "x" + std::to_string(k)},
                  {"kind", to_string(x.kind)},
                  {"dir", to_string(x.dir)},
                  {"at", "v" + std::to_string(x.at)}});
  }
  out["vertices"] = std::move(vs);
  out["edges"] = std::move(es);
  out["externals"] = std::move(xs);
  out["bullet"] = g.bullet;
  return out;
}

inline json canonical_json(const FeynGraph& g, LegMode mode = LegMode::Labeled) {
  return graph_to_json(canonicalize(g, mode).graph);
}

/// 64-bit FNV-1a of a canonical key, as 16 hex digits.
inline std::string key_hash(const std::string& key) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace qcdhopf

#endif  // QCDHOPF_GRAPH_JSON_HPP
