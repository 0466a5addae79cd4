#ifndef QCDHOPF_GRAPH_HPP
#define QCDHOPF_GRAPH_HPP

// Typed QCD Feynman multigraphs.
//
// Three propagators (quark e1, ghost e2, gluon e3) and five vertices
// (quark-gluon v1, ghost-gluon v2, three-gluon v3, four-gluon v4, quark
// mass v5).  Quark and ghost lines are oriented; gluon lines are not.
// External lines are half-edges left vacant at a vertex.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qcdhopf {

enum class EdgeKind : std::uint8_t { Quark = 1, Ghost = 2, Gluon = 3 };
enum class VertexKind : std::uint8_t { V1 = 1, V2 = 2, V3 = 3, V4 = 4, V5 = 5 };

/// Direction of a half-edge as seen from the vertex it sits on.
/// Gluon half-edges carry Dir::None.
enum class Dir : std::uint8_t { None = 0, In = 1, Out = 2 };

constexpr bool is_oriented(EdgeKind k) { return k != EdgeKind::Gluon; }

inline std::string to_string(EdgeKind k) {
  return "e" + std::to_string(static_cast<int>(k));
}
inline std::string to_string(VertexKind k) {
  return "v" + std::to_string(static_cast<int>(k));
}
inline std::string to_string(Dir d) {
  switch (d) {
    case Dir::In: return "in";
    case Dir::Out: return "out";
    default: return "none";
  }
}

/// Kind of graph error; the CLI maps all of these to exit code 2.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Counts of half-edges by (kind, direction).  Index layout:
/// 0 quark-in, 1 quark-out, 2 ghost-in, 3 ghost-out, 4 gluon.
using LegProfile = std::array<int, 5>;

constexpr int leg_slot(EdgeKind k, Dir d) {
  switch (k) {
    case EdgeKind::Quark: return d == Dir::In ? 0 : 1;
    case EdgeKind::Ghost: return d == Dir::In ? 2 : 3;
    default: return 4;
  }
}

constexpr LegProfile leg_profile(VertexKind v) {
  switch (v) {
    case VertexKind::V1: return {1, 1, 0, 0, 1};
    case VertexKind::V2: return {0, 0, 1, 1, 1};
    case VertexKind::V3: return {0, 0, 0, 0, 3};
    case VertexKind::V4: return {0, 0, 0, 0, 4};
    case VertexKind::V5: return {1, 1, 0, 0, 0};
  }
  return {};
}

constexpr LegProfile leg_profile(EdgeKind e) {
  switch (e) {
    case EdgeKind::Quark: return {1, 1, 0, 0, 0};
    case EdgeKind::Ghost: return {0, 0, 1, 1, 0};
    case EdgeKind::Gluon: return {0, 0, 0, 0, 2};
  }
  return {};
}

/// Valence N(v).
constexpr int valence(VertexKind v) {
  auto p = leg_profile(v);
  return p[0] + p[1] + p[2] + p[3] + p[4];
}

/// N_i(r): number of lines of edge kind e_i attached to r.
constexpr int lines_of_kind(const LegProfile& p, EdgeKind k) {
  switch (k) {
    case EdgeKind::Quark: return p[0] + p[1];
    case EdgeKind::Ghost: return p[2] + p[3];
    default: return p[4];
  }
}
constexpr int lines_of_kind(VertexKind v, EdgeKind k) {
  return lines_of_kind(leg_profile(v), k);
}

constexpr std::array<VertexKind, 5> kAllVertexKinds = {
    VertexKind::V1, VertexKind::V2, VertexKind::V3, VertexKind::V4,
    VertexKind::V5};
constexpr std::array<EdgeKind, 3> kAllEdgeKinds = {
    EdgeKind::Quark, EdgeKind::Ghost, EdgeKind::Gluon};

/// Element of R = R_E ∪ R_V.
using Residue = std::variant<EdgeKind, VertexKind>;

inline std::string to_string(const Residue& r) {
  return std::visit([](auto k) { return to_string(k); }, r);
}

inline Residue parse_residue(const std::string& s) {
  if (s.size() == 2 && s[0] == 'e' && s[1] >= '1' && s[1] <= '3') {
    return static_cast<EdgeKind>(s[1] - '0');
  }
  if (s.size() == 2 && s[0] == 'v' && s[1] >= '1' && s[1] <= '5') {
    return static_cast<VertexKind>(s[1] - '0');
  }
  throw GraphError("unknown residue: " + s);
}

inline LegProfile leg_profile(const Residue& r) {
  return std::visit([](auto k) { return leg_profile(k); }, r);
}

inline std::vector<Residue> all_residues() {
  return {EdgeKind::Quark,  EdgeKind::Ghost,  EdgeKind::Gluon,
          VertexKind::V1,   VertexKind::V2,   VertexKind::V3,
          VertexKind::V4,   VertexKind::V5};
}

using Multidegree = std::array<int, 5>;

inline Multidegree operator+(Multidegree a, const Multidegree& b) {
  for (int i = 0; i < 5; ++i) a[i] += b[i];
  return a;
}
inline Multidegree operator-(Multidegree a, const Multidegree& b) {
  for (int i = 0; i < 5; ++i) a[i] -= b[i];
  return a;
}

struct Edge {
  EdgeKind kind;
  int from;  // for gluons: the smaller endpoint after normalization
  int to;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct External {
  EdgeKind kind;
  Dir dir;  // as seen from the attachment vertex
  int at;
  friend bool operator==(const External&, const External&) = default;
  friend auto operator<=>(const External&, const External&) = default;
};

/// A Feynman graph: vertices, internal edges, external legs, and the
/// optional bullet marking a quark two-point graph as a mass-vertex graph.
struct FeynGraph {
  std::vector<VertexKind> vertices;
  std::vector<Edge> edges;
  std::vector<External> externals;
  bool bullet = false;

  friend bool operator==(const FeynGraph&, const FeynGraph&) = default;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }

  LegProfile external_profile() const {
    LegProfile p{};
    for (const auto& x : externals) ++p[leg_slot(x.kind, x.dir)];
    return p;
  }

  int count(VertexKind k) const {
    return static_cast<int>(std::count(vertices.begin(), vertices.end(), k));
  }
};

namespace detail {

inline int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

/// Number of connected components spanned by the listed edges over n vertices,
/// skipping the edge with index `skip`.
inline int components(int n, const std::vector<Edge>& edges, int skip = -1) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  int comps = n;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (i == skip) continue;
    int a = find_root(parent, edges[i].from);
    int b = find_root(parent, edges[i].to);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

}  // namespace detail

/// Half-edge multiset seen at each vertex.
inline std::vector<LegProfile> incident_profiles(const FeynGraph& g) {
  std::vector<LegProfile> seen(g.vertices.size(), LegProfile{});
  auto bump = [&](int v, EdgeKind k, Dir d) {
    if (v < 0 || v >= g.num_vertices()) {
      throw GraphError("edge endpoint out of range");
    }
    ++seen[v][leg_slot(k, d)];
  };
  for (const auto& e : g.edges) {
    if (e.kind == EdgeKind::Gluon) {
      bump(e.from, e.kind, Dir::None);
      bump(e.to, e.kind, Dir::None);
    } else {
      bump(e.from, e.kind, Dir::Out);
      bump(e.to, e.kind, Dir::In);
    }
  }
  for (const auto& x : g.externals) {
    bump(x.at, x.kind, x.kind == EdgeKind::Gluon ? Dir::None : x.dir);
  }
  return seen;
}

inline bool is_connected(const FeynGraph& g) {
  if (g.vertices.empty()) return false;
  return detail::components(g.num_vertices(), g.edges) == 1;
}

/// Checks every structural invariant; throws GraphError on the first failure.
inline void validate(const FeynGraph& g) {
  if (g.vertices.empty()) throw GraphError("graph has no vertices");
  for (const auto& x : g.externals) {
    if (x.kind == EdgeKind::Gluon && x.dir != Dir::None) {
      throw GraphError("gluon external leg must not carry a direction");
    }
    if (x.kind != EdgeKind::Gluon && x.dir == Dir::None) {
      throw GraphError("quark/ghost external leg needs a direction");
    }
  }
  auto seen = incident_profiles(g);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (seen[v] != leg_profile(g.vertices[v])) {
      throw GraphError("leg-profile mismatch at vertex v" + std::to_string(v) +
                       " (" + to_string(g.vertices[v]) + ")");
    }
  }
  if (!is_connected(g)) throw GraphError("graph is disconnected");
  if (g.bullet && g.external_profile() != leg_profile(EdgeKind::Quark)) {
    throw GraphError("illegal bullet: only quark two-point graphs may carry one");
  }
}

/// L(Γ) = E_int − V + 1.
inline int loop_number(const FeynGraph& g) {
  return g.num_edges() - g.num_vertices() + 1;
}

inline std::optional<Residue> try_residue(const FeynGraph& g) {
  auto p = g.external_profile();
  if (p == leg_profile(EdgeKind::Quark)) {
    if (g.bullet) return Residue{VertexKind::V5};
    return Residue{EdgeKind::Quark};
  }
  if (p == leg_profile(EdgeKind::Ghost)) return Residue{EdgeKind::Ghost};
  if (p == leg_profile(EdgeKind::Gluon)) return Residue{EdgeKind::Gluon};
  for (auto v : {VertexKind::V1, VertexKind::V2, VertexKind::V3,
                 VertexKind::V4}) {
    if (p == leg_profile(v)) return Residue{v};
  }
  return std::nullopt;
}

/// res(Γ): the vertex or edge obtained by collapsing all internal structure.
inline Residue residue(const FeynGraph& g) {
  auto r = try_residue(g);
  if (!r) throw GraphError("external-leg profile is not in R");
  return *r;
}

inline bool is_bridge(const FeynGraph& g, int edge) {
  return detail::components(g.num_vertices(), g.edges, edge) > 1;
}

inline bool is_one_particle_irreducible(const FeynGraph& g) {
  if (loop_number(g) < 1 || !is_connected(g)) return false;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (is_bridge(g, i)) return false;
  }
  return true;
}

/// d_j(Γ) = #v_j in Γ − δ_{v_j, res(Γ)}.
inline Multidegree multidegree(const FeynGraph& g) {
  Multidegree d{};
  for (auto v : g.vertices) ++d[static_cast<int>(v) - 1];
  if (auto r = try_residue(g); r && std::holds_alternative<VertexKind>(*r)) {
    --d[static_cast<int>(std::get<VertexKind>(*r)) - 1];
  }
  return d;
}

/// Σ_j (N(v_j) − 2) d_j, which equals 2L for every graph with residue in R.
inline int weighted_degree(const Multidegree& d) {
  int s = 0;
  for (int j = 0; j < 5; ++j) {
    s += (valence(kAllVertexKinds[j]) - 2) * d[j];
  }
  return s;
}

}  // namespace qcdhopf

#endif  // QCDHOPF_GRAPH_HPP
