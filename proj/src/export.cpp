#include "schubert/export.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace schubert {

namespace {

using Json = nlohmann::ordered_json;

Json tuple_json(const GammaTuple& g) { return Json(std::vector<int>(g.entries().begin(), g.entries().end())); }

Json header(const SchubertLattice& lat, const char* schema, const char* kind) {
  Json j;
  j["schema"] = schema;
  j["schema_version"] = kExportSchemaVersion;
  j["kind"] = kind;
  j["d"] = lat.gamma().d();
  j["n"] = lat.gamma().n();
  j["gamma"] = tuple_json(lat.gamma());
  return j;
}

std::vector<std::size_t> chain_indices(const SchubertLattice& lat) {
  std::vector<std::size_t> out;
  for (const auto& x : principal_chain(lat)) out.push_back(*lat.index_of(x));
  return out;
}

std::string dot_label(const GammaTuple& g) { return "\"" + g.to_string() + "\""; }

}  // namespace

std::string lattice_to_json(const SchubertLattice& lat) {
  Json j = header(lat, "schubert.lattice-export", "lattice");
  Json elements = Json::array();
  for (const auto& e : lat.elements()) elements.push_back(tuple_json(e));
  j["elements"] = std::move(elements);

  Json edges = Json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    std::vector<std::size_t> ups(lat.upper_covers(i).begin(), lat.upper_covers(i).end());
    std::ranges::sort(ups);
    for (auto k : ups) edges.push_back({i, k});
  }
  j["cover_edges"] = std::move(edges);

  Json omega = Json::array();
  for (int i = 0; i <= lat.t(); ++i) {
    std::string bits;
    for (bool b : lat.omega_bitmap(i)) bits.push_back(b ? '1' : '0');
    Json o;
    o["index"] = i;
    o["zeta"] = tuple_json(lat.upper_neighbors()[static_cast<std::size_t>(i)]);
    o["bitmap"] = bits;
    omega.push_back(std::move(o));
  }
  j["omega"] = std::move(omega);
  j["principal_chain"] = chain_indices(lat);
  return j.dump(2) + "\n";
}

std::string lattice_to_dot(const SchubertLattice& lat) {
  const auto chain = chain_indices(lat);
  std::vector<bool> on_chain(lat.size());
  for (auto i : chain) on_chain[i] = true;
  auto chain_edge = [&](std::size_t a, std::size_t b) {
    auto it = std::ranges::find(chain, a);
    return it != chain.end() && it + 1 != chain.end() && *(it + 1) == b;
  };

  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    out << "  n" << i << " [label=" << dot_label(lat.at(i));
    if (on_chain[i]) out << ", color=red, penwidth=2";
    out << "];\n";
  }
  for (std::size_t i = 0; i < lat.size(); ++i) {
    std::vector<std::size_t> ups(lat.upper_covers(i).begin(), lat.upper_covers(i).end());
    std::ranges::sort(ups);
    for (auto k : ups) {
      out << "  n" << i << " -> n" << k;
      if (chain_edge(i, k)) out << " [color=red, penwidth=2]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string irreducibles_to_json(const SchubertLattice& lat, const IrreduciblePoset& poset) {
  Json j = header(lat, "schubert.irreducibles-export", "irreducibles");
  Json nodes = Json::array();
  nodes.push_back({{"id", 0}, {"label", "-inf"}});
  for (std::size_t p = 0; p < poset.size(); ++p)
    nodes.push_back({{"id", p + 1}, {"label", poset.elements()[p].to_string()},
                     {"tuple", tuple_json(poset.elements()[p])}});
  nodes.push_back({{"id", poset.size() + 1}, {"label", "inf"}});
  j["nodes"] = std::move(nodes);
  Json edges = Json::array();
  const auto adj = poset.augmented_covers();
  for (std::size_t a = 0; a < adj.size(); ++a)
    for (auto b : adj[a]) edges.push_back({a, b});
  j["cover_edges"] = std::move(edges);
  const auto stats = chain_stats(poset);
  j["dist"] = stats.dist;
  j["rank"] = stats.rank;
  return j.dump(2) + "\n";
}

std::string irreducibles_to_dot(const SchubertLattice& lat, const IrreduciblePoset& poset) {
  std::ostringstream out;
  out << "digraph irreducibles {\n";
  out << "  rankdir=BT;\n";
  out << "  label=\"join-irreducibles of Gamma(X;" << lat.gamma().to_string() << "), n="
      << lat.gamma().n() << "\";\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  out << "  p0 [label=\"-inf\", shape=plaintext];\n";
  for (std::size_t p = 0; p < poset.size(); ++p)
    out << "  p" << p + 1 << " [label=" << dot_label(poset.elements()[p]) << "];\n";
  out << "  p" << poset.size() + 1 << " [label=\"inf\", shape=plaintext];\n";
  const auto adj = poset.augmented_covers();
  for (std::size_t a = 0; a < adj.size(); ++a)
    for (auto b : adj[a]) out << "  p" << a << " -> p" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace schubert
