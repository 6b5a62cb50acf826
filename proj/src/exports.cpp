#include "ctam/exports.hpp"

#include <sstream>

#include "json.hpp"

namespace ctam {

namespace {

using njson = nlohmann::ordered_json;

njson arcs_value(const ArcSet& D) {
  njson a = njson::array();
  for (const Refl& r : D) a.push_back({r.a, r.b});
  return a;
}

}  // namespace

std::string tito_json(const Tito& t) {
  njson j;
  j["n"] = t.n;
  j["window"] = format_window(t);
  return j.dump(2);
}

std::string tibit_json(const Tibit& T) {
  njson j;
  j["n"] = T.n;
  j["parent_offset"] = T.d;
  return j.dump(2);
}

std::string arcs_json(const ArcSet& D) { return arcs_value(D).dump(2); }

std::string tincp_json(const Tincp& r) {
  njson j;
  j["finite_blocks"] = njson::array();
  for (const auto& blk : r.finite) j["finite_blocks"].push_back(blk);
  j["infinite"] = njson::array();
  for (i64 res : r.infinite) j["infinite"].push_back(res);
  return j.dump(2);
}

std::string triangulation_json(const std::set<TaggedArc>& T) {
  njson j = njson::array();
  for (const TaggedArc& x : T) {
    njson e;
    e["kind"] = x.notched ? "notched" : "plain";
    e["a"] = x.a;
    e["b"] = x.b;
    j.push_back(e);
  }
  return j.dump(2);
}

std::string lattice_json(const LatticeModel& L) {
  njson j;
  j["n"] = L.n;
  j["variant"] = L.variant == Variant::cyclic ? "cyclic" : "affine";
  j["elements"] = njson::array();
  for (int u = 0; u < L.size(); u++) {
    njson e;
    e["id"] = u;
    e["arcs"] = arcs_value(L.arcs[size_t(u)]);
    e["window"] = format_window(L.titos[size_t(u)]);
    e["parent_offset"] = L.trees[size_t(u)].d;
    j["elements"].push_back(e);
  }
  j["covers"] = njson::array();
  for (int u = 0; u < L.size(); u++)
    for (int w : L.up_covers[size_t(u)]) j["covers"].push_back({u, w});
  return j.dump(2);
}

std::string lattice_dot(const LatticeModel& L) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int u = 0; u < L.size(); u++)
    out << "  e" << u << " [label=\"" << format_window(L.titos[size_t(u)]) << "\"];\n";
  for (int u = 0; u < L.size(); u++)
    for (int w : L.up_covers[size_t(u)]) out << "  e" << u << " -> e" << w << ";\n";
  out << "}\n";
  return out.str();
}

std::string tibit_dot(const Tibit& T) {
  const std::set<int> spine(spine_residues(T).begin(), spine_residues(T).end());
  std::ostringstream out;
  out << "digraph tree {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (i64 j = 1; j <= 3 * T.n; j++) {
    out << "  v" << j;
    if (spine.count(res1(j, T.n))) out << " [style=filled, fillcolor=gray85]";
    out << ";\n";
  }
  for (i64 j = 1; j <= 3 * T.n; j++) {
    const i64 p = T.parent(j);
    if (p < 1 || p > 3 * T.n) continue;
    out << "  v" << j << " -> v" << p;
    if (T.off(j) < 0) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ctam
