#pragma once
#include <set>
#include <string>

#include "ctam/lattice.hpp"
#include "ctam/ncpart.hpp"
#include "ctam/repfan.hpp"

namespace ctam {

// JSON serializers; every object is emitted with a fixed key order so the
// same input always produces the same bytes
std::string tito_json(const Tito& t);
std::string tibit_json(const Tibit& T);
std::string arcs_json(const ArcSet& D);
std::string tincp_json(const Tincp& r);
std::string triangulation_json(const std::set<TaggedArc>& T);
std::string lattice_json(const LatticeModel& L);

// Hasse diagram with elements labeled by window notation
std::string lattice_dot(const LatticeModel& L);

// three periods of the tree: child-to-parent edges, spine residues filled,
// right children dashed
std::string tibit_dot(const Tibit& T);

}  // namespace ctam
