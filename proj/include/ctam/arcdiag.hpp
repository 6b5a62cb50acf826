#pragma once
#include <set>
#include <vector>

#include "ctam/tibit.hpp"
#include "ctam/tito.hpp"

namespace ctam {

// arcs are reflection classes (a,b) with 1 <= a <= n, a < b <= a+n;
// b = a+n is the imaginary (once-around) arc
using ArcSet = std::set<Refl>;

bool valid_arc(const Refl& r, int n);
bool arc_imaginary(const Refl& r, int n);

// symmetric, irreflexive chord-crossing test on the annulus
bool crosses(const Refl& x, const Refl& y, int n);
bool noncrossing(const ArcSet& D, int n);

// lower-wall classes of a 312-avoiding order; bijective onto noncrossing sets
ArcSet arc_diagram(const Tito& t);
Tito arc_diagram_inverse(const ArcSet& D, int n);

// join-irreducible with unique lower wall (a,b); meet-irreducible with unique
// upper wall (a,b); kappa_irr is the pairing j -> m
Tito make_jirr(Refl r, int n);
Tito make_mirr(Refl r, int n);
Tito kappa_irr(Refl r, int n);

struct FtRel {
  bool onto = false, into = false, to = false;
};
FtRel ftfsdl(const Refl& r1, const Refl& r2, int n);

// least superset closed under the prefix and aligned-composition rules
ArcSet closure(const ArcSet& D, bool affine, int n);

// inversion classes with span <= n (cyclic) or < n (affine)
ArcSet torsion_arcs(const Tito& t, bool affine);

// every pairwise-noncrossing arc set, in a fixed enumeration order
std::vector<ArcSet> noncrossing_diagrams(int n, bool real_only);

// trees reachable from the left chain by up-rotations, BFS order (cached)
const std::vector<Tibit>& reachable_tibits(int n);

}  // namespace ctam
