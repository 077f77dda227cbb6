#ifndef LIEII_INNERIDEAL_HPP
#define LIEII_INNERIDEAL_HPP

#include "lieii/satake.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lieii {

/// Node index set, sorted ascending, 0-based.
using IndexSet = std::vector<int>;

/// Roots whose coefficient at every node of I equals the maximal root's
/// coefficient there. Returns sorted root indices; throws on empty I.
std::vector<int> phi_I(const RootSystem& rs, const IndexSet& I);

/// True iff every node of I is white and I is closed under the arrow
/// involution.
bool is_adapted(const SatakeDiagram& sd, const IndexSet& I);

/// One conjugacy class of abelian inner ideals B_I.
struct InnerIdealClass {
   RealFormId real_form;
   std::vector<int> phi;  // representative root-index set, sorted
   int dim = 0;           // = |phi|
   IndexSet min_rep;      // minimal index set with this Phi (greedy canonical)
   IndexSet max_rep;      // union of all index sets with this Phi
   /// Minimal representatives of the classes merged into this one by
   /// Satake-preserving diagram automorphisms (first entry = min_rep).
   std::vector<IndexSet> conjugates;
   std::vector<std::vector<int>> conjugate_phis;  // their root-index sets
};

/// (min_rep, max_rep) for the inner ideal described by I; pure root-system
/// computation, independent of the Satake decoration.
std::pair<IndexSet, IndexSet> min_max_representatives(const RootSystem& rs,
                                                      const IndexSet& I);

/// Diagram automorphisms of rs preserving node colors and arrows.
std::vector<std::vector<int>> satake_preserving_automorphisms(const SatakeDiagram& sd,
                                                              const RootSystem& rs);

/// All conjugacy classes of proper abelian inner ideals: one per distinct
/// Phi_I over adapted I, merged under Satake-preserving diagram
/// automorphisms when merge is true. Sorted by (dim, min_rep). Compact
/// forms yield the empty list.
std::vector<InnerIdealClass> enumerate_classes(const SatakeDiagram& sd,
                                               const RootSystem& rs,
                                               bool merge = true);

/// dim B_I computed on the restricted side (sum of multiplicities over
/// Sigma_I); throws if I is not adapted. Always equals |phi_I|.
int dim_via_restricted(const SatakeDiagram& sd, const RootSystem& rs,
                       const IndexSet& I);

/// Containment lattice: edge (a, b) means class a's ideal is covered by
/// class b's (strict containment of Phi-sets up to conjugacy, transitively
/// reduced).
struct Lattice {
   std::vector<InnerIdealClass> nodes;
   std::vector<std::pair<int, int>> edges;
};

Lattice hasse(std::vector<InnerIdealClass> classes);

std::string lattice_dot(const Lattice& lat);
std::string lattice_json(const Lattice& lat);

}  // namespace lieii

#endif
