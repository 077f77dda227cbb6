#ifndef LIEII_SATAKE_HPP
#define LIEII_SATAKE_HPP

#include "lieii/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieii {

/// Identity of a real simple Lie algebra. Compact forms use the boundary
/// parameter (su(0,n), so(0,n), sp(0,n)) or the tabulated Killing signature
/// for the exceptional series.
struct RealFormId {
   enum class Kind {
      sl_r,     // sl(n,R), n >= 2                         (split A_{n-1})
      sl_h,     // sl(m,H), m >= 2                         (A_{2m-1})
      su,       // su(p,q), 0 <= p <= q, p+q >= 2          (A_{p+q-1}; p=0 compact)
      so,       // so(p,q), 0 <= p <= q                    (B or D; p=q+... split)
      so_star,  // u*(n,H) = so*(2n), n >= 5               (D_n)
      sp_r,     // sp(2n,R), n >= 3                        (split C_n)
      sp_pq,    // sp(p,q), 0 <= p <= q, p+q >= 3          (C_{p+q}; p=0 compact)
      exceptional  // named by (type, Killing signature), incl. split and compact
   };
   Kind kind{};
   int p = 0, q = 0;  // su / so / sp_pq
   int n = 0;         // sl_r: matrix size; sl_h: m; so_star: n; sp_r: half-size n
   RootSystemType complex_type{Family::A, 1};
   int killing = 0;  // exceptional second subindex (signature of the Killing form)

   bool is_compact() const;
   std::string name() const;
   /// Accepts e.g. "sl(4,R)", "sl(3,H)", "su(2,3)", "su(5)", "so(3,4)",
   /// "so(9)", "so*(10)", "sp(6,R)", "sp(1,2)", "sp(3)", "e6,-14", "g2,2".
   static RealFormId parse(const std::string& s);
   bool operator==(const RealFormId&) const = default;
};

struct SatakeDiagram {
   RealFormId form;
   RootSystemType rst{Family::A, 1};
   std::vector<bool> black;  // size rank, 0-based nodes
   std::vector<int> mu;      // arrow involution; mu[i] == i when unpaired

   bool is_white(int i) const { return !black[static_cast<size_t>(i)]; }
   int num_white() const;
   std::vector<std::pair<int, int>> arrows() const;  // (i, j) with i < j
   int real_rank() const;
   /// Arrow-orbits of white nodes, each sorted, ordered by smallest member.
   std::vector<std::vector<int>> white_orbits() const;
};

/// The Satake diagram of a real form; throws on illegal parameters.
SatakeDiagram catalog(const RealFormId& id);

/// Every cataloged real form whose complexification has rank <= max_rank,
/// compact forms included.
std::vector<RealFormId> all_real_forms(int max_rank);

/// Restricted root system: each root restricts to its coefficient vector
/// over the white arrow-class representatives (black coefficients dropped,
/// arrow-paired coefficients added); roots supported on black nodes
/// restrict to zero.
struct RestrictedRootSystem {
   std::vector<int> reps;  // representative node (smallest in class), ascending
   struct Class {
      Eigen::VectorXi coeffs;  // over reps
      int multiplicity;
   };
   std::vector<Class> classes;    // in order of first appearance in rs.roots()
   std::vector<int> restriction;  // root index -> class index, or -1 (zero)

   int class_of(const Eigen::VectorXi& coeffs) const;  // -1 if absent
};

RestrictedRootSystem restricted_roots(const SatakeDiagram& sd, const RootSystem& rs);

std::string satake_json(const SatakeDiagram& sd);

}  // namespace lieii

#endif
