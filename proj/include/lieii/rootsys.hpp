#ifndef LIEII_ROOTSYS_HPP
#define LIEII_ROOTSYS_HPP

#include "lieii/liealg.hpp"
#include "lieii/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace lieii {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family family_from_letter(char c);

struct RootSystemType {
   Family family;
   int rank;

   /// Throws on illegal (family, rank) pairs, naming the constraint.
   static RootSystemType make(Family f, int rank);
   static RootSystemType parse(const std::string& s);  // e.g. "E6", "D4"
   std::string name() const;
   bool operator==(const RootSystemType&) const = default;
};

/// Root as integer coefficients over the simple roots. Node numbering
/// matches the Dynkin diagram labelling used throughout:
///   A_l, B_l, C_l: chain 1-2-...-l (B: node l short; C: node l long)
///   D_l: chain 1-...-(l-2) forking to l-1 and l
///   E_l: chain 1-3-4-5-...-l with node 2 attached to node 4
///   F_4: chain 1-2-3-4, nodes 1,2 long
///   G_2: nodes 1 (long), 2 (short)
using Root = Eigen::VectorXi;

class RootSystem {
public:
   explicit RootSystem(RootSystemType t);

   const RootSystemType& type() const { return type_; }
   int rank() const { return type_.rank; }
   const Eigen::MatrixXi& cartan_matrix() const { return cartan_; }
   const std::vector<Root>& roots() const { return roots_; }
   int num_positive() const { return num_positive_; }
   const Root& maximal_root() const { return roots_[static_cast<size_t>(max_root_)]; }
   int maximal_root_index() const { return max_root_; }

   bool is_root(const Root& r) const;
   /// Index in roots(), or -1.
   int index_of(const Root& r) const;
   int negative_of(int idx) const;  // index of -roots()[idx]
   int height(int idx) const;

   /// (alpha, alpha) with long-root normalization fixed by the first node.
   Rat norm_sq(const Root& r) const;
   Rat inner(const Root& a, const Root& b) const;
   /// Cartan pairing <alpha, alpha_i^vee> = 2(alpha,alpha_i)/(alpha_i,alpha_i).
   int pairing(const Root& a, int i) const;

private:
   RootSystemType type_;
   Eigen::MatrixXi cartan_;      // cartan_(i,j) = <alpha_i, alpha_j^vee>
   std::vector<Rat> norm_;       // (alpha_i, alpha_i)
   RatMat gram_;                 // (alpha_i, alpha_j)
   std::vector<Root> roots_;     // positives by (height, lex), then negatives
   int num_positive_ = 0;
   int max_root_ = -1;
   std::unordered_map<std::string, int> index_;
   static std::string key(const Root& r);
   void generate();
};

RootSystem build_root_system(RootSystemType t);

/// All permutations of {0..l-1} preserving the Cartan matrix.
std::vector<std::vector<int>> diagram_automorphisms(const RootSystem& rs);

/// Partition of root indices by the k-th coefficient (k is 0-based here).
std::map<int, std::vector<int>> grading_by_node(const RootSystem& rs, int k);

/// Chevalley-basis split Lie algebra: basis h_1..h_l then one e_alpha per
/// root in rs.roots() order. Structure constants are integers; signs follow
/// the extraspecial-pair method. The result carries the root-height grading.
struct ChevalleyAlgebra {
   FiniteLieAlgebra L;
   const RootSystem* rs;
   int root_basis_index(int root_idx) const { return rs->rank() + root_idx; }
};

ChevalleyAlgebra chevalley_algebra(const RootSystem& rs);

std::string root_system_json(const RootSystem& rs);

}  // namespace lieii

#endif
