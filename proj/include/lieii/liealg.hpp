#ifndef LIEII_LIEALG_HPP
#define LIEII_LIEALG_HPP

#include "lieii/linalg.hpp"
#include "lieii/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lieii {

/// Basis-indexed sparse structure constants over exact rationals, optionally
/// Z-graded. Only pairs i<j are stored; the rest follows by antisymmetry.
class FiniteLieAlgebra {
public:
   FiniteLieAlgebra() = default;
   explicit FiniteLieAlgebra(int dim, std::vector<std::string> labels = {});

   int dim() const { return dim_; }
   const std::vector<std::string>& basis_labels() const { return labels_; }
   const std::optional<std::vector<int>>& grading() const { return grading_; }
   void set_grading(std::vector<int> degrees);

   /// Defines [e_i, e_j] for i < j. Callable once per pair during construction.
   void set_bracket(int i, int j, SVec value);
   /// [e_i, e_j] for any i, j (sign-adjusted; empty when i == j).
   SVec bracket_basis(int i, int j) const;
   const SVec& raw_row(int i, int j) const;  // requires i < j

   RatVec bracket(const RatVec& x, const RatVec& y) const;
   SVec bracket_sparse(const SVec& x, const SVec& y) const;

   /// ad(x) as a dense matrix.
   RatMat ad(const RatVec& x) const;
   /// ad(e_i) rows: row r lists (c, coeff) with [e_i, e_c] having e_r-coeff.
   std::vector<SVec> ad_basis_rows(int i) const;

private:
   int dim_ = 0;
   std::vector<std::string> labels_;
   std::vector<SVec> table_;  // triangular, index tri(i,j) for i<j
   std::optional<std::vector<int>> grading_;
   size_t tri(int i, int j) const {
      return static_cast<size_t>(i) * dim_ - static_cast<size_t>(i) * (i + 1) / 2 +
             (j - i - 1);
   }
   mutable SparseAccum scratch_;
};

struct JacobiFailure {
   int i, j, k;
   std::string message;
};

/// Exhaustive exact check of the Jacobi identity over all basis triples
/// i<j<k. Returns nullopt on success. Uses a fast int64 path when all
/// structure constants have a small common denominator.
std::optional<JacobiFailure> verify_jacobi(const FiniteLieAlgebra& L);

/// Antisymmetry is structural here; grading compatibility is not: checks
/// that every stored bracket lands in the expected degree.
bool verify_grading(const FiniteLieAlgebra& L);

RatMat killing_matrix(const FiniteLieAlgebra& L);
Signature killing_signature(const FiniteLieAlgebra& L);

bool is_inner_ideal(const FiniteLieAlgebra& L, const Subspace& B);
bool is_abelian(const FiniteLieAlgebra& L, const Subspace& B);
bool is_extremal(const FiniteLieAlgebra& L, const RatVec& e);
/// Point-space test: [P,P]=0 and the polarized extremality criterion
/// (see implementation notes) over all basis pairs of P.
bool is_point_space(const FiniteLieAlgebra& L, const Subspace& P);

struct Sl2Triple {
   RatVec e, h, f;
};

/// Embeds an ad-nilpotent e into an sl2-triple by exact linear solves.
Sl2Triple sl2_triple(const FiniteLieAlgebra& L, const RatVec& e);

/// Least k with (ad e)^k = 0; throws if e is not ad-nilpotent.
int ad_nilpotency_index(const FiniteLieAlgebra& L, const RatVec& e);

/// Exact eigenspace decomposition of ad(h); requires integer spectrum and
/// semisimple action (eigenspaces must fill the algebra).
std::map<int, Subspace> eigenspace_grading(const FiniteLieAlgebra& L, const RatVec& h);

}  // namespace lieii

#endif
