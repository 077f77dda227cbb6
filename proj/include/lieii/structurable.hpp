#ifndef LIEII_STRUCTURABLE_HPP
#define LIEII_STRUCTURABLE_HPP

#include "lieii/liealg.hpp"
#include "lieii/satake.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieii {

/// Real composition algebra with unit at basis index 0 (except Cs = R (+) R,
/// whose unit is e1 + e2). Norm multiplicativity and x*conj(x) = n(x)*1 are
/// verified at construction.
struct CompositionAlgebra {
   std::string name;  // R, C, Cs, H, Hs, O, Os
   int dim = 0;
   std::vector<std::vector<SVec>> mul;  // mul[i][j] = e_i * e_j, integer coeffs
   RatMat conj;                         // involution matrix
   RatMat gram;                         // Gram of the norm: n(x) = x^T gram x
   RatVec unit;

   RatVec multiply(const RatVec& x, const RatVec& y) const;
   RatVec conjugate(const RatVec& x) const { return conj * x; }
   Rat norm(const RatVec& x) const { return (x.transpose() * gram * x)(0); }
   std::vector<RatVec> skew_basis() const;  // conj(s) = -s
};

CompositionAlgebra composition_algebra(const std::string& name);

/// Unital algebra with involution whose V-operators satisfy the structurable
/// operator identity (verified exhaustively for small dimensions, by seeded
/// sampling above; the exhaustive Jacobi check of the Kantor construction is
/// the complete certificate).
struct StructurableAlgebra {
   std::string name;
   int dim = 0;
   std::vector<std::vector<SVec>> mul;
   RatMat invol;
   RatVec unit;
   std::vector<RatVec> skew_vectors;  // basis of S (structured order)
   std::vector<RatVec> herm_vectors;  // basis of H
   bool jordan = false;               // identity involution + commutative
   // tensor-product provenance (albert_form needs the factors)
   bool tensor = false;
   std::string name1, name2;  // factor names when tensor
   int dim1 = 0, dim2 = 0;
   RatMat albert_gram;  // on skew_vectors coordinates; tensor only

   RatVec multiply(const RatVec& x, const RatVec& y) const;
   RatVec conjugate(const RatVec& x) const { return invol * x; }
   /// Coordinates of a skew element in skew_vectors; throws if not skew.
   RatVec skew_coordinates(const RatVec& s) const;
};

StructurableAlgebra tensor_structurable(const CompositionAlgebra& c1,
                                        const CompositionAlgebra& c2);

/// Hermitian 3x3 matrices over C with the symmetrized product; identity
/// involution. Basis: E11, E22, E33, then the three off-diagonal slots
/// (1,2), (1,3), (2,3) each carrying a copy of C.
StructurableAlgebra jordan_h3(const CompositionAlgebra& c);

/// V_{x,y}(z) = (x conj(y)) z + (z conj(y)) x - (z conj(x)) y as a matrix.
RatMat v_operator(const StructurableAlgebra& a, const RatVec& x, const RatVec& y);

/// Exact basis of Instr(A) = span of all V_{e_i,e_j}, with a membership /
/// coordinate solver. Rank is certified exactly (a modular screen only
/// selects candidate generators; independence and spanning are re-proved
/// over the rationals).
struct InstrBasis {
   int dim = 0;  // of A
   std::vector<std::pair<int, int>> generators;  // selected (i,j) basis pairs
   std::vector<SVec> ops;  // selected V-operators, flattened row-major
   std::vector<SVec> rref_rows;
   std::vector<int> pivots;
   RatMat transform;  // rref_rows = transform * ops
   /// Coordinates of V_{e_i,e_j} in `ops`, indexed i*dim + j.
   std::vector<RatVec> vcoords;

   int rank() const { return static_cast<int>(ops.size()); }
   /// Coordinates of a flattened operator in `ops`; nullopt if outside span.
   std::optional<RatVec> coordinates(const SVec& flat_op) const;

private:
   mutable SparseAccum scratch_;
};

InstrBasis instr(const StructurableAlgebra& a);

/// The 5-graded Lie algebra K(A) with basis blocks
/// K_{-2} (S~), K_{-1} (A~), K_0 (Instr), K_1 (A), K_2 (S).
struct KantorAlgebra {
   FiniteLieAlgebra L;
   int dim_a = 0, dim_s = 0, dim_instr = 0;
   InstrBasis inst;
   StructurableAlgebra algebra;

   int off_m2() const { return 0; }
   int off_m1() const { return dim_s; }
   int off_instr() const { return dim_s + dim_a; }
   int off_p1() const { return dim_s + dim_a + dim_instr; }
   int off_p2() const { return dim_s + 2 * dim_a + dim_instr; }
   /// The grading element zeta = V_{1,1}; ad(zeta) has eigenvalues -2..2.
   RatVec grading_element() const;
};

/// check_jacobi runs the exhaustive Jacobi verification (the expensive,
/// complete certificate); grading compatibility is always verified.
KantorAlgebra kantor(const StructurableAlgebra& a, bool check_jacobi = true);

/// Albert form q(s1 (x) 1 + 1 (x) s2) = n1(s1) - n2(s2) on skew_vectors
/// coordinates; throws unless a came from tensor_structurable.
QuadraticForm albert_form(const StructurableAlgebra& a);

/// {(0,s) : s in I} inside K_2, for I given in skew_vectors coordinates
/// (rows). Throws if the Albert form does not vanish on I or I is trivial.
Subspace isotropic_inner_ideal(const KantorAlgebra& k, const RatMat& iso_rows);

/// (C1 (x) e1 in K_1) + K_2 inside kantor(C1 (x) Cs); dimension 2*dim C1.
Subspace half_plus_skew_inner_ideal(const KantorAlgebra& k);

/// U_x = 2 L_x^2 - L_{x^2}; requires a Jordan algebra.
RatMat jordan_U(const StructurableAlgebra& j, const RatVec& x);

/// U_{b,b'}(J) within B for all basis pairs of B (linearized U-operator).
bool is_jordan_inner_ideal(const StructurableAlgebra& j, const Subspace& b);

/// Embeds a subspace of the Jordan algebra into the K_1 block of kantor(J).
Subspace jordan_subspace_in_k1(const KantorAlgebra& k, const Subspace& b);

/// Looks up (dim, Killing signature) in the exceptional table; throws with
/// both numbers if no row matches.
RealFormId identify_real_form(const FiniteLieAlgebra& l);

}  // namespace lieii

#endif
