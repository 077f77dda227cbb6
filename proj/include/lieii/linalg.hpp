#ifndef LIEII_LINALG_HPP
#define LIEII_LINALG_HPP

#include "lieii/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace lieii {

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row. Zero rows are moved to the bottom (and chopped off).
std::vector<Eigen::Index> rref(RatMat& m);

Eigen::Index rank(RatMat m);

/// Solves x * A = b (row-vector convention) exactly; free variables are set
/// to zero. Returns nullopt when inconsistent.
std::optional<RatVec> solve_left(const RatMat& A, const RatVec& b);

/// Solves A * x = b exactly (column convention).
std::optional<RatVec> solve(const RatMat& A, const RatVec& b);

/// Basis (rows) of { x : A * x = 0 }.
RatMat kernel(const RatMat& A);

/// Row space of an exact rational matrix, stored in reduced row echelon
/// form. Rows of `basis` are the basis vectors.
class Subspace {
public:
   Subspace() = default;
   explicit Subspace(Eigen::Index ambient) : ambient_(ambient) {}

   static Subspace from_rows(const RatMat& rows);

   Eigen::Index ambient_dim() const { return ambient_; }
   Eigen::Index dim() const { return basis_.rows(); }
   const RatMat& basis() const { return basis_; }
   const std::vector<Eigen::Index>& pivots() const { return pivots_; }

   /// Residual of v after reduction against the basis; zero iff v is a
   /// member.
   RatVec reduce(const RatVec& v) const;
   bool contains(const RatVec& v) const;
   bool contains(const Subspace& other) const;
   /// Coordinates of v in the row basis, or nullopt if v is not a member.
   std::optional<RatVec> coordinates(const RatVec& v) const;

   /// Adds a row, re-echelonizing; returns true if the dimension grew.
   bool add_row(const RatVec& v);

private:
   Eigen::Index ambient_ = 0;
   RatMat basis_;
   std::vector<Eigen::Index> pivots_;
};

struct Signature {
   Eigen::Index n_plus = 0;
   Eigen::Index n_minus = 0;
   Eigen::Index n_zero = 0;
   int excess() const { return static_cast<int>(n_plus - n_minus); }
   bool operator==(const Signature&) const = default;
};

struct QuadraticForm {
   RatMat gram;  // symmetric, exact

   Eigen::Index dim() const { return gram.rows(); }
   Rat eval(const RatVec& x) const;
   /// Polarized value b(x,y) with q(x) = b(x,x).
   Rat polar(const RatVec& x, const RatVec& y) const;
};

/// Exact signature by symmetric congruence elimination (simultaneous
/// row/column operations), with 2x2 block handling for zero diagonals.
Signature signature(const RatMat& gram);
inline Signature signature(const QuadraticForm& q) { return signature(q.gram); }

/// min(n_plus, n_minus); throws on a degenerate form.
Eigen::Index witt_index(const QuadraticForm& q);

/// Incremental sparse row echelon basis over very large ambient dimensions
/// (used for operator spaces, where dense storage is wasteful).
class SparseRref {
public:
   /// Reduces v against the current rows; if a nonzero residual remains it
   /// becomes a new row. Returns true if the rank grew.
   bool insert(SVec v);
   /// Fully reduces v; empty result means membership.
   SVec reduce(SVec v) const;
   bool contains(const SVec& v) const { return reduce(v).empty(); }
   Eigen::Index dim() const { return static_cast<Eigen::Index>(rows_.size()); }
   const std::vector<SVec>& rows() const { return rows_; }

private:
   std::vector<SVec> rows_;         // sorted by leading index
   std::vector<int> lead_;          // leading index per row
   void axpy(SVec& v, const Rat& c, const SVec& row) const;
};

}  // namespace lieii

#endif
