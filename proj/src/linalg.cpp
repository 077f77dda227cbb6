#include "lieii/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace lieii {

std::vector<Eigen::Index> rref(RatMat& m) {
   const Eigen::Index nrows = m.rows(), ncols = m.cols();
   std::vector<Eigen::Index> pivots;
   Eigen::Index row = 0;
   for (Eigen::Index col = 0; col < ncols && row < nrows; ++col) {
      Eigen::Index piv = -1;
      for (Eigen::Index r = row; r < nrows; ++r) {
         if (!is_zero(m(r, col))) {
            piv = r;
            break;
         }
      }
      if (piv < 0) continue;
      if (piv != row) m.row(piv).swap(m.row(row));
      const Rat inv = 1 / m(row, col);
      for (Eigen::Index c = col; c < ncols; ++c) m(row, c) *= inv;
      for (Eigen::Index r = 0; r < nrows; ++r) {
         if (r == row || is_zero(m(r, col))) continue;
         const Rat f = m(r, col);
         for (Eigen::Index c = col; c < ncols; ++c) m(r, c) -= f * m(row, c);
      }
      pivots.push_back(col);
      ++row;
   }
   m.conservativeResize(row, ncols);
   return pivots;
}

Eigen::Index rank(RatMat m) { return static_cast<Eigen::Index>(rref(m).size()); }

std::optional<RatVec> solve_left(const RatMat& A, const RatVec& b) {
   // x * A = b  <=>  A^T x = b.
   return solve(RatMat(A.transpose()), b);
}

std::optional<RatVec> solve(const RatMat& A, const RatVec& b) {
   const Eigen::Index n = A.rows(), m = A.cols();
   RatMat aug(n, m + 1);
   aug.leftCols(m) = A;
   aug.col(m) = b;
   const auto pivots = rref(aug);
   RatVec x = RatVec::Zero(m);
   for (size_t r = 0; r < pivots.size(); ++r) {
      if (pivots[r] == m) return std::nullopt;  // 0 = 1 row: inconsistent
      x(pivots[r]) = aug(static_cast<Eigen::Index>(r), m);
   }
   return x;
}

RatMat kernel(const RatMat& A) {
   RatMat m = A;
   const auto pivots = rref(m);
   const Eigen::Index ncols = A.cols();
   std::vector<char> is_pivot(static_cast<size_t>(ncols), 0);
   for (auto p : pivots) is_pivot[static_cast<size_t>(p)] = 1;
   std::vector<Eigen::Index> free_cols;
   for (Eigen::Index c = 0; c < ncols; ++c)
      if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
   RatMat out = RatMat::Zero(static_cast<Eigen::Index>(free_cols.size()), ncols);
   for (size_t k = 0; k < free_cols.size(); ++k) {
      out(static_cast<Eigen::Index>(k), free_cols[k]) = 1;
      for (size_t r = 0; r < pivots.size(); ++r)
         out(static_cast<Eigen::Index>(k), pivots[r]) =
             -m(static_cast<Eigen::Index>(r), free_cols[k]);
   }
   return out;
}

Subspace Subspace::from_rows(const RatMat& rows) {
   Subspace s(rows.cols());
   s.basis_ = rows;
   s.pivots_ = rref(s.basis_);
   return s;
}

RatVec Subspace::reduce(const RatVec& v) const {
   if (v.size() != ambient_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
   RatVec r = v;
   for (Eigen::Index i = 0; i < basis_.rows(); ++i) {
      const Rat& c = r(pivots_[static_cast<size_t>(i)]);
      if (is_zero(c)) continue;
      const Rat f = c;
      for (Eigen::Index j = 0; j < ambient_; ++j) r(j) -= f * basis_(i, j);
   }
   return r;
}

bool Subspace::contains(const RatVec& v) const {
   const RatVec r = reduce(v);
   for (Eigen::Index i = 0; i < r.size(); ++i)
      if (!is_zero(r(i))) return false;
   return true;
}

bool Subspace::contains(const Subspace& other) const {
   for (Eigen::Index i = 0; i < other.basis_.rows(); ++i)
      if (!contains(other.basis_.row(i).transpose())) return false;
   return true;
}

std::optional<RatVec> Subspace::coordinates(const RatVec& v) const {
   RatVec coords(basis_.rows());
   RatVec r = v;
   for (Eigen::Index i = 0; i < basis_.rows(); ++i) {
      const Rat f = r(pivots_[static_cast<size_t>(i)]);
      coords(i) = f;
      if (is_zero(f)) continue;
      for (Eigen::Index j = 0; j < ambient_; ++j) r(j) -= f * basis_(i, j);
   }
   for (Eigen::Index j = 0; j < ambient_; ++j)
      if (!is_zero(r(j))) return std::nullopt;
   return coords;
}

bool Subspace::add_row(const RatVec& v) {
   if (ambient_ == 0 && basis_.rows() == 0) ambient_ = v.size();
   const Eigen::Index d = basis_.rows();
   RatMat m(d + 1, ambient_);
   m.topRows(d) = basis_;
   m.row(d) = v.transpose();
   basis_ = m;
   pivots_ = rref(basis_);
   return basis_.rows() > d;
}

Rat QuadraticForm::eval(const RatVec& x) const {
   return (x.transpose() * gram * x)(0, 0);
}

Rat QuadraticForm::polar(const RatVec& x, const RatVec& y) const {
   return (x.transpose() * gram * y)(0, 0) + (y.transpose() * gram * x)(0, 0);
}

Signature signature(const RatMat& gram) {
   RatMat m = gram;
   const Eigen::Index n = m.rows();
   if (m.cols() != n) throw std::invalid_argument("signature: matrix not square");
   for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
         if (m(i, j) != m(j, i)) throw std::invalid_argument("signature: matrix not symmetric");

   Signature sig;
   Eigen::Index k = 0;
   while (k < n) {
      if (is_zero(m(k, k))) {
         // Try a nonzero diagonal below to swap in; otherwise fold in a
         // basis vector paired with k off-diagonally (e_k += e_off turns the
         // hyperbolic 2x2 block into a nonzero diagonal entry 2*m(k,off)).
         Eigen::Index dswap = -1;
         for (Eigen::Index r = k + 1; r < n; ++r)
            if (!is_zero(m(r, r))) {
               dswap = r;
               break;
            }
         if (dswap >= 0) {
            m.row(k).swap(m.row(dswap));
            m.col(k).swap(m.col(dswap));
         } else {
            Eigen::Index off = -1;
            for (Eigen::Index r = k + 1; r < n && off < 0; ++r)
               if (!is_zero(m(k, r))) off = r;
            if (off < 0) {
               // Radical direction: row k is zero on the remaining block.
               ++k;
               continue;
            }
            m.row(k) += m.row(off);
            m.col(k) += m.col(off);
         }
      }
      if (sgn(m(k, k)) > 0)
         ++sig.n_plus;
      else
         ++sig.n_minus;
      const Rat d = m(k, k);
      for (Eigen::Index r = k + 1; r < n; ++r) {
         if (is_zero(m(r, k))) continue;
         const Rat f = m(r, k) / d;
         m.row(r) -= f * m.row(k);
         m.col(r) -= f * m.col(k);
      }
      ++k;
   }
   // Any rows skipped as radical were counted; recompute zeros as the gap.
   sig.n_zero = n - sig.n_plus - sig.n_minus;
   return sig;
}

Eigen::Index witt_index(const QuadraticForm& q) {
   const Signature s = signature(q.gram);
   if (s.n_zero != 0) throw std::invalid_argument("witt_index: degenerate form");
   return std::min(s.n_plus, s.n_minus);
}

void SparseRref::axpy(SVec& v, const Rat& c, const SVec& row) const {
   SVec out;
   out.reserve(v.size() + row.size());
   size_t a = 0, b = 0;
   while (a < v.size() || b < row.size()) {
      if (b == row.size() || (a < v.size() && v[a].first < row[b].first)) {
         out.push_back(v[a++]);
      } else if (a == v.size() || row[b].first < v[a].first) {
         out.emplace_back(row[b].first, c * row[b].second);
         ++b;
      } else {
         Rat s = v[a].second + c * row[b].second;
         if (sgn(s) != 0) out.emplace_back(v[a].first, std::move(s));
         ++a;
         ++b;
      }
   }
   v = std::move(out);
}

SVec SparseRref::reduce(SVec v) const {
   while (!v.empty()) {
      const int lead = v.front().first;
      const auto it = std::lower_bound(lead_.begin(), lead_.end(), lead);
      if (it == lead_.end() || *it != lead) break;
      const size_t idx = static_cast<size_t>(it - lead_.begin());
      const Rat c = -v.front().second / rows_[idx].front().second;
      axpy(v, c, rows_[idx]);
   }
   return v;
}

bool SparseRref::insert(SVec v) {
   v = reduce(std::move(v));
   if (v.empty()) return false;
   const int lead = v.front().first;
   const auto it = std::lower_bound(lead_.begin(), lead_.end(), lead);
   const size_t idx = static_cast<size_t>(it - lead_.begin());
   lead_.insert(it, lead);
   rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
   return true;
}

}  // namespace lieii
