#ifndef LIEII_RATIONAL_HPP
#define LIEII_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
   using Real = mpq_class;
   using NonInteger = mpq_class;
   using Nested = mpq_class;
   static inline Real epsilon() { return 0; }
   static inline Real dummy_precision() { return 0; }
   static inline int digits10() { return 0; }
   enum {
      IsInteger = 0,
      IsSigned = 1,
      IsComplex = 0,
      RequireInitialization = 1,
      ReadCost = 6,
      AddCost = 100,
      MulCost = 100
   };
};

}  // namespace Eigen

namespace lieii {

using Rat = mpq_class;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

/// Sparse vector: (index, coefficient) pairs, sorted by index, no zeros.
using SVec = std::vector<std::pair<int, Rat>>;

inline std::string to_string(const Rat& x) { return x.get_str(); }

inline RatVec to_dense(const SVec& v, Eigen::Index n) {
   RatVec out = RatVec::Zero(n);
   for (const auto& [i, c] : v) out(i) = c;
   return out;
}

inline SVec to_sparse(const RatVec& v) {
   SVec out;
   for (Eigen::Index i = 0; i < v.size(); ++i)
      if (!is_zero(v(i))) out.emplace_back(static_cast<int>(i), v(i));
   return out;
}

/// Scratch buffer for accumulating sparse linear combinations without
/// rebuilding maps; reusable across calls.
class SparseAccum {
public:
   void resize(int n) {
      if (static_cast<int>(buf_.size()) < n) {
         buf_.resize(n, Rat(0));
         mark_.resize(n, 0);
      }
   }
   void add(int i, const Rat& c) {
      if (!mark_[i]) {
         mark_[i] = 1;
         touched_.push_back(i);
         buf_[i] = c;
      } else {
         buf_[i] += c;
      }
   }
   void add_mul(int i, const Rat& a, const Rat& b) {
      if (!mark_[i]) {
         mark_[i] = 1;
         touched_.push_back(i);
         buf_[i] = a * b;
      } else {
         buf_[i] += a * b;
      }
   }
   /// Extracts the accumulated vector (sorted, zero-free) and clears state.
   SVec drain() {
      SVec out;
      std::sort(touched_.begin(), touched_.end());
      for (int i : touched_) {
         if (sgn(buf_[i]) != 0) out.emplace_back(i, buf_[i]);
         buf_[i] = 0;
         mark_[i] = 0;
      }
      touched_.clear();
      return out;
   }
   bool all_zero() const {
      for (int i : touched_)
         if (sgn(buf_[i]) != 0) return false;
      return true;
   }
   void clear() {
      for (int i : touched_) {
         buf_[i] = 0;
         mark_[i] = 0;
      }
      touched_.clear();
   }

private:
   std::vector<Rat> buf_;
   std::vector<char> mark_;
   std::vector<int> touched_;
};

}  // namespace lieii

#endif
