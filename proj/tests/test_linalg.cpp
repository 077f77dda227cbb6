#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieii/linalg.hpp"

#include <random>

using namespace lieii;

namespace {
RatMat from_ints(std::initializer_list<std::initializer_list<int>> rows) {
   RatMat m(static_cast<Eigen::Index>(rows.size()),
            static_cast<Eigen::Index>(rows.begin()->size()));
   Eigen::Index r = 0;
   for (const auto& row : rows) {
      Eigen::Index c = 0;
      for (int v : row) m(r, c++) = v;
      ++r;
   }
   return m;
}
}  // namespace

TEST_CASE("rref and rank") {
   RatMat m = from_ints({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
   CHECK(rank(m) == 2);
   auto piv = rref(m);
   CHECK(piv == std::vector<Eigen::Index>{0, 1});
   CHECK(m.rows() == 2);
   // reduced form: identity on pivot columns
   CHECK(m(0, 0) == 1);
   CHECK(m(0, 1) == 0);
   CHECK(m(1, 1) == 1);
}

TEST_CASE("solve exact") {
   RatMat A = from_ints({{2, 0}, {1, 3}});
   RatVec b(2);
   b << Rat(4), Rat(5);
   auto x = solve(A, b);
   REQUIRE(x.has_value());
   CHECK((A * *x - b).isZero(0));
   RatMat sing = from_ints({{1, 1}, {1, 1}});
   RatVec c(2);
   c << Rat(1), Rat(2);
   CHECK(!solve(sing, c).has_value());
}

TEST_CASE("kernel") {
   RatMat A = from_ints({{1, 2, 3}});
   RatMat k = kernel(A);
   CHECK(k.rows() == 2);
   for (Eigen::Index i = 0; i < k.rows(); ++i)
      CHECK((A * k.row(i).transpose()).isZero(0));
}

TEST_CASE("subspace membership and coordinates") {
   Subspace s = Subspace::from_rows(from_ints({{1, 0, 1}, {0, 1, 1}}));
   CHECK(s.dim() == 2);
   RatVec v(3);
   v << Rat(2), Rat(3), Rat(5);
   CHECK(s.contains(v));
   auto coords = s.coordinates(v);
   REQUIRE(coords.has_value());
   CHECK((*coords)(0) == 2);
   CHECK((*coords)(1) == 3);
   v(2) = 6;
   CHECK(!s.contains(v));
}

TEST_CASE("signature basics") {
   CHECK(signature(from_ints({{1, 0}, {0, -1}})) == Signature{1, 1, 0});
   CHECK(signature(from_ints({{0, 1}, {1, 0}})) == Signature{1, 1, 0});
   CHECK(signature(from_ints({{0, 0}, {0, 0}})) == Signature{0, 0, 2});
   CHECK(signature(from_ints({{2, 1}, {1, 2}})) == Signature{2, 0, 0});
   QuadraticForm q{from_ints({{1, 0}, {0, -4}})};
   CHECK(witt_index(q) == 1);
   QuadraticForm deg{from_ints({{1, 0}, {0, 0}})};
   CHECK_THROWS(witt_index(deg));
}

TEST_CASE("signature invariant under random congruence") {
   // Oracle: signature is a congruence invariant (Sylvester); transform a
   // known diagonal form by random unimodular matrices and recheck.
   std::mt19937 rng(12345);
   RatMat d = RatMat::Zero(4, 4);
   d(0, 0) = 3;
   d(1, 1) = Rat(1, 2);
   d(2, 2) = -2;
   d(3, 3) = -5;
   for (int trial = 0; trial < 20; ++trial) {
      RatMat u = RatMat::Identity(4, 4);
      for (int step = 0; step < 8; ++step) {
         int i = static_cast<int>(rng() % 4), j = static_cast<int>(rng() % 4);
         if (i == j) continue;
         Rat c = Rat(static_cast<int>(rng() % 5) - 2);
         u.row(i) += c * u.row(j);
      }
      RatMat g = u.transpose() * d * u;
      CHECK(signature(g) == Signature{2, 2, 0});
   }
}

TEST_CASE("sparse rref") {
   SparseRref r;
   CHECK(r.insert({{0, Rat(1)}, {5, Rat(2)}}));
   CHECK(r.insert({{0, Rat(2)}, {3, Rat(1)}}));
   CHECK(!r.insert({{3, Rat(1)}, {5, Rat(-4)}}));  // = row2 - 2*row1
   CHECK(r.dim() == 2);
   CHECK(r.contains({{0, Rat(3)}, {3, Rat(1)}, {5, Rat(2)}}));
   CHECK(!r.contains({{1, Rat(1)}}));
}
