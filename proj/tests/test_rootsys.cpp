#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieii/rootsys.hpp"

#include <algorithm>
#include <numeric>

using namespace lieii;

namespace {
int expected_count(Family f, int l) {
   switch (f) {
      case Family::A: return l * (l + 1);
      case Family::B:
      case Family::C: return 2 * l * l;
      case Family::D: return 2 * l * (l - 1);
      case Family::E: return l == 6 ? 72 : (l == 7 ? 126 : 240);
      case Family::F: return 48;
      case Family::G: return 12;
   }
   return -1;
}
}  // namespace

TEST_CASE("illegal types rejected") {
   CHECK_THROWS(RootSystemType::make(Family::E, 5));
   CHECK_THROWS(RootSystemType::make(Family::D, 3));
   CHECK_THROWS(RootSystemType::make(Family::C, 2));
   CHECK_THROWS(RootSystemType::make(Family::B, 1));
   CHECK_THROWS(RootSystemType::make(Family::F, 3));
   CHECK_THROWS(RootSystemType::make(Family::G, 3));
   CHECK(RootSystemType::parse("E6").rank == 6);
}

TEST_CASE("root counts and negation closure") {
   std::vector<RootSystemType> types;
   for (int l = 1; l <= 8; ++l) types.push_back(RootSystemType::make(Family::A, l));
   for (int l = 2; l <= 8; ++l) types.push_back(RootSystemType::make(Family::B, l));
   for (int l = 3; l <= 8; ++l) types.push_back(RootSystemType::make(Family::C, l));
   for (int l = 4; l <= 8; ++l) types.push_back(RootSystemType::make(Family::D, l));
   for (int l = 6; l <= 8; ++l) types.push_back(RootSystemType::make(Family::E, l));
   types.push_back(RootSystemType::make(Family::F, 4));
   types.push_back(RootSystemType::make(Family::G, 2));
   for (const auto& t : types) {
      CAPTURE(t.name());
      RootSystem rs(t);
      CHECK(static_cast<int>(rs.roots().size()) == expected_count(t.family, t.rank));
      for (const auto& r : rs.roots()) CHECK(rs.is_root(Root(-r)));
      // maximal root dominates
      const Root& m = rs.maximal_root();
      for (const auto& r : rs.roots())
         for (int j = 0; j < t.rank; ++j) CHECK(r(j) <= m(j));
   }
}

TEST_CASE("A2 by hand") {
   RootSystem rs(RootSystemType::make(Family::A, 2));
   CHECK(rs.roots().size() == 6);
   Root m(2);
   m << 1, 1;
   CHECK(rs.maximal_root() == m);
}

TEST_CASE("maximal roots of the exceptional types") {
   auto max_of = [](const char* name) {
      RootSystem rs(RootSystemType::parse(name));
      return rs.maximal_root();
   };
   Root e6(6), e7(7), e8(8), f4(4), g2(2);
   e6 << 1, 2, 2, 3, 2, 1;
   e7 << 2, 2, 3, 4, 3, 2, 1;
   e8 << 2, 3, 4, 6, 5, 4, 3, 2;
   f4 << 2, 3, 4, 2;
   g2 << 2, 3;
   CHECK(max_of("E6") == e6);
   CHECK(max_of("E7") == e7);
   CHECK(max_of("E8") == e8);
   CHECK(max_of("F4") == f4);
   CHECK(max_of("G2") == g2);
}

TEST_CASE("diagram automorphism group sizes") {
   auto count = [](const char* name) {
      RootSystem rs(RootSystemType::parse(name));
      return diagram_automorphisms(rs).size();
   };
   CHECK(count("A1") == 1);
   CHECK(count("A3") == 2);
   CHECK(count("A8") == 2);
   CHECK(count("B4") == 1);
   CHECK(count("C5") == 1);
   CHECK(count("D4") == 6);
   CHECK(count("D6") == 2);
   CHECK(count("E6") == 2);
   CHECK(count("E7") == 1);
   CHECK(count("F4") == 1);
   CHECK(count("G2") == 1);
}

TEST_CASE("D4 triality contains a 3-cycle on the outer nodes") {
   RootSystem rs(RootSystemType::parse("D4"));
   const auto autos = diagram_automorphisms(rs);
   bool found = false;
   for (const auto& p : autos)
      if (p[0] == 2 && p[2] == 3 && p[3] == 0 && p[1] == 1) found = true;
   CHECK(found);
}

TEST_CASE("E6 automorphisms by brute force over all permutations") {
   RootSystem rs(RootSystemType::parse("E6"));
   const auto& c = rs.cartan_matrix();
   std::vector<int> perm(6);
   std::iota(perm.begin(), perm.end(), 0);
   std::vector<std::vector<int>> brute;
   do {
      bool ok = true;
      for (int i = 0; i < 6 && ok; ++i)
         for (int j = 0; j < 6 && ok; ++j)
            if (c(i, j) != c(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)])) ok = false;
      if (ok) brute.push_back(perm);
   } while (std::next_permutation(perm.begin(), perm.end()));
   auto fast = diagram_automorphisms(rs);
   std::sort(fast.begin(), fast.end());
   std::sort(brute.begin(), brute.end());
   CHECK(fast == brute);
   // the nontrivial one swaps 1<->6 and 3<->5 (0-based: 0<->5, 2<->4)
   std::vector<int> swap{5, 1, 4, 3, 2, 0};
   CHECK(std::find(brute.begin(), brute.end(), swap) != brute.end());
}

TEST_CASE("grading by node") {
   RootSystem e8(RootSystemType::parse("E8"));
   auto g = grading_by_node(e8, 1);  // node 2, 0-based
   CHECK(g.rbegin()->first == 3);
   CHECK(g[3].size() == 8);
   CHECK(g[2].size() == 28);
   CHECK(g[1].size() == 56);
   CHECK(g[0].size() == 56);  // roots only; Cartan adds 8 more in degree 0
   for (const auto& [d, v] : g) CHECK(v.size() == g[-d].size());

   RootSystem e7(RootSystemType::parse("E7"));
   auto g7 = grading_by_node(e7, 1);
   CHECK(g7.rbegin()->first == 2);
   CHECK(g7[2].size() == 7);
   CHECK(g7[1].size() == 35);
   CHECK(g7[0].size() == 49 - 7);  // degree-0 roots; +7 Cartan = 49

   RootSystem e6(RootSystemType::parse("E6"));
   auto g6 = grading_by_node(e6, 2);
   CHECK(g6.rbegin()->first == 2);
   CHECK(g6[2].size() == 5);
   CHECK(g6[1].size() == 20);
}

TEST_CASE("chevalley A1 relations") {
   RootSystem rs(RootSystemType::parse("A1"));
   auto ch = chevalley_algebra(rs);
   const auto& L = ch.L;
   CHECK(L.dim() == 3);
   // basis: h, e_alpha, e_{-alpha}
   CHECK(L.bracket_basis(0, 1) == SVec{{1, Rat(2)}});
   CHECK(L.bracket_basis(1, 2) == SVec{{0, Rat(1)}});
   CHECK(L.bracket_basis(0, 2) == SVec{{2, Rat(-2)}});
}

TEST_CASE("chevalley A2 structure constants") {
   RootSystem rs(RootSystemType::parse("A2"));
   auto ch = chevalley_algebra(rs);
   Root a1(2), a2(2);
   a1 << 1, 0;
   a2 << 0, 1;
   const int i1 = ch.root_basis_index(rs.index_of(a1));
   const int i2 = ch.root_basis_index(rs.index_of(a2));
   const SVec br = ch.L.bracket_basis(i1, i2);
   REQUIRE(br.size() == 1);
   CHECK(br[0].first == ch.root_basis_index(rs.index_of(Root(a1 + a2))));
   CHECK((br[0].second == 1 || br[0].second == -1));
}

TEST_CASE("chevalley dimensions and exact Jacobi for small types") {
   for (const char* name : {"A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
      CAPTURE(name);
      RootSystem rs(RootSystemType::parse(name));
      auto ch = chevalley_algebra(rs);  // construction runs the Jacobi check
      CHECK(ch.L.dim() == static_cast<int>(rs.roots().size()) + rs.rank());
      CHECK(verify_grading(ch.L));
   }
   RootSystem g2(RootSystemType::parse("G2"));
   CHECK(chevalley_algebra(g2).L.dim() == 14);
}

TEST_CASE("json export") {
   RootSystem rs(RootSystemType::parse("G2"));
   const std::string j = root_system_json(rs);
   CHECK(j.find("\"rank\": 2") != std::string::npos);
   CHECK(j.find("maximal_root") != std::string::npos);
}
