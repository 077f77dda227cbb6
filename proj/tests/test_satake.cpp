#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieii/satake.hpp"

#include <set>

using namespace lieii;

namespace {
std::set<int> whites_1based(const SatakeDiagram& sd) {
   std::set<int> w;
   for (int i = 0; i < sd.rst.rank; ++i)
      if (sd.is_white(i)) w.insert(i + 1);
   return w;
}
}  // namespace

TEST_CASE("parse and name round-trip") {
   for (const char* s : {"sl(4,R)", "sl(3,H)", "su(2,3)", "su(5)", "so(3,4)", "so(9)",
                         "so*(10)", "sp(6,R)", "sp(1,2)", "sp(3)", "e6,-14", "e6,2",
                         "e7,-25", "e8,-24", "f4,-20", "g2,2", "g2,-14"}) {
      CAPTURE(s);
      RealFormId id = RealFormId::parse(s);
      CHECK(id.name() == s);
      CHECK(RealFormId::parse(id.name()) == id);
   }
   CHECK(RealFormId::parse("u*(5,H)") == RealFormId::parse("so*(10)"));
   CHECK_THROWS(RealFormId::parse("e6,-15"));
   CHECK_THROWS(RealFormId::parse("sl(1,R)"));
   CHECK_THROWS(RealFormId::parse("so(5,4)"));     // p > q
   CHECK_THROWS(RealFormId::parse("so*(8)"));      // u*(n,H) needs n >= 5
   CHECK_THROWS(RealFormId::parse("sp(5,R)"));     // odd size
   CHECK_THROWS(RealFormId::parse("nonsense"));
}

TEST_CASE("catalog matches the published diagrams") {
   // split special linear: all white, no arrows
   auto sl5 = catalog(RealFormId::parse("sl(5,R)"));
   CHECK(sl5.rst == RootSystemType::parse("A4"));
   CHECK(whites_1based(sl5) == std::set<int>{1, 2, 3, 4});
   CHECK(sl5.arrows().empty());

   // sl(m,H): blacks at odd nodes
   auto sl3h = catalog(RealFormId::parse("sl(3,H)"));
   CHECK(sl3h.rst == RootSystemType::parse("A5"));
   CHECK(whites_1based(sl3h) == std::set<int>{2, 4});
   CHECK(sl3h.real_rank() == 2);

   // su(p,q), p<q: whites at both ends, arrows i <-> l+1-i
   auto su24 = catalog(RealFormId::parse("su(2,4)"));
   CHECK(su24.rst == RootSystemType::parse("A5"));
   CHECK(whites_1based(su24) == std::set<int>{1, 2, 4, 5});
   CHECK(su24.arrows() == std::vector<std::pair<int, int>>{{0, 4}, {1, 3}});
   CHECK(su24.real_rank() == 2);

   // su(p,p): all white, middle node unpaired
   auto su33 = catalog(RealFormId::parse("su(3,3)"));
   CHECK(whites_1based(su33) == std::set<int>{1, 2, 3, 4, 5});
   CHECK(su33.arrows() == std::vector<std::pair<int, int>>{{0, 4}, {1, 3}});
   CHECK(su33.real_rank() == 3);

   // so(p,q): first p nodes white
   auto so29 = catalog(RealFormId::parse("so(2,9)"));
   CHECK(so29.rst == RootSystemType::parse("B5"));
   CHECK(whites_1based(so29) == std::set<int>{1, 2});
   // D with p = l-1: all white plus fork arrow
   auto so57 = catalog(RealFormId::parse("so(5,7)"));
   CHECK(so57.rst == RootSystemType::parse("D6"));
   CHECK(whites_1based(so57) == std::set<int>{1, 2, 3, 4, 5, 6});
   CHECK(so57.arrows() == std::vector<std::pair<int, int>>{{4, 5}});
   CHECK(so57.real_rank() == 5);
   // D split
   CHECK(catalog(RealFormId::parse("so(6,6)")).arrows().empty());

   // u*(n,H): even nodes white; odd n pairs the fork
   auto u6 = catalog(RealFormId::parse("so*(12)"));
   CHECK(whites_1based(u6) == std::set<int>{2, 4, 6});
   CHECK(u6.arrows().empty());
   CHECK(u6.real_rank() == 3);
   auto u5 = catalog(RealFormId::parse("so*(10)"));
   CHECK(whites_1based(u5) == std::set<int>{2, 4, 5});
   CHECK(u5.arrows() == std::vector<std::pair<int, int>>{{3, 4}});
   CHECK(u5.real_rank() == 2);

   // sp(p,q): whites 2, 4, ..., 2p
   auto sp25 = catalog(RealFormId::parse("sp(2,5)"));
   CHECK(sp25.rst == RootSystemType::parse("C7"));
   CHECK(whites_1based(sp25) == std::set<int>{2, 4});
   CHECK(sp25.real_rank() == 2);

   // exceptional forms
   CHECK(whites_1based(catalog(RealFormId::parse("e6,2"))) ==
         std::set<int>{1, 2, 3, 4, 5, 6});
   CHECK(catalog(RealFormId::parse("e6,2")).arrows() ==
         std::vector<std::pair<int, int>>{{0, 5}, {2, 4}});
   CHECK(whites_1based(catalog(RealFormId::parse("e6,-14"))) == std::set<int>{1, 2, 6});
   CHECK(whites_1based(catalog(RealFormId::parse("e6,-26"))) == std::set<int>{1, 6});
   CHECK(catalog(RealFormId::parse("e6,-26")).arrows().empty());
   CHECK(whites_1based(catalog(RealFormId::parse("e7,5"))) == std::set<int>{1, 3, 4, 6});
   CHECK(whites_1based(catalog(RealFormId::parse("e7,-25"))) == std::set<int>{1, 6, 7});
   CHECK(whites_1based(catalog(RealFormId::parse("e8,-24"))) ==
         std::set<int>{1, 6, 7, 8});
   CHECK(whites_1based(catalog(RealFormId::parse("f4,-20"))) == std::set<int>{4});
   CHECK(whites_1based(catalog(RealFormId::parse("g2,-14"))).empty());
}

TEST_CASE("real ranks across the catalog") {
   auto rr = [](const char* s) { return catalog(RealFormId::parse(s)).real_rank(); };
   CHECK(rr("sl(9,R)") == 8);
   CHECK(rr("sl(4,H)") == 3);
   CHECK(rr("su(3,5)") == 3);
   CHECK(rr("so(4,9)") == 4);
   CHECK(rr("so(4,8)") == 4);
   CHECK(rr("so*(16)") == 4);
   CHECK(rr("so*(14)") == 3);
   CHECK(rr("sp(16,R)") == 8);
   CHECK(rr("sp(3,4)") == 3);
   CHECK(rr("e6,6") == 6);
   CHECK(rr("e6,2") == 4);
   CHECK(rr("e6,-14") == 2);
   CHECK(rr("e6,-26") == 2);
   CHECK(rr("e7,5") == 4);
   CHECK(rr("e7,-25") == 3);
   CHECK(rr("e8,-24") == 4);
   CHECK(rr("f4,-20") == 1);
   // compact forms
   for (const char* s : {"su(6)", "so(9)", "sp(4)", "e6,-78", "e7,-133", "e8,-248",
                         "f4,-52", "g2,-14"}) {
      CAPTURE(s);
      CHECK(RealFormId::parse(s).is_compact());
      CHECK(rr(s) == 0);
   }
}

TEST_CASE("catalog-wide structural invariants") {
   for (const RealFormId& id : all_real_forms(8)) {
      CAPTURE(id.name());
      SatakeDiagram sd = catalog(id);
      const int l = sd.rst.rank;
      REQUIRE(static_cast<int>(sd.black.size()) == l);
      for (int i = 0; i < l; ++i) {
         // involution, arrows join whites only
         CHECK(sd.mu[static_cast<size_t>(sd.mu[static_cast<size_t>(i)])] == i);
         if (sd.black[static_cast<size_t>(i)]) CHECK(sd.mu[static_cast<size_t>(i)] == i);
      }
      CHECK(sd.real_rank() >= 0);
      CHECK((id.is_compact() == (sd.real_rank() == 0)));
   }
}

TEST_CASE("restricted roots: split identity, multiplicity bookkeeping") {
   // split form: restriction is the identity, all multiplicities 1
   auto sd = catalog(RealFormId::parse("sl(5,R)"));
   RootSystem rs(sd.rst);
   auto rr = restricted_roots(sd, rs);
   CHECK(rr.reps.size() == 4);
   CHECK(rr.classes.size() == rs.roots().size());
   for (const auto& c : rr.classes) CHECK(c.multiplicity == 1);

   // total multiplicity = |Phi| - |Phi_0| across the whole catalog
   for (const RealFormId& id : all_real_forms(6)) {
      CAPTURE(id.name());
      SatakeDiagram d = catalog(id);
      RootSystem r(d.rst);
      auto rsys = restricted_roots(d, r);
      int total = 0;
      for (const auto& c : rsys.classes) total += c.multiplicity;
      int compact_roots = 0;  // roots supported entirely on black nodes
      for (const auto& root : r.roots()) {
         bool on_black = true;
         for (int i = 0; i < r.rank() && on_black; ++i)
            if (root(i) != 0 && d.is_white(i)) on_black = false;
         if (on_black) ++compact_roots;
      }
      CHECK(total == static_cast<int>(r.roots().size()) - compact_roots);
      // restriction map covers exactly the non-compact roots
      int mapped = 0;
      for (int v : rsys.restriction) mapped += (v >= 0);
      CHECK(mapped == total);
   }
}

TEST_CASE("restricted roots of e6,-26: A2 pattern with multiplicity 8") {
   auto sd = catalog(RealFormId::parse("e6,-26"));
   RootSystem rs(sd.rst);
   auto rr = restricted_roots(sd, rs);
   REQUIRE(rr.reps == std::vector<int>{0, 5});  // nodes 1 and 6
   CHECK(rr.classes.size() == 6);  // A2 has six roots
   for (const auto& c : rr.classes) CHECK(c.multiplicity == 8);
   Eigen::VectorXi a1(2);
   a1 << 1, 0;
   int k = rr.class_of(a1);
   REQUIRE(k >= 0);
   CHECK(rr.classes[static_cast<size_t>(k)].multiplicity == 8);
}

TEST_CASE("restricted roots of e6,-14: non-reduced BC2 pattern") {
   auto sd = catalog(RealFormId::parse("e6,-14"));
   RootSystem rs(sd.rst);
   auto rr = restricted_roots(sd, rs);
   REQUIRE(rr.reps.size() == 2);  // orbit {1,6} and node 2
   bool non_reduced = false;
   for (const auto& c : rr.classes)
      if (rr.class_of(Eigen::VectorXi(2 * c.coeffs)) >= 0) non_reduced = true;
   CHECK(non_reduced);
}

TEST_CASE("restriction is additive on root sums") {
   for (const char* s : {"su(2,4)", "so*(10)", "e6,-14", "e7,-25"}) {
      CAPTURE(s);
      auto sd = catalog(RealFormId::parse(s));
      RootSystem rs(sd.rst);
      auto rr = restricted_roots(sd, rs);
      const int n = static_cast<int>(rs.roots().size());
      for (int a = 0; a < n; ++a) {
         for (int b = a + 1; b < n; ++b) {
            Root sum = rs.roots()[static_cast<size_t>(a)] + rs.roots()[static_cast<size_t>(b)];
            int c = rs.index_of(sum);
            if (c < 0) continue;
            auto coeffs_of = [&](int idx) {
               if (rr.restriction[static_cast<size_t>(idx)] < 0)
                  return Eigen::VectorXi(Eigen::VectorXi::Zero(
                      static_cast<Eigen::Index>(rr.reps.size())));
               return rr.classes[static_cast<size_t>(rr.restriction[static_cast<size_t>(idx)])]
                   .coeffs;
            };
            CHECK(coeffs_of(a) + coeffs_of(b) == coeffs_of(c));
         }
      }
   }
}

TEST_CASE("json output carries colors, arrows and real rank") {
   auto sd = catalog(RealFormId::parse("e6,-14"));
   std::string j = satake_json(sd);
   CHECK(j.find("\"real_rank\": 2") != std::string::npos);
   CHECK(j.find("\"real_form\": \"e6,-14\"") != std::string::npos);
}
