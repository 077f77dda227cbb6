#include <CLI11.hpp>
#include <json.hpp>

#include "lieii/innerideal.hpp"
#include "lieii/rootsys.hpp"
#include "lieii/satake.hpp"
#include "lieii/structurable.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace lieii;

namespace {

/// Accepts the comma spellings "su,1,5", "sp,3,R", "g2,compact" alongside the
/// canonical "su(1,5)", "sp(6,R)", "g2,-14".
std::string normalize_form(const std::string& s) {
   auto comma = s.find(',');
   if (comma == std::string::npos) return s;
   std::string head = s.substr(0, comma);
   std::string rest = s.substr(comma + 1);
   if (rest == "compact") {
      static const std::map<std::string, std::string> compact = {
          {"g2", "g2,-14"}, {"f4", "f4,-52"}, {"e6", "e6,-78"},
          {"e7", "e7,-133"}, {"e8", "e8,-248"}};
      auto it = compact.find(head);
      if (it != compact.end()) return it->second;
      return head + "(" + rest + ")";
   }
   if (head == "sl" || head == "su" || head == "so" || head == "sp" || head == "so*" ||
       head == "u*")
      return head + "(" + rest + ")";
   return s;  // e.g. "e6,-14"
}

std::string set_to_string(const IndexSet& s) {
   std::ostringstream os;
   os << "{";
   for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i] + 1;
   os << "}";
   return os.str();
}

int chain_length(const Lattice& lat) {
   std::vector<int> depth(lat.nodes.size(), 1);
   for (auto [a, b] : lat.edges)  // nodes are dim-sorted, so edges go forward
      depth[static_cast<size_t>(b)] =
          std::max(depth[static_cast<size_t>(b)], depth[static_cast<size_t>(a)] + 1);
   int best = 0;
   for (int d : depth) best = std::max(best, d);
   return best;
}

std::string file_slug(const std::string& name) {
   std::string out;
   for (char c : name) {
      if (std::isalnum(static_cast<unsigned char>(c)))
         out.push_back(c);
      else if (c == '*')
         out += "star";
      else if (c == '-')
         out.push_back('m');
      else if (!out.empty() && out.back() != '_')
         out.push_back('_');
   }
   while (!out.empty() && out.back() == '_') out.pop_back();
   return out;
}

nlohmann::json atlas_entry(const RealFormId& form, const RootSystem& rs) {
   SatakeDiagram sd = catalog(form);
   Lattice lat = hasse(enumerate_classes(sd, rs));
   nlohmann::json j = nlohmann::json::parse(lattice_json(lat));
   j["real_form"] = form.name();
   j["complex_type"] = form.complex_type.name();
   j["real_rank"] = sd.real_rank();
   return j;
}

/// Isotropic subspace of the requested dimension from the diagonal Albert
/// gram (pairs a +1 direction with a -1 direction).
RatMat isotropic_rows(const QuadraticForm& q, int dim) {
   std::vector<int> plus, minus;
   for (Eigen::Index i = 0; i < q.dim(); ++i) {
      for (Eigen::Index j = 0; j < q.dim(); ++j)
         if (i != j && !is_zero(q.gram(i, j)))
            throw std::runtime_error("Albert gram is not diagonal");
      if (sgn(q.gram(i, i)) > 0)
         plus.push_back(static_cast<int>(i));
      else if (sgn(q.gram(i, i)) < 0)
         minus.push_back(static_cast<int>(i));
   }
   if (dim > static_cast<int>(std::min(plus.size(), minus.size())))
      throw std::runtime_error("requested dimension exceeds the Witt index");
   RatMat rows = RatMat::Zero(dim, q.dim());
   for (int r = 0; r < dim; ++r) {
      rows(r, plus[static_cast<size_t>(r)]) = 1;
      // scale to cancel the (possibly unequal) diagonal magnitudes
      Rat scale2 = -q.gram(plus[static_cast<size_t>(r)], plus[static_cast<size_t>(r)]) /
                   q.gram(minus[static_cast<size_t>(r)], minus[static_cast<size_t>(r)]);
      // scale2 is a square of a rational only when magnitudes match; our
      // grams are +-1 so scale2 == 1 always
      if (scale2 != 1) throw std::runtime_error("Albert gram is not +-1 diagonal");
      rows(r, minus[static_cast<size_t>(r)]) = 1;
   }
   return rows;
}

int verify_kantor_inner_ideals(const KantorAlgebra& k, unsigned seed) {
   QuadraticForm q = albert_form(k.algebra);
   int witt = static_cast<int>(witt_index(q));
   std::cout << "witt index: " << witt << "\n";
   for (int d = 1; d <= witt; ++d) {
      Subspace b = isotropic_inner_ideal(k, isotropic_rows(q, d));
      bool ok = is_inner_ideal(k.L, b) && is_abelian(k.L, b);
      std::cout << "isotropic ideal dim " << d << ": " << (ok ? "inner ideal" : "FAIL")
                << "\n";
      if (!ok) return 1;
   }
   // a random anisotropic line must be rejected
   std::mt19937 gen(seed == 0 ? 7u : seed);
   std::uniform_int_distribution<int> coeff(-3, 3);
   for (int tries = 0; tries < 100; ++tries) {
      RatMat line = RatMat::Zero(1, q.dim());
      for (Eigen::Index i = 0; i < q.dim(); ++i) line(0, i) = coeff(gen);
      if (is_zero(q.eval(line.row(0).transpose()))) continue;
      try {
         isotropic_inner_ideal(k, line);
         std::cout << "anisotropic line: accepted (FAIL)\n";
         return 1;
      } catch (const std::invalid_argument&) {
         std::cout << "anisotropic line: rejected\n";
         return 0;
      }
   }
   std::cout << "anisotropic line: none sampled (FAIL)\n";
   return 1;
}

}  // namespace

int main(int argc, char** argv) {
   CLI::App app{"exact classification and verification of abelian inner ideals of real "
                "simple Lie algebras"};
   app.require_subcommand(1);
   bool as_json = false;
   std::string dot_file;
   unsigned seed = 0;
   app.add_flag("--json", as_json, "machine-readable output");
   app.add_option("--dot", dot_file, "write DOT output to a file");
   app.add_option("--seed", seed, "seed for randomized non-example searches");

   auto* cmd_roots = app.add_subcommand("roots", "root system data");
   std::string roots_type;
   cmd_roots->add_option("type", roots_type, "e.g. E6, B4")->required();

   auto* cmd_satake = app.add_subcommand("satake", "Satake diagram of a real form");
   std::string satake_form;
   cmd_satake->add_option("form", satake_form, "e.g. su(2,3), e6,-14")->required();

   auto* cmd_ideals = app.add_subcommand("inner-ideals", "abelian inner ideal classes");
   std::string ideals_form, lattice_mode, reps_mode = "min";
   bool dims_only = false;
   cmd_ideals->add_option("form", ideals_form)->required();
   cmd_ideals->add_option("--lattice", lattice_mode)->check(CLI::IsMember({"dot", "json"}));
   cmd_ideals->add_flag("--dims", dims_only, "print the dimension list only");
   cmd_ideals->add_option("--reps", reps_mode)->check(CLI::IsMember({"min", "max"}));

   auto* cmd_kantor = app.add_subcommand("kantor", "Kantor construction from C1 (x) C2");
   std::string kc1, kc2;
   bool k_verify = false, k_sig = false, k_ident = false, k_ideals = false;
   cmd_kantor->add_option("C1", kc1)->required();
   cmd_kantor->add_option("C2", kc2)->required();
   cmd_kantor->add_flag("--verify", k_verify, "exhaustive Jacobi check");
   cmd_kantor->add_flag("--signature", k_sig, "Killing signature");
   cmd_kantor->add_flag("--identify", k_ident, "name the real form");
   cmd_kantor->add_flag("--inner-ideals", k_ideals, "verify isotropic inner ideals");

   auto* cmd_jordan = app.add_subcommand("jordan", "Jordan algebra constructions");
   std::string jordan_kind, jordan_coeff;
   bool j_demo = false;
   cmd_jordan->add_option("kind", jordan_kind)->required()->check(CLI::IsMember({"h3"}));
   cmd_jordan->add_option("C", jordan_coeff)->required();
   cmd_jordan->add_flag("--inner-ideal-demo", j_demo);

   auto* cmd_verify = app.add_subcommand("verify", "construction-and-check pipelines");
   std::vector<std::string> verify_args;
   bool v_jacobi = false, v_sig = false, v_ident = false, v_ideals = false, v_point = false;
   int v_node = 0;
   cmd_verify->add_option("spec", verify_args, "kantor <C1> <C2> | chevalley <type>")
       ->required()
       ->expected(-1);
   cmd_verify->add_flag("--jacobi", v_jacobi);
   cmd_verify->add_flag("--signature", v_sig);
   cmd_verify->add_flag("--identify", v_ident);
   cmd_verify->add_flag("--inner-ideals", v_ideals);
   cmd_verify->add_flag("--point-space", v_point);
   cmd_verify->add_option("--grading-node", v_node, "1-based diagram node");

   auto* cmd_atlas = app.add_subcommand("atlas", "emit the golden dataset");
   std::string atlas_out = "goldens";
   bool atlas_all = true;
   cmd_atlas->add_option("--out", atlas_out, "output directory");
   cmd_atlas->add_flag("--all", atlas_all, "every cataloged form (default)");

   CLI11_PARSE(app, argc, argv);

   try {
      if (*cmd_roots) {
         RootSystem rs(RootSystemType::parse(roots_type));
         if (as_json) {
            std::cout << root_system_json(rs) << "\n";
         } else {
            std::cout << rs.type().name() << ": rank " << rs.rank() << ", "
                      << rs.roots().size() << " roots, " << rs.num_positive() << " positive\n";
            std::cout << "maximal root: " << rs.maximal_root().transpose() << "\n";
         }
         return 0;
      }

      if (*cmd_satake) {
         SatakeDiagram sd = catalog(RealFormId::parse(normalize_form(satake_form)));
         if (as_json) {
            std::cout << satake_json(sd) << "\n";
            return 0;
         }
         std::cout << sd.form.name() << " (complex type " << sd.rst.name() << ")\n";
         std::cout << "white:";
         for (int i = 0; i < sd.rst.rank; ++i)
            if (sd.is_white(i)) std::cout << " " << i + 1;
         std::cout << "\nblack:";
         for (int i = 0; i < sd.rst.rank; ++i)
            if (!sd.is_white(i)) std::cout << " " << i + 1;
         std::cout << "\narrows:";
         for (auto [i, j] : sd.arrows()) std::cout << " (" << i + 1 << "," << j + 1 << ")";
         std::cout << "\nreal rank: " << sd.real_rank() << "\n";
         return 0;
      }

      if (*cmd_ideals) {
         RealFormId form = RealFormId::parse(normalize_form(ideals_form));
         SatakeDiagram sd = catalog(form);
         RootSystem rs(sd.rst);
         Lattice lat = hasse(enumerate_classes(sd, rs));
         if (!dot_file.empty() || lattice_mode == "dot") {
            std::string dot = lattice_dot(lat);
            if (dot_file.empty()) {
               std::cout << dot;
            } else {
               std::ofstream(dot_file) << dot;
            }
            return 0;
         }
         if (as_json || lattice_mode == "json") {
            std::cout << lattice_json(lat) << "\n";
            return 0;
         }
         std::cout << form.name() << ": " << lat.nodes.size() << " abelian inner ideal "
                   << (lat.nodes.size() == 1 ? "class" : "classes") << "\n";
         if (dims_only) {
            std::cout << "dims:";
            for (const auto& c : lat.nodes) std::cout << " " << c.dim;
            std::cout << "\n";
            return 0;
         }
         for (const auto& c : lat.nodes) {
            std::cout << "  dim " << c.dim << "  I_" << reps_mode << " = "
                      << set_to_string(reps_mode == "max" ? c.max_rep : c.min_rep);
            if (c.conjugates.size() > 1) {
               std::cout << "  (merges";
               for (const auto& s : c.conjugates) std::cout << " " << set_to_string(s);
               std::cout << ")";
            }
            std::cout << "\n";
         }
         std::cout << "chain length: " << chain_length(lat) << "\n";
         return 0;
      }

      if (*cmd_kantor || (*cmd_verify && !verify_args.empty() && verify_args[0] == "kantor")) {
         std::string c1name = kc1, c2name = kc2;
         bool jacobi = k_verify, sig = k_sig, ident = k_ident, ideals = k_ideals;
         if (*cmd_verify) {
            if (verify_args.size() != 3)
               throw std::invalid_argument("usage: verify kantor <C1> <C2>");
            c1name = verify_args[1];
            c2name = verify_args[2];
            jacobi = v_jacobi;
            sig = v_sig;
            ident = v_ident;
            ideals = v_ideals;
         }
         auto a = tensor_structurable(composition_algebra(c1name), composition_algebra(c2name));
         KantorAlgebra k = kantor(a, jacobi);
         if (jacobi) std::cout << "jacobi: ok\n";
         std::cout << "K(" << a.name << "): dim " << k.L.dim() << " = " << k.dim_s << " + "
                   << k.dim_a << " + " << k.dim_instr << " + " << k.dim_a << " + " << k.dim_s
                   << "\n";
         if (sig) {
            Signature s = killing_signature(k.L);
            std::cout << "killing signature: " << s.excess() << "  (+" << s.n_plus << ", -"
                      << s.n_minus << ")\n";
         }
         if (ident) std::cout << "real form: " << identify_real_form(k.L).name() << "\n";
         int rc = 0;
         if (ideals) rc = verify_kantor_inner_ideals(k, seed);
         if (as_json) {
            nlohmann::json j;
            j["algebra"] = a.name;
            j["dim"] = k.L.dim();
            j["blocks"] = {k.dim_s, k.dim_a, k.dim_instr, k.dim_a, k.dim_s};
            auto sc = nlohmann::json::array();
            for (int i = 0; i < k.L.dim(); ++i)
               for (int jj = i + 1; jj < k.L.dim(); ++jj)
                  for (const auto& [idx, c] : k.L.bracket_basis(i, jj))
                     sc.push_back({{"i", i}, {"j", jj}, {"k", idx}, {"c", to_string(c)}});
            j["structure_constants"] = sc;
            std::cout << j.dump() << "\n";
         }
         return rc;
      }

      if (*cmd_jordan) {
         auto c = composition_algebra(jordan_coeff);
         auto j = jordan_h3(c);
         KantorAlgebra k = kantor(j, false);
         std::cout << j.name << ": dim " << j.dim << ", K(" << j.name << ") dim " << k.L.dim()
                   << "\n";
         if (!j_demo) return 0;
         // span{E11} is always an inner ideal
         RatMat e11 = RatMat::Zero(1, j.dim);
         e11(0, 0) = 1;
         bool ok = is_jordan_inner_ideal(j, Subspace::from_rows(e11));
         std::cout << "span{E11}: " << (ok ? "inner ideal" : "FAIL") << "\n";
         if (!ok) return 1;
         if (jordan_coeff == "Os") {
            // 6-dimensional ideal built from the isotropic idempotent
            // e = (1 + u)/2 with u^2 = 1: E11, the slot (1,2) copy of e*Os,
            // and the slot (1,3) line through e
            RatVec e = RatVec::Zero(8);
            e(0) = Rat(1, 2);
            e(4) = Rat(1, 2);
            RatMat le(8, 8);
            for (int z = 0; z < 8; ++z) {
               RatVec ez = RatVec::Zero(8);
               ez(z) = 1;
               le.col(z) = c.multiply(e, ez);
            }
            RatMat img = le.transpose();  // rows span e*Os
            Subspace eo = Subspace::from_rows(img);
            RatMat rows = RatMat::Zero(2 + eo.dim(), j.dim);
            rows(0, 0) = 1;
            for (Eigen::Index r = 0; r < eo.dim(); ++r)
               for (int z = 0; z < 8; ++z) rows(1 + r, 3 + z) = eo.basis()(r, z);
            for (int z = 0; z < 8; ++z) rows(1 + eo.dim(), 11 + z) = e(z);
            Subspace b = Subspace::from_rows(rows);
            bool six = b.dim() == 6 && is_jordan_inner_ideal(j, b) &&
                       is_inner_ideal(k.L, jordan_subspace_in_k1(k, b));
            std::cout << "six-dimensional ideal (dim " << b.dim()
                      << "): " << (six ? "inner ideal" : "FAIL") << "\n";
            if (!six) return 1;
         }
         return 0;
      }

      if (*cmd_verify) {
         if (verify_args.empty()) throw std::invalid_argument("empty verify spec");
         if (verify_args[0] == "chevalley") {
            if (verify_args.size() != 2)
               throw std::invalid_argument("usage: verify chevalley <type>");
            RootSystem rs(RootSystemType::parse(verify_args[1]));
            ChevalleyAlgebra ch = chevalley_algebra(rs);
            int rc = 0;
            if (v_jacobi) {
               auto fail = verify_jacobi(ch.L);
               std::cout << "jacobi: " << (fail ? "FAIL" : "ok") << "\n";
               if (fail) rc = 1;
            }
            if (v_node > 0) {
               auto layers = grading_by_node(rs, v_node - 1);
               int top = layers.rbegin()->first;
               const auto& corner = layers.rbegin()->second;
               std::cout << "top corner (degree " << top << "): dim " << corner.size() << "\n";
               if (v_point) {
                  RatMat rows = RatMat::Zero(static_cast<Eigen::Index>(corner.size()),
                                             ch.L.dim());
                  for (size_t r = 0; r < corner.size(); ++r)
                     rows(static_cast<Eigen::Index>(r),
                          ch.root_basis_index(corner[r])) = 1;
                  bool ps = is_point_space(ch.L, Subspace::from_rows(rows));
                  std::cout << "point-space: " << (ps ? "true" : "false") << "\n";
                  if (!ps) rc = 1;
               }
            }
            return rc;
         }
         throw std::invalid_argument("unknown verify spec: " + verify_args[0]);
      }

      if (*cmd_atlas) {
         std::filesystem::create_directories(atlas_out);
         std::map<std::string, RootSystem> cache;
         int count = 0;
         for (const auto& form : all_real_forms(8)) {
            auto [it, fresh] = cache.try_emplace(form.complex_type.name(), form.complex_type);
            (void)fresh;
            nlohmann::json j = atlas_entry(form, it->second);
            std::ofstream out(std::filesystem::path(atlas_out) /
                              (file_slug(form.name()) + ".json"));
            out << j.dump(2) << "\n";
            ++count;
         }
         std::cout << "wrote " << count << " atlas entries to " << atlas_out << "\n";
         return 0;
      }
   } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
   }
   return 0;
}
