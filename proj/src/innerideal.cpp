#include "lieii/innerideal.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lieii {

std::vector<int> phi_I(const RootSystem& rs, const IndexSet& I) {
   if (I.empty()) throw std::invalid_argument("phi_I requires a non-empty index set");
   const Root& m = rs.maximal_root();
   for (int j : I)
      if (j < 0 || j >= rs.rank()) throw std::invalid_argument("node index out of range");
   std::vector<int> out;
   for (size_t k = 0; k < rs.roots().size(); ++k) {
      const Root& r = rs.roots()[k];
      bool ok = true;
      for (int j : I)
         if (r(j) != m(j)) {
            ok = false;
            break;
         }
      if (ok) out.push_back(static_cast<int>(k));
   }
   return out;
}

bool is_adapted(const SatakeDiagram& sd, const IndexSet& I) {
   if (I.empty()) return false;
   for (int i : I) {
      if (!sd.is_white(i)) return false;
      int j = sd.mu[static_cast<size_t>(i)];
      if (j != i && !std::binary_search(I.begin(), I.end(), j)) return false;
   }
   return true;
}

std::pair<IndexSet, IndexSet> min_max_representatives(const RootSystem& rs,
                                                      const IndexSet& I) {
   const std::vector<int> phi = phi_I(rs, I);
   const Root& m = rs.maximal_root();
   // max_rep: nodes whose coefficient is maximal on every root of Phi_I
   IndexSet max_rep;
   for (int j = 0; j < rs.rank(); ++j) {
      bool ok = true;
      for (int k : phi)
         if (rs.roots()[static_cast<size_t>(k)](j) != m(j)) {
            ok = false;
            break;
         }
      if (ok) max_rep.push_back(j);
   }
   // greedy removal, smallest index first, then verify minimality
   IndexSet min_rep = max_rep;
   bool changed = true;
   while (changed) {
      changed = false;
      for (size_t pos = 0; pos < min_rep.size(); ++pos) {
         if (min_rep.size() == 1) break;
         IndexSet trial = min_rep;
         trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
         if (phi_I(rs, trial) == phi) {
            min_rep = trial;
            changed = true;
            break;
         }
      }
   }
   for (size_t pos = 0; pos < min_rep.size() && min_rep.size() > 1; ++pos) {
      IndexSet trial = min_rep;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
      if (phi_I(rs, trial) == phi)
         throw std::logic_error("greedy minimal representative is not minimal");
   }
   return {min_rep, max_rep};
}

std::vector<std::vector<int>> satake_preserving_automorphisms(const SatakeDiagram& sd,
                                                              const RootSystem& rs) {
   std::vector<std::vector<int>> out;
   for (const auto& sigma : diagram_automorphisms(rs)) {
      bool ok = true;
      for (int i = 0; i < rs.rank() && ok; ++i) {
         int si = sigma[static_cast<size_t>(i)];
         if (sd.black[static_cast<size_t>(i)] != sd.black[static_cast<size_t>(si)]) ok = false;
         // commutes with the arrow involution
         if (ok && sigma[static_cast<size_t>(sd.mu[static_cast<size_t>(i)])] !=
                       sd.mu[static_cast<size_t>(si)])
            ok = false;
      }
      if (ok) out.push_back(sigma);
   }
   return out;
}

namespace {

/// Image of a root-index set under a simple-root permutation.
std::vector<int> map_phi(const RootSystem& rs, const std::vector<int>& phi,
                         const std::vector<int>& sigma) {
   std::vector<int> out;
   out.reserve(phi.size());
   for (int k : phi) {
      const Root& r = rs.roots()[static_cast<size_t>(k)];
      Root img(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) img(sigma[static_cast<size_t>(i)]) = r(i);
      int idx = rs.index_of(img);
      if (idx < 0) throw std::logic_error("diagram automorphism does not permute roots");
      out.push_back(idx);
   }
   std::sort(out.begin(), out.end());
   return out;
}

}  // namespace

std::vector<InnerIdealClass> enumerate_classes(const SatakeDiagram& sd,
                                               const RootSystem& rs, bool merge) {
   if (rs.type() != sd.rst)
      throw std::invalid_argument("root system does not match the Satake diagram");
   const auto orbits = sd.white_orbits();
   if (orbits.empty()) return {};  // compact form

   // raw classes: distinct Phi_I over nonempty unions of white arrow-orbits
   std::map<std::vector<int>, IndexSet> raw;  // phi -> first generating index set
   const size_t n_orbits = orbits.size();
   for (size_t mask = 1; mask < (size_t{1} << n_orbits); ++mask) {
      IndexSet I;
      for (size_t o = 0; o < n_orbits; ++o)
         if (mask & (size_t{1} << o)) I.insert(I.end(), orbits[o].begin(), orbits[o].end());
      std::sort(I.begin(), I.end());
      auto phi = phi_I(rs, I);
      raw.try_emplace(std::move(phi), I);
   }

   struct RawClass {
      std::vector<int> phi;
      IndexSet min_rep, max_rep;
   };
   std::vector<RawClass> raws;
   for (const auto& [phi, I] : raw) {
      auto [mn, mx] = min_max_representatives(rs, I);
      raws.push_back({phi, mn, mx});
   }

   // merge under Satake-preserving diagram automorphisms
   std::vector<int> group(raws.size());
   for (size_t i = 0; i < raws.size(); ++i) group[i] = static_cast<int>(i);
   if (merge) {
      std::map<std::vector<int>, int> phi_index;
      for (size_t i = 0; i < raws.size(); ++i) phi_index[raws[i].phi] = static_cast<int>(i);
      auto find = [&](int x) {
         while (group[static_cast<size_t>(x)] != x) x = group[static_cast<size_t>(x)];
         return x;
      };
      for (const auto& sigma : satake_preserving_automorphisms(sd, rs)) {
         for (size_t i = 0; i < raws.size(); ++i) {
            auto img = map_phi(rs, raws[i].phi, sigma);
            auto it = phi_index.find(img);
            if (it == phi_index.end())
               throw std::logic_error("automorphism image of an adapted class is not a class");
            int a = find(static_cast<int>(i)), b = find(it->second);
            if (a != b) group[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
         }
      }
      for (size_t i = 0; i < raws.size(); ++i) {
         int x = static_cast<int>(i);
         while (group[static_cast<size_t>(x)] != x) x = group[static_cast<size_t>(x)];
         group[i] = x;
      }
   }

   std::map<int, std::vector<int>> members;  // group root -> raw indices
   for (size_t i = 0; i < raws.size(); ++i) members[group[i]].push_back(static_cast<int>(i));

   std::vector<InnerIdealClass> out;
   for (auto& [root, idxs] : members) {
      // representative: lexicographically smallest min_rep among members
      std::sort(idxs.begin(), idxs.end(), [&](int a, int b) {
         return raws[static_cast<size_t>(a)].min_rep < raws[static_cast<size_t>(b)].min_rep;
      });
      const RawClass& rep = raws[static_cast<size_t>(idxs[0])];
      InnerIdealClass c;
      c.real_form = sd.form;
      c.phi = rep.phi;
      c.dim = static_cast<int>(rep.phi.size());
      c.min_rep = rep.min_rep;
      c.max_rep = rep.max_rep;
      for (int i : idxs) {
         c.conjugates.push_back(raws[static_cast<size_t>(i)].min_rep);
         c.conjugate_phis.push_back(raws[static_cast<size_t>(i)].phi);
      }
      out.push_back(std::move(c));
   }
   std::sort(out.begin(), out.end(), [](const InnerIdealClass& a, const InnerIdealClass& b) {
      return std::tie(a.dim, a.min_rep) < std::tie(b.dim, b.min_rep);
   });
   return out;
}

int dim_via_restricted(const SatakeDiagram& sd, const RootSystem& rs, const IndexSet& I) {
   if (!is_adapted(sd, I))
      throw std::invalid_argument("index set is not adapted to the Satake diagram");
   const RestrictedRootSystem rr = restricted_roots(sd, rs);
   // position of each node's arrow-class representative among the reps
   auto rep_pos = [&](int node) {
      int rep = std::min(node, sd.mu[static_cast<size_t>(node)]);
      auto it = std::find(rr.reps.begin(), rr.reps.end(), rep);
      return static_cast<int>(it - rr.reps.begin());
   };
   // maximal coefficients = restriction of the maximal root
   int max_cls = rr.restriction[static_cast<size_t>(rs.maximal_root_index())];
   if (max_cls < 0) throw std::logic_error("maximal root restricts to zero");
   const Eigen::VectorXi& M = rr.classes[static_cast<size_t>(max_cls)].coeffs;
   int total = 0;
   for (const auto& cls : rr.classes) {
      bool ok = true;
      for (int i : I)
         if (cls.coeffs(rep_pos(i)) != M(rep_pos(i))) {
            ok = false;
            break;
         }
      if (ok) total += cls.multiplicity;
   }
   return total;
}

Lattice hasse(std::vector<InnerIdealClass> classes) {
   Lattice lat;
   lat.nodes = std::move(classes);
   const int n = static_cast<int>(lat.nodes.size());
   // contained(a, b): some conjugate Phi of a is a subset of some conjugate Phi of b
   auto contained = [&](int a, int b) {
      for (const auto& pa : lat.nodes[static_cast<size_t>(a)].conjugate_phis)
         for (const auto& pb : lat.nodes[static_cast<size_t>(b)].conjugate_phis)
            if (std::includes(pb.begin(), pb.end(), pa.begin(), pa.end())) return true;
      return false;
   };
   std::vector<std::vector<bool>> lt(static_cast<size_t>(n),
                                     std::vector<bool>(static_cast<size_t>(n), false));
   for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
         if (a != b && lat.nodes[static_cast<size_t>(a)].dim < lat.nodes[static_cast<size_t>(b)].dim &&
             contained(a, b))
            lt[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
   for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
         if (!lt[static_cast<size_t>(a)][static_cast<size_t>(b)]) continue;
         bool covering = true;
         for (int c = 0; c < n && covering; ++c)
            if (c != a && c != b && lt[static_cast<size_t>(a)][static_cast<size_t>(c)] &&
                lt[static_cast<size_t>(c)][static_cast<size_t>(b)])
               covering = false;
         if (covering) lat.edges.emplace_back(a, b);
      }
   return lat;
}

namespace {
std::string rep_label(const IndexSet& I) {
   std::ostringstream os;
   os << "{";
   for (size_t i = 0; i < I.size(); ++i) os << (i ? "," : "") << I[i] + 1;
   os << "}";
   return os.str();
}
}  // namespace

std::string lattice_dot(const Lattice& lat) {
   std::ostringstream os;
   os << "digraph inner_ideals {\n  rankdir=BT;\n";
   for (size_t i = 0; i < lat.nodes.size(); ++i)
      os << "  n" << i << " [label=\"" << rep_label(lat.nodes[i].min_rep) << " / "
         << lat.nodes[i].dim << "\"];\n";
   for (auto [a, b] : lat.edges) os << "  n" << a << " -> n" << b << ";\n";
   os << "}\n";
   return os.str();
}

std::string lattice_json(const Lattice& lat) {
   nlohmann::json j;
   auto nodes = nlohmann::json::array();
   for (const auto& c : lat.nodes) {
      nlohmann::json n;
      n["dim"] = c.dim;
      std::vector<int> mn, mx;
      for (int v : c.min_rep) mn.push_back(v + 1);
      for (int v : c.max_rep) mx.push_back(v + 1);
      n["min_rep"] = mn;
      n["max_rep"] = mx;
      auto conj = nlohmann::json::array();
      for (const auto& s : c.conjugates) {
         std::vector<int> t;
         for (int v : s) t.push_back(v + 1);
         conj.push_back(t);
      }
      n["conjugates"] = conj;
      nodes.push_back(n);
   }
   j["real_form"] = lat.nodes.empty() ? "" : lat.nodes.front().real_form.name();
   j["classes"] = nodes;
   auto edges = nlohmann::json::array();
   for (auto [a, b] : lat.edges) edges.push_back({a, b});
   j["edges"] = edges;
   return j.dump(2);
}

}  // namespace lieii
