#include "lieii/rootsys.hpp"

#include <json.hpp>

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lieii {

char family_letter(Family f) {
   switch (f) {
      case Family::A: return 'A';
      case Family::B: return 'B';
      case Family::C: return 'C';
      case Family::D: return 'D';
      case Family::E: return 'E';
      case Family::F: return 'F';
      case Family::G: return 'G';
   }
   return '?';
}

Family family_from_letter(char c) {
   switch (c) {
      case 'A': case 'a': return Family::A;
      case 'B': case 'b': return Family::B;
      case 'C': case 'c': return Family::C;
      case 'D': case 'd': return Family::D;
      case 'E': case 'e': return Family::E;
      case 'F': case 'f': return Family::F;
      case 'G': case 'g': return Family::G;
   }
   throw std::invalid_argument(std::string("unknown root system family '") + c + "'");
}

RootSystemType RootSystemType::make(Family f, int rank) {
   auto bad = [&](const std::string& constraint) {
      throw std::invalid_argument("illegal root system " + std::string(1, family_letter(f)) +
                                  std::to_string(rank) + ": requires " + constraint);
   };
   switch (f) {
      case Family::A:
         if (rank < 1) bad("rank >= 1");
         break;
      case Family::B:
         if (rank < 2) bad("rank >= 2");
         break;
      case Family::C:
         if (rank < 3) bad("rank >= 3");
         break;
      case Family::D:
         if (rank < 4) bad("rank >= 4");
         break;
      case Family::E:
         if (rank < 6 || rank > 8) bad("rank in {6,7,8}");
         break;
      case Family::F:
         if (rank != 4) bad("rank = 4");
         break;
      case Family::G:
         if (rank != 2) bad("rank = 2");
         break;
   }
   return RootSystemType{f, rank};
}

RootSystemType RootSystemType::parse(const std::string& s) {
   if (s.size() < 2) throw std::invalid_argument("cannot parse root system type '" + s + "'");
   const Family f = family_from_letter(s[0]);
   const int rank = std::stoi(s.substr(1));
   return make(f, rank);
}

std::string RootSystemType::name() const {
   return std::string(1, family_letter(family)) + std::to_string(rank);
}

namespace {

// Symmetric inner products (alpha_i, alpha_j) and the derived Cartan matrix
// a_{ij} = 2(alpha_i,alpha_j)/(alpha_j,alpha_j) for the labelling in the
// header comment.
void build_cartan(const RootSystemType& t, Eigen::MatrixXi& cartan, std::vector<Rat>& norm,
                  RatMat& gram) {
   const int l = t.rank;
   std::vector<std::pair<int, int>> edges;  // simple-laced part, filled per family
   norm.assign(static_cast<size_t>(l), Rat(2));
   gram = RatMat::Zero(l, l);

   auto chain = [&](int from, int to) {
      for (int i = from; i < to; ++i) edges.emplace_back(i, i + 1);
   };
   switch (t.family) {
      case Family::A:
         chain(0, l - 1);
         break;
      case Family::B:
         chain(0, l - 1);
         norm[static_cast<size_t>(l - 1)] = 1;  // last node short
         break;
      case Family::C:
         chain(0, l - 1);
         norm[static_cast<size_t>(l - 1)] = 4;  // last node long
         break;
      case Family::D:
         chain(0, l - 3);
         edges.emplace_back(l - 3, l - 2);
         edges.emplace_back(l - 3, l - 1);
         break;
      case Family::E:
         // chain 1-3-4-...-l plus node 2 on node 4
         edges.emplace_back(0, 2);
         chain(2, l - 1);
         edges.emplace_back(1, 3);
         break;
      case Family::F:
         chain(0, 3);
         norm[0] = 4;
         norm[1] = 4;
         break;
      case Family::G:
         edges.emplace_back(0, 1);
         norm[0] = 6;
         break;
   }
   for (int i = 0; i < l; ++i) gram(i, i) = norm[static_cast<size_t>(i)];
   for (auto [i, j] : edges) {
      // Adjacent simple roots: (alpha_i, alpha_j) = -max(|alpha_i|^2,|alpha_j|^2)/2
      const Rat v = -std::max(norm[static_cast<size_t>(i)], norm[static_cast<size_t>(j)]) / 2;
      gram(i, j) = v;
      gram(j, i) = v;
   }
   cartan = Eigen::MatrixXi::Zero(l, l);
   for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
         const Rat a = 2 * gram(i, j) / gram(j, j);
         assert(a.get_den() == 1);
         cartan(i, j) = static_cast<int>(a.get_num().get_si());
      }
}

bool lex_less(const Root& a, const Root& b) {
   return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                       b.data() + b.size());
}

}  // namespace

std::string RootSystem::key(const Root& r) {
   std::string s;
   for (Eigen::Index i = 0; i < r.size(); ++i) {
      s += std::to_string(r(i));
      s += ',';
   }
   return s;
}

RootSystem::RootSystem(RootSystemType t) : type_(t) {
   RootSystemType::make(t.family, t.rank);  // validate
   RatMat gram;
   build_cartan(t, cartan_, norm_, gram);
   gram_ = gram;
   generate();
}

Rat RootSystem::inner(const Root& a, const Root& b) const {
   Rat s = 0;
   for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j)
         if (a(i) != 0 && b(j) != 0) s += Rat(a(i)) * Rat(b(j)) * gram_(i, j);
   return s;
}

Rat RootSystem::norm_sq(const Root& r) const { return inner(r, r); }

int RootSystem::pairing(const Root& a, int i) const {
   int s = 0;
   for (int j = 0; j < rank(); ++j) s += a(j) * cartan_(j, i);
   return s;
}

bool RootSystem::is_root(const Root& r) const { return index_.count(key(r)) > 0; }

int RootSystem::index_of(const Root& r) const {
   const auto it = index_.find(key(r));
   return it == index_.end() ? -1 : it->second;
}

int RootSystem::negative_of(int idx) const {
   return idx < num_positive_ ? idx + num_positive_ : idx - num_positive_;
}

int RootSystem::height(int idx) const {
   const Root& r = roots_[static_cast<size_t>(idx)];
   int h = 0;
   for (int i = 0; i < rank(); ++i) h += r(i);
   return h;
}

void RootSystem::generate() {
   const int l = rank();
   std::vector<Root> positives;
   std::vector<Root> layer;
   std::set<std::string> seen;
   for (int i = 0; i < l; ++i) {
      Root r = Root::Zero(l);
      r(i) = 1;
      layer.push_back(r);
      seen.insert(key(r));
   }
   std::sort(layer.begin(), layer.end(), lex_less);
   while (!layer.empty()) {
      for (const auto& r : layer) positives.push_back(r);
      std::vector<Root> next;
      for (const auto& alpha : layer) {
         for (int i = 0; i < l; ++i) {
            // alpha + alpha_i is a root iff the alpha_i-string through alpha
            // extends upward: q = p - <alpha, alpha_i^vee> > 0, where p is
            // the largest k with alpha - k*alpha_i a root.
            int p = 0;
            Root down = alpha;
            while (true) {
               down(i) -= 1;
               bool neg_simple = false;
               // alpha - k*alpha_i may be a negative root only when alpha is
               // alpha_i itself; coefficients of mixed sign are not roots.
               bool mixed = false;
               bool any_pos = false, any_neg = false;
               for (int j = 0; j < l; ++j) {
                  if (down(j) > 0) any_pos = true;
                  if (down(j) < 0) any_neg = true;
               }
               mixed = any_pos && any_neg;
               (void)neg_simple;
               if (mixed) break;
               if (!any_pos && !any_neg) {
                  // down == 0; the string passes through zero only for
                  // alpha = k*alpha_i which cannot happen for roots (alpha
                  // proportional to alpha_i only when equal). Treat as end.
                  break;
               }
               if (any_neg ? seen.count(key(Root(-down))) == 0 : seen.count(key(down)) == 0) break;
               ++p;
            }
            if (p - pairing(alpha, i) > 0) {
               Root up = alpha;
               up(i) += 1;
               const std::string k = key(up);
               if (!seen.count(k)) {
                  seen.insert(k);
                  next.push_back(up);
               }
            }
         }
      }
      std::sort(next.begin(), next.end(), lex_less);
      layer = std::move(next);
   }
   // positives are grouped by construction in height layers already
   std::stable_sort(positives.begin(), positives.end(), [&](const Root& a, const Root& b) {
      int ha = a.sum(), hb = b.sum();
      if (ha != hb) return ha < hb;
      return lex_less(a, b);
   });
   num_positive_ = static_cast<int>(positives.size());
   roots_ = positives;
   for (const auto& r : positives) roots_.push_back(Root(-r));
   index_.clear();
   for (size_t i = 0; i < roots_.size(); ++i) index_[key(roots_[i])] = static_cast<int>(i);

   // maximal root: unique coefficientwise-dominant positive root
   max_root_ = num_positive_ - 1;
   const Root& m = roots_[static_cast<size_t>(max_root_)];
   for (int i = 0; i < num_positive_; ++i) {
      for (int j = 0; j < l; ++j)
         if (roots_[static_cast<size_t>(i)](j) > m(j))
            throw std::logic_error("root generation: maximal root fails dominance");
   }
}

RootSystem build_root_system(RootSystemType t) { return RootSystem(t); }

namespace {

void perm_search(const Eigen::MatrixXi& c, std::vector<int>& perm, std::vector<char>& used,
                 size_t pos, std::vector<std::vector<int>>& out) {
   const int l = static_cast<int>(perm.size());
   if (pos == perm.size()) {
      out.push_back(perm);
      return;
   }
   for (int cand = 0; cand < l; ++cand) {
      if (used[static_cast<size_t>(cand)]) continue;
      if (c(static_cast<int>(pos), static_cast<int>(pos)) != c(cand, cand)) continue;
      bool ok = true;
      for (size_t p = 0; p < pos && ok; ++p) {
         if (c(static_cast<int>(pos), static_cast<int>(p)) != c(cand, perm[p])) ok = false;
         if (c(static_cast<int>(p), static_cast<int>(pos)) != c(perm[p], cand)) ok = false;
      }
      if (!ok) continue;
      perm[pos] = cand;
      used[static_cast<size_t>(cand)] = 1;
      perm_search(c, perm, used, pos + 1, out);
      used[static_cast<size_t>(cand)] = 0;
   }
}

}  // namespace

std::vector<std::vector<int>> diagram_automorphisms(const RootSystem& rs) {
   std::vector<std::vector<int>> out;
   std::vector<int> perm(static_cast<size_t>(rs.rank()), -1);
   std::vector<char> used(static_cast<size_t>(rs.rank()), 0);
   perm_search(rs.cartan_matrix(), perm, used, 0, out);
   return out;
}

std::map<int, std::vector<int>> grading_by_node(const RootSystem& rs, int k) {
   if (k < 0 || k >= rs.rank()) throw std::invalid_argument("grading_by_node: bad node index");
   std::map<int, std::vector<int>> out;
   for (size_t i = 0; i < rs.roots().size(); ++i)
      out[rs.roots()[i](k)].push_back(static_cast<int>(i));
   return out;
}

// ---------------------------------------------------------------------------
// Chevalley basis via the extraspecial-pair method.
//
// Positive roots carry the total order of rs.roots() (height, then lex).
// For each non-simple positive gamma, the special pairs are the (alpha,beta)
// with alpha+beta = gamma, alpha < beta; the extraspecial pair is the one
// with minimal alpha. Its constant is fixed to +(p+1) (p = string length
// below beta through alpha); the rest follow from the Jacobi identity on
// (e_xi, e_eta, e_{-alpha}) with (xi,eta) extraspecial, and signs on
// negative/mixed pairs follow from
//    N(-a,-b) = -N(a,b)
//    N(a,b)/(c,c) = N(b,c)/(a,a) = N(c,a)/(b,b)   for a+b+c = 0
// (both standard consequences of [e_a, e_{-a}] = h_a). The exhaustive Jacobi
// check below certifies global consistency of the choices.
// ---------------------------------------------------------------------------

namespace {

class ChevalleyBuilder {
public:
   explicit ChevalleyBuilder(const RootSystem& rs) : rs_(rs) {}

   FiniteLieAlgebra build() {
      compute_positive_pairs();
      return assemble();
   }

private:
   const RootSystem& rs_;
   std::map<std::pair<int, int>, Rat> npos_;  // keyed by positive indices i<j (order)

   // string length: largest k with beta - k*alpha a root
   int string_down(const Root& alpha, const Root& beta) const {
      int p = 0;
      Root r = beta - alpha;
      while (rs_.is_root(r)) {
         ++p;
         r -= alpha;
      }
      return p;
   }

   bool positive_idx(int idx) const { return idx < rs_.num_positive(); }

   // N for arbitrary root indices; zero when the sum is not a root.
   Rat n_general(int ia, int ib) const {
      const Root a = rs_.roots()[static_cast<size_t>(ia)];
      const Root b = rs_.roots()[static_cast<size_t>(ib)];
      const Root c = a + b;
      if (c.isZero() || !rs_.is_root(c)) return 0;
      const bool pa = positive_idx(ia), pb = positive_idx(ib);
      if (pa && pb) {
         if (ia < ib) return npos_.at({ia, ib});
         return -npos_.at({ib, ia});
      }
      if (!pa && !pb) return -n_general(rs_.negative_of(ia), rs_.negative_of(ib));
      if (!pa && pb) return -n_general(ib, ia);
      // a > 0, b < 0
      const int ic = rs_.index_of(c);
      if (positive_idx(ic)) {
         // N(a,b) = (c,c)/(a,a) * N(b,-c) = -(c,c)/(a,a) * N(-b,c)
         return -(rs_.norm_sq(c) / rs_.norm_sq(a)) * n_general(rs_.negative_of(ib), ic);
      }
      // c < 0: N(a,b) = -N(-a,-b), which lands in the previous case.
      return -n_general(rs_.negative_of(ia), rs_.negative_of(ib));
   }

   void compute_positive_pairs() {
      const int P = rs_.num_positive();
      for (int g = 0; g < P; ++g) {
         const Root gamma = rs_.roots()[static_cast<size_t>(g)];
         if (rs_.height(g) < 2) continue;
         // special pairs in increasing order of the first component
         std::vector<std::pair<int, int>> pairs;
         for (int ia = 0; ia < g; ++ia) {
            const Root alpha = rs_.roots()[static_cast<size_t>(ia)];
            const Root beta = gamma - alpha;
            bool nonneg = true;
            for (int j = 0; j < rs_.rank(); ++j)
               if (beta(j) < 0) nonneg = false;
            if (!nonneg || !rs_.is_root(beta)) continue;
            const int ib = rs_.index_of(beta);
            if (ia < ib) pairs.emplace_back(ia, ib);
         }
         if (pairs.empty()) throw std::logic_error("chevalley: no special pair for a root");
         const auto [xi, eta] = pairs.front();  // extraspecial: minimal alpha
         {
            const Root a = rs_.roots()[static_cast<size_t>(xi)];
            const Root b = rs_.roots()[static_cast<size_t>(eta)];
            npos_[{xi, eta}] = Rat(string_down(a, b) + 1);
         }
         for (size_t t = 1; t < pairs.size(); ++t) {
            const auto [ia, ib] = pairs[t];
            const Root alpha = rs_.roots()[static_cast<size_t>(ia)];
            const Root beta = rs_.roots()[static_cast<size_t>(ib)];
            const Root a_xi = rs_.roots()[static_cast<size_t>(xi)];
            const Root a_eta = rs_.roots()[static_cast<size_t>(eta)];
            const int ineg_a = rs_.negative_of(ia);
            Rat acc = 0;
            // Jacobi on (e_xi, e_eta, e_{-alpha}):
            //   N(xi,eta)N(gamma,-alpha) + N(eta,-alpha)N(eta-alpha,xi)
            //                            + N(-alpha,xi)N(xi-alpha,eta) = 0
            if (rs_.is_root(a_eta - alpha)) {
               const int k = rs_.index_of(a_eta - alpha);
               acc += n_general(eta, ineg_a) * n_general(k, xi);
            }
            if (rs_.is_root(a_xi - alpha)) {
               const int k = rs_.index_of(a_xi - alpha);
               acc += n_general(ineg_a, xi) * n_general(k, eta);
            }
            const Rat n = (rs_.norm_sq(gamma) / (rs_.norm_sq(beta) * npos_.at({xi, eta}))) * acc;
            // structure constants must be +-(p+1)
            const int p = string_down(alpha, beta);
            if (n != Rat(p + 1) && n != Rat(-(p + 1)))
               throw std::logic_error("chevalley: sign assignment inconsistency at a special pair");
            npos_[{ia, ib}] = n;
         }
      }
   }

   FiniteLieAlgebra assemble() {
      const int l = rs_.rank();
      const int P = rs_.num_positive();
      const int n = l + 2 * P;
      std::vector<std::string> labels;
      for (int i = 0; i < l; ++i) labels.push_back("h" + std::to_string(i + 1));
      for (int r = 0; r < 2 * P; ++r) {
         std::ostringstream os;
         os << "x(";
         const Root& rt = rs_.roots()[static_cast<size_t>(r)];
         for (int j = 0; j < l; ++j) os << (j ? "," : "") << rt(j);
         os << ")";
         labels.push_back(os.str());
      }
      FiniteLieAlgebra L(n, labels);

      // [h_i, e_alpha]
      for (int i = 0; i < l; ++i)
         for (int r = 0; r < 2 * P; ++r) {
            const int v = rs_.pairing(rs_.roots()[static_cast<size_t>(r)], i);
            if (v != 0) L.set_bracket(i, l + r, SVec{{l + r, Rat(v)}});
         }

      // [e_alpha, e_beta]
      for (int r1 = 0; r1 < 2 * P; ++r1) {
         for (int r2 = r1 + 1; r2 < 2 * P; ++r2) {
            if (rs_.negative_of(r1) == r2) {
               // [e_alpha, e_{-alpha}] = h_alpha (the coroot), with
               // h_alpha = sum_i p_i (alpha_i,alpha_i)/(alpha,alpha) h_i.
               const Root& alpha = rs_.roots()[static_cast<size_t>(r1)];
               const Rat nn = rs_.norm_sq(alpha);
               SVec h;
               for (int i = 0; i < l; ++i) {
                  if (alpha(i) == 0) continue;
                  Root simple = Root::Zero(l);
                  simple(i) = 1;
                  const Rat c = Rat(alpha(i)) * rs_.norm_sq(simple) / nn;
                  if (c.get_den() != 1)
                     throw std::logic_error("chevalley: non-integral coroot coefficient");
                  h.emplace_back(i, c);
               }
               L.set_bracket(l + r1, l + r2, std::move(h));
               continue;
            }
            const Rat c = n_general(r1, r2);
            if (!is_zero(c)) {
               const Root sum = rs_.roots()[static_cast<size_t>(r1)] + rs_.roots()[static_cast<size_t>(r2)];
               if (c.get_den() != 1)
                  throw std::logic_error("chevalley: non-integral structure constant");
               L.set_bracket(l + r1, l + r2, SVec{{l + rs_.index_of(sum), c}});
            }
         }
      }

      std::vector<int> deg(static_cast<size_t>(n), 0);
      for (int r = 0; r < 2 * P; ++r) deg[static_cast<size_t>(l + r)] = rs_.height(l_to_root(r));
      L.set_grading(deg);

      if (const auto fail = verify_jacobi(L))
         throw std::logic_error("chevalley: " + fail->message);
      return L;
   }

   int l_to_root(int r) const { return r; }
};

}  // namespace

ChevalleyAlgebra chevalley_algebra(const RootSystem& rs) {
   ChevalleyBuilder b(rs);
   return ChevalleyAlgebra{b.build(), &rs};
}

std::string root_system_json(const RootSystem& rs) {
   nlohmann::json j;
   j["type"] = std::string(1, family_letter(rs.type().family));
   j["rank"] = rs.type().rank;
   auto vec = [](const Root& r) {
      std::vector<int> v(r.data(), r.data() + r.size());
      return v;
   };
   for (const auto& r : rs.roots()) j["roots"].push_back(vec(r));
   j["maximal_root"] = vec(rs.maximal_root());
   for (int i = 0; i < rs.rank(); ++i) {
      std::vector<int> row;
      for (int k = 0; k < rs.rank(); ++k) row.push_back(rs.cartan_matrix()(i, k));
      j["cartan"].push_back(row);
   }
   return j.dump(2);
}

}  // namespace lieii
