#include "lieii/satake.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lieii {

namespace {

int exceptional_dim(const RootSystemType& t) {
   switch (t.family) {
      case Family::E: return t.rank == 6 ? 78 : (t.rank == 7 ? 133 : 248);
      case Family::F: return 52;
      case Family::G: return 14;
      default: throw std::logic_error("not an exceptional type");
   }
}

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

bool RealFormId::is_compact() const {
   switch (kind) {
      case Kind::su:
      case Kind::so:
      case Kind::sp_pq: return p == 0;
      case Kind::exceptional: return killing == -exceptional_dim(complex_type);
      default: return false;
   }
}

std::string RealFormId::name() const {
   std::ostringstream os;
   switch (kind) {
      case Kind::sl_r: os << "sl(" << n << ",R)"; break;
      case Kind::sl_h: os << "sl(" << n << ",H)"; break;
      case Kind::su:
         if (p == 0)
            os << "su(" << q << ")";
         else
            os << "su(" << p << "," << q << ")";
         break;
      case Kind::so:
         if (p == 0)
            os << "so(" << q << ")";
         else
            os << "so(" << p << "," << q << ")";
         break;
      case Kind::so_star: os << "so*(" << 2 * n << ")"; break;
      case Kind::sp_r: os << "sp(" << 2 * n << ",R)"; break;
      case Kind::sp_pq:
         if (p == 0)
            os << "sp(" << q << ")";
         else
            os << "sp(" << p << "," << q << ")";
         break;
      case Kind::exceptional: {
         char c = static_cast<char>(std::tolower(family_letter(complex_type.family)));
         os << c << complex_type.rank << "," << killing;
         break;
      }
   }
   return os.str();
}

RealFormId RealFormId::parse(const std::string& s) {
   RealFormId id;
   auto paren = s.find('(');
   if (paren != std::string::npos) {
      if (s.back() != ')') bad("malformed real form name: " + s);
      std::string head = s.substr(0, paren);
      std::string args = s.substr(paren + 1, s.size() - paren - 2);
      std::vector<std::string> parts;
      std::istringstream as(args);
      std::string tok;
      while (std::getline(as, tok, ',')) parts.push_back(tok);
      auto as_int = [&](const std::string& t) {
         size_t pos = 0;
         int v = std::stoi(t, &pos);
         if (pos != t.size()) bad("bad parameter '" + t + "' in " + s);
         return v;
      };
      if (head == "sl") {
         if (parts.size() != 2) bad("sl needs two arguments: " + s);
         if (parts[1] == "R") {
            id.kind = Kind::sl_r;
            id.n = as_int(parts[0]);
         } else if (parts[1] == "H") {
            id.kind = Kind::sl_h;
            id.n = as_int(parts[0]);
         } else {
            bad("sl base must be R or H: " + s);
         }
      } else if (head == "su" || head == "so") {
         id.kind = head == "su" ? Kind::su : Kind::so;
         if (parts.size() == 1) {
            id.p = 0;
            id.q = as_int(parts[0]);
         } else if (parts.size() == 2) {
            id.p = as_int(parts[0]);
            id.q = as_int(parts[1]);
         } else {
            bad(head + " needs one or two arguments: " + s);
         }
      } else if (head == "so*") {
         if (parts.size() != 1) bad("so* needs one argument: " + s);
         int m = as_int(parts[0]);
         if (m % 2 != 0) bad("so*(m) needs even m: " + s);
         id.kind = Kind::so_star;
         id.n = m / 2;
      } else if (head == "u*") {
         if (parts.size() != 2 || parts[1] != "H") bad("expected u*(n,H): " + s);
         id.kind = Kind::so_star;
         id.n = as_int(parts[0]);
      } else if (head == "sp") {
         if (parts.size() == 2 && parts[1] == "R") {
            int m = as_int(parts[0]);
            if (m % 2 != 0) bad("sp(m,R) needs even m: " + s);
            id.kind = Kind::sp_r;
            id.n = m / 2;
         } else if (parts.size() == 1) {
            id.kind = Kind::sp_pq;
            id.p = 0;
            id.q = as_int(parts[0]);
         } else if (parts.size() == 2) {
            id.kind = Kind::sp_pq;
            id.p = as_int(parts[0]);
            id.q = as_int(parts[1]);
         } else {
            bad("malformed sp form: " + s);
         }
      } else {
         bad("unknown real form family: " + s);
      }
   } else {
      // exceptional: letter, rank, comma, Killing signature
      auto comma = s.find(',');
      if (comma == std::string::npos || comma < 2) bad("unknown real form: " + s);
      std::string type = s.substr(0, comma);
      id.kind = Kind::exceptional;
      RootSystemType t = RootSystemType::parse(
          std::string(1, static_cast<char>(std::toupper(type[0]))) + type.substr(1));
      if (t.family != Family::E && t.family != Family::F && t.family != Family::G)
         bad("signature-named forms are exceptional only: " + s);
      id.complex_type = t;
      id.killing = std::stoi(s.substr(comma + 1));
   }
   catalog(id);  // validate; also fills complex_type below via copy in caller use
   return catalog(id).form;
}

int SatakeDiagram::num_white() const {
   int w = 0;
   for (bool b : black) w += b ? 0 : 1;
   return w;
}

std::vector<std::pair<int, int>> SatakeDiagram::arrows() const {
   std::vector<std::pair<int, int>> out;
   for (int i = 0; i < static_cast<int>(mu.size()); ++i)
      if (mu[static_cast<size_t>(i)] > i) out.emplace_back(i, mu[static_cast<size_t>(i)]);
   return out;
}

int SatakeDiagram::real_rank() const {
   return num_white() - static_cast<int>(arrows().size());
}

std::vector<std::vector<int>> SatakeDiagram::white_orbits() const {
   std::vector<std::vector<int>> out;
   for (int i = 0; i < static_cast<int>(mu.size()); ++i) {
      if (black[static_cast<size_t>(i)]) continue;
      int j = mu[static_cast<size_t>(i)];
      if (j < i) continue;  // already emitted with its smaller partner
      if (j == i)
         out.push_back({i});
      else
         out.push_back({i, j});
   }
   return out;
}

namespace {

SatakeDiagram make_diagram(RealFormId id, RootSystemType t,
                           const std::vector<int>& white_1based,
                           const std::vector<std::pair<int, int>>& arrows_1based) {
   id.complex_type = t;
   SatakeDiagram sd;
   sd.form = id;
   sd.rst = t;
   sd.black.assign(static_cast<size_t>(t.rank), true);
   sd.mu.resize(static_cast<size_t>(t.rank));
   for (int i = 0; i < t.rank; ++i) sd.mu[static_cast<size_t>(i)] = i;
   for (int w : white_1based) {
      if (w < 1 || w > t.rank) throw std::logic_error("white node out of range");
      sd.black[static_cast<size_t>(w - 1)] = false;
   }
   for (auto [a, b] : arrows_1based) {
      if (sd.black[static_cast<size_t>(a - 1)] || sd.black[static_cast<size_t>(b - 1)])
         throw std::logic_error("arrow on a black node");
      sd.mu[static_cast<size_t>(a - 1)] = b - 1;
      sd.mu[static_cast<size_t>(b - 1)] = a - 1;
   }
   return sd;
}

std::vector<int> range_1(int a, int b) {  // {a, a+1, ..., b}
   std::vector<int> v;
   for (int i = a; i <= b; ++i) v.push_back(i);
   return v;
}

}  // namespace

SatakeDiagram catalog(const RealFormId& id) {
   using Kind = RealFormId::Kind;
   switch (id.kind) {
      case Kind::sl_r: {
         if (id.n < 2) bad("sl(n,R) needs n >= 2");
         auto t = RootSystemType::make(Family::A, id.n - 1);
         return make_diagram(id, t, range_1(1, t.rank), {});
      }
      case Kind::sl_h: {
         if (id.n < 2) bad("sl(m,H) needs m >= 2");
         auto t = RootSystemType::make(Family::A, 2 * id.n - 1);
         std::vector<int> white;
         for (int i = 2; i <= t.rank; i += 2) white.push_back(i);
         return make_diagram(id, t, white, {});
      }
      case Kind::su: {
         if (id.p < 0 || id.p > id.q || id.p + id.q < 2) bad("su(p,q) needs 0 <= p <= q, p+q >= 2");
         const int l = id.p + id.q - 1;
         auto t = RootSystemType::make(Family::A, l);
         if (id.p == 0) return make_diagram(id, t, {}, {});  // compact
         std::vector<int> white;
         std::vector<std::pair<int, int>> arrows;
         if (id.p == id.q) {
            white = range_1(1, l);
            for (int i = 1; i <= id.p - 1; ++i) arrows.emplace_back(i, l + 1 - i);
         } else {
            for (int i = 1; i <= id.p; ++i) {
               white.push_back(i);
               white.push_back(l + 1 - i);
               arrows.emplace_back(i, l + 1 - i);
            }
         }
         return make_diagram(id, t, white, arrows);
      }
      case Kind::so: {
         if (id.p < 0 || id.p > id.q) bad("so(p,q) needs 0 <= p <= q");
         const int total = id.p + id.q;
         if (total % 2 == 1) {
            const int l = (total - 1) / 2;
            if (l < 2) bad("so(p,q) with p+q odd needs p+q >= 5");
            if (id.p > l) bad("so(p,q) needs p <= (p+q-1)/2");
            auto t = RootSystemType::make(Family::B, l);
            return make_diagram(id, t, range_1(1, id.p), {});
         }
         const int l = total / 2;
         if (l < 4) bad("so(p,q) with p+q even needs p+q >= 8");
         if (id.p > l) bad("so(p,q) needs p <= (p+q)/2");
         auto t = RootSystemType::make(Family::D, l);
         if (id.p == l - 1)
            return make_diagram(id, t, range_1(1, l), {{l - 1, l}});
         if (id.p == l) return make_diagram(id, t, range_1(1, l), {});
         return make_diagram(id, t, range_1(1, id.p), {});
      }
      case Kind::so_star: {
         if (id.n < 5) bad("u*(n,H) needs n >= 5");
         auto t = RootSystemType::make(Family::D, id.n);
         std::vector<int> white;
         for (int i = 2; i < id.n; i += 2) white.push_back(i);
         if (id.n % 2 == 0) {
            white.push_back(id.n);
            return make_diagram(id, t, white, {});
         }
         white.push_back(id.n);  // white = evens plus both fork nodes
         return make_diagram(id, t, white, {{id.n - 1, id.n}});
      }
      case Kind::sp_r: {
         if (id.n < 3) bad("sp(2n,R) needs n >= 3");
         auto t = RootSystemType::make(Family::C, id.n);
         return make_diagram(id, t, range_1(1, t.rank), {});
      }
      case Kind::sp_pq: {
         if (id.p < 0 || id.p > id.q || id.p + id.q < 3) bad("sp(p,q) needs 0 <= p <= q, p+q >= 3");
         auto t = RootSystemType::make(Family::C, id.p + id.q);
         std::vector<int> white;
         for (int i = 2; i <= 2 * id.p; i += 2) white.push_back(i);
         return make_diagram(id, t, white, {});
      }
      case Kind::exceptional: {
         const auto& t = id.complex_type;
         auto split = [&] { return make_diagram(id, t, range_1(1, t.rank), {}); };
         auto compact = [&] { return make_diagram(id, t, {}, {}); };
         if (t.family == Family::E && t.rank == 6) {
            switch (id.killing) {
               case 6: return split();
               case 2: return make_diagram(id, t, range_1(1, 6), {{1, 6}, {3, 5}});
               case -14: return make_diagram(id, t, {1, 2, 6}, {{1, 6}});
               case -26: return make_diagram(id, t, {1, 6}, {});
               case -78: return compact();
            }
         } else if (t.family == Family::E && t.rank == 7) {
            switch (id.killing) {
               case 7: return split();
               case 5: return make_diagram(id, t, {1, 3, 4, 6}, {});
               case -25: return make_diagram(id, t, {1, 6, 7}, {});
               case -133: return compact();
            }
         } else if (t.family == Family::E && t.rank == 8) {
            switch (id.killing) {
               case 8: return split();
               case -24: return make_diagram(id, t, {1, 6, 7, 8}, {});
               case -248: return compact();
            }
         } else if (t.family == Family::F) {
            switch (id.killing) {
               case 4: return split();
               case -20: return make_diagram(id, t, {4}, {});
               case -52: return compact();
            }
         } else if (t.family == Family::G) {
            switch (id.killing) {
               case 2: return split();
               case -14: return compact();
            }
         }
         bad("no real form of type " + t.name() + " with Killing signature " +
             std::to_string(id.killing));
      }
   }
   bad("unknown real form kind");
}

std::vector<RealFormId> all_real_forms(int max_rank) {
   std::vector<RealFormId> out;
   using Kind = RealFormId::Kind;
   auto add = [&](RealFormId id) { out.push_back(catalog(id).form); };
   for (int l = 1; l <= max_rank; ++l) {
      // A_l
      add({.kind = Kind::sl_r, .n = l + 1});
      if (l % 2 == 1 && l >= 3) add({.kind = Kind::sl_h, .n = (l + 1) / 2});
      for (int p = 0; 2 * p <= l + 1; ++p) add({.kind = Kind::su, .p = p, .q = l + 1 - p});
      // B_l
      if (l >= 2)
         for (int p = 0; p <= l; ++p) add({.kind = Kind::so, .p = p, .q = 2 * l + 1 - p});
      // C_l
      if (l >= 3) {
         add({.kind = Kind::sp_r, .n = l});
         for (int p = 0; 2 * p <= l; ++p) add({.kind = Kind::sp_pq, .p = p, .q = l - p});
      }
      // D_l
      if (l >= 4) {
         for (int p = 0; p <= l; ++p) add({.kind = Kind::so, .p = p, .q = 2 * l - p});
         if (l >= 5) add({.kind = Kind::so_star, .n = l});
      }
   }
   auto exc = [&](Family f, int rank, std::vector<int> sigs) {
      if (rank > max_rank) return;
      for (int s : sigs)
         add({.kind = Kind::exceptional,
              .complex_type = RootSystemType::make(f, rank),
              .killing = s});
   };
   exc(Family::G, 2, {2, -14});
   exc(Family::F, 4, {4, -20, -52});
   exc(Family::E, 6, {6, 2, -14, -26, -78});
   exc(Family::E, 7, {7, 5, -25, -133});
   exc(Family::E, 8, {8, -24, -248});
   return out;
}

int RestrictedRootSystem::class_of(const Eigen::VectorXi& coeffs) const {
   for (int i = 0; i < static_cast<int>(classes.size()); ++i)
      if (classes[static_cast<size_t>(i)].coeffs == coeffs) return i;
   return -1;
}

RestrictedRootSystem restricted_roots(const SatakeDiagram& sd, const RootSystem& rs) {
   if (rs.type() != sd.rst) bad("root system does not match the Satake diagram");
   const int l = rs.rank();
   RestrictedRootSystem out;
   std::vector<int> rep_of(static_cast<size_t>(l), -1);  // node -> position in reps
   for (int i = 0; i < l; ++i) {
      if (sd.black[static_cast<size_t>(i)]) continue;
      if (sd.mu[static_cast<size_t>(i)] < i) continue;
      rep_of[static_cast<size_t>(i)] = static_cast<int>(out.reps.size());
      out.reps.push_back(i);
   }
   for (int i = 0; i < l; ++i)
      if (!sd.black[static_cast<size_t>(i)] && sd.mu[static_cast<size_t>(i)] < i)
         rep_of[static_cast<size_t>(i)] = rep_of[static_cast<size_t>(sd.mu[static_cast<size_t>(i)])];
   const int r = static_cast<int>(out.reps.size());

   std::map<std::vector<int>, int> index;  // coefficient vector -> class id
   out.restriction.assign(rs.roots().size(), -1);
   for (size_t k = 0; k < rs.roots().size(); ++k) {
      const Root& root = rs.roots()[k];
      std::vector<int> key(static_cast<size_t>(r), 0);
      for (int i = 0; i < l; ++i)
         if (rep_of[static_cast<size_t>(i)] >= 0)
            key[static_cast<size_t>(rep_of[static_cast<size_t>(i)])] += root(i);
      bool zero = std::all_of(key.begin(), key.end(), [](int v) { return v == 0; });
      if (zero) continue;
      auto it = index.find(key);
      if (it == index.end()) {
         Eigen::VectorXi c(r);
         for (int j = 0; j < r; ++j) c(j) = key[static_cast<size_t>(j)];
         it = index.emplace(key, static_cast<int>(out.classes.size())).first;
         out.classes.push_back({c, 0});
      }
      out.classes[static_cast<size_t>(it->second)].multiplicity += 1;
      out.restriction[k] = it->second;
   }
   return out;
}

std::string satake_json(const SatakeDiagram& sd) {
   nlohmann::json j;
   j["real_form"] = sd.form.name();
   j["type"] = sd.rst.name();
   std::vector<int> white, black;
   for (int i = 0; i < sd.rst.rank; ++i)
      (sd.is_white(i) ? white : black).push_back(i + 1);
   j["white"] = white;
   j["black"] = black;
   auto arr = nlohmann::json::array();
   for (auto [a, b] : sd.arrows()) arr.push_back({a + 1, b + 1});
   j["arrows"] = arr;
   j["real_rank"] = sd.real_rank();
   return j.dump(2);
}

}  // namespace lieii
