#pragma once

// Sparse polynomial rings over the ground ring:
//
//   XPoly         R[x1, x2], the coefficient ring of certificates
//   SkeinPoly     R[x1, x2, y], keyed by y-degree on the outside so the
//                 quotient reduction can walk it degree by degree
//   TwoVarLaurent Z[u1^{+-1}, u2^{+-1}][q^{+-1}], the oracle ring for the
//                 substitution x_i = u_i + u_i^{-1}
//
// All values are immutable in practice: operations return fresh objects.

#include <json.hpp>

#include <climits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "skein/qlaurent.hpp"

namespace skein {

class XPoly {
 public:
  using Key = std::pair<int, int>;  // (e_x1, e_x2), both nonnegative
  using TermMap = std::map<Key, QLaurent>;

  XPoly() = default;
  explicit XPoly(const QLaurent& c) {
    if (!c.is_zero()) terms_[{0, 0}] = c;
  }
  XPoly(long long c) : XPoly(QLaurent(c)) {}  // NOLINT

  static XPoly monomial(const QLaurent& c, int ex1, int ex2) {
    if (ex1 < 0 || ex2 < 0)
      throw std::invalid_argument("XPoly: negative exponent");
    XPoly r;
    if (!c.is_zero()) r.terms_[{ex1, ex2}] = c;
    return r;
  }
  static XPoly x1() { return monomial(1, 1, 0); }
  static XPoly x2() { return monomial(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  QLaurent coeff(int ex1, int ex2) const {
    auto it = terms_.find({ex1, ex2});
    return it == terms_.end() ? QLaurent() : it->second;
  }

  void add_term(Key k, const QLaurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  XPoly& operator+=(const XPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  XPoly& operator-=(const XPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  XPoly operator-() const {
    XPoly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
  }
  friend XPoly operator*(const XPoly& a, const XPoly& b) {
    XPoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
  }
  friend XPoly operator*(const QLaurent& s, const XPoly& p) {
    XPoly r;
    for (const auto& [k, c] : p.terms_) r.add_term(k, s * c);
    return r;
  }

  friend bool operator==(const XPoly& a, const XPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

 private:
  TermMap terms_;
};

class TwoVarLaurent {
 public:
  using Key = std::pair<int, int>;  // (e_u1, e_u2), any integers
  using TermMap = std::map<Key, QLaurent>;

  TwoVarLaurent() = default;
  explicit TwoVarLaurent(const QLaurent& c) {
    if (!c.is_zero()) terms_[{0, 0}] = c;
  }

  static TwoVarLaurent monomial(const QLaurent& c, int eu1, int eu2) {
    TwoVarLaurent r;
    if (!c.is_zero()) r.terms_[{eu1, eu2}] = c;
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(Key k, const QLaurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TwoVarLaurent& operator+=(const TwoVarLaurent& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  TwoVarLaurent& operator-=(const TwoVarLaurent& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend TwoVarLaurent operator+(TwoVarLaurent a, const TwoVarLaurent& b) {
    return a += b;
  }
  friend TwoVarLaurent operator-(TwoVarLaurent a, const TwoVarLaurent& b) {
    return a -= b;
  }
  friend TwoVarLaurent operator*(const TwoVarLaurent& a,
                                 const TwoVarLaurent& b) {
    TwoVarLaurent r;
    for (const auto& [ka, ca] : a.terms())
      for (const auto& [kb, cb] : b.terms())
        r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
  }

  friend bool operator==(const TwoVarLaurent& a, const TwoVarLaurent& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const TwoVarLaurent& a, const TwoVarLaurent& b) {
    return !(a == b);
  }

 private:
  TermMap terms_;
};

// deg_y of the zero polynomial.
inline constexpr int kNoDegree = INT_MIN;

class SkeinPoly {
 public:
  using CoeffMap = std::map<int, XPoly>;  // y-degree -> nonzero XPoly

  SkeinPoly() = default;
  explicit SkeinPoly(const XPoly& c) {
    if (!c.is_zero()) coeffs_[0] = c;
  }
  explicit SkeinPoly(const QLaurent& c) : SkeinPoly(XPoly(c)) {}
  SkeinPoly(long long c) : SkeinPoly(XPoly(c)) {}  // NOLINT

  static SkeinPoly monomial(const XPoly& c, int ey) {
    if (ey < 0) throw std::invalid_argument("SkeinPoly: negative y-degree");
    SkeinPoly r;
    if (!c.is_zero()) r.coeffs_[ey] = c;
    return r;
  }
  static SkeinPoly x1() { return SkeinPoly(XPoly::x1()); }
  static SkeinPoly x2() { return SkeinPoly(XPoly::x2()); }
  static SkeinPoly y() { return monomial(XPoly(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  const CoeffMap& coeffs() const { return coeffs_; }

  int deg_y() const { return coeffs_.empty() ? kNoDegree : coeffs_.rbegin()->first; }

  XPoly coeff_y(int d) const {
    auto it = coeffs_.find(d);
    return it == coeffs_.end() ? XPoly() : it->second;
  }

  void add_term(int ey, const XPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(ey, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  SkeinPoly& operator+=(const SkeinPoly& o) {
    for (const auto& [d, c] : o.coeffs_) add_term(d, c);
    return *this;
  }
  SkeinPoly& operator-=(const SkeinPoly& o) {
    for (const auto& [d, c] : o.coeffs_) add_term(d, -c);
    return *this;
  }
  friend SkeinPoly operator+(SkeinPoly a, const SkeinPoly& b) { return a += b; }
  friend SkeinPoly operator-(SkeinPoly a, const SkeinPoly& b) { return a -= b; }
  SkeinPoly operator-() const {
    SkeinPoly r;
    for (const auto& [d, c] : coeffs_) r.coeffs_[d] = -c;
    return r;
  }
  friend SkeinPoly operator*(const SkeinPoly& a, const SkeinPoly& b) {
    SkeinPoly r;
    for (const auto& [da, ca] : a.coeffs_)
      for (const auto& [db, cb] : b.coeffs_) r.add_term(da + db, ca * cb);
    return r;
  }
  friend SkeinPoly operator*(const XPoly& s, const SkeinPoly& p) {
    SkeinPoly r;
    for (const auto& [d, c] : p.coeffs_) r.add_term(d, s * c);
    return r;
  }
  friend SkeinPoly operator*(const QLaurent& s, const SkeinPoly& p) {
    return XPoly(s) * p;
  }

  friend bool operator==(const SkeinPoly& a, const SkeinPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const SkeinPoly& a, const SkeinPoly& b) {
    return !(a == b);
  }

 private:
  CoeffMap coeffs_;
};

// Coefficient-wise reflection q -> q^{-1}; x1, x2, y are fixed.
inline XPoly tau(const XPoly& p) {
  XPoly r;
  for (const auto& [k, c] : p.terms()) r.add_term(k, bar(c));
  return r;
}

inline SkeinPoly tau(const SkeinPoly& p) {
  SkeinPoly r;
  for (const auto& [d, c] : p.coeffs()) r.add_term(d, tau(c));
  return r;
}

// Image of p under x1 -> u1 + u1^{-1}, x2 -> u2 + u2^{-1}.  Inputs of
// positive y-degree need an explicit y_image.
inline TwoVarLaurent substitute_u(
    const SkeinPoly& p,
    const std::optional<TwoVarLaurent>& y_image = std::nullopt) {
  if (p.deg_y() > 0 && !y_image)
    throw std::invalid_argument(
        "substitute_u: positive y-degree requires a y_image");
  // powers of u_i + u_i^{-1}, built on demand
  auto u_plus_inv = [](int which) {
    TwoVarLaurent v;
    v.add_term({which == 1 ? 1 : 0, which == 1 ? 0 : 1}, 1);
    v.add_term({which == 1 ? -1 : 0, which == 1 ? 0 : -1}, 1);
    return v;
  };
  TwoVarLaurent r;
  for (const auto& [d, xc] : p.coeffs()) {
    TwoVarLaurent ypow{QLaurent(1)};
    for (int i = 0; i < d; ++i) ypow = ypow * *y_image;
    for (const auto& [k, c] : xc.terms()) {
      TwoVarLaurent term{c};
      TwoVarLaurent v1 = u_plus_inv(1);
      TwoVarLaurent v2 = u_plus_inv(2);
      for (int i = 0; i < k.first; ++i) term = term * v1;
      for (int i = 0; i < k.second; ++i) term = term * v2;
      r += term * ypow;
    }
  }
  return r;
}

// --- JSON persistence -------------------------------------------------
//
// Schema: {"terms":[{"ey":int,"ex1":int,"ex2":int,
//                    "q":[[exp, "coeff"], ...]}, ...]}
// Terms are ordered descending ey, then ascending (ex1, ex2), then
// descending q-exponent; coefficients render as decimal strings.

inline nlohmann::json qlaurent_to_json(const QLaurent& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it)
    arr.push_back({it->first, it->second.str()});
  return arr;
}

inline QLaurent qlaurent_from_json(const nlohmann::json& j,
                                   const std::string& path) {
  if (!j.is_array())
    throw std::runtime_error("parse error at " + path + ": expected array");
  QLaurent c;
  for (size_t i = 0; i < j.size(); ++i) {
    const auto& t = j[i];
    std::string at = path + "[" + std::to_string(i) + "]";
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() ||
        !t[1].is_string())
      throw std::runtime_error("parse error at " + at +
                               ": expected [exp, \"coeff\"]");
    try {
      c.add_term(t[0].get<int>(), BigInt(t[1].get<std::string>()));
    } catch (const std::exception&) {
      throw std::runtime_error("parse error at " + at + ": bad integer");
    }
  }
  return c;
}

inline nlohmann::json xpoly_to_json(const XPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : p.terms())
    terms.push_back(
        {{"ex1", k.first}, {"ex2", k.second}, {"q", qlaurent_to_json(c)}});
  return {{"terms", terms}};
}

inline XPoly xpoly_from_json(const nlohmann::json& j,
                             const std::string& path = "$") {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw std::runtime_error("parse error at " + path +
                             ": expected {\"terms\": [...]}");
  XPoly p;
  const auto& terms = j["terms"];
  for (size_t i = 0; i < terms.size(); ++i) {
    std::string at = path + ".terms[" + std::to_string(i) + "]";
    const auto& t = terms[i];
    if (!t.is_object() || !t.contains("ex1") || !t.contains("ex2") ||
        !t.contains("q"))
      throw std::runtime_error("parse error at " + at +
                               ": expected ex1/ex2/q fields");
    int ex1 = t["ex1"].get<int>();
    int ex2 = t["ex2"].get<int>();
    if (ex1 < 0 || ex2 < 0)
      throw std::runtime_error("parse error at " + at +
                               ": negative x exponent");
    p.add_term({ex1, ex2}, qlaurent_from_json(t["q"], at + ".q"));
  }
  return p;
}

inline nlohmann::json to_json(const SkeinPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    for (const auto& [k, c] : it->second.terms())
      terms.push_back({{"ey", it->first},
                       {"ex1", k.first},
                       {"ex2", k.second},
                       {"q", qlaurent_to_json(c)}});
  return {{"terms", terms}};
}

inline std::string serialize(const SkeinPoly& p) { return to_json(p).dump(); }

inline SkeinPoly from_json(const nlohmann::json& j,
                           const std::string& path = "$") {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw std::runtime_error("parse error at " + path +
                             ": expected {\"terms\": [...]}");
  SkeinPoly p;
  const auto& terms = j["terms"];
  for (size_t i = 0; i < terms.size(); ++i) {
    std::string at = path + ".terms[" + std::to_string(i) + "]";
    const auto& t = terms[i];
    if (!t.is_object() || !t.contains("ey") || !t.contains("ex1") ||
        !t.contains("ex2") || !t.contains("q"))
      throw std::runtime_error("parse error at " + at +
                               ": expected ey/ex1/ex2/q fields");
    int ey = t["ey"].get<int>();
    int ex1 = t["ex1"].get<int>();
    int ex2 = t["ex2"].get<int>();
    if (ey < 0 || ex1 < 0 || ex2 < 0)
      throw std::runtime_error("parse error at " + at + ": negative exponent");
    p.add_term(ey, XPoly::monomial(qlaurent_from_json(t["q"], at + ".q"), ex1,
                                   ex2));
  }
  return p;
}

inline SkeinPoly deserialize(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("parse error at $: ") + e.what());
  }
  return from_json(j);
}

}  // namespace skein
