#pragma once

// Aut(X): the maps (x, y) -> (g x + a, y / g + b) and (x, y) -> (g y + a, x / g + b)
// with g in F_q^*, a, b in F_q. There are 2 q^2 (q - 1) of them.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "asmgal/curve.hpp"
#include "asmgal/error.hpp"
#include "asmgal/field.hpp"
#include "asmgal/projective.hpp"

namespace asmgal {

struct AutElement {
  Fe gamma, a, b;
  bool swap = false;

  static AutElement identity(const CurveParams& cp) { return {cp.one(), cp.zero(), cp.zero(), false}; }
  static AutElement translation(const CurveParams& cp, Fe a, Fe b) { return {cp.one(), a, b, false}; }
  static AutElement scaling(const CurveParams& cp, Fe g) { return {g, cp.zero(), cp.zero(), false}; }
  static AutElement swap_xy(const CurveParams& cp) { return {cp.one(), cp.zero(), cp.zero(), true}; }

  auto key() const { return std::tuple(swap, gamma.code(), a.code(), b.code()); }
  friend bool operator==(const AutElement& s, const AutElement& t) { return s.key() == t.key(); }
  friend bool operator<(const AutElement& s, const AutElement& t) { return s.key() < t.key(); }
};

/// s o t (t acts first).
inline AutElement compose(const AutElement& s, const AutElement& t) {
  if (s.swap) return {s.gamma / t.gamma, s.gamma * t.b + s.a, s.gamma.inv() * t.a + s.b, !t.swap};
  return {s.gamma * t.gamma, s.gamma * t.a + s.a, s.gamma.inv() * t.b + s.b, t.swap};
}

inline AutElement inverse(const AutElement& s) {
  const Fe gi = s.gamma.inv();
  if (s.swap) return {s.gamma, -(s.gamma * s.b), -(gi * s.a), true};
  return {gi, -(gi * s.a), -(s.gamma * s.b), false};
}

inline CurvePoint act_on_point(const AutElement& s, const CurvePoint& P) {
  const Fe gi = s.gamma.inv();
  switch (P.kind) {
    case CurvePoint::Kind::Affine:
      if (s.swap) return CurvePoint::affine(s.gamma * P.y + s.a, gi * P.x + s.b);
      return CurvePoint::affine(s.gamma * P.x + s.a, gi * P.y + s.b);
    case CurvePoint::Kind::P:
      if (s.swap) return CurvePoint::pole_of_y(s.gamma * P.alpha() + s.a);
      return CurvePoint::pole_of_x(gi * P.alpha() + s.b);
    case CurvePoint::Kind::Q:
      if (s.swap) return CurvePoint::pole_of_x(gi * P.alpha() + s.b);
      return CurvePoint::pole_of_y(s.gamma * P.alpha() + s.a);
  }
  throw Error(ErrorCode::InvalidArgument, "bad point kind");
}

using Mat4 = std::array<Vec4, 4>;

inline Vec4 apply(const Mat4& m, const Vec4& v) {
  Vec4 out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = detail::dot(m[i], v);
  return out;
}

inline Mat4 multiply(const Mat4& a, const Mat4& b) {
  Mat4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Fe acc = a[i][0] * b[0][j];
      for (std::size_t k = 1; k < 4; ++k) acc += a[i][k] * b[k][j];
      out[i][j] = acc;
    }
  return out;
}

/// Projective class: first nonzero entry (row-major) scaled to 1.
inline Mat4 normalize_projective(Mat4 m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_zero()) {
        const Fe s = x.inv();
        for (auto& r : m)
          for (auto& y : r) y = y * s;
        return m;
      }
  throw Error(ErrorCode::InvalidArgument, "zero matrix");
}

/// Matrix M with embed(s(P)) = M * embed(P).
inline Mat4 to_matrix(const CurveParams& cp, const AutElement& s) {
  const Fe z = cp.zero(), o = cp.one(), gi = s.gamma.inv();
  const Fe ab = s.a * s.b;
  Mat4 m;
  if (!s.swap) {
    m[0] = {s.gamma, z, s.a, z};
    m[1] = {z, gi, s.b, z};
    m[2] = {z, z, o, z};
    m[3] = {s.gamma * s.b, gi * s.a, ab, o};
  } else {
    m[0] = {z, s.gamma, s.a, z};
    m[1] = {gi, z, s.b, z};
    m[2] = {z, z, o, z};
    m[3] = {gi * s.a, s.gamma * s.b, ab, o};
  }
  return normalize_projective(m);
}

/// A set of automorphisms closed under composition.
class Subgroup {
 public:
  /// Verifies closure; throws NotClosed otherwise.
  Subgroup(std::vector<AutElement> elements, std::vector<AutElement> generators)
      : elems_(std::move(elements)), gens_(std::move(generators)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (elems_.empty()) throw Error(ErrorCode::NotClosed, "empty element set");
    for (const auto& s : elems_) {
      if (!contains(inverse(s))) throw Error(ErrorCode::NotClosed, "missing inverse");
      for (const auto& t : elems_)
        if (!contains(compose(s, t))) throw Error(ErrorCode::NotClosed, "not closed under composition");
    }
  }

  /// Closure of the generators.
  static Subgroup generated_by(const CurveParams& cp, std::vector<AutElement> gens) {
    std::set<AutElement> seen{AutElement::identity(cp)};
    std::vector<AutElement> frontier{AutElement::identity(cp)};
    while (!frontier.empty()) {
      std::vector<AutElement> next;
      for (const auto& s : frontier)
        for (const auto& g : gens) {
          auto t = compose(g, s);
          if (seen.insert(t).second) next.push_back(t);
        }
      frontier = std::move(next);
    }
    return Subgroup(std::vector<AutElement>(seen.begin(), seen.end()), std::move(gens));
  }

  std::size_t order() const noexcept { return elems_.size(); }
  const std::vector<AutElement>& elements() const noexcept { return elems_; }
  const std::vector<AutElement>& generators() const noexcept { return gens_; }
  bool contains(const AutElement& s) const { return std::binary_search(elems_.begin(), elems_.end(), s); }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elems_ == b.elems_; }

 private:
  std::vector<AutElement> elems_;
  std::vector<AutElement> gens_;
};

/// F_q basis over F_p, in the ambient field.
inline std::vector<Fe> fq_basis(const CurveParams& cp) {
  std::vector<Fe> out;
  std::uint32_t code = 1;
  for (std::uint32_t i = 0; i < cp.e(); ++i, code *= cp.p()) out.push_back(cp.from_base(code));
  return out;
}

/// A generator of the cyclic group F_q^*.
inline Fe fq_primitive(const CurveParams& cp) { return cp.from_base(Fe(cp.base(), cp.base().primitive())); }

inline Subgroup enumerate_aut(const CurveParams& cp) {
  std::vector<AutElement> all;
  all.reserve(2 * cp.q() * cp.q() * (cp.q() - 1));
  for (bool sw : {false, true})
    for (Fe g : cp.fq()) {
      if (g.is_zero()) continue;
      for (Fe a : cp.fq())
        for (Fe b : cp.fq()) all.push_back({g, a, b, sw});
    }
  std::vector<AutElement> gens{AutElement::scaling(cp, fq_primitive(cp)), AutElement::swap_xy(cp)};
  for (Fe v : fq_basis(cp)) gens.push_back(AutElement::translation(cp, v, cp.zero()));
  for (Fe v : fq_basis(cp)) gens.push_back(AutElement::translation(cp, cp.zero(), v));
  return Subgroup(std::move(all), std::move(gens));
}

enum class GroupTag { Trivial, Fq, FqSemiC2, FqStarSemiC2, Other };

struct GroupType {
  GroupTag tag = GroupTag::Other;
  std::size_t order = 0;
  bool abelian = false;
  std::uint64_t exponent = 1;

  std::string name() const {
    switch (tag) {
      case GroupTag::Trivial: return "trivial";
      case GroupTag::Fq: return "F_q";
      case GroupTag::FqSemiC2: return "F_q:C2";
      case GroupTag::FqStarSemiC2: return "F_q*:C2";
      case GroupTag::Other: break;
    }
    return "other(order=" + std::to_string(order) + ",abelian=" + (abelian ? "yes" : "no") +
           ",exponent=" + std::to_string(exponent) + ")";
  }
};

inline std::uint64_t element_order(const AutElement& s) {
  AutElement cur = s;
  std::uint64_t n = 1;
  const AutElement id{Fe::one(s.gamma.field()), Fe::zero(s.gamma.field()), Fe::zero(s.gamma.field()), false};
  while (!(cur == id)) {
    cur = compose(s, cur);
    ++n;
  }
  return n;
}

namespace detail {

inline std::vector<AutElement> closure_of(const std::vector<AutElement>& gens, const AutElement& id) {
  std::set<AutElement> seen{id};
  std::vector<AutElement> frontier{id};
  while (!frontier.empty()) {
    std::vector<AutElement> next;
    for (const auto& s : frontier)
      for (const auto& g : gens) {
        auto t = compose(g, s);
        if (seen.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline bool is_normal(const std::vector<AutElement>& sub, const std::vector<AutElement>& group) {
  for (const auto& g : group) {
    const auto gi = inverse(g);
    for (const auto& h : sub)
      if (!std::binary_search(sub.begin(), sub.end(), compose(g, compose(h, gi)))) return false;
  }
  return true;
}

// Depth-first search for a subgroup of the given order all of whose
// non-identity elements lie in `pool`.
inline bool find_subgroup(const std::vector<AutElement>& pool, std::size_t target, const AutElement& id,
                          std::vector<AutElement> gens, std::size_t start,
                          const std::function<bool(const std::vector<AutElement>&)>& accept) {
  const auto h = closure_of(gens, id);
  if (h.size() > target) return false;
  for (const auto& x : h)
    if (!(x == id) && !std::binary_search(pool.begin(), pool.end(), x)) return false;
  if (h.size() == target) return accept(h);
  for (std::size_t i = start; i < pool.size(); ++i) {
    if (std::binary_search(h.begin(), h.end(), pool[i])) continue;
    gens.push_back(pool[i]);
    if (find_subgroup(pool, target, id, gens, i + 1, accept)) return true;
    gens.pop_back();
  }
  return false;
}

}  // namespace detail

/// Identifies the isomorphism types that occur as Galois groups of lines.
inline GroupType group_type(const Subgroup& G, const CurveParams& cp) {
  const auto& el = G.elements();
  const AutElement id = AutElement::identity(cp);
  GroupType t;
  t.order = el.size();
  t.abelian = true;
  for (const auto& s : el)
    for (const auto& u : el)
      if (!(compose(s, u) == compose(u, s))) t.abelian = false;
  std::uint64_t expo = 1;
  std::vector<AutElement> order_p;
  for (const auto& s : el) {
    const auto o = element_order(s);
    expo = std::lcm(expo, o);
    if (o == cp.p()) order_p.push_back(s);
  }
  t.exponent = expo;
  const std::size_t q = cp.q();
  if (t.order == 1) {
    t.tag = GroupTag::Trivial;
  } else if (t.order == q && t.abelian && t.exponent == cp.p()) {
    t.tag = GroupTag::Fq;
  } else if (t.order == 2 * q) {
    const bool found = detail::find_subgroup(order_p, q, id, {}, 0, [&](const std::vector<AutElement>& h) {
      return detail::is_normal(h, el);
    });
    if (found) t.tag = GroupTag::FqSemiC2;
  } else if (t.order == 2 * (q - 1)) {
    for (const auto& c : el) {
      if (element_order(c) != q - 1) continue;
      const auto C = detail::closure_of({c}, id);
      if (!detail::is_normal(C, el)) continue;
      const auto ci = inverse(c);
      for (const auto& tau : el) {
        if (std::binary_search(C.begin(), C.end(), tau) || element_order(tau) != 2) continue;
        if (compose(tau, compose(c, tau)) == ci) {
          t.tag = GroupTag::FqStarSemiC2;
          break;
        }
      }
      if (t.tag == GroupTag::FqStarSemiC2) break;
    }
  }
  return t;
}

}  // namespace asmgal
