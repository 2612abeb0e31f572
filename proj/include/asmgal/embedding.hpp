#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "asmgal/error.hpp"
#include "asmgal/field.hpp"
#include "asmgal/poly.hpp"

namespace asmgal {

/// Field homomorphism F_{p^d} -> F_{p^n} (d | n), fixed by the image of the
/// power-basis generator: the smallest-code root of the small field's modulus.
class Embedding {
 public:
  Embedding(const FieldCtx& sub, const FieldCtx& big) : sub_(&sub), big_(&big) {
    if (sub.p() != big.p() || big.degree() % sub.degree() != 0)
      throw Error(ErrorCode::BadBase, "no embedding between these fields");
    if (sub.degree() == 1 || &sub == &big) {
      gen_ = 0;
      fwd_.resize(sub.size());
      for (std::uint32_t v = 0; v < sub.size(); ++v) fwd_[v] = v;
    } else {
      std::vector<std::uint32_t> m(sub.modulus().begin(), sub.modulus().end());
      const auto roots = poly_roots(Poly(big, m));
      if (roots.empty()) throw Error(ErrorCode::BadBase, "modulus has no root in the big field");
      gen_ = roots.front().value.code();
      fwd_.resize(sub.size());
      for (std::uint32_t v = 0; v < sub.size(); ++v) {
        const auto c = sub.coords(v);
        std::uint32_t acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = big.add(big.mul(acc, gen_), c[i]);
        fwd_[v] = acc;
      }
    }
    back_.assign(big.size(), kAbsent);
    for (std::uint32_t v = 0; v < sub.size(); ++v) back_[fwd_[v]] = v;
  }

  const FieldCtx& sub() const noexcept { return *sub_; }
  const FieldCtx& big() const noexcept { return *big_; }
  /// Image of the power-basis generator T of the small field (0 for a prime field).
  Fe generator_image() const { return Fe(*big_, gen_); }

  Fe operator()(Fe x) const {
    if (x.field_ptr() != sub_) throw Error(ErrorCode::ContextMismatch, "element not in the source field");
    return Fe(*big_, fwd_[x.code()]);
  }
  std::optional<Fe> preimage(Fe y) const {
    if (y.field_ptr() != big_) throw Error(ErrorCode::ContextMismatch, "element not in the target field");
    const std::uint32_t v = back_[y.code()];
    if (v == kAbsent) return std::nullopt;
    return Fe(*sub_, v);
  }

 private:
  static constexpr std::uint32_t kAbsent = 0xffffffffu;
  const FieldCtx* sub_;
  const FieldCtx* big_;
  std::uint32_t gen_ = 0;
  std::vector<std::uint32_t> fwd_;
  std::vector<std::uint32_t> back_;
};

}  // namespace asmgal
