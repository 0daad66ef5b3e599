#include "ellvb/isogeny.hpp"

#include "ellvb/errors.hpp"

namespace ellvb {

IsogenyContext::IsogenyContext(Torus base, int r)
    : base_(base), cover_(base.scaled(r)), r_(r) {}

FactorOfAutomorphy pullback(const IsogenyContext& ctx, const FactorOfAutomorphy& f) {
  if (!f.torus().same_as(ctx.base())) throw TorusMismatch("pullback input must live on the base");
  return FactorOfAutomorphy(ctx.cover(), iterate(f, ctx.degree()));
}

LaurentMatrix companion_block(const LaurentMatrix& block, int r) {
  if (r < 1) throw DomainError("covering degree must be positive");
  if (r == 1) return block;
  const int n = block.size();
  LaurentMatrix out(r * n);
  for (int i = 0; i < (r - 1) * n; ++i) out(i, n + i) = LaurentPoly(1.0);
  out.set_block((r - 1) * n, 0, block);
  return out;
}

FactorOfAutomorphy pushforward(const IsogenyContext& ctx, const FactorOfAutomorphy& f) {
  if (!f.torus().same_as(ctx.cover()))
    throw TorusMismatch("pushforward input must live on the cover");
  return FactorOfAutomorphy(ctx.base(), companion_block(f.generator(), ctx.degree()));
}

std::vector<FactorOfAutomorphy> roundtrip_diag(const IsogenyContext& ctx,
                                               const FactorOfAutomorphy& f) {
  if (!f.torus().same_as(ctx.cover()))
    throw TorusMismatch("roundtrip input must live on the cover");
  std::vector<FactorOfAutomorphy> out;
  for (int i = 0; i < ctx.degree(); ++i)
    out.emplace_back(ctx.cover(), f.generator().substitute_scaled(ctx.base().q_pow(i)));
  return out;
}

LaurentMatrix block_product_identity(std::span<const LaurentMatrix> blocks) {
  if (blocks.empty()) throw DomainError("need at least one block");
  const int r = static_cast<int>(blocks.size());
  const int n = blocks.front().size();
  for (const auto& b : blocks)
    if (b.size() != n) throw SizeMismatch("blocks must share one size");
  LaurentMatrix acc = companion_block(blocks[0], r);
  for (int i = 1; i < r; ++i) acc = acc * companion_block(blocks[i], r);
  return acc;
}

}  // namespace ellvb
