#pragma once

#include <span>
#include <vector>

#include "ellvb/cocycle.hpp"

namespace ellvb {

/// The r-fold covering E_{r tau} -> E_tau, u -> u.
class IsogenyContext {
 public:
  IsogenyContext(Torus base, int r);

  const Torus& base() const { return base_; }
  const Torus& cover() const { return cover_; }
  int degree() const { return r_; }

 private:
  Torus base_;
  Torus cover_;
  int r_;
};

/// Generator A(q^{r-1}u) ... A(qu) A(u) on the cover, q the base nome.
FactorOfAutomorphy pullback(const IsogenyContext& ctx, const FactorOfAutomorphy& f);

/// Block generator [[0, I_{(r-1)n}], [A~(u), 0]] on the base.
FactorOfAutomorphy pushforward(const IsogenyContext& ctx, const FactorOfAutomorphy& f);

/// Diagonal blocks of pullback(pushforward(f)) in the order they appear:
/// A(u), A(qu), ..., A(q^{r-1}u), with q the base nome.
std::vector<FactorOfAutomorphy> roundtrip_diag(const IsogenyContext& ctx,
                                               const FactorOfAutomorphy& f);

/// [[0, I_{(r-1)n}], [block, 0]] of size r n.
LaurentMatrix companion_block(const LaurentMatrix& block, int r);

/// prod_{i=1..r} companion_block(A_i, r), left to right. Equals
/// diag(A_r, ..., A_1).
LaurentMatrix block_product_identity(std::span<const LaurentMatrix> blocks);

}  // namespace ellvb
