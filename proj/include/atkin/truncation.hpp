#pragma once

#include "atkin/presets.hpp"

namespace atkin {

/// Outcome of the characteristic-p truncation route: the reduced truncation
/// alpha of y_j at the preset's degree d, and the squarefree part ph of
/// beta(J) = alpha(1/J) J^d.
struct TruncationResult {
    Poly<FFElem> alpha;
    long d = 0;
    Poly<FFElem> ph;
};

/// Truncate-and-reverse route to the partial Hasse polynomial. Guarded by
/// d < p; the degree of ph must come out equal to the preset's closed form.
inline TruncationResult truncation_path(const CurvePreset& preset, int j, const PrimeContext& ctx,
                                        int branch = 0) {
    preset.require_good_prime(ctx.p());
    long d = preset.trunc_degree(ctx.p(), j);
    if (d < 0 || (std::uint64_t)d >= ctx.p())
        throw math_error("truncation path unavailable: d=" + std::to_string(d) +
                         " >= p=" + std::to_string(ctx.p()));
    Series<QuadElem> y = preset.y_series(j, (std::size_t)d + 1);
    Poly<QuadElem> trunc = y.truncation_poly((std::size_t)d);
    Poly<FFElem> alpha = trunc.map([&](const QuadElem& c) { return ctx.reduce(c, branch); });
    if (alpha.is_zero() || !alpha.coeff(0).is_one())
        throw math_error("truncation path: alpha(0) != 1");
    Poly<FFElem> beta = alpha.reciprocal_to_degree((std::size_t)d);
    Poly<FFElem> ph = squarefree_part(beta);
    long expected = preset.degree_of_ph(ctx.p(), j);
    if (ph.degree() != expected)
        throw math_error("truncation path degree mismatch at p=" + std::to_string(ctx.p()) +
                         ", j=" + std::to_string(j) + ": got " + std::to_string(ph.degree()) +
                         ", formula says " + std::to_string(expected));
    return TruncationResult{std::move(alpha), d, std::move(ph)};
}

} // namespace atkin
