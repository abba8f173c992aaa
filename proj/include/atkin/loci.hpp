#pragma once

#include <optional>

#include "atkin/pade.hpp"
#include "atkin/truncation.hpp"

namespace atkin {

inline long degree_of_ph(const CurvePreset& preset, std::uint64_t p, int j) {
    return preset.degree_of_ph(p, j);
}

/// Reduce a characteristic-zero polynomial coefficientwise; refuses
/// non-p-integral coefficients naming the offender.
inline Poly<FFElem> reduce_poly(const Poly<QuadElem>& f, const PrimeContext& ctx, int branch = 0) {
    return f.map([&](const QuadElem& c) { return ctx.reduce(c, branch); });
}

/// The degree-n Atkin polynomial of family j over K together with its
/// reduction: A is the Pade denominator at the closed-form order, every
/// coefficient p-integral, and ph = A mod p is monic of the same degree.
inline std::pair<Poly<QuadElem>, Poly<FFElem>> partial_hasse(const CurvePreset& preset,
                                                             std::uint64_t p, int j,
                                                             const PrimeContext& ctx,
                                                             int branch = 0,
                                                             std::optional<long> degree_override = {}) {
    long n = degree_override ? *degree_override : preset.degree_of_ph(p, j);
    Poly<QuadElem> A = pade_denominator(preset.moments(j), (std::size_t)n);
    Poly<FFElem> ph = reduce_poly(A, ctx, branch);
    if (ph.degree() != n)
        throw math_error("reduction dropped degree at p=" + std::to_string(p) +
                         ", j=" + std::to_string(j));
    return {std::move(A), std::move(ph)};
}

/// no = lcm, sp = gcd; for g = 2 the supersingular polynomial is no for
/// inert p and sp for split p.
struct AssembledLoci {
    Poly<FFElem> no, sp;
    std::optional<Poly<FFElem>> ss;
};

inline AssembledLoci assemble_loci(const std::vector<Poly<FFElem>>& phs, Splitting field_split,
                                   int g) {
    if (phs.empty()) throw math_error("assemble_loci: empty list");
    AssembledLoci out{poly_lcm(phs), phs[0].monic(), {}};
    for (std::size_t i = 1; i < phs.size(); ++i) out.sp = poly_gcd(out.sp, phs[i]);
    if (g == 2)
        out.ss = field_split == Splitting::inert ? out.no : out.sp;
    return out;
}

/// Theorem-3 route: Pade denominator of the lambda-weighted combined stream
/// at order n_p = deg(no), reduced mod p.
inline Poly<FFElem> combined_atkin(const CurvePreset& preset, std::uint64_t p,
                                   const PrimeContext& ctx, int branch, std::size_t n_p) {
    std::vector<MomentStream<QuadElem>> streams;
    for (int j = 1; j <= preset.g; ++j) streams.push_back(preset.moments(j));
    MomentStream<QuadElem> combined = combined_moments(std::move(streams), preset.weights());
    Poly<QuadElem> A = pade_denominator(combined, n_p);
    return reduce_poly(A, ctx, branch);
}

/// Full locus data for one (preset, p): per-branch, per-family degrees,
/// characteristic-zero Atkin polynomials, reductions, palindrome flags, and
/// the assembled no / sp / ss polynomials.
struct LocusEntry {
    int j;
    long n;
    Poly<QuadElem> A;
    Poly<FFElem> ph;
    bool palindrome;
};

struct BranchReport {
    int branch;
    std::vector<LocusEntry> families;
    AssembledLoci loci;
    std::vector<bool> palindromes;
};

struct LocusReport {
    std::string preset;
    std::uint64_t p;
    Splitting field_split;
    std::vector<BranchReport> branches;
};

inline LocusReport locus_report(const CurvePreset& preset, std::uint64_t p,
                                std::optional<long> degree_override = {}) {
    preset.require_good_prime(p);
    PrimeContext ctx(preset.coeff_D, p);
    LocusReport rep{preset.name, p, preset.field_splitting(p), {}};
    for (int branch = 0; branch < ctx.branches(); ++branch) {
        std::vector<LocusEntry> families;
        std::vector<bool> palindromes;
        std::vector<Poly<FFElem>> phs;
        for (int j = 1; j <= preset.g; ++j) {
            long n = degree_override ? *degree_override : preset.degree_of_ph(p, j);
            auto [A, ph] = partial_hasse(preset, p, j, ctx, branch, n);
            bool pal = palindrome_check(ph);
            palindromes.push_back(pal);
            phs.push_back(ph);
            families.push_back(LocusEntry{j, n, std::move(A), std::move(ph), pal});
        }
        AssembledLoci loci = assemble_loci(phs, rep.field_split, preset.g);
        rep.branches.push_back(
            BranchReport{branch, std::move(families), std::move(loci), std::move(palindromes)});
    }
    return rep;
}

} // namespace atkin
