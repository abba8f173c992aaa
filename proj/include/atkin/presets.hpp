#pragma once

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>

#include "atkin/hypergeom.hpp"
#include "atkin/json_io.hpp"
#include "atkin/ode.hpp"

namespace atkin {

inline MomentStream<QuadElem> lift_to_quad(const MomentStream<Rational>& g) {
    return MomentStream<QuadElem>(
        QuadElem(Rational(1)),
        [g](std::size_t count) {
            std::vector<Rational> v = g.prefix(count);
            std::vector<QuadElem> out;
            out.reserve(count);
            for (auto& r : v) out.emplace_back(std::move(r));
            return out;
        },
        g.tag());
}

/// Moments of Phi(t) = t - (2 t^2 / (chi * lambda * N)) y'/y, read off as
/// Phi = sum g_n t^{n+1}: g_0 = 1 and g_n = -(2/(chi lambda N)) [t^{n-1}] y'/y.
inline MomentStream<QuadElem> phi_moments(std::function<Series<QuadElem>(std::size_t)> y_provider,
                                          const Rational& chi, const Rational& lambda, unsigned N) {
    QuadElem scale{Rational(-2) / (chi * lambda * Rational((long long)N))};
    return MomentStream<QuadElem>(
        QuadElem(Rational(1)),
        [y_provider = std::move(y_provider), scale](std::size_t count) {
            std::vector<QuadElem> out;
            out.reserve(count);
            out.push_back(scale.one());
            if (count > 1) {
                Series<QuadElem> y = y_provider(count + 1);
                if (!y.coeff(0).is_one()) throw math_error("phi_moments: y(0) != 1");
                Series<QuadElem> q = series_logderiv_ratio(y);
                for (std::size_t n = 1; n < count; ++n) out.push_back(scale * q.coeff(n - 1));
            }
            return out;
        },
        "ode");
}

inline MomentStream<QuadElem> phi_moments(const Series<QuadElem>& y, const Rational& chi,
                                          const Rational& lambda, unsigned N) {
    return phi_moments([y](std::size_t order) { return y.truncate(std::min(order, y.order())); },
                       chi, lambda, N);
}

/// Named bundle of invariants for a curve family: field discriminant and bad
/// primes, Phi-normalization data (chi, lambda_j, N), the j -> j' rule, the
/// closed-form degree and truncation-degree providers, and per-j moment /
/// solution sources.
class CurvePreset {
public:
    std::string name;
    int g = 1;
    unsigned field_D = 0; // discriminant of the real multiplication field (0: none)
    unsigned coeff_D = 0; // coefficient field of moments and Atkin polynomials
    std::vector<std::uint64_t> S;
    Rational chi;
    std::vector<Rational> lyap;
    unsigned N = 1;

    std::vector<TriangleDatum> triangles;   // triangle-based presets
    std::vector<std::string> moment_files;  // file-based moment fixtures (may be empty per j)
    std::vector<std::string> ode_files;     // Picard-Fuchs operator slots (may be absent)

    std::function<long(const CurvePreset&, std::uint64_t, int)> degree_fn;
    std::function<long(const CurvePreset&, std::uint64_t, int)> trunc_degree_fn;

    bool is_bad_prime(std::uint64_t p) const {
        return std::find(S.begin(), S.end(), p) != S.end();
    }

    /// Rejects bad and ramified primes with the rule that was violated.
    void require_good_prime(std::uint64_t p) const {
        if (!is_prime_u64(p)) throw math_error(std::to_string(p) + " is not prime");
        if (p == 2 || is_bad_prime(p))
            throw math_error("p=" + std::to_string(p) + " is a bad prime for preset " + name);
        if (field_D != 0 && splitting_type(field_D, p) == Splitting::ramified)
            throw math_error("p=" + std::to_string(p) + " is ramified in Q(sqrt(" +
                             std::to_string(field_D) + ")); refused");
    }

    Splitting field_splitting(std::uint64_t p) const {
        if (field_D == 0) return Splitting::split;
        return splitting_type(field_D, p);
    }

    /// j' is determined by j and the splitting of p: identity for split p,
    /// the swap 1 <-> 2 for inert p (g = 2); identity when g = 1.
    int jprime(int j, Splitting s) const {
        if (j < 1 || j > g) throw math_error("family index j out of range");
        if (g == 1) return 1;
        if (g != 2) throw math_error("j -> j' rule beyond g=2 requires user data");
        return s == Splitting::inert ? 3 - j : j;
    }

    long degree_of_ph(std::uint64_t p, int j) const {
        require_good_prime(p);
        if (j < 1 || j > g) throw math_error("family index j out of range");
        if (!degree_fn) throw math_error("degree provider required for preset " + name);
        return degree_fn(*this, p, j);
    }

    long trunc_degree(std::uint64_t p, int j) const {
        require_good_prime(p);
        if (j < 1 || j > g) throw math_error("family index j out of range");
        if (!trunc_degree_fn) throw math_error("truncation degree provider required for preset " + name);
        return trunc_degree_fn(*this, p, j);
    }

    bool has_moment_file(int j) const {
        return (int)moment_files.size() >= j && !moment_files[j - 1].empty() &&
               std::filesystem::exists(moment_files[j - 1]);
    }

    bool has_moments(int j) const {
        if (!triangles.empty()) return true;
        return has_moment_file(j) || has_y_series(j);
    }

    /// Moment stream feeding the Pade / orthogonal machinery for family j.
    MomentStream<QuadElem> moments(int j) const {
        if (j < 1 || j > g) throw math_error("family index j out of range");
        if (!triangles.empty()) return lift_to_quad(triangle_moments(triangles[j - 1]));
        if (has_moment_file(j)) return moments_from_json(load_json_file(moment_files[j - 1]));
        if (has_y_series(j)) return ode_moments(j);
        throw math_error("preset " + name + " has no moment source for j=" + std::to_string(j));
    }

    bool has_y_series(int j) const {
        if (!triangles.empty()) return true;
        return (int)ode_files.size() >= j && !ode_files[j - 1].empty() &&
               std::filesystem::exists(ode_files[j - 1]);
    }

    /// Normalized Picard-Fuchs solution y_j, exact to the requested order.
    Series<QuadElem> y_series(int j, std::size_t order) const {
        if (j < 1 || j > g) throw math_error("family index j out of range");
        if (!triangles.empty()) {
            Series<Rational> y = triangle_solution(triangles[j - 1], order);
            std::vector<QuadElem> c;
            for (const auto& r : y.coeffs()) c.emplace_back(r);
            return Series<QuadElem>(QuadElem(Rational(1)), std::move(c));
        }
        if (!has_y_series(j))
            throw math_error("preset " + name + " has no Picard-Fuchs operator for j=" +
                             std::to_string(j) + " (data slot empty)");
        ODESpec ode = ode_from_json(load_json_file(ode_files[j - 1]));
        return solve_series(ode, order);
    }

    /// Moments through the Picard-Fuchs route (Phi_j from y_j).
    MomentStream<QuadElem> ode_moments(int j) const {
        if (j < 1 || j > g) throw math_error("family index j out of range");
        auto self = *this;
        return phi_moments([self, j](std::size_t order) { return self.y_series(j, order); }, chi,
                           lyap[j - 1], N);
    }

    std::vector<QuadElem> weights() const {
        std::vector<QuadElem> w;
        for (const auto& l : lyap) w.emplace_back(l);
        return w;
    }
};

namespace detail {

inline long delta23_degree(const CurvePreset&, std::uint64_t p, int) {
    long base = (long)(p / 12);
    switch (p % 12) {
        case 1: return base;
        case 5:
        case 7: return base + 1;
        default: return base + 2; // p = 11 mod 12
    }
}

inline long delta25_degree(const CurvePreset& cp, std::uint64_t p, int j) {
    Splitting s = cp.field_splitting(p);
    Rational n;
    if (s == Splitting::inert) {
        long eps = p % 4 == 1 ? 1 : 0;
        long d1 = p % 5 == 2 ? 1 : 5;
        long d2 = p % 5 == 2 ? 5 : 2;
        n = j == 1 ? Rational((long long)p - 3, 20) + Rational(eps, 2) + Rational(5 - d1, 5)
                   : Rational(3 * ((long long)p) - 1, 20) + Rational(eps, 2) + Rational(5 - d2, 5);
    } else {
        long eps = p % 4 == 1 ? 0 : 1;
        long d1 = p % 5 == 1 ? 5 : 1;
        long d2 = p % 5 == 1 ? 5 : 2;
        n = j == 1 ? Rational(3 * ((long long)p - 1), 20) + Rational(eps, 2) + Rational(5 - d1, 5)
                   : Rational((long long)p - 1, 20) + Rational(eps, 2) + Rational(5 - d2, 5);
    }
    if (!n.is_integer())
        throw math_error("degree formula gave non-integer " + n.str() + " at p=" +
                         std::to_string(p) + ", j=" + std::to_string(j));
    return (long)n.numerator().convert_to<long long>();
}

inline long w17_degree(const CurvePreset& cp, std::uint64_t p, int j) {
    Splitting s = cp.field_splitting(p);
    long long pl = (long long)p;
    if (s == Splitting::inert) return j == 1 ? (pl - 3) / 2 : (3 * pl - 1) / 2;
    return j == 1 ? 3 * (pl - 1) / 2 : (pl - 1) / 2;
}

/// Truncation degree for hypergeometric families: d = p - (a_j mod p), the
/// degree of the Dwork polynomial factor of y_j mod p.
inline long triangle_trunc_degree(const CurvePreset& cp, std::uint64_t p, int j) {
    const TriangleDatum& d = cp.triangles.at(j - 1);
    return (long)(p - mod_of_rational(d.a, p));
}

} // namespace detail

inline CurvePreset make_delta23_preset() {
    CurvePreset cp;
    cp.name = "delta-2-3";
    cp.g = 1;
    cp.field_D = 0;
    cp.coeff_D = 0;
    cp.S = {2, 3};
    cp.triangles = {TriangleDatum::hecke(3, 1)};
    cp.chi = -Rational(1, 6);
    cp.N = 6;
    cp.lyap = {triangle_lyapunov(cp.triangles[0])};
    cp.degree_fn = detail::delta23_degree;
    cp.trunc_degree_fn = detail::triangle_trunc_degree;
    return cp;
}

inline CurvePreset make_delta25_preset() {
    CurvePreset cp;
    cp.name = "delta-2-5";
    cp.g = 2;
    cp.field_D = 5;
    cp.coeff_D = 0;
    cp.S = {2, 5};
    cp.triangles = {TriangleDatum::hecke(5, 1), TriangleDatum::hecke(5, 2)};
    cp.chi = -Rational(3, 10);
    cp.N = 10;
    cp.lyap = {triangle_lyapunov(cp.triangles[0]), triangle_lyapunov(cp.triangles[1])};
    cp.degree_fn = detail::delta25_degree;
    cp.trunc_degree_fn = detail::triangle_trunc_degree;
    return cp;
}

/// General Hecke triangle preset delta-2-m (j = 1..phi(m)/2 families).
inline CurvePreset make_hecke_preset(int m) {
    CurvePreset cp;
    cp.name = "delta-2-" + std::to_string(m);
    int g = 0;
    for (int k = 1; k < m; ++k)
        if (std::gcd(k, m) == 1) ++g;
    cp.g = g / 2;
    cp.field_D = 0;
    cp.coeff_D = 0;
    cp.S = {2};
    for (std::uint64_t q = 2; q <= (std::uint64_t)m; ++q)
        if (m % q == 0 && is_prime_u64(q) && !cp.is_bad_prime(q)) cp.S.push_back(q);
    for (int j = 1; j <= cp.g; ++j) cp.triangles.push_back(TriangleDatum::hecke(m, j));
    cp.chi = -(Rational(1) - Rational(1, 2) - Rational(1, m));
    cp.N = std::lcm(2, m);
    for (int j = 1; j <= cp.g; ++j) cp.lyap.push_back(triangle_lyapunov(cp.triangles[j - 1]));
    cp.trunc_degree_fn = detail::triangle_trunc_degree;
    // no closed-form degree display beyond m = 3, 5
    return cp;
}

inline CurvePreset make_w17_preset(const std::string& data_dir) {
    CurvePreset cp;
    cp.name = "w17";
    cp.g = 2;
    cp.field_D = 17;
    cp.coeff_D = 17;
    cp.S = {2, 17};
    cp.chi = Rational(-3);
    cp.N = 1;
    cp.lyap = {Rational(1), Rational(1, 3)};
    cp.moment_files = {data_dir + "/w17_phi1.json", data_dir + "/w17_phi2.json"};
    cp.ode_files = {data_dir + "/w17_ode1.json", data_dir + "/w17_ode2.json"};
    cp.degree_fn = detail::w17_degree;
    cp.trunc_degree_fn = detail::w17_degree;
    return cp;
}

class PresetRegistry {
public:
    explicit PresetRegistry(const std::string& data_dir) {
        add(make_delta23_preset());
        add(make_delta25_preset());
        add(make_w17_preset(data_dir));
    }

    void add(CurvePreset cp) { presets_[cp.name] = std::move(cp); }

    const CurvePreset& get(const std::string& name) const {
        auto it = presets_.find(name);
        if (it != presets_.end()) return it->second;
        // "delta-2-m" on demand for Hecke groups
        if (name.rfind("delta-2-", 0) == 0) {
            int m = 0;
            try {
                m = std::stoi(name.substr(8));
            } catch (...) {
                throw data_error("unknown preset " + name);
            }
            presets_[name] = make_hecke_preset(m);
            return presets_.at(name);
        }
        throw data_error("unknown preset " + name);
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (const auto& [k, v] : presets_) out.push_back(k);
        return out;
    }

private:
    mutable std::map<std::string, CurvePreset> presets_;
};

} // namespace atkin
