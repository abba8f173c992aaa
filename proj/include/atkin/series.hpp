#pragma once

#include <vector>

#include "atkin/poly.hpp"

namespace atkin {

/// Truncated power series f = c_0 + c_1 t + ... + c_{n-1} t^{n-1} + O(t^n),
/// order n = number of stored coefficients. Operations never extend
/// precision; asking beyond the stated order is an error, not a zero.
template <class K>
class Series {
public:
    explicit Series(K proto) : proto_(proto.one()) {}
    Series(K proto, std::vector<K> coeffs) : proto_(proto.one()), c_(std::move(coeffs)) {}

    static Series constant(K value, std::size_t order) {
        if (order == 0) throw math_error("series of order 0");
        std::vector<K> c(order, value.zero());
        c[0] = value;
        return Series(value, std::move(c));
    }

    const K& proto() const { return proto_; }
    std::size_t order() const { return c_.size(); }
    const std::vector<K>& coeffs() const { return c_; }
    const K& coeff(std::size_t i) const {
        if (i >= c_.size())
            throw math_error("series precision exceeded: index " + std::to_string(i) +
                             " beyond order " + std::to_string(c_.size()));
        return c_[i];
    }

    Series truncate(std::size_t order) const {
        if (order > c_.size()) throw math_error("cannot extend series precision");
        return Series(proto_, std::vector<K>(c_.begin(), c_.begin() + order));
    }

    /// Polynomial made of the coefficients up to and including t^d.
    Poly<K> truncation_poly(std::size_t d) const {
        if (d + 1 > c_.size()) throw math_error("series precision exceeded");
        return Poly<K>(proto_, std::vector<K>(c_.begin(), c_.begin() + d + 1));
    }

    Series derivative() const {
        if (c_.size() < 2) throw math_error("derivative needs order >= 2");
        std::vector<K> out;
        out.reserve(c_.size() - 1);
        K n = proto_.zero();
        for (std::size_t i = 1; i < c_.size(); ++i) {
            n = n + proto_.one();
            out.push_back(c_[i] * n);
        }
        return Series(proto_, std::move(out));
    }

    friend Series operator+(const Series& f, const Series& g) {
        std::size_t n = std::min(f.order(), g.order());
        std::vector<K> out(n, f.proto_.zero());
        for (std::size_t i = 0; i < n; ++i) out[i] = f.c_[i] + g.c_[i];
        return Series(f.proto_, std::move(out));
    }
    friend Series operator-(const Series& f, const Series& g) {
        std::size_t n = std::min(f.order(), g.order());
        std::vector<K> out(n, f.proto_.zero());
        for (std::size_t i = 0; i < n; ++i) out[i] = f.c_[i] - g.c_[i];
        return Series(f.proto_, std::move(out));
    }
    friend Series operator*(const Series& f, const Series& g) {
        std::size_t n = std::min(f.order(), g.order());
        std::vector<K> out(n, f.proto_.zero());
        for (std::size_t i = 0; i < n; ++i) {
            if (f.c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < n; ++j)
                out[i + j] = out[i + j] + f.c_[i] * g.c_[j];
        }
        return Series(f.proto_, std::move(out));
    }

    /// Exact division by a series with unit constant term.
    friend Series operator/(const Series& f, const Series& g) {
        std::size_t n = std::min(f.order(), g.order());
        if (n == 0) throw math_error("series of order 0");
        if (g.c_[0].is_zero()) throw math_error("series division by non-unit");
        K g0i = g.c_[0].inv();
        std::vector<K> out(n, f.proto_.zero());
        for (std::size_t i = 0; i < n; ++i) {
            K acc = f.c_[i];
            for (std::size_t j = 0; j < i; ++j) acc = acc - out[j] * g.c_[i - j];
            out[i] = acc * g0i;
        }
        return Series(f.proto_, std::move(out));
    }

    friend bool operator==(const Series& f, const Series& g) {
        if (f.c_.size() != g.c_.size()) return false;
        for (std::size_t i = 0; i < f.c_.size(); ++i)
            if (!(f.c_[i] == g.c_[i])) return false;
        return true;
    }

private:
    K proto_;
    std::vector<K> c_;
};

/// y'/y to order (order(y) - 1); y must have unit constant term.
template <class K>
Series<K> series_logderiv_ratio(const Series<K>& y) {
    if (y.order() < 2) throw math_error("logarithmic derivative needs order >= 2");
    if (y.coeff(0).is_zero()) throw math_error("logarithmic derivative of a non-unit series");
    return y.derivative() / y.truncate(y.order() - 1);
}

} // namespace atkin
