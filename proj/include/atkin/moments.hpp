#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "atkin/series.hpp"

namespace atkin {

/// Sequence of moments g_0, g_1, ... of a linear functional, the generating
/// function being Phi(x) = sum g_n x^{-n-1}. Providers are immutable and
/// shared; a finite provider refuses requests beyond its length.
template <class K>
class MomentStream {
public:
    MomentStream(K proto, std::vector<K> values, std::string tag = "explicit")
        : proto_(proto.one()),
          tag_(std::move(tag)),
          fn_(nullptr),
          values_(std::make_shared<const std::vector<K>>(std::move(values))) {}

    /// provider(count) must return g_0..g_{count-1}.
    MomentStream(K proto, std::function<std::vector<K>(std::size_t)> provider, std::string tag)
        : proto_(proto.one()),
          tag_(std::move(tag)),
          fn_(std::make_shared<const std::function<std::vector<K>(std::size_t)>>(std::move(provider))) {}

    const K& proto() const { return proto_; }
    const std::string& tag() const { return tag_; }

    std::vector<K> prefix(std::size_t count) const {
        if (fn_) {
            std::vector<K> v = (*fn_)(count);
            if (v.size() < count) throw math_error("moment provider returned too few values");
            v.resize(count, proto_.zero());
            return v;
        }
        if (count > values_->size())
            throw math_error("moment stream \"" + tag_ + "\" has only " +
                             std::to_string(values_->size()) + " values, " +
                             std::to_string(count) + " requested");
        return std::vector<K>(values_->begin(), values_->begin() + count);
    }

    K at(std::size_t n) const { return prefix(n + 1)[n]; }

private:
    K proto_;
    std::string tag_;
    std::shared_ptr<const std::function<std::vector<K>(std::size_t)>> fn_;
    std::shared_ptr<const std::vector<K>> values_;
};

/// Pointwise weighted sum of moment streams.
template <class K>
MomentStream<K> combined_moments(std::vector<MomentStream<K>> streams, std::vector<K> weights) {
    if (streams.empty()) throw math_error("combined_moments of empty list");
    if (streams.size() != weights.size())
        throw math_error("combined_moments: " + std::to_string(streams.size()) + " streams vs " +
                         std::to_string(weights.size()) + " weights");
    K proto = streams[0].proto();
    return MomentStream<K>(
        proto,
        [streams = std::move(streams), weights = std::move(weights), proto](std::size_t count) {
            std::vector<K> out(count, proto.zero());
            for (std::size_t j = 0; j < streams.size(); ++j) {
                std::vector<K> g = streams[j].prefix(count);
                for (std::size_t n = 0; n < count; ++n) out[n] = out[n] + weights[j] * g[n];
            }
            return out;
        },
        "combined");
}

/// Moment functional <f, h> = sum_{i,j} f_i h_j g_{i+j}.
template <class K>
K moment_inner(const MomentStream<K>& g, const Poly<K>& f, const Poly<K>& h) {
    if (f.is_zero() || h.is_zero()) return g.proto().zero();
    std::vector<K> m = g.prefix(f.degree() + h.degree() + 1);
    K acc = g.proto().zero();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.coeff(i).is_zero()) continue;
        for (std::size_t j = 0; j < h.size(); ++j)
            acc = acc + f.coeff(i) * h.coeff(j) * m[i + j];
    }
    return acc;
}

} // namespace atkin
