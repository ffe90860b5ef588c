#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "hyperspace/assoc_array.hpp"
#include "hyperspace/semilink.hpp"
#include "hyperspace/tsv.hpp"

namespace hyperspace {

/// One ReLU layer: weights W (neuron x neuron) and a one-row bias keyed
/// `:bias`, both over plus.times.
struct Layer {
    AssocArray weights{plus_times};
    AssocArray bias{plus_times};
};

struct Network {
    std::vector<Layer> layers;

    std::size_t depth() const noexcept { return layers.size(); }
};

enum class InferenceMode { standard, semiring };

/// h(y) = max(y, 0); non-positive entries are dropped.
inline AssocArray relu(const AssocArray& y) {
    std::vector<Triple> out;
    for (const auto& t : y.entries()) {
        if (t.val.number() > 0.0) out.push_back(t);
    }
    return AssocArray::from_canonical(y.semiring(), std::move(out));
}

/// B(r, j) = b(:bias, j) for every row r of Y holding an entry.
///
/// Computed as the outer product of Y's row indicator (a column keyed
/// `:bias`) with the bias row, in the semiring of `b`. The indicator is
/// taken from |Y|0 so rows whose values cancel still count.
inline AssocArray bias_broadcast(const AssocArray& b, const AssocArray& y) {
    const AssocArray rows = project_rows(zero_norm(y, plus_times));
    std::vector<Triple> indicator;
    for (const auto& t : rows.entries()) {
        indicator.push_back({t.row, keys::bias, b.semiring().one()});
    }
    return array_mult(AssocArray::from_canonical(b.semiring(), std::move(indicator)), b);
}

/// Y' = h(YW + B), with B applied on the support of YW only.
inline AssocArray step_standard(const AssocArray& y, const Layer& layer) {
    const AssocArray product = array_mult(y, layer.weights);
    const AssocArray bias = apply_mask(bias_broadcast(layer.bias, y), product);
    return relu(ewise_add(product, bias));
}

namespace detail {

/// The bias row lifted into max.plus over `neurons`: plus.times stores no
/// zero biases, but 0 is the max.plus one and must be explicit there.
inline AssocArray lift_bias(const AssocArray& b, const KeyVector& neurons) {
    std::vector<Triple> out;
    for (const auto& k : key_union(neurons, col_keys(b))) {
        out.push_back({keys::bias, k, b.at(keys::bias, k)});
    }
    return AssocArray::from_canonical(max_plus, std::move(out));
}

}  // namespace detail

/// Y' = YW (x) B (+) 0, with YW over plus.times and (x) = +, (+) = max over
/// max.plus. Agrees exactly with step_standard.
inline AssocArray step_semiring(const AssocArray& y, const Layer& layer) {
    const AssocArray product = retag(array_mult(y, layer.weights), max_plus);
    const AssocArray bias = bias_broadcast(detail::lift_bias(layer.bias, col_keys(product)), y);
    const AssocArray activated = scalar_add(ewise_mult(product, bias), Value(0.0));
    // max(x, 0) == 0 is not stored; retagging into plus.times drops it.
    return retag(activated, plus_times);
}

inline AssocArray infer(const Network& net, const AssocArray& y0,
                        InferenceMode mode = InferenceMode::standard) {
    AssocArray y = y0;
    for (const auto& layer : net.layers) {
        y = mode == InferenceMode::standard ? step_standard(y, layer) : step_semiring(y, layer);
    }
    return y;
}

/// Every row of a bias listing is folded into the single row `:bias`.
inline AssocArray as_bias_row(const AssocArray& b) {
    std::vector<Triple> out;
    for (const auto& t : b.entries()) out.push_back({keys::bias, t.col, t.val});
    return build(std::move(out), b.semiring());
}

/// Reads one weight file and one bias file per layer, in order.
inline Network load_network(const std::vector<std::string>& layer_files,
                            const std::vector<std::string>& bias_files, TsvOptions opts = {}) {
    if (layer_files.size() != bias_files.size()) {
        throw FormatError(std::to_string(layer_files.size()) + " weight files but " +
                          std::to_string(bias_files.size()) + " bias files");
    }
    auto load = [&](const std::string& path) {
        std::ifstream in(path);
        if (!in) throw FormatError("cannot open " + path);
        try {
            return read_triples(in, plus_times, opts);
        } catch (const FormatError& e) {
            throw e.in_file(path);
        }
    };
    Network net;
    for (std::size_t i = 0; i < layer_files.size(); ++i) {
        net.layers.push_back({load(layer_files[i]), as_bias_row(load(bias_files[i]))});
    }
    return net;
}

}  // namespace hyperspace
