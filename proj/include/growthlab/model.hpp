// model.hpp — model families and run parameters shared across the library.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace growthlab {

using NodeId = std::uint32_t;

enum class ModelFamily { QPA, CR };

// alpha is an extended real: any finite double, or +/-infinity, which select
// the argmax/argmin degree class instead of d^alpha sampling. r is the
// constant redirection probability and is meaningful only for CR; QPA
// redirects with the degree-dependent probability d/(d+1).
struct ModelParams {
    ModelFamily family = ModelFamily::QPA;
    double alpha = 1.0;
    double r = 0.0;
};

// One growth step: the new node, the preferentially chosen target, and the
// node actually attached to (a neighbor of the target when redirected).
struct AttachEvent {
    NodeId new_node;
    NodeId target;
    NodeId attached;
    bool redirected;
};

// Accepts a decimal number or the tokens inf / +inf / -inf. Rejects NaN and
// trailing garbage.
std::optional<double> parse_alpha(const std::string& token);
std::string format_alpha(double alpha);

std::string to_string(ModelFamily family);
std::optional<ModelFamily> parse_family(const std::string& name);

}  // namespace growthlab
