#include "growthlab/model.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace growthlab {

std::optional<double> parse_alpha(const std::string& token) {
    if (token == "inf" || token == "+inf") {
        return std::numeric_limits<double>::infinity();
    }
    if (token == "-inf") {
        return -std::numeric_limits<double>::infinity();
    }
    if (token.empty()) return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size()) return std::nullopt;
    if (std::isnan(v)) return std::nullopt;
    return v;
}

std::string format_alpha(double alpha) {
    if (std::isinf(alpha)) return alpha > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", alpha);
    return buf;
}

std::string to_string(ModelFamily family) {
    return family == ModelFamily::QPA ? "qpa" : "cr";
}

std::optional<ModelFamily> parse_family(const std::string& name) {
    if (name == "qpa" || name == "QPA") return ModelFamily::QPA;
    if (name == "cr" || name == "CR") return ModelFamily::CR;
    return std::nullopt;
}

}  // namespace growthlab
