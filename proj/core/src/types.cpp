#include "tricomi/types.hpp"

#include <string>

namespace tricomi {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::quadrature: return "quadrature";
        case Method::connection_series: return "connection_series";
        case Method::asymptotic_large_x: return "asymptotic_large_x";
        case Method::terminating_series: return "terminating_series";
        case Method::recurrence: return "recurrence";
    }
    return "unknown";
}

void ParameterPoint::validate() const {
    if (!std::isfinite(a) || !std::isfinite(c))
        throw DomainError("parameters a and c must be finite");
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("argument x must be positive and finite, got " + std::to_string(x));
}

}  // namespace tricomi
