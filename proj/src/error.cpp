#include "affectus/error.hpp"

namespace affectus {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::singular_fit: return "singular_fit";
    case ErrorCode::resource_limit: return "resource_limit";
    case ErrorCode::undefined_angle: return "undefined_angle";
    case ErrorCode::undefined_selection: return "undefined_selection";
    case ErrorCode::undefined_average: return "undefined_average";
    case ErrorCode::undefined_efficiency: return "undefined_efficiency";
    case ErrorCode::out_of_scope: return "out_of_scope";
    case ErrorCode::validation: return "validation";
    }
    return "unknown";
}

void fail(ErrorCode code, std::string field, const std::string& message) {
    throw Error(code, std::move(field), message);
}

}  // namespace affectus
