#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace affectus {

enum class ErrorCode {
    invalid_argument,
    singular_fit,
    resource_limit,
    undefined_angle,
    undefined_selection,
    undefined_average,
    undefined_efficiency,
    out_of_scope,
    validation,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string field, const std::string& message)
        : std::runtime_error(message), code_(code), field_(std::move(field)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& field() const noexcept { return field_; }

private:
    ErrorCode code_;
    std::string field_;
};

[[noreturn]] void fail(ErrorCode code, std::string field, const std::string& message);

inline void require(bool ok, std::string_view field, const std::string& message) {
    if (!ok) fail(ErrorCode::invalid_argument, std::string(field), message);
}

}  // namespace affectus
