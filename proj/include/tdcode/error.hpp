#pragma once

#include <stdexcept>
#include <string>

namespace tdcode {

enum class errc {
    word_too_short,
    not_a_square,
    invalid_letter,
    parse_error,
    empty_length_set,
    separation_violation,
    resource_limit,
    malformed_plan,
    infeasible_plan,
    model_violation,
    empty_code,
    invalid_argument,
};

inline const char* to_string(errc e) {
    switch (e) {
        case errc::word_too_short: return "word-too-short";
        case errc::not_a_square: return "not-a-square";
        case errc::invalid_letter: return "invalid-letter";
        case errc::parse_error: return "parse-error";
        case errc::empty_length_set: return "empty-length-set";
        case errc::separation_violation: return "separation-violation";
        case errc::resource_limit: return "resource-limit";
        case errc::malformed_plan: return "malformed-plan";
        case errc::infeasible_plan: return "infeasible-plan";
        case errc::model_violation: return "model-violation";
        case errc::empty_code: return "empty-code";
        case errc::invalid_argument: return "invalid-argument";
    }
    return "unknown";
}

/// Every failure raised by the library carries one of the errc kinds so that
/// front ends can map it onto an exit status.
class error : public std::runtime_error {
public:
    error(errc kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

}  // namespace tdcode
