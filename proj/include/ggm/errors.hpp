#pragma once

#include <stdexcept>
#include <string>

namespace ggm {

// Error categories. `validation` covers bad mathematical input (the caller
// handed us data violating a precondition); `numeric` covers failures of a
// numerical procedure on otherwise valid input.
enum class errc {
    non_primitive,
    not_unimodular,
    not_normalized,
    not_positive_definite,
    equal_foliations,
    reducible_foliation,
    not_coprime,
    slope_out_of_range,
    invalid_parameter,
    shooting_failed,
    invalid_shape,
    grid_too_coarse,
    grid_mismatch,
    boundary_not_flat,
    profile_singular,
    curvature_sign_violation,
    parse_error,
    io_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_primitive: return "non_primitive";
        case errc::not_unimodular: return "not_unimodular";
        case errc::not_normalized: return "not_normalized";
        case errc::not_positive_definite: return "not_positive_definite";
        case errc::equal_foliations: return "equal_foliations";
        case errc::reducible_foliation: return "reducible_foliation";
        case errc::not_coprime: return "not_coprime";
        case errc::slope_out_of_range: return "slope_out_of_range";
        case errc::invalid_parameter: return "invalid_parameter";
        case errc::shooting_failed: return "shooting_failed";
        case errc::invalid_shape: return "invalid_shape";
        case errc::grid_too_coarse: return "grid_too_coarse";
        case errc::grid_mismatch: return "grid_mismatch";
        case errc::boundary_not_flat: return "boundary_not_flat";
        case errc::profile_singular: return "profile_singular";
        case errc::curvature_sign_violation: return "curvature_sign_violation";
        case errc::parse_error: return "parse_error";
        case errc::io_error: return "io_error";
    }
    return "unknown";
}

// True for errors that indicate invalid input rather than a numeric or I/O
// failure. A curvature sign violation during a deformation is a statement
// about the input factors, so it counts as validation.
inline bool is_validation_error(errc c) {
    switch (c) {
        case errc::shooting_failed:
        case errc::parse_error:
        case errc::io_error:
            return false;
        default:
            return true;
    }
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw error(code, message);
}

}  // namespace ggm
