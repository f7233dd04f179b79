#pragma once

#include <stdexcept>
#include <string>

namespace nsgp {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user-facing input: empty generator lists, gcd > 1, illegal family
// parameters and the like.
struct invalid_input : error {
    using error::error;
};

struct not_in_semigroup : invalid_input {
    using invalid_input::invalid_input;
};

// Gluing preconditions.
struct is_generator : invalid_input {
    using invalid_input::invalid_input;
};

struct not_coprime : invalid_input {
    using invalid_input::invalid_input;
};

struct zero_polynomial : error {
    using error::error;
};

struct non_homogeneous_input : error {
    using error::error;
};

struct embdim_too_large : error {
    using error::error;
};

struct band_too_small : error {
    using error::error;
};

// A theorem hypothesis failed, so the requested formula does not apply.
struct hypothesis_failed : error {
    using error::error;
};

// Internal consistency failure: a Groebner-level result disagrees with the
// combinatorial semigroup oracle. Never recoverable.
struct oracle_mismatch : error {
    using error::error;
};

} // namespace nsgp
