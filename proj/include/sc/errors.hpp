#pragma once

#include <stdexcept>
#include <string>

namespace sc {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A value whose denominator is divisible by the working prime reached a spot
// that requires p-integrality. Usually means an applicability predicate
// upstream is wrong.
struct not_p_integral : error {
    using error::error;
};

struct zero_input : error {
    using error::error;
};

struct zero_divide : error {
    using error::error;
};

// A p-adic result lost too many digits to decide the congruence at the
// requested exponent. The runner retries with a larger guard before giving up.
struct precision_loss : error {
    using error::error;
};

struct invalid_order : error {
    using error::error;
};

struct not_coprime_base : error {
    using error::error;
};

struct out_of_range : error {
    using error::error;
};

struct unknown_check : error {
    using error::error;
};

struct not_prime : error {
    using error::error;
};

struct malformed_params : error {
    using error::error;
};

struct config_error : error {
    using error::error;
};

struct internal_error : error {
    using error::error;
};

} // namespace sc
