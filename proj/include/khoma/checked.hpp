#ifndef KHOMA_CHECKED_HPP
#define KHOMA_CHECKED_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace khoma {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    using error::error;
};

struct validation_error : error {
    using error::error;
};

// Signalled whenever a 64-bit exact-integer operation would wrap.  The
// arithmetic contract everywhere in this library is "exact or loud".
struct overflow_error : error {
    using error::error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw overflow_error("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("integer overflow in multiplication");
    return r;
}

} // namespace khoma

#endif
