#pragma once

#include <stdexcept>
#include <string>

namespace pailab {

// Common base so callers can catch everything coming out of the library
// with a single handler.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Modular inverse requested for a non-unit. During key generation this
// signals an unusable base or corrupt parameter.
struct NotInvertible : Error {
    using Error::Error;
};

// Input off the x == 1 (mod N) coset of the L function. A well-formed
// ciphertext always lies on it, so this means a malformed value or a
// still-blinded one.
struct DomainViolation : Error {
    using Error::Error;
};

// Ciphertexts from different keys mixed in one homomorphic operation.
struct KeyMismatch : Error {
    using Error::Error;
};

// A value left the range its protocol role allows (attribute values,
// coordinates, recovered plaintexts).
struct RangeViolation : Error {
    using Error::Error;
};

// Parameters outside the space the schemes support (bit widths, vector
// lengths, sampler ranges).
struct ParameterSpace : Error {
    using Error::Error;
};

// Ride-hailing request and taxi update belong to different zones.
struct ZoneMismatch : Error {
    using Error::Error;
};

// A subscription leaf references an attribute absent from the notification
// set under evaluation.
struct MissingAttribute : Error {
    using Error::Error;
};

// Two redundant recovery channels disagree; wrong secrets or a corrupted
// message.
struct Inconsistent : Error {
    using Error::Error;
};

}  // namespace pailab
