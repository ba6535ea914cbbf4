// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace renewal_ks {

/// A law whose variance is zero (or not finite) has no usable normalizing constant.
struct DegenerateLaw : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Path simulation exceeded the configured event cap before reaching the horizon.
struct RunawayPath : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Counting/parity query past the materialized horizon.
struct QueryBeyondHorizon : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Process evaluation at a time the path's horizon does not cover.
struct HorizonTooShort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation indexed past the available inter-arrival draws.
struct InsufficientDraws : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TooFewSamples : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverlappingIncrements : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace renewal_ks
