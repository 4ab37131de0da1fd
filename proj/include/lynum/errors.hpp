#pragma once

#include <stdexcept>
#include <string>

namespace lynum {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidField : Error { using Error::Error; };
struct NotAComplex : Error { using Error::Error; };
struct NotChainMap : Error { using Error::Error; };
struct BadVertex : Error { using Error::Error; };
struct EmptyComplex : Error { using Error::Error; };
struct NotAFace : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };
struct BadIndex : Error { using Error::Error; };
struct BadInput : Error { using Error::Error; };

/// Signals that an internal cross-check failed; always a bug, never bad input.
struct EngineInconsistency : Error { using Error::Error; };

} // namespace lynum
