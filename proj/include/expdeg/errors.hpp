#pragma once

#include <stdexcept>
#include <string>

namespace expdeg {

// Base class for every domain error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input/schema violations. `path` is a JSON-pointer-style location when the
// error originates from parsing structured input, otherwise empty.
struct InputError : Error {
    std::string path;
    explicit InputError(const std::string& what, std::string path = "")
        : Error(path.empty() ? what : what + " (at " + path + ")"), path(std::move(path)) {}
};

struct DirectedCycleError : Error { using Error::Error; };
struct InvalidSplitError : Error { using Error::Error; };
struct NonStrictError : Error { using Error::Error; };
struct NotBipartiteError : Error { using Error::Error; };

struct EmptyIndexSetError : Error { using Error::Error; };
struct OutOfRangeError : Error { using Error::Error; };
struct NotInBijectionRangeError : Error { using Error::Error; };
struct NotSubsetError : Error { using Error::Error; };
struct SizeMismatchError : Error { using Error::Error; };
struct LengthMismatchError : Error { using Error::Error; };

struct NoLimitError : Error { using Error::Error; };
struct NonSmoothSupportError : Error { using Error::Error; };
struct IsStableError : Error { using Error::Error; };
struct NotLWStableError : Error { using Error::Error; };

struct NonReducedError : Error { using Error::Error; };
struct MissingFiberCoordinateError : Error { using Error::Error; };
struct UnsupportedGraphError : Error { using Error::Error; };
struct UnsupportedDegreeError : Error { using Error::Error; };

}  // namespace expdeg
