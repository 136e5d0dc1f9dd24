#pragma once

#include <stdexcept>
#include <string>

namespace convextri {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidChord : Error { using Error::Error; };
struct InvalidInstance : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };

// Negative mathematical verdict of a pack_* operation, not a program failure.
struct NotPackable : Error { using Error::Error; };

struct SearchRefused : Error { using Error::Error; };
struct ConstructionFault : Error { using Error::Error; };
struct FormulaInapplicable : Error { using Error::Error; };
struct NotApplicable : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace convextri
