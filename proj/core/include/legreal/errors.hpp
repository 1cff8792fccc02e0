#pragma once

#include <stdexcept>
#include <string>

namespace legreal {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct SchemaError : Error { using Error::Error; };
struct VerticalEdgeError : Error { using Error::Error; };
struct OddCuspCountError : Error { using Error::Error; };
struct GenericityError : Error { using Error::Error; };
struct ValencyOneVertexError : Error { using Error::Error; };
struct DegenerateExtentError : Error { using Error::Error; };

struct NotSimpleError : Error { using Error::Error; };
struct NotNormalizedError : Error { using Error::Error; };
struct DisconnectedError : Error { using Error::Error; };
struct BadRanksError : Error { using Error::Error; };

struct NoOddHandleError : Error { using Error::Error; };
struct UnbalancedGainsError : Error { using Error::Error; };
struct GapNotFoundError : Error { using Error::Error; };
struct EndpointMismatchError : Error { using Error::Error; };

struct HomologicallyTrivialWordCurveError : Error { using Error::Error; };

} // namespace legreal
