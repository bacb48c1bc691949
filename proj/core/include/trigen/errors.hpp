#pragma once

#include <stdexcept>
#include <string>

namespace trigen {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph operations
struct SelfLoopError : Error { using Error::Error; };
struct AdjacentPairError : Error { using Error::Error; };
struct MissingEdgeError : Error { using Error::Error; };
struct DegreeTooLowError : Error { using Error::Error; };
struct BadPartitionError : Error { using Error::Error; };
struct DisconnectedError : Error { using Error::Error; };
struct BadParameterError : Error { using Error::Error; };

// connectivity / minor predicates
struct NotThreeConnectedError : Error { using Error::Error; };
struct NoMinorError : Error { using Error::Error; };

// I/O and pipelines
struct ParseError : Error { using Error::Error; };
struct SeedMismatchError : Error { using Error::Error; };
struct ResumeMismatchError : Error { using Error::Error; };

} // namespace trigen
