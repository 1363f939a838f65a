#pragma once

#include <stdexcept>
#include <string>

namespace chordless {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DuplicateEdge : GraphError {
    using GraphError::GraphError;
};
struct SelfLoop : GraphError {
    using GraphError::GraphError;
};
struct VertexOutOfRange : GraphError {
    using GraphError::GraphError;
};
struct EdgeNotPresent : GraphError {
    using GraphError::GraphError;
};
struct Disconnected : GraphError {
    using GraphError::GraphError;
};
struct AdjacentPair : GraphError {
    using GraphError::GraphError;
};
struct BadPartition : GraphError {
    using GraphError::GraphError;
};
struct PreconditionViolated : GraphError {
    using GraphError::GraphError;
};

// Must never fire on valid input; signals a broken internal invariant.
struct NoSplitFound : GraphError {
    using GraphError::GraphError;
};
struct InternalInvariantViolation : GraphError {
    using GraphError::GraphError;
};

struct NotChordless : GraphError {
    int witness_u;
    int witness_v;
    NotChordless(int u, int v)
        : GraphError("graph is not chordless: chord (" + std::to_string(u) + "," +
                     std::to_string(v) + ")"),
          witness_u(u),
          witness_v(v) {}
};

struct EdgeAlreadyColored : GraphError {
    using GraphError::GraphError;
};
struct Unassigned : GraphError {
    using GraphError::GraphError;
};
struct PaletteTooSmall : GraphError {
    using GraphError::GraphError;
};
struct NotProper : GraphError {
    using GraphError::GraphError;
};
struct NotAcyclic : GraphError {
    using GraphError::GraphError;
};
struct SearchSpaceTooLarge : GraphError {
    using GraphError::GraphError;
};
struct NoColoringWithinKMax : GraphError {
    using GraphError::GraphError;
};

struct EdgeMismatch : GraphError {
    using GraphError::GraphError;
};

struct ParseError : GraphError {
    using GraphError::GraphError;
};
struct IoError : GraphError {
    using GraphError::GraphError;
};

}  // namespace chordless
