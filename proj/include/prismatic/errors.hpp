#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace prismatic {

// Base class for all contract violations raised by this library. The CLI
// surfaces the concrete type name verbatim, so keep names stable.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidEdge : Error {
    using Error::Error;
};

struct InvalidVertex : Error {
    using Error::Error;
};

// Raised when an operation that assumes a {diamond, K4}-free input finds an
// adjacent pair with two distinct common neighbors. `witness` holds the four
// vertices of the offending diamond or K4.
struct NotDiamondK4Free : Error {
    NotDiamondK4Free(const std::string& what, std::vector<int> w)
        : Error(what), witness(std::move(w)) {}
    std::vector<int> witness;
};

struct NotPrismaticWitness : Error {
    NotPrismaticWitness(const std::string& what, std::vector<int> w = {})
        : Error(what), witness(std::move(w)) {}
    std::vector<int> witness;
};

struct OverlappingTriangles : Error {
    using Error::Error;
};

struct ScaleLimitExceeded : Error {
    using Error::Error;
};

struct SpecInfeasible : Error {
    using Error::Error;
};

struct MalformedPartition : Error {
    using Error::Error;
};

struct W3Violation : Error {
    W3Violation(const std::string& what, int u_, int v_) : Error(what), u(u_), v(v_) {}
    int u = -1;
    int v = -1;
};

struct NotCoverable : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace prismatic
