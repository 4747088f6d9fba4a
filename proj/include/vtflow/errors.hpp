#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace vtflow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Projection requested outside (or too deep into) the tubular neighborhood of N.
struct OutsideTubularNeighborhood : Error {
    using Error::Error;
};

// A point that must lie on N violates the projection tolerance.
struct PointOffManifold : Error {
    using Error::Error;
};

// Sectional curvature of a 2-plane spanned by (nearly) parallel vectors.
struct DegeneratePlane : Error {
    using Error::Error;
};

// Field size does not match the grid it is paired with.
struct ShapeMismatch : Error {
    using Error::Error;
};

// The sup-norm gate on the coefficient tensor failed.
struct GateViolation : Error {
    using Error::Error;
};

// sup |du|^2 grew by more than 10x in a single step (CFL / config error).
struct StabilityBlowup : Error {
    using Error::Error;
};

struct CorruptCheckpoint : Error {
    using Error::Error;
};

struct MissingArtifact : Error {
    using Error::Error;
};

// kinetic() queried on a state with no predecessor.
struct NoPreviousState : Error {
    using Error::Error;
};

// Config validation failure; carries one diagnostic per violated field path.
struct ConfigError : Error {
    std::vector<std::string> violations;

    explicit ConfigError(std::vector<std::string> v)
        : Error(join(v)), violations(std::move(v)) {}

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "invalid config:";
        for (const auto& item : v) {
            s += "\n  - " + item;
        }
        return s;
    }
};

}  // namespace vtflow
