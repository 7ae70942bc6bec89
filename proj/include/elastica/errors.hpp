#pragma once

#include <stdexcept>
#include <string>

namespace elastica {

// Base for all library errors. `ValidationError` covers bad inputs and broken
// invariants (CLI exit code 2); the remaining types are computational
// failures detected mid-operation (CLI exit code 3).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

struct DegenerateCurve : Error {
    explicit DegenerateCurve(const std::string& msg) : Error(msg) {}
};

struct PointOnTrace : Error {
    explicit PointOnTrace(const std::string& msg) : Error(msg) {}
};

struct OpenContour : Error {
    explicit OpenContour(const std::string& msg) : Error(msg) {}
};

struct OffsetSingularity : Error {
    explicit OffsetSingularity(const std::string& msg) : Error(msg) {}
};

struct BridgeCrossing : Error {
    explicit BridgeCrossing(const std::string& msg) : Error(msg) {}
};

struct NoValidCandidate : Error {
    explicit NoValidCandidate(const std::string& msg) : Error(msg) {}
};

}  // namespace elastica
