#pragma once

#include <stdexcept>
#include <string>

namespace normax {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_no(line) {}
    std::size_t line_no;
};

struct UnboundedPolytope : Error {
    explicit UnboundedPolytope(const std::string& what = "polytope is unbounded") : Error(what) {}
};

struct InfeasiblePolytope : Error {
    explicit InfeasiblePolytope(const std::string& what = "polytope is empty") : Error(what) {}
};

struct OriginNotInterior : Error {
    explicit OriginNotInterior(const std::string& what = "origin not in the interior") : Error(what) {}
};

struct DimensionCapExceeded : Error {
    explicit DimensionCapExceeded(const std::string& what) : Error(what) {}
};

struct DependentGenerators : Error {
    explicit DependentGenerators(const std::string& what = "generators are linearly dependent") : Error(what) {}
};

struct BallNotNormalized : Error {
    explicit BallNotNormalized(const std::string& what = "ball row has rhs != 1") : Error(what) {}
};

struct NotInConvexPosition : Error {
    explicit NotInConvexPosition(const std::string& what) : Error(what) {}
};

struct OddN : Error {
    explicit OddN(const std::string& what = "vertex count must be even") : Error(what) {}
};

struct KTooLarge : Error {
    explicit KTooLarge(const std::string& what) : Error(what) {}
};

struct GapViolation : Error {
    explicit GapViolation(const std::string& what) : Error(what) {}
};

struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& what = "polytope is not 0-symmetric") : Error(what) {}
};

struct ApproxBudgetExceeded : Error {
    explicit ApproxBudgetExceeded(const std::string& what) : Error(what) {}
};

}  // namespace normax
