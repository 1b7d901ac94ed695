#pragma once

#include <stdexcept>
#include <string>

namespace hodgechase {

// Base class for everything thrown by the engine.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Dimension chase failures.
struct ChaseError : Error {
    enum class Kind { Underdetermined, Inconsistent, InvalidProblem };
    Kind kind;
    ChaseError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

// Curve / cover arithmetic.
struct OddBranchCount : Error {
    explicit OddBranchCount(const std::string& msg) : Error(msg) {}
};
struct SplitCoverAmbiguity : Error {
    explicit SplitCoverAmbiguity(const std::string& msg) : Error(msg) {}
};
struct NonIntegerGenus : Error {
    explicit NonIntegerGenus(const std::string& msg) : Error(msg) {}
};

// Weighted-plane numerics.
struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& msg) : Error(msg) {}
};
struct OddReducedDegree : Error {
    explicit OddReducedDegree(const std::string& msg) : Error(msg) {}
};

// Branch configurations outside the supported taxonomy.
struct InvalidConfig : Error {
    explicit InvalidConfig(const std::string& msg) : Error(msg) {}
};

// Scenario evaluation.
struct ExpectationMismatch : Error {
    explicit ExpectationMismatch(const std::string& msg) : Error(msg) {}
};

}  // namespace hodgechase
