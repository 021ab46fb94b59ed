#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace latmu {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotALattice : Error {
    int x, y;
    NotALattice(int x_, int y_, const std::string& what_kind)
        : Error("not a lattice: elements " + std::to_string(x_) + " and " +
                std::to_string(y_) + " have no unique " + what_kind),
          x(x_), y(y_) {}
};

struct NoBoundedExtremes : Error {
    using Error::Error;
};

struct CycleDetected : Error {
    using Error::Error;
};

struct CapacityExceeded : Error {
    using Error::Error;
};

struct NotComparable : Error {
    using Error::Error;
};

struct EmptySet : Error {
    using Error::Error;
};

struct NotSameN : Error {
    using Error::Error;
};

struct InvalidBracketVector : Error {
    using Error::Error;
};

struct ConditionCprimeViolated : Error {
    std::vector<int> circuit;  // atom positions of a witnessing circuit
    ConditionCprimeViolated(std::vector<int> c, const std::string& msg)
        : Error(msg), circuit(std::move(c)) {}
};

struct PreconditionNotVerified : Error {
    using Error::Error;
};

struct FormatError : Error {
    using Error::Error;
};

}  // namespace latmu
