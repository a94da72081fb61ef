#pragma once

#include <stdexcept>
#include <string>

namespace paralmi {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(std::string msg, int line_, int col_)
        : std::runtime_error(std::move(msg)), line(line_), column(col_) {}
};

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct NotZeroDimensional : std::runtime_error {
    explicit NotZeroDimensional(const std::string& what = "ideal is not zero-dimensional")
        : std::runtime_error(what) {}
};

// Pair-reduction budget exhausted in the Groebner engine.
struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

struct GenericityFailure : std::runtime_error {
    explicit GenericityFailure(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidSpecialization : std::runtime_error {
    explicit InvalidSpecialization(const std::string& what) : std::runtime_error(what) {}
};

struct NotRepresentable : std::runtime_error {
    explicit NotRepresentable(const std::string& what) : std::runtime_error(what) {}
};

struct BadIndexSet : std::runtime_error {
    explicit BadIndexSet(const std::string& what) : std::runtime_error(what) {}
};

struct NotSymmetric : std::runtime_error {
    explicit NotSymmetric(const std::string& what = "matrix is not symmetric")
        : std::runtime_error(what) {}
};

struct SingularMatrix : std::runtime_error {
    explicit SingularMatrix(const std::string& what = "matrix is singular")
        : std::runtime_error(what) {}
};

}  // namespace paralmi
