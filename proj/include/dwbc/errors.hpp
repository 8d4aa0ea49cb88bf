#ifndef DWBC_ERRORS_HPP
#define DWBC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dwbc {

struct SingularWeight : std::runtime_error {
    explicit SingularWeight(const std::string& what) : std::runtime_error(what) {}
};

struct SamplingFailed : std::runtime_error {
    explicit SamplingFailed(const std::string& what) : std::runtime_error(what) {}
};

struct SizeLimit : std::runtime_error {
    explicit SizeLimit(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct NoSolution : std::runtime_error {
    explicit NoSolution(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dwbc

#endif
