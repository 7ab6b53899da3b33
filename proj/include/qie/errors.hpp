#pragma once

#include <stdexcept>
#include <string>

namespace qie {

struct NonFiniteIntegrand : std::runtime_error {
    explicit NonFiniteIntegrand(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParams : std::invalid_argument {
    explicit InvalidParams(const std::string& what) : std::invalid_argument(what) {}
};

struct UnsupportedOrder : std::invalid_argument {
    explicit UnsupportedOrder(const std::string& what) : std::invalid_argument(what) {}
};

struct UnsupportedElement : std::invalid_argument {
    explicit UnsupportedElement(const std::string& what) : std::invalid_argument(what) {}
};

struct SingularMass : std::runtime_error {
    explicit SingularMass(const std::string& what) : std::runtime_error(what) {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct GridMismatch : std::invalid_argument {
    explicit GridMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct DerivativeUnavailable : std::runtime_error {
    explicit DerivativeUnavailable(const std::string& what) : std::runtime_error(what) {}
};

struct IOFailure : std::runtime_error {
    explicit IOFailure(const std::string& what) : std::runtime_error(what) {}
};

struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace qie
