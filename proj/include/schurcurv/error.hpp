#pragma once

#include <stdexcept>
#include <string>

namespace schurcurv {

/// Input outside the domain of an operation (bad spectrum, boundary chart,
/// inadmissible parameter, ...). The CLI maps it to exit code 2.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A computation that should have succeeded produced a non-finite or
/// inconsistent result. The CLI maps it to exit code 1.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace schurcurv
