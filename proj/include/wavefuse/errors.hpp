#pragma once

#include <stdexcept>
#include <string>

namespace wavefuse {

// File and format failures raised by image I/O.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite coefficients or other numeric breakdown inside a pipeline.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// A metric whose defining formula has a zero denominator for these inputs.
class undefined_metric : public std::domain_error {
public:
    explicit undefined_metric(const std::string& what) : std::domain_error(what) {}
};

}  // namespace wavefuse
