#ifndef BISPEC_ERRORS_HPP
#define BISPEC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bispec {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    /// Short machine-readable kind, used by the CLI error JSON.
    virtual const char* kind() const noexcept { return "Error"; }
};

/// A Gamma ratio hit a pole: the weight parameter is one of the excluded values.
class PoleError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "PoleError"; }
};

class InconsistentSystem : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "InconsistentSystem"; }
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail);

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }
    const char* kind() const noexcept override { return "ParseError"; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// The Casoratian vanishes at a nonnegative integer, so some q_n drops degree.
class DegenerateFamily : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "DegenerateFamily"; }
};

class InvalidSpec : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "InvalidSpec"; }
};

class InvalidPreset : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "InvalidPreset"; }
};

class NoSolution : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "NoSolution"; }
};

/// A bilinear form was evaluated through the wrong variant.
class VariantError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "VariantError"; }
};

}  // namespace bispec

#endif
