#pragma once

#include <stdexcept>
#include <string>

namespace walls {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroRankError : Error {
    explicit ZeroRankError(const std::string& msg) : Error(msg) {}
};

struct InvalidCharacterError : Error {
    explicit InvalidCharacterError(const std::string& msg) : Error(msg) {}
};

struct NonPositiveRadiusError : Error {
    explicit NonPositiveRadiusError(const std::string& msg) : Error(msg) {}
};

struct OutOfRegionError : Error {
    explicit OutOfRegionError(const std::string& msg) : Error(msg) {}
};

struct NonTerminatingError : Error {
    explicit NonTerminatingError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace walls
