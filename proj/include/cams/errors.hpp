#pragma once

#include <stdexcept>

namespace cams {

/// Problem in user-supplied data: bad file content, missing ground-truth
/// entry, duplicate spectrum id. The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed file content; the message names the path and line number.
class ParseError : public DataError {
public:
    using DataError::DataError;
};

}  // namespace cams
