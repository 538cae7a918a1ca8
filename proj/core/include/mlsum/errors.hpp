#ifndef MLSUM_ERRORS_HPP
#define MLSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mlsum {

/// Base error for everything the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad option values, malformed config files, unknown keys.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Unreadable inputs, unresolvable references, empty corpora.
class InputError : public Error {
public:
    using Error::Error;
};

} // namespace mlsum

#endif
