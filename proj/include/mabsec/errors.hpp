#pragma once

#include <stdexcept>
#include <string>

namespace mabsec {

// Invalid argument to an operation (arm out of range, conf outside (0,1), ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation was called out of protocol order (non-consecutive rounds,
// select/observe alternation broken, attacker phase mismatch).
class ProtocolError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Invalid game or experiment configuration, detected before any round runs.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mabsec
