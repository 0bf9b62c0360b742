#pragma once

#include <stdexcept>
#include <string>

namespace upk {

// Malformed external input: sequence files, advice frames.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter set violating a documented precondition. The message names
// the violated constraint.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An online decider accepted an item that does not fit.
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// No sequence with the requested properties could be produced.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace upk
