#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace md {

// Input text could not be decoded. `position` is a byte offset for graph6
// input and a 1-based line number for line-oriented formats.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// A caller violated an operation's contract (bad parameters, partial
// coloring, query outside the domain).
class ContractError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// The input graph is not in the class the operation requires
// (disconnected where connected is needed, not 2-connected, ...).
class StructureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A configured limit was exceeded. For the exact solver the best known
// bounds at the point of interruption are attached.
class ResourceError : public std::runtime_error {
  public:
    ResourceError(const std::string& what, int lower = 1, int upper = -1)
        : std::runtime_error(what), lower_(lower), upper_(upper) {}
    int lower_bound() const { return lower_; }
    int upper_bound() const { return upper_; }

  private:
    int lower_;
    int upper_;
};

// An internal consistency check failed. Reaching this means either a bug
// or an input that breaks an invariant the library is entitled to assume.
class InvariantError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace md
