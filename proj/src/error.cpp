#include "qlprop/error.hpp"

#include <utility>

namespace qlprop {

Error::Error(std::string kind, const std::string& message)
    : std::runtime_error(message), kind_(std::move(kind)) {}

SyntaxError::SyntaxError(std::size_t position, std::string expected,
                         std::string kind)
    : Error(std::move(kind), "at position " + std::to_string(position) +
                                 ": expected " + expected),
      position_(position),
      expected_(std::move(expected)) {}

UnknownConnective::UnknownConnective(std::size_t position,
                                     const std::string& token)
    : SyntaxError(position,
                  "a classical connective (found quantum/pragmatic token '" +
                      token + "')",
                  "UnknownConnective") {}

ClassicalConnectiveInTQ::ClassicalConnectiveInTQ(std::size_t position,
                                                 const std::string& token)
    : SyntaxError(position,
                  "a quantum connective (found classical token '" + token +
                      "')",
                  "ClassicalConnectiveInTQ") {}

}  // namespace qlprop
