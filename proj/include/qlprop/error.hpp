#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlprop {

/// Base of every domain error raised by the library. `kind()` is the stable
/// error name printed by the CLI (e.g. "SyntaxError").
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message);

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Malformed formula text. `position` is a byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected,
              std::string kind = "SyntaxError");

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// A quantum or pragmatic connective inside a classical formula.
class UnknownConnective : public SyntaxError {
 public:
  UnknownConnective(std::size_t position, const std::string& token);
};

/// A classical `!`, `~` or `|` inside a quantum formula.
class ClassicalConnectiveInTQ : public SyntaxError {
 public:
  ClassicalConnectiveInTQ(std::size_t position, const std::string& token);
};

#define QLPROP_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

// model
QLPROP_DEFINE_ERROR(SchemaError);
QLPROP_DEFINE_ERROR(ExtensionOutOfUniverse);
QLPROP_DEFINE_ERROR(DuplicateId);
QLPROP_DEFINE_ERROR(HilbertDimensionMismatch);
QLPROP_DEFINE_ERROR(NonOrthonormalBasis);
QLPROP_DEFINE_ERROR(EnumerationCapExceeded);
QLPROP_DEFINE_ERROR(UniverseTooSmall);
QLPROP_DEFINE_ERROR(RankError);
QLPROP_DEFINE_ERROR(UnknownState);
QLPROP_DEFINE_ERROR(UnknownObject);

// semantics
QLPROP_DEFINE_ERROR(UnknownProperty);
QLPROP_DEFINE_ERROR(DepthCapExceeded);
QLPROP_DEFINE_ERROR(CmtViolation);

// lattice
QLPROP_DEFINE_ERROR(NotAPartialOrder);
QLPROP_DEFINE_ERROR(MeetJoinMissing);
QLPROP_DEFINE_ERROR(IncompatiblePreorder);
QLPROP_DEFINE_ERROR(SearchCapExceeded);
QLPROP_DEFINE_ERROR(NotAnOrthoLattice);

// hilbert
QLPROP_DEFINE_ERROR(DimensionMismatch);
QLPROP_DEFINE_ERROR(NoHilbertAnnotation);
QLPROP_DEFINE_ERROR(NotOperationClosed);
QLPROP_DEFINE_ERROR(ClosureCapExceeded);

// pragmatic
QLPROP_DEFINE_ERROR(NotPDecidable);

// An identity the library computes two ways disagreed.
QLPROP_DEFINE_ERROR(InvariantViolation);

#undef QLPROP_DEFINE_ERROR

}  // namespace qlprop
