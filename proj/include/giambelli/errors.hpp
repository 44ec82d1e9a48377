#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace giambelli {

  //! Base of every error raised by the kernel.
  class Error : public std::runtime_error
  {
  public:
    using std::runtime_error::runtime_error;
  };

  //! Shapes that do not fit (non-square determinant, length mismatch).
  class DimensionError : public Error
  {
  public:
    using Error::Error;
  };

  //! An input outside the operation's domain.
  class DomainError : public Error
  {
  public:
    using Error::Error;
  };

  //! A negative power of a zero letter was requested.
  class PoleError : public DomainError
  {
  public:
    using DomainError::DomainError;
  };

  class DivisionByZeroError : public DomainError
  {
  public:
    using DomainError::DomainError;
  };

  class SingularMatrixError : public DomainError
  {
  public:
    using DomainError::DomainError;
  };

  //! Seed sequences of a Hou-Mu ratio are linearly dependent.
  class DegeneracyError : public DomainError
  {
  public:
    using DomainError::DomainError;
  };

  //! Input data inconsistent with its declared structure.
  class ValidationError : public DomainError
  {
  public:
    using DomainError::DomainError;
  };

  //! Two independent constructions of the same object disagree.
  class ConsistencyError : public Error
  {
  public:
    using Error::Error;
  };

  class ConfigError : public Error
  {
  public:
    using Error::Error;
  };

  class ParseError : public Error
  {
  public:
    ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset))
      , reason_(message)
      , offset_(offset)
    {
    }

    auto offset() const noexcept -> std::size_t
    {
      return offset_;
    }
    //! The message without the offset suffix.
    auto reason() const noexcept -> const std::string&
    {
      return reason_;
    }

  private:
    std::string reason_;
    std::size_t offset_;
  };

}  // namespace giambelli
