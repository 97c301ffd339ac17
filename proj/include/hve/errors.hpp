#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hve {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bad scheme parameter: zero length, pattern/attribute length mismatch, wrong slot kind.
class ParameterError : public Error {
  public:
    using Error::Error;
};

/// Product-group vectors of different dimension combined.
class DimensionError : public Error {
  public:
    using Error::Error;
};

class PayloadError : public Error {
  public:
    using Error::Error;
};

/// The requested pattern is not reachable from the token by one delegation step.
class DelegationError : public Error {
  public:
    using Error::Error;
};

class EncodingError : public Error {
  public:
    using Error::Error;
};

class DecodeError : public Error {
  public:
    DecodeError(std::size_t position, const std::string& what)
        : Error("decode error at byte " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

}  // namespace hve
