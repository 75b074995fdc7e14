#pragma once

#include <stdexcept>
#include <string>

namespace permpow {

/// Thrown when a request exceeds a configured enumeration bound.
class ResourceLimitError : public std::runtime_error {
public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a constructed witness fails its paired verifier.
class VerificationError : public std::runtime_error {
public:
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace permpow
