#pragma once

#include <stdexcept>
#include <string>

namespace fpv {

/// Filesystem-level failure (cannot open, cannot write).
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed content in a file or stream (bad header, bad record).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Violated precondition or a domain condition that makes the operation
/// impossible (e.g. an image with no fingerprint area).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fpv
