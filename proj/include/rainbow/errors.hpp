#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

// Invalid argument to an operation (bad epsilon, bad probability, k < 1, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Requested a core/mantle decomposition of a component whose 2-core is empty.
class EmptyCoreError : public std::runtime_error {
 public:
  explicit EmptyCoreError(const std::string& what) : std::runtime_error(what) {}
};

// The degree draw produced no vertex of degree >= 3; retry is the caller's call.
class KernelEmptyError : public std::runtime_error {
 public:
  explicit KernelEmptyError(const std::string& what) : std::runtime_error(what) {}
};

// A Galton-Watson tree exceeded the abort threshold; the offspring mean is
// almost certainly >= 1.
class InvalidMuError : public std::runtime_error {
 public:
  explicit InvalidMuError(const std::string& what) : std::runtime_error(what) {}
};

// The retained edge set does not connect the component handed to
// rainbow_spanning_tree; signals a process bug upstream.
class NotConnectedError : public std::logic_error {
 public:
  explicit NotConnectedError(const std::string& what) : std::logic_error(what) {}
};

// Instance exceeds the exhaustive-search bounds of the brute-force oracle.
class TooLargeError : public std::invalid_argument {
 public:
  explicit TooLargeError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed edge-list / labels / colored edge-list input.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rainbow
