#pragma once

#include <stdexcept>
#include <string>

namespace vpal {

// Base of every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of the function (n = 0, base < 2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DigitOutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

class IndexOutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

// Checkpoint file exists but cannot be trusted. Never recovered from silently.
class CheckpointCorrupt : public Error {
 public:
  using Error::Error;
};

// csv and b-file exports need every record to carry the same payload type.
class HeterogeneousRecords : public Error {
 public:
  using Error::Error;
};

}  // namespace vpal
