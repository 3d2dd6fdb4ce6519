// Copyright 2026 The qfp Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Exception types shared by every qfp module.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qfp {

/// Base class of all qfp errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition (bad index, size mismatch, ...).
class ContractViolation : public Error {
  public:
    using Error::Error;
};

/// A request exceeds the simulator's memory cap.
class ResourceError : public Error {
  public:
    ResourceError(std::size_t requested_qubits, std::size_t cap)
        : Error("requested " + std::to_string(requested_qubits) +
                " qubits exceeds the simulator cap of " +
                std::to_string(cap)),
          requested_qubits_(requested_qubits), cap_(cap) {}

    [[nodiscard]] std::size_t requested_qubits() const {
        return requested_qubits_;
    }
    [[nodiscard]] std::size_t cap() const { return cap_; }

  private:
    std::size_t requested_qubits_;
    std::size_t cap_;
};

/// Conditioning on an outcome that has probability zero.
class DegenerateCondition : public Error {
  public:
    using Error::Error;
};

/// No shot survived post-selection on the ancilla.
class InsufficientShots : public Error {
  public:
    InsufficientShots(std::uint64_t ancilla_zero, std::uint64_t ancilla_one)
        : Error("no shot matched the conditioning ancilla outcome (a=0: " +
                std::to_string(ancilla_zero) +
                ", a=1: " + std::to_string(ancilla_one) + ")"),
          ancilla_zero_(ancilla_zero), ancilla_one_(ancilla_one) {}

    [[nodiscard]] std::uint64_t ancilla_zero() const { return ancilla_zero_; }
    [[nodiscard]] std::uint64_t ancilla_one() const { return ancilla_one_; }

  private:
    std::uint64_t ancilla_zero_;
    std::uint64_t ancilla_one_;
};

/// Every entry of an RSS measurement was missing.
class EmptyMeasurement : public Error {
  public:
    using Error::Error;
};

/// Normalizing a vector whose entries are all zero.
class ZeroNorm : public Error {
  public:
    using Error::Error;
};

/// Malformed input text. Carries the 1-based line number when known.
class ParseError : public Error {
  public:
    ParseError(const std::string &what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

/// Structurally valid input that does not fit the expected schema.
class SchemaError : public Error {
  public:
    using Error::Error;
};

} // namespace qfp
