// Copyright 2026 The symmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMMAP_ERRORS_HPP
#define SYMMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symmap {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// The qubit-to-qudit mapping is only defined for an even number of qubits.
class UnsupportedParity : public Error {
   public:
    explicit UnsupportedParity(int n_qubits)
        : Error("UnsupportedParity: the mapping requires an even number of qubits, got N=" +
                std::to_string(n_qubits)),
          n_qubits_(n_qubits) {}
    int n_qubits() const noexcept { return n_qubits_; }

   private:
    int n_qubits_;
};

class DomainError : public Error {
   public:
    explicit DomainError(const std::string &what) : Error("DomainError: " + what) {}
};

/// Exact integer arithmetic would exceed its supported range.
class OverflowError : public Error {
   public:
    explicit OverflowError(const std::string &what) : Error("OverflowError: " + what) {}
};

class InvalidDensity : public Error {
   public:
    explicit InvalidDensity(const std::string &what) : Error("InvalidDensity: " + what) {}
};

class NotSymmetric : public Error {
   public:
    explicit NotSymmetric(const std::string &what) : Error("NotSymmetric: " + what) {}
};

class NotInHatSubspace : public Error {
   public:
    explicit NotInHatSubspace(const std::string &what) : Error("NotInHatSubspace: " + what) {}
};

/// No published constants exist for the requested size.
class NotTabulated : public Error {
   public:
    explicit NotTabulated(int n) : Error("NotTabulated: no published data for N=" + std::to_string(n)) {}
};

/// A bisection was requested on an interval whose ends do not straddle the crossing.
class BracketError : public Error {
   public:
    explicit BracketError(const std::string &what) : Error("BracketError: " + what) {}
};

}  // namespace symmap

#endif  // SYMMAP_ERRORS_HPP
