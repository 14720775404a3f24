#pragma once

#include <stdexcept>
#include <string>

namespace molgate {

/// Perturbation-regime guard tripped: the dipole coupling is not small
/// against the rotational spacing at the requested separation.
class RegimeError : public std::runtime_error {
 public:
  RegimeError(const std::string& what, double ratio)
      : std::runtime_error(what), ratio_(ratio) {}
  /// coupling / (2 B_rot)
  double ratio() const { return ratio_; }

 private:
  double ratio_;
};

/// Too much population outside the storage-qubit subspace to analyze the
/// state as two qubits.
class SubspaceError : public std::runtime_error {
 public:
  SubspaceError(const std::string& what, double leakage)
      : std::runtime_error(what), leakage_(leakage) {}
  double leakage() const { return leakage_; }

 private:
  double leakage_;
};

/// Malformed input document (molecule registry, scenario config).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A species record is missing fields required by the requested operation.
class IncompleteSpeciesError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Phase samples too sparse to unwrap unambiguously.
class SamplingError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace molgate
