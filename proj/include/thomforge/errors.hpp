#pragma once

#include <stdexcept>
#include <string>

namespace thomforge {

// Base class for all errors raised by the engine.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Text that does not conform to one of the input grammars.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

// Operands living in different variable spaces.
struct SpaceMismatchError : Error {
    explicit SpaceMismatchError(const std::string& msg) : Error("variable-space mismatch: " + msg) {}
};

// Requesting information beyond a series' truncation order / validity bound.
struct TruncationError : Error {
    explicit TruncationError(const std::string& msg) : Error("truncation bound exceeded: " + msg) {}
};

// A violated operation precondition (kappa mismatch, wrong kind, bad signature, ...).
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error("precondition violated: " + msg) {}
};

// Lookup of a singularity key that is not in the database.
struct UnknownKeyError : Error {
    explicit UnknownKeyError(const std::string& msg) : Error("unknown key: " + msg) {}
};

// Symmetric polynomial that cannot be rewritten in quotient Chern classes.
struct NotSupersymmetricError : Error {
    explicit NotSupersymmetricError(const std::string& msg) : Error("not supersymmetric: " + msg) {}
};

// A closed surface cannot map to 3-space with an odd number of crosscaps.
struct OddCrosscapCountError : Error {
    explicit OddCrosscapCountError(const std::string& msg) : Error("odd crosscap count: " + msg) {}
};

// Residue extraction produced s-dependent remainder (data or convention problem).
struct ResidueNotSFreeError : Error {
    explicit ResidueNotSFreeError(const std::string& msg) : Error("residual polynomial not s-free: " + msg) {}
};

}  // namespace thomforge
