#pragma once

#include <stdexcept>
#include <string>

namespace actkit {

// Base class for every failure actkit raises on bad input or broken invariants.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct AssociativityViolation : Error {
    int a, b, c;
    AssociativityViolation(int a_, int b_, int c_)
        : Error("associativity fails at (" + std::to_string(a_) + ", " + std::to_string(b_) +
                ", " + std::to_string(c_) + ")"),
          a(a_), b(b_), c(c_) {}
};

struct IdentityViolation : Error {
    int element;
    explicit IdentityViolation(int element_)
        : Error("identity law fails at element " + std::to_string(element_)), element(element_) {}
};

struct ActAxiomViolation : Error {
    explicit ActAxiomViolation(const std::string& what) : Error(what) {}
};

struct HomAxiomViolation : Error {
    explicit HomAxiomViolation(const std::string& what) : Error(what) {}
};

struct BiactAxiomViolation : Error {
    explicit BiactAxiomViolation(const std::string& what) : Error(what) {}
};

// Two objects expected to live over the same monoid do not.
struct MonoidMismatch : Error {
    explicit MonoidMismatch(const std::string& what) : Error(what) {}
};

// Maps fed to a coequalizer must share source and target.
struct NotParallel : Error {
    explicit NotParallel(const std::string& what) : Error(what) {}
};

// Maps fed to a pullback must share a target.
struct TargetMismatch : Error {
    explicit TargetMismatch(const std::string& what) : Error(what) {}
};

// An operation that needs a nonempty base act was handed the empty one.
struct DegenerateEmptyAct : Error {
    explicit DegenerateEmptyAct(const std::string& what) : Error(what) {}
};

// An internal cross-check that is mathematically guaranteed came out false.
// Seeing this means a bug in actkit, never bad user input.
struct TheoremViolation : Error {
    explicit TheoremViolation(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    std::string file;
    int line;
    ParseError(const std::string& file_, int line_, const std::string& what)
        : Error(file_ + ":" + std::to_string(line_) + ": " + what), file(file_), line(line_) {}
};

}  // namespace actkit
