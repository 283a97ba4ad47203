#pragma once

#include <optional>
#include <string>
#include <vector>

#include "actkit/hom.hpp"

namespace actkit {

// Outcome of a property quantified over an infinite class, decided against
// a finite universe: a No is always a replayable counterexample, a Yes is
// always backed by an exact closure rule named in `reason`, and anything
// else stays honest as UnknownAtBound.
enum class Status { CertifiedYes, CertifiedNo, UnknownAtBound };

inline std::string to_string(Status status) {
    switch (status) {
        case Status::CertifiedYes: return "certified-yes";
        case Status::CertifiedNo: return "certified-no";
        case Status::UnknownAtBound: return "unknown-at-bound";
    }
    return "unknown-at-bound";
}

struct Witness {
    std::string kind;           // shape of the counterexample
    std::vector<ActHom> homs;   // the maps that replay it
    std::vector<ActPtr> acts;   // the objects involved
    std::string note;           // free-form detail (indices, family)
};

struct Verdict {
    Status status = Status::UnknownAtBound;
    Index bound = 0;
    std::string reason;
    std::optional<Witness> witness;

    static Verdict yes(Index bound, std::string reason) {
        return Verdict{Status::CertifiedYes, bound, std::move(reason), std::nullopt};
    }
    static Verdict no(Index bound, std::string reason, Witness witness) {
        return Verdict{Status::CertifiedNo, bound, std::move(reason), std::move(witness)};
    }
    static Verdict unknown(Index bound, std::string reason) {
        return Verdict{Status::UnknownAtBound, bound, std::move(reason), std::nullopt};
    }

    bool is_yes() const { return status == Status::CertifiedYes; }
    bool is_no() const { return status == Status::CertifiedNo; }
    bool is_unknown() const { return status == Status::UnknownAtBound; }
};

}  // namespace actkit
