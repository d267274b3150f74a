#pragma once

#include <string>
#include <vector>

#include "perilink/moves.hpp"

namespace perilink {

struct Certificate {
    Int p = 3;
    ParityWeight start;
    std::vector<Move> steps;
    ParityWeight end;
    EligibilityMode mode = EligibilityMode::nonstrict;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Verification {
    bool ok = true;
    // Index of the first rejected step; steps.size() for a final mismatch.
    std::size_t failing_step = 0;
    std::string reason;
};

// Replays the steps from scratch without any shared cache.
Verification verify_certificate(const Certificate& c);

// Every weight visited, start first; throws PreconditionViolated on a bad step.
std::vector<ParityWeight> replay(const Certificate& c);

// Chain from c.end back to c.start.
Certificate reverse_certificate(const Certificate& c);

// c followed by d; d.start must equal c.end.
Certificate concatenate(const Certificate& c, const Certificate& d);

}  // namespace perilink
