#pragma once

#include "collatz/bitstring.hpp"
#include "collatz/collatz.hpp"

namespace collatz {

/// Binary representation, on norm(p) bits, of the least start of p.
inline BitString encode(const ParityVector& p) { return walk_first_occurrence(p).start_bits; }

/// Inverse of encode. Runs the trajectory of the interpreted value forward
/// instead of inverting the recursion.
inline ParityVector decode(const BitString& w) {
    return trajectory_parity_vector(interpret(w), w.size());
}

}  // namespace collatz
