#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubeprog/arith.hpp"
#include "cubeprog/elliptic.hpp"
#include "cubeprog/progression.hpp"

namespace cubeprog {

struct LatticeSolution {
    Integer m, n, k;
};

struct ADResult {
    Integer d;
    Integer value;                           // sum of (-1)^n over the solution set
    std::vector<LatticeSolution> solutions;  // every inspected lattice solution

    std::size_t triple_count() const { return solutions.size(); }
};

// The signed lattice count over m^2 + n^2 + k^2 = d with m = 1 (mod 3),
// n = 0 (mod 3), m + n odd. Requires d > 0 squarefree and coprime to 6.
ADResult a_d(const Integer& d);

// Whether x^4 + 3 = 0 has a solution mod the prime p. Exhaustive scan
// below 10^6, power-residue criterion above.
bool quartic_minus3_has_root(const Integer& p);

enum class Status { Exists, ExistsUnderBSD, NotExists, Unknown };

std::string to_string(Status s);

struct Criterion {
    std::string tag;       // "a.i", "a.ii", "b.i", "b.ii", "lattice.zero", ...
    Status direction;
    std::string detail;    // human-readable justification
};

struct Verdict {
    Integer D;
    Status status = Status::Unknown;
    std::vector<Criterion> criteria;
    std::optional<APTriple<QuadElem>> witness;

    bool has_criterion(const std::string& tag) const;
};

// Existence of a non-trivial progression of three cubes over Q(sqrt(D)).
// Unconditional criteria take precedence over BSD-conditional ones;
// Unknown is a first-class answer. Contradictory criteria raise
// std::logic_error (they would indicate a bug, not bad input).
Verdict classify(const Integer& D);

// Certify existence with an infinite-order rational point on E^D.
// Finite-order or off-curve points are rejected (std::invalid_argument,
// message carries the computed order); a NotExists verdict plus a valid
// witness raises std::logic_error.
Verdict upgrade_with_witness(const Verdict& v, const Point<Rational>& p);

}  // namespace cubeprog
