#pragma once

#include "qwall/base.hpp"

#include <optional>

namespace qwall {

// sign * theta(w) >= 0 for an integer vector w in N
struct SignConstraint {
    DimVector w;
    int sign = 1;
    bool operator==(const SignConstraint&) const = default;
};

// The cone of a wall inside normal^perp: either the full hyperplane or the
// locus cut out by sign constraints (always through the origin).
struct Cone {
    bool fullHyperplane = true;
    std::vector<SignConstraint> constraints;

    static Cone hyperplane() { return Cone{}; }
    static Cone signs(std::vector<SignConstraint> cs) { return Cone{false, std::move(cs)}; }
    bool operator==(const Cone&) const = default;
};

// basis of {theta : theta(n) = 0 for all n in zeros}
std::vector<Weight> weightKernel(int rank, const std::vector<DimVector>& zeros);

// a rational point with theta(n) = 0 on zeros and sign*theta(w) > 0 on
// stricts, if one exists (Fourier-Motzkin with witness back-substitution)
std::optional<Weight> strictFeasiblePoint(int rank, const std::vector<DimVector>& zeros,
                                          const std::vector<SignConstraint>& stricts);

// witness of a strictly feasible point of {rows * y > 0} in Q^dim
std::optional<std::vector<Rat>> strictHomogeneousWitness(std::vector<std::vector<Rat>> rows,
                                                         int dim);

// one interior witness per chamber of the central arrangement of the given
// nonzero linear forms in Q^dim, deterministic order
std::vector<std::vector<Rat>> centralChambers(const std::vector<std::vector<Rat>>& forms,
                                              int dim);

// scale a rational vector to a primitive integer vector (same direction)
std::vector<Int> primitiveIntVector(const std::vector<Rat>& v);

} // namespace qwall
