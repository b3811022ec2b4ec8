#pragma once

#include "qwall/auto.hpp"
#include "qwall/cone.hpp"

namespace qwall {

// A wall: primitive normal n0 in N^+, a cone inside n0^perp, and a unit
// wall function supported on multiples of x^{n0}. Crossing the wall in the
// positive direction acts by wallAuto(n0, f, +1).
struct Wall {
    DimVector normal;
    Cone cone;
    TruncSeries f;

    PoissonAuto toAuto(const SkewForm& form, int sign) const
    {
        return PoissonAuto::wall(form, normal, f, sign);
    }
    // weak cone membership for a point already known to satisfy theta(n0)=0
    bool coneContains(const Weight& theta) const;
};

class ScatteringDiagram {
public:
    ScatteringDiagram(SkewForm form, int order, std::vector<Wall> walls);

    int order() const { return order_; }
    int rank() const { return form_.rank(); }
    const SkewForm& form() const { return form_; }
    const std::vector<Wall>& walls() const { return walls_; }

    ScatteringDiagram truncated(int newOrder) const;

private:
    SkewForm form_;
    int order_ = 0;
    std::vector<Wall> walls_; // walls with f = 1 are pruned on construction
};

// piecewise-linear path given by rational waypoints
struct GenericPath {
    std::vector<Weight> waypoints;
};

struct Crossing {
    int wallIndex;
    int sign;     // epsilon = -sign(d/dt gamma(t)(n0))
    int segment;  // waypoint segment index
    Rat t;        // parameter within the segment
};

// ordered wall crossings of a path; throws GenericityError on degeneracies,
// naming the offending walls
std::vector<Crossing> crossings(const ScatteringDiagram& d, const GenericPath& path);

PoissonAuto pathOrderedProduct(const ScatteringDiagram& d, const GenericPath& path);

struct ConsistencyReport {
    bool consistent = true;
    std::string joint;        // description of the failing joint
    Hamiltonian discrepancy;  // log of the failing loop product
};
ConsistencyReport checkConsistent(const ScatteringDiagram& d);
bool isConsistent(const ScatteringDiagram& d);

// Kontsevich-Soibelman completion, rank 2 only: inserts outgoing rays
// order-by-order until the loop around the origin is the identity.
ScatteringDiagram ksComplete(const SkewForm& form, const std::vector<Wall>& initial, int k);

// the cluster initial data: one wall per vertex, full hyperplane e_i^perp,
// f = 1 + x^{e_i}
std::vector<Wall> clusterInitial(const Quiver& q, int k);

// a wall is incoming when its cone contains theta_{n0} = <-,n0>; undefined
// (error) when n0 is central for the form
bool isIncoming(const SkewForm& form, const Wall& w);

// consistent diagram with prescribed group element, walls carried by the
// cone complex of the hyperplane arrangement {n^perp : n in P}
ScatteringDiagram reconstructFromGroup(const PoissonAuto& g, const std::vector<DimVector>& p);

// path-ordered product along the canonical generic path from M^+ to M^-
PoissonAuto groupElement(const ScatteringDiagram& d);

// both consistent and equal group elements at order min(k1,k2)
bool equivalent(const ScatteringDiagram& d1, const ScatteringDiagram& d2);

// deterministic generic path between two off-wall points (perturbs interior
// waypoints by powers of 1/B on degeneracy)
GenericPath genericPathBetween(const ScatteringDiagram& d, const Weight& from, const Weight& to);

// canonical positive basepoint (1, 1/B, 1/B^2, ...)
Weight canonicalBasePoint(const ScatteringDiagram& d);

} // namespace qwall
