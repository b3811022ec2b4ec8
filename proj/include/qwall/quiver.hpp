#pragma once

#include "qwall/base.hpp"

#include <optional>

namespace qwall {

struct Arrow {
    int src = 0, tgt = 0;
    bool operator==(const Arrow&) const = default;
};

// One summand of the potential: coeff times a cyclic word of arrows,
// stored by arrow indices in traversal order.
struct PotentialTerm {
    Rat coeff;
    std::vector<int> cycle;
    bool operator==(const PotentialTerm&) const = default;
};

// A path a_1...a_r (traversal order, so tgt(a_i) = src(a_{i+1})) with a
// rational coefficient. Relations are kept expanded in this form; the
// oracle only ever evaluates them on matrix tuples.
struct PathTerm {
    Rat coeff;
    std::vector<int> path;
    bool operator==(const PathTerm&) const = default;
};
using Relation = std::vector<PathTerm>;

// Skew form <d,e> = sum d_i e_j (a_ji - a_ij); kept as a dense matrix so
// series/automorphism code does not need the quiver itself.
struct SkewForm {
    std::vector<std::vector<Int>> m;

    int rank() const { return static_cast<int>(m.size()); }
    Int eval(const DimVector& d, const DimVector& e) const
    {
        if (d.rank() != rank() || e.rank() != rank())
            throw InputError("skew form: vector rank mismatch");
        Int s = 0;
        for (int i = 0; i < rank(); ++i) {
            if (d.c[i] == 0)
                continue;
            for (int j = 0; j < rank(); ++j)
                s += d.c[i] * m[i][j] * e.c[j];
        }
        return s;
    }
    // theta_n = <-,n> as a Weight
    Weight thetaOf(const DimVector& n) const
    {
        Weight w = Weight::zero(rank());
        for (int i = 0; i < rank(); ++i)
            w.c[i] = Rat(eval(DimVector::unit(rank(), i), n));
        return w;
    }
    bool operator==(const SkewForm&) const = default;
};

// Euler form chi(d,e) = sum_i d_i e_i - sum_a d_{s(a)} e_{t(a)}; only
// meaningful for W = 0.
struct EulerForm {
    std::vector<std::vector<Int>> m;

    int rank() const { return static_cast<int>(m.size()); }
    Int eval(const DimVector& d, const DimVector& e) const
    {
        if (d.rank() != rank() || e.rank() != rank())
            throw InputError("euler form: vector rank mismatch");
        Int s = 0;
        for (int i = 0; i < rank(); ++i) {
            if (d.c[i] == 0)
                continue;
            for (int j = 0; j < rank(); ++j)
                s += d.c[i] * m[i][j] * e.c[j];
        }
        return s;
    }
};

// 2-acyclic quiver with optional potential. Vertices are ordered; all
// dimension vectors and weights use that order. Immutable after make().
class Quiver {
public:
    static Quiver make(std::vector<std::string> vertexIds, std::vector<Arrow> arrows,
                       std::vector<PotentialTerm> potential = {});

    int rank() const { return static_cast<int>(vertexIds_.size()); }
    const std::vector<std::string>& vertexIds() const { return vertexIds_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<PotentialTerm>& potential() const { return potential_; }
    bool hasPotential() const { return !potential_.empty(); }

    // number of arrows i -> j
    Int arrowCount(int i, int j) const;
    bool acyclic() const;

    Int skewForm(const DimVector& d, const DimVector& e) const { return skew_.eval(d, e); }
    Int eulerForm(const DimVector& d, const DimVector& e) const;
    const SkewForm& skew() const { return skew_; }
    EulerForm euler() const;

    // Q* for a framing class m in M^{oplus}: new vertex "*" with m(e_i)
    // arrows * -> i; the potential is carried over unchanged.
    Quiver extend(const Weight& m) const;

    std::vector<Relation> derivedRelations() const;

    std::optional<int> vertexIndex(const std::string& id) const;

private:
    Quiver() = default;
    std::vector<std::string> vertexIds_;
    std::vector<Arrow> arrows_;
    std::vector<PotentialTerm> potential_;
    SkewForm skew_;
};

// theta* = (theta, -theta(d)) on Q*, so theta*(d,1) = 0.
Weight liftWeight(const Weight& theta, const DimVector& d);

// Standard small cases used all over the tests and CLI fixtures.
Quiver kroneckerQuiver(int arrowCount);      // vertices {1,2}, p arrows 1 -> 2
Quiver singleVertexQuiver();                 // one vertex, no arrows
Quiver cyclicTriangleQuiver(const Rat& c);   // 3-cycle with W = c*abc

} // namespace qwall
