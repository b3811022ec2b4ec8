#pragma once

#include "qwall/quiver.hpp"

#include <functional>

namespace qwall {

// Dense matrix over F_p, entries in [0,p).
struct FpMat {
    int rows = 0, cols = 0;
    std::vector<int> a; // row-major

    static FpMat zero(int r, int c) { return FpMat{r, c, std::vector<int>(r * c, 0)}; }
    int& at(int r, int c) { return a[r * cols + c]; }
    int at(int r, int c) const { return a[r * cols + c]; }
    bool isZero() const
    {
        for (int x : a)
            if (x)
                return false;
        return true;
    }
};

FpMat fpMul(const FpMat& x, const FpMat& y, int p);
FpMat fpAddScaled(const FpMat& x, const FpMat& y, int c, int p); // x + c*y

// One point of Rep(d)(F_p) for (Q, I): a matrix per arrow, relations hold.
struct RepPoint {
    int p = 2;
    DimVector dims;
    std::vector<FpMat> mats; // indexed like Q.arrows()
};

inline constexpr Int kDefaultOracleBudget = Int(1) << 24;

// Streams every representation of dimension d over F_p satisfying the
// relations, in a fixed deterministic order, each exactly once. The
// callback may return false to stop early. Throws BudgetError when the
// ambient tuple space p^{sum d_s d_t} exceeds the budget.
void enumerateReps(const Quiver& q, const std::vector<Relation>& rels, const DimVector& d,
                   int p, const std::function<bool(const RepPoint&)>& fn,
                   Int budget = kDefaultOracleBudget);

Int countReps(const Quiver& q, const std::vector<Relation>& rels, const DimVector& d, int p,
              Int budget = kDefaultOracleBudget);

// King semistability decided by enumerating all subrepresentations.
bool isSemistable(const Quiver& q, const RepPoint& e, const Weight& theta);
bool isStable(const Quiver& q, const RepPoint& e, const Weight& theta);

// #semistable points / #GL_d(F_p), the groupoid count of the semistable locus
Rat bruteStackCount(const Quiver& q, const std::vector<Relation>& rels, const DimVector& d,
                    const Weight& theta, int p, Int budget = kDefaultOracleBudget);

// all d with delta(d) <= bound admitting a <-,d>-stable representation
std::vector<DimVector> selfStableDims(const Quiver& q, const std::vector<Relation>& rels,
                                      Int bound, int p, Int budget = kDefaultOracleBudget);

Int glOrder(int n, int p);

// dimension vectors in N^+ with delta <= bound, in grlex order
std::vector<DimVector> dimVectorsUpTo(int rank, Int bound);

} // namespace qwall
