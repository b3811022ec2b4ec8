#pragma once

#include "qwall/quiver.hpp"

#include <map>

namespace qwall {

// Element of Q[N^{oplus}] truncated at total degree k: a finite sum of
// monomials x^d with d in N^{oplus}, delta(d) <= k, exact rational
// coefficients. Terms are kept sorted in graded-lex order with no zero
// coefficients; products silently discard monomials above the order.
class TruncSeries {
public:
    TruncSeries() = default;
    TruncSeries(int rank, int order);

    static TruncSeries zero(int rank, int order) { return TruncSeries(rank, order); }
    static TruncSeries one(int rank, int order);
    static TruncSeries monomial(const DimVector& d, const Rat& coeff, int order);

    int rank() const { return rank_; }
    int order() const { return order_; }
    const std::vector<std::pair<DimVector, Rat>>& terms() const { return terms_; }

    bool isZero() const { return terms_.empty(); }
    Rat constantTerm() const;
    bool isUnit() const { return constantTerm() == 1; }
    bool hasConstantTerm() const;
    Rat coeff(const DimVector& d) const;
    // the part of total degree exactly m / at most m
    TruncSeries gradedPart(int m) const;
    Int lowestDegree() const; // of a nonzero term; order+1 if zero

    TruncSeries truncated(int newOrder) const;

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator-() const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator*(const Rat& s) const;
    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }
    bool operator==(const TruncSeries& o) const;
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

    // support lies on non-negative multiples of n0
    bool supportedOnRay(const DimVector& n0) const;

    std::string str() const; // canonical rendering, grlex-sorted, exact fractions

    // building block used by arithmetic; keeps invariants
    static TruncSeries fromMap(int rank, int order, const std::map<DimVector, Rat>& m);

private:
    int rank_ = 0;
    int order_ = 0;
    std::vector<std::pair<DimVector, Rat>> terms_;

    void checkCompatible(const TruncSeries& o) const;
};

// exp(h) for h with zero constant term
TruncSeries seriesExp(const TruncSeries& h);
// log(u) for u with constant term 1
TruncSeries seriesLog(const TruncSeries& u);
// u^r = exp(r*log u) for any integer r (and unit u)
TruncSeries seriesPow(const TruncSeries& u, Int r);

// {a,b} from the monomial rule {x^d, x^e} = <d,e> x^{d+e}
TruncSeries poissonBracket(const SkewForm& form, const TruncSeries& a, const TruncSeries& b);

// A Hamiltonian is a truncated series with zero constant term (an element
// of the graded Lie algebra); the alias documents intent at call sites.
using Hamiltonian = TruncSeries;

void requireHamiltonian(const TruncSeries& h);

} // namespace qwall
