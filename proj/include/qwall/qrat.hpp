#pragma once

#include "qwall/quiver.hpp"

#include <map>
#include <optional>

namespace qwall {

// Dense integer polynomial in q. Coefficients live in int64 until an
// operation overflows, then the polynomial is promoted to mpz; counting
// recursions stay on the fast path almost always.
class ZPoly {
public:
    ZPoly() = default;
    static ZPoly constant(Int c);
    static ZPoly constantZ(const mpz_class& c);
    static ZPoly qPow(int k); // q^k, k >= 0
    static ZPoly fromCoeffs(std::vector<Int> ascending);

    bool isZero() const;
    int degree() const; // -1 for zero
    mpz_class coeff(int i) const;
    bool isBig() const { return big_; }

    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator-() const;
    ZPoly operator*(const ZPoly& o) const;
    bool operator==(const ZPoly& o) const;
    bool operator!=(const ZPoly& o) const { return !(*this == o); }

    mpz_class content() const; // gcd of coefficients, >= 0; 0 for zero poly
    ZPoly divideContent(const mpz_class& g) const;
    int qValuation() const;           // largest k with q^k | poly; 0 for zero
    ZPoly shiftDown(int k) const;     // divide by q^k
    // exact division by a monic divisor over Z; nullopt if not divisible
    std::optional<ZPoly> divExactMonic(const ZPoly& divisor) const;

    mpz_class evalZ(const mpz_class& x) const;
    Rat evalQ(const Rat& x) const;

    std::string str() const; // canonical, e.g. "q^2 - 2*q + 1"

private:
    bool big_ = false;
    std::vector<Int> s_;
    std::vector<mpz_class> b_;

    void promote();
    void shrink();
    void normalize();
    friend class QRat;
};

// Phi_d(q), cached
const ZPoly& cyclotomic(int d);

// Denominator kept in factored form content * q^qExp * prod Phi_d^{e_d};
// every denominator arising from stack counts has this shape, and the
// factors are pairwise coprime so peeling them off the numerator yields
// the fully cancelled form.
struct DenFact {
    mpz_class content = 1; // > 0
    int qExp = 0;
    std::map<int, int> cyc;

    bool isOne() const { return content == 1 && qExp == 0 && cyc.empty(); }
    ZPoly expand() const;
    mpz_class evalZ(const mpz_class& x) const;
    Rat evalQ(const Rat& x) const;
    bool operator==(const DenFact&) const = default;
};

// Rational function of q with integer coefficients, arithmetic exact.
class QRat {
public:
    QRat() = default; // zero
    QRat(Int c);
    static QRat fromPoly(ZPoly p);
    static QRat qPower(Int k); // q^k for any integer k
    static QRat make(ZPoly num, DenFact den);
    // 1 / |GL_n(F_q)| = 1 / (q^{n(n-1)/2} prod_{i=1..n} (q^i - 1))
    static QRat glInverse(int n);

    bool isZero() const { return num_.isZero(); }
    QRat operator+(const QRat& o) const;
    QRat operator-(const QRat& o) const;
    QRat operator-() const;
    QRat operator*(const QRat& o) const;
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    QRat divInt(Int k) const;
    bool operator==(const QRat& o) const;
    bool operator!=(const QRat& o) const { return !(*this == o); }

    // denominator trivial up to an integer content
    bool isPolynomial() const { return den_.qExp == 0 && den_.cyc.empty(); }
    bool isIntegerPolynomial() const { return isPolynomial() && den_.content == 1; }
    bool regularAtOne() const { return den_.cyc.find(1) == den_.cyc.end(); }

    Rat evalAt(const Rat& q0) const; // throws on denominator zero
    Rat evalAtOne() const;           // throws if not regular at 1

    const ZPoly& num() const { return num_; }
    ZPoly den() const { return den_.expand(); }
    std::string str() const; // "num/den" canonical

private:
    ZPoly num_;
    DenFact den_;
    void reduce();
};

// N^{oplus}-graded series over QRat with the twisted product
// x^d * x^e = q^{-chi(e,d)} x^{d+e}; the finite-field shadow of the
// Hall-algebra grading.
class QTorusElem {
public:
    QTorusElem(EulerForm chi, int order);
    static QTorusElem one(const EulerForm& chi, int order);

    int order() const { return order_; }
    const std::map<DimVector, QRat>& terms() const { return terms_; }
    QRat coeff(const DimVector& d) const;
    void setCoeff(const DimVector& d, QRat v);

    QTorusElem operator+(const QTorusElem& o) const;
    QTorusElem operator-(const QTorusElem& o) const;
    QTorusElem starMul(const QTorusElem& o) const;
    // untwisted (commutative) product, for the specialization invariant
    QTorusElem plainMul(const QTorusElem& o) const;

    // log(1 + u) for an element with constant term 1
    QTorusElem log() const;

    bool operator==(const QTorusElem& o) const;

private:
    EulerForm chi_;
    int order_ = 0;
    std::map<DimVector, QRat> terms_;
    QTorusElem mulImpl(const QTorusElem& o, bool twisted) const;
};

} // namespace qwall
