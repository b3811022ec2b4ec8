#include "qwall/qrat.hpp"

#include <doctest.h>

using namespace qwall;

namespace {
DimVector dv(std::vector<Int> v) { return DimVector(std::move(v)); }
} // namespace

TEST_CASE("ZPoly arithmetic and promotion")
{
    ZPoly a = ZPoly::fromCoeffs({1, 2, 1}); // 1 + 2q + q^2
    ZPoly b = ZPoly::fromCoeffs({-1, 1});   // q - 1
    CHECK((a * b) == ZPoly::fromCoeffs({-1, -1, 1, 1}));
    CHECK((a + b) == ZPoly::fromCoeffs({0, 3, 1}));
    CHECK(a.str() == "q^2 + 2*q + 1");
    CHECK(b.evalZ(5) == 4);

    // overflow promotes to big integers and stays exact
    ZPoly big = ZPoly::constant(1);
    ZPoly base = ZPoly::fromCoeffs({1000000007, 1});
    for (int i = 0; i < 8; ++i)
        big = big * base;
    CHECK(big.isBig());
    CHECK(big.degree() == 8);
    mpz_class c0 = big.coeff(0);
    mpz_class expect;
    mpz_ui_pow_ui(expect.get_mpz_t(), 1000000007u, 8u);
    CHECK(c0 == expect);
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic(1) == ZPoly::fromCoeffs({-1, 1}));
    CHECK(cyclotomic(2) == ZPoly::fromCoeffs({1, 1}));
    CHECK(cyclotomic(3) == ZPoly::fromCoeffs({1, 1, 1}));
    CHECK(cyclotomic(4) == ZPoly::fromCoeffs({1, 0, 1}));
    CHECK(cyclotomic(6) == ZPoly::fromCoeffs({1, -1, 1}));
    // product over divisors reassembles q^n - 1
    ZPoly p = cyclotomic(1) * cyclotomic(2) * cyclotomic(3) * cyclotomic(6);
    CHECK(p == ZPoly::qPow(6) - ZPoly::constant(1));
}

TEST_CASE("QRat reduction and evaluation")
{
    // (q^2 - 1)/(q - 1) reduces to q + 1
    QRat r = QRat::make(ZPoly::fromCoeffs({-1, 0, 1}), [] {
        DenFact d;
        d.cyc[1] = 1;
        return d;
    }());
    CHECK(r.isPolynomial());
    CHECK(r == QRat::fromPoly(ZPoly::fromCoeffs({1, 1})));
    CHECK(r.regularAtOne());
    CHECK(r.evalAtOne() == 2);

    QRat gl2 = QRat::glInverse(2); // 1/((q^2-1)(q^2-q))
    CHECK(gl2.evalAt(Rat(2)) == frac(1, 6));
    CHECK(gl2.evalAt(Rat(3)) == frac(1, 48));
    CHECK_FALSE(gl2.regularAtOne());

    // q/(q-1)^2 at q = 3
    QRat a = QRat::qPower(1) * QRat::glInverse(1) * QRat::glInverse(1);
    CHECK(a.evalAt(Rat(3)) == frac(3, 4));

    CHECK((a - a).isZero());
    CHECK(a + a == a * QRat(2));
    CHECK(QRat(6).divInt(4) == QRat(3).divInt(2));
}

TEST_CASE("QRat addition with mixed denominators")
{
    QRat x = QRat::glInverse(1);            // 1/(q-1)
    QRat y = QRat::qPower(-2);              // 1/q^2
    QRat s = x + y;
    CHECK(s.evalAt(Rat(3)) == frac(1, 2) + frac(1, 9));
    QRat t = s - y;
    CHECK(t == x);
}

TEST_CASE("quantum torus twist and log")
{
    Quiver a2 = kroneckerQuiver(1);
    EulerForm chi = a2.euler();
    const int k = 4;

    QTorusElem x1(chi, k), x2(chi, k);
    x1.setCoeff(dv({1, 0}), QRat(1));
    x2.setCoeff(dv({0, 1}), QRat(1));

    // x^d * x^e = q^{-chi(e,d)} x^{d+e}
    QTorusElem a = x1.starMul(x2); // chi((0,1),(1,0)) = 0
    CHECK(a.coeff(dv({1, 1})) == QRat(1));
    QTorusElem b = x2.starMul(x1); // chi((1,0),(0,1)) = -1
    CHECK(b.coeff(dv({1, 1})) == QRat::qPower(1));

    // removing the twist recovers the commutative product
    CHECK(x1.plainMul(x2) == x2.plainMul(x1));

    // log(1+u): the star-powers pick up twists, u^{*j} = q^{-j(j-1)/2} x^{jd}
    QTorusElem u = QTorusElem::one(chi, k);
    u.setCoeff(dv({1, 0}), QRat(1));
    QTorusElem l = u.log();
    CHECK(l.coeff(dv({1, 0})) == QRat(1));
    CHECK(l.coeff(dv({2, 0})) == (QRat::qPower(-1) * QRat(-1)).divInt(2));
    CHECK(l.coeff(dv({3, 0})) == QRat::qPower(-3).divInt(3));

    // associativity of the twisted product
    QTorusElem lhs = x1.starMul(x2).starMul(b);
    QTorusElem rhs = x1.starMul(x2.starMul(b));
    CHECK(lhs == rhs);
}
