#include "qwall/auto.hpp"

#include <doctest.h>

#include <random>

using namespace qwall;

namespace {
DimVector dv(std::vector<Int> v) { return DimVector(std::move(v)); }
Weight wt(std::vector<long> v)
{
    std::vector<Rat> c;
    for (long x : v)
        c.emplace_back(x);
    return Weight(std::move(c));
}
TruncSeries onePlus(const DimVector& d, int order)
{
    return TruncSeries::one(d.rank(), order) + TruncSeries::monomial(d, Rat(1), order);
}

Hamiltonian randomHamiltonian(std::mt19937_64& rng, int rank, int order, int nterms)
{
    std::uniform_int_distribution<Int> deg(0, order);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    Hamiltonian h = TruncSeries::zero(rank, order);
    for (int j = 0; j < nterms; ++j) {
        std::vector<Int> d(rank);
        for (int i = 0; i < rank; ++i)
            d[i] = deg(rng);
        DimVector dd(d);
        if (dd.isZero() || dd.delta() > order)
            continue;
        h += TruncSeries::monomial(dd, frac(num(rng), den(rng)), order);
    }
    return h;
}
} // namespace

TEST_CASE("flow of zero is the identity; dilogarithm Hamiltonian gives the cluster action")
{
    Quiver a2 = kroneckerQuiver(1);
    const int k = 6;
    CHECK(PoissonAuto::flow(a2.skew(), TruncSeries::zero(2, k)).isIdentity());

    // h = sum_j (-1)^{j-1} x1^j / j^2  ==>  z_i |-> z_i (1+x1)^{(e_1)_i}
    Hamiltonian h = TruncSeries::zero(2, k);
    for (int j = 1; j <= k; ++j)
        h += TruncSeries::monomial(dv({j, 0}), Rat(j % 2 ? 1 : -1, j * j), k);
    PoissonAuto g = PoissonAuto::flow(a2.skew(), h);
    CHECK(g.image(0) == onePlus(dv({1, 0}), k));
    CHECK(g.image(1) == TruncSeries::one(2, k));
}

TEST_CASE("flow of a single monomial Hamiltonian")
{
    Quiver a2 = kroneckerQuiver(1);
    PoissonAuto g = PoissonAuto::flow(a2.skew(), TruncSeries::monomial(dv({1, 0}), Rat(1), 2));
    // {x1, z1} = x1 z1 iterated: z1 |-> z1 (1 + x1 + x1^2/2)
    TruncSeries expect = TruncSeries::one(2, 2) + TruncSeries::monomial(dv({1, 0}), Rat(1), 2) +
                         TruncSeries::monomial(dv({2, 0}), Rat(1, 2), 2);
    CHECK(g.image(0) == expect);
    CHECK(g.image(1) == TruncSeries::one(2, 2));
}

TEST_CASE("wallAuto basics")
{
    Quiver k2 = kroneckerQuiver(2);
    const int k = 6;
    // K2, n0 = (1,1), f = 1+x1x2: x1 |-> x1 (1+x1x2)^2 since <(1,1),(1,0)> = 2
    PoissonAuto g = PoissonAuto::wall(k2.skew(), dv({1, 1}), onePlus(dv({1, 1}), k), +1);
    TruncSeries img = g.applyTo(TruncSeries::monomial(dv({1, 0}), Rat(1), k));
    TruncSeries expect =
        TruncSeries::monomial(dv({1, 0}), Rat(1), k) * seriesPow(onePlus(dv({1, 1}), k), 2);
    CHECK(img == expect);

    // f = 1 -> identity
    CHECK(PoissonAuto::wall(k2.skew(), dv({1, 0}), TruncSeries::one(2, k), +1).isIdentity());

    // A2: z2 is fixed by the (1,0) wall since m(n0) = 0 for m = e2^*
    Quiver a2 = kroneckerQuiver(1);
    PoissonAuto w = PoissonAuto::wall(a2.skew(), dv({1, 0}), onePlus(dv({1, 0}), k), +1);
    CHECK(w.image(1) == TruncSeries::one(2, k));

    CHECK_THROWS_AS(PoissonAuto::wall(k2.skew(), dv({2, 2}), onePlus(dv({2, 2}), k), +1),
                    InputError);
    CHECK_THROWS_AS(PoissonAuto::wall(k2.skew(), dv({1, 1}), onePlus(dv({1, 0}), k), +1),
                    InputError);
}

TEST_CASE("pentagon identity for A2 at order 8")
{
    Quiver a2 = kroneckerQuiver(1);
    const int k = 8;
    PoissonAuto p10 = clusterAuto(a2.skew(), dv({1, 0}), k);
    PoissonAuto p01 = clusterAuto(a2.skew(), dv({0, 1}), k);
    PoissonAuto p11 = clusterAuto(a2.skew(), dv({1, 1}), k);
    CHECK(p01.compose(p10) == p10.compose(p11).compose(p01));
}

TEST_CASE("proportional normals commute")
{
    Quiver k2 = kroneckerQuiver(2);
    const int k = 8;
    PoissonAuto a = clusterAuto(k2.skew(), dv({1, 1}), k);
    PoissonAuto b = clusterAuto(k2.skew(), dv({2, 2}), k);
    CHECK(a.compose(b) == b.compose(a));
}

TEST_CASE("group inverse and associativity")
{
    Quiver k2 = kroneckerQuiver(2);
    const int k = 6;
    std::mt19937_64 rng(555);
    for (int t = 0; t < 10; ++t) {
        PoissonAuto g = PoissonAuto::flow(k2.skew(), randomHamiltonian(rng, 2, k, 4));
        CHECK(g.compose(g.inverse()).isIdentity());
        CHECK(g.inverse().compose(g).isIdentity());
    }
    PoissonAuto a = clusterAuto(k2.skew(), dv({1, 0}), k);
    PoissonAuto b = clusterAuto(k2.skew(), dv({0, 1}), k);
    PoissonAuto c = clusterAuto(k2.skew(), dv({1, 1}), k);
    CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
    CHECK(a.compose(PoissonAuto::identity(k2.skew(), k)) == a);
}

TEST_CASE("logAuto examples and roundtrip")
{
    Quiver a2 = kroneckerQuiver(1);
    const int k = 6;
    CHECK(PoissonAuto::identity(a2.skew(), k).logAuto().isZero());

    // log of the cluster automorphism at (1,0) is the alternating dilogarithm series
    PoissonAuto w = PoissonAuto::wall(a2.skew(), dv({1, 0}), onePlus(dv({1, 0}), k), +1);
    Hamiltonian h = w.logAuto();
    for (int j = 1; j <= k; ++j)
        CHECK(h.coeff(dv({j, 0})) == Rat(j % 2 ? 1 : -1, j * j));

    std::mt19937_64 rng(31337);
    for (int t = 0; t < 25; ++t) {
        Hamiltonian hh = randomHamiltonian(rng, 2, k, 5);
        CHECK(PoissonAuto::flow(a2.skew(), hh).logAuto() == hh);
    }
}

TEST_CASE("flows of commuting Hamiltonians compose additively")
{
    Quiver k2 = kroneckerQuiver(2);
    const int k = 6;
    // h1, h2 supported on the same ray commute
    Hamiltonian h1 = TruncSeries::monomial(dv({1, 1}), Rat(2, 3), k);
    Hamiltonian h2 = TruncSeries::monomial(dv({2, 2}), Rat(-1, 5), k);
    CHECK(poissonBracket(k2.skew(), h1, h2).isZero());
    CHECK(PoissonAuto::flow(k2.skew(), h1).compose(PoissonAuto::flow(k2.skew(), h2)) ==
          PoissonAuto::flow(k2.skew(), h1 + h2));
}

TEST_CASE("invariant monomial is fixed by group elements")
{
    // g fixes x^n prod_i z_i^{<n,e_i>}: equivalently applyTo(x^n) * zFactor(<n,e_.>) = x^n
    Quiver k3 = kroneckerQuiver(3);
    const int k = 6;
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<Int> deg(0, 3);
    for (int t = 0; t < 50; ++t) {
        PoissonAuto g = PoissonAuto::flow(k3.skew(), randomHamiltonian(rng, 2, k, 4));
        DimVector n = dv({deg(rng), deg(rng)});
        if (!n.inNPlus())
            continue;
        Weight mw = Weight::zero(2);
        for (int i = 0; i < 2; ++i)
            mw.c[i] = Rat(k3.skewForm(n, DimVector::unit(2, i)));
        TruncSeries lhs = g.applyTo(TruncSeries::monomial(n, Rat(1), k)) * g.zFactor(mw);
        CHECK(lhs == TruncSeries::monomial(n, Rat(1), k));
    }
}

TEST_CASE("fromImages validates Hamiltonian consistency")
{
    Quiver a2 = kroneckerQuiver(1);
    const int k = 4;
    PoissonAuto g = clusterAuto(a2.skew(), dv({1, 1}), k);
    CHECK_NOTHROW(PoissonAuto::fromImages(a2.skew(), k, g.images()));

    // tampered images: z1 gains an x2-supported factor no flow produces
    std::vector<TruncSeries> bad = g.images();
    bad[0] = bad[0] * onePlus(dv({0, 1}), k);
    CHECK_THROWS_AS(PoissonAuto::fromImages(a2.skew(), k, bad), NotInGroupError);
}

TEST_CASE("factorize: trivial splits and the pentagon split")
{
    Quiver a2 = kroneckerQuiver(1);
    const int k = 8;
    PoissonAuto p10 = clusterAuto(a2.skew(), dv({1, 0}), k);
    PoissonAuto p01 = clusterAuto(a2.skew(), dv({0, 1}), k);
    PoissonAuto p11 = clusterAuto(a2.skew(), dv({1, 1}), k);
    PoissonAuto g = p01.compose(p10);

    auto fp = g.factorize(wt({1, 1}));
    CHECK(fp.plus == g);
    CHECK(fp.zero.isIdentity());
    CHECK(fp.minus.isIdentity());

    auto fm = g.factorize(wt({-1, -1}));
    CHECK(fm.minus == g);
    CHECK(fm.plus.isIdentity());

    // theta = (1,-1): by the pentagon identity the three factors are the
    // individual cluster automorphisms
    auto f = g.factorize(wt({1, -1}));
    CHECK(f.plus == p10);
    CHECK(f.zero == p11);
    CHECK(f.minus == p01);
    CHECK(f.zero.logAuto().supportedOnRay(dv({1, 1})));
}

TEST_CASE("factorize: recomposition and support on random elements")
{
    Quiver k2 = kroneckerQuiver(2);
    const int k = 6;
    std::mt19937_64 rng(808);
    std::uniform_int_distribution<long> tc(-3, 3);
    for (int t = 0; t < 15; ++t) {
        PoissonAuto g = PoissonAuto::flow(k2.skew(), randomHamiltonian(rng, 2, k, 5));
        Weight theta({Rat(tc(rng)), Rat(tc(rng))});
        auto f = g.factorize(theta);
        CHECK(f.plus.compose(f.zero).compose(f.minus) == g);
        const Hamiltonian hp = f.plus.logAuto(), h0 = f.zero.logAuto(), hm = f.minus.logAuto();
        for (const auto& [d, c] : hp.terms())
            CHECK(theta.eval(d) > 0);
        for (const auto& [d, c] : h0.terms())
            CHECK(theta.eval(d) == 0);
        for (const auto& [d, c] : hm.terms())
            CHECK(theta.eval(d) < 0);
    }
}

TEST_CASE("composing with z-factor for general monomials")
{
    Quiver k2 = kroneckerQuiver(2);
    const int k = 6;
    PoissonAuto w = PoissonAuto::wall(k2.skew(), dv({1, 1}), onePlus(dv({1, 1}), k), +1);
    // z^m |-> z^m f^{m(n0)}: for m = (1,1), exponent 2
    CHECK(w.zFactor(wt({1, 1})) == seriesPow(onePlus(dv({1, 1}), k), 2));
    // truncation order drop
    PoissonAuto w4 = w.truncated(4);
    CHECK(w4.order() == 4);
    CHECK(w4.image(0) == w.image(0).truncated(4));
}
