#include "qwall/auto.hpp"

#include <map>

namespace qwall {

PoissonAuto PoissonAuto::identity(const SkewForm& form, int order)
{
    std::vector<TruncSeries> imgs;
    for (int i = 0; i < form.rank(); ++i)
        imgs.push_back(TruncSeries::one(form.rank(), order));
    return PoissonAuto(form, order, std::move(imgs));
}

PoissonAuto PoissonAuto::wall(const SkewForm& form, const DimVector& n0, const TruncSeries& f,
                              int sign)
{
    if (!n0.isPrimitive())
        throw InputError("wall normal must be a primitive vector of N^+");
    if (!f.isUnit())
        throw InputError("wall function must have constant term 1");
    if (!f.supportedOnRay(n0))
        throw InputError("wall function supported off the ray of its normal");
    if (sign != 1 && sign != -1)
        throw InputError("wall sign must be +1 or -1");

    std::vector<TruncSeries> imgs;
    for (int i = 0; i < form.rank(); ++i) {
        // m = e_i^*: exponent sign * m(n0) = sign * (n0)_i
        imgs.push_back(seriesPow(f, sign * n0.c[i]));
    }
    return PoissonAuto(form, f.order(), std::move(imgs));
}

PoissonAuto PoissonAuto::flow(const SkewForm& form, const Hamiltonian& h)
{
    requireHamiltonian(h);
    const int r = form.rank();
    const int k = h.order();
    if (h.rank() != r)
        throw InputError("flow: rank mismatch");

    std::vector<TruncSeries> imgs;
    for (int i = 0; i < r; ++i) {
        // D(z_i) = z_i * hz_i with hz_i = sum_d c_d d_i x^d, so exp(D)(z_i)
        // = z_i * sum_j T^j(1)/j! where T(s) = hz_i*s + {h,s}.
        std::map<DimVector, Rat> hm;
        for (const auto& [d, c] : h.terms())
            if (d.c[i] != 0)
                hm[d] = c * Rat(d.c[i]);
        TruncSeries hz = TruncSeries::fromMap(r, k, hm);

        TruncSeries u = TruncSeries::one(r, k);
        TruncSeries term = TruncSeries::one(r, k);
        for (int j = 1; j <= k; ++j) {
            term = hz * term + poissonBracket(form, h, term);
            term = term * Rat(1, j);
            if (term.isZero())
                break;
            u += term;
        }
        imgs.push_back(std::move(u));
    }
    return PoissonAuto(form, k, std::move(imgs));
}

PoissonAuto PoissonAuto::fromImages(const SkewForm& form, int order,
                                    std::vector<TruncSeries> images)
{
    if (static_cast<int>(images.size()) != form.rank())
        throw InputError("fromImages: one image per vertex required");
    for (const auto& u : images) {
        if (u.rank() != form.rank() || u.order() != order)
            throw InputError("fromImages: image rank/order mismatch");
        if (!u.isUnit())
            throw InputError("fromImages: z-image must be a unit series");
    }
    PoissonAuto g(form, order, std::move(images));
    g.logAuto(); // throws NotInGroupError when not a Hamiltonian flow
    return g;
}

bool PoissonAuto::isIdentity() const
{
    for (const auto& u : images_)
        if (!(u == TruncSeries::one(rank(), order_)))
            return false;
    return true;
}

TruncSeries PoissonAuto::applyTo(const TruncSeries& s) const
{
    if (s.rank() != rank() || s.order() != order_)
        throw InputError("applyTo: series mismatch");
    // power cache per generator, exponents show up repeatedly
    std::vector<std::map<Int, TruncSeries>> cache(rank());
    auto upow = [&](int i, Int e) -> const TruncSeries& {
        auto it = cache[i].find(e);
        if (it == cache[i].end())
            it = cache[i].emplace(e, seriesPow(images_[i], e)).first;
        return it->second;
    };

    TruncSeries out = TruncSeries::zero(rank(), order_);
    for (const auto& [d, c] : s.terms()) {
        TruncSeries t = TruncSeries::monomial(d, c, order_);
        for (int i = 0; i < rank(); ++i) {
            Int e = -form_.eval(d, DimVector::unit(rank(), i));
            if (e != 0)
                t *= upow(i, e);
        }
        out += t;
    }
    return out;
}

TruncSeries PoissonAuto::zFactor(const Weight& m) const
{
    if (m.rank() != rank())
        throw InputError("zFactor: rank mismatch");
    if (!m.integral())
        throw InputError("zFactor: m must be integral");
    TruncSeries out = TruncSeries::one(rank(), order_);
    for (int i = 0; i < rank(); ++i) {
        Int e = m.c[i].get_num().get_si();
        if (e != 0)
            out *= seriesPow(images_[i], e);
    }
    return out;
}

PoissonAuto PoissonAuto::compose(const PoissonAuto& inner) const
{
    if (!(form_ == inner.form_) || order_ != inner.order_)
        throw InputError("compose: mismatched group elements");
    // (g1 o g2)(z_i) = g1(z_i * u2_i) = z_i * u1_i * g1(u2_i)
    std::vector<TruncSeries> imgs;
    for (int i = 0; i < rank(); ++i)
        imgs.push_back(images_[i] * applyTo(inner.images_[i]));
    return PoissonAuto(form_, order_, std::move(imgs));
}

PoissonAuto PoissonAuto::inverse() const { return flow(form_, -logAuto()); }

PoissonAuto PoissonAuto::power(Int e) const
{
    if (e == 0)
        return identity(form_, order_);
    return flow(form_, logAuto() * Rat(static_cast<long>(e)));
}

PoissonAuto PoissonAuto::truncated(int newOrder) const
{
    if (newOrder > order_)
        throw InputError("cannot raise truncation order");
    std::vector<TruncSeries> imgs;
    for (const auto& u : images_)
        imgs.push_back(u.truncated(newOrder));
    return PoissonAuto(form_, newOrder, std::move(imgs));
}

Hamiltonian PoissonAuto::logAutoUpTo(int maxDegree) const
{
    // Degree-by-degree reconstruction: with h known below degree m, the
    // degree-m part of u_i(g) - u_i(flow(h)) equals sum_{delta(d)=m} c_d d_i x^d,
    // an overdetermined system for the c_d which must agree across i.
    const int r = rank();
    Hamiltonian h = TruncSeries::zero(r, order_);
    for (int m = 1; m <= maxDegree; ++m) {
        PoissonAuto cand = flow(form_, h);
        std::map<DimVector, Rat> cm;
        for (int i = 0; i < r; ++i) {
            TruncSeries diff = images_[i] - cand.images_[i];
            if (diff.lowestDegree() < m)
                throw NotInGroupError("z-images are not a Hamiltonian flow for this bracket");
            const TruncSeries part = diff.gradedPart(m);
            for (const auto& [d, c] : part.terms()) {
                if (d.c[i] == 0)
                    throw NotInGroupError("z-image of vertex " + std::to_string(i + 1) +
                                          " has a term of degree " + d.str() +
                                          " not attainable by any flow");
                Rat cd = c / Rat(d.c[i]);
                auto it = cm.find(d);
                if (it == cm.end())
                    cm[d] = cd;
                else if (it->second != cd)
                    throw NotInGroupError("inconsistent flow coefficients at degree " + d.str());
            }
        }
        // a nonzero c_d must be visible from every vertex with d_i != 0
        for (const auto& [d, cd] : cm) {
            for (int i = 0; i < r; ++i) {
                if (d.c[i] == 0)
                    continue;
                TruncSeries diff = images_[i] - cand.images_[i];
                if (diff.gradedPart(m).coeff(d) != cd * Rat(d.c[i]))
                    throw NotInGroupError("inconsistent flow coefficients at degree " + d.str());
            }
        }
        h += TruncSeries::fromMap(r, order_, cm);
    }
    return h;
}

Hamiltonian PoissonAuto::logAuto() const
{
    Hamiltonian h = logAutoUpTo(order_);
    if (!(flow(form_, h) == *this))
        throw NotInGroupError("logAuto: reconstruction mismatch");
    return h;
}

PoissonAuto::Factorization PoissonAuto::factorize(const Weight& theta) const
{
    if (theta.rank() != rank())
        throw InputError("factorize: weight rank mismatch");
    const int r = rank();
    Hamiltonian hp = TruncSeries::zero(r, order_);
    Hamiltonian h0 = hp, hm = hp;

    // Degree-by-degree: the residual log's degree-m part splits by the sign
    // of theta on each monomial degree; pushing the three pieces into the
    // respective factors only disturbs degrees > m.
    for (int m = 1; m <= order_; ++m) {
        PoissonAuto cur =
            flow(form_, hp).compose(flow(form_, h0)).compose(flow(form_, hm));
        PoissonAuto residual = cur.inverse().compose(*this);
        Hamiltonian rlog = residual.logAutoUpTo(m);
        const TruncSeries rpart = rlog.gradedPart(m);
        std::map<DimVector, Rat> mp, m0, mm;
        for (const auto& [d, c] : rpart.terms()) {
            Rat v = theta.eval(d);
            if (v > 0)
                mp[d] = c;
            else if (v == 0)
                m0[d] = c;
            else
                mm[d] = c;
        }
        hp += TruncSeries::fromMap(r, order_, mp);
        h0 += TruncSeries::fromMap(r, order_, m0);
        hm += TruncSeries::fromMap(r, order_, mm);
    }

    Factorization f{flow(form_, hp), flow(form_, h0), flow(form_, hm)};
    if (!(f.plus.compose(f.zero).compose(f.minus) == *this))
        throw Error("factorize: recomposition mismatch");
    return f;
}

bool PoissonAuto::operator==(const PoissonAuto& o) const
{
    return form_ == o.form_ && order_ == o.order_ && images_ == o.images_;
}

PoissonAuto composeAll(const std::vector<PoissonAuto>& factors)
{
    if (factors.empty())
        throw InputError("composeAll: empty factor list");
    PoissonAuto g = factors.front();
    for (size_t i = 1; i < factors.size(); ++i)
        g = factors[i].compose(g);
    return g;
}

PoissonAuto clusterAuto(const SkewForm& form, const DimVector& d, int order)
{
    if (!d.inNPlus())
        throw InputError("clusterAuto: d must lie in N^+");
    const Int g = d.gcd();
    const DimVector n0 = d.primitivePart();
    TruncSeries f = TruncSeries::one(d.rank(), order) + TruncSeries::monomial(d, Rat(1), order);
    // Phi_d(x^n) = x^n (1+x^d)^{<d,n>} = x^n ((1+x^d)^g)^{<n0,n>}
    return PoissonAuto::wall(form, n0, seriesPow(f, g), +1);
}

Hamiltonian wallHamiltonian(const DimVector& n0, const TruncSeries& f)
{
    if (!n0.isPrimitive())
        throw InputError("wallHamiltonian: normal must be primitive");
    if (!f.isUnit() || !f.supportedOnRay(n0))
        throw InputError("wallHamiltonian: bad wall function");
    // f = exp(sum_j j c_j x^{j n0})  <=>  h = sum_j c_j x^{j n0}
    TruncSeries lg = seriesLog(f);
    std::map<DimVector, Rat> hm;
    for (const auto& [d, c] : lg.terms()) {
        Int j = d.delta() / n0.delta();
        hm[d] = c / Rat(j);
    }
    return TruncSeries::fromMap(f.rank(), f.order(), hm);
}

TruncSeries wallFunction(const DimVector& n0, const Hamiltonian& h)
{
    if (!n0.isPrimitive())
        throw InputError("wallFunction: normal must be primitive");
    if (!h.supportedOnRay(n0))
        throw InputError("wallFunction: Hamiltonian supported off the ray");
    std::map<DimVector, Rat> lm;
    for (const auto& [d, c] : h.terms()) {
        Int j = d.delta() / n0.delta();
        lm[d] = c * Rat(j);
    }
    return seriesExp(TruncSeries::fromMap(h.rank(), h.order(), lm));
}

} // namespace qwall
