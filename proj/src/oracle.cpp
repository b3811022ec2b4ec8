#include "qwall/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace qwall {

FpMat fpMul(const FpMat& x, const FpMat& y, int p)
{
    FpMat r = FpMat::zero(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            int v = x.at(i, k);
            if (!v)
                continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % p;
        }
    return r;
}

FpMat fpAddScaled(const FpMat& x, const FpMat& y, int c, int p)
{
    FpMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i)
        r.a[i] = ((r.a[i] + c * y.a[i]) % p + p) % p;
    return r;
}

namespace {

int fpInverse(int x, int p)
{
    x = ((x % p) + p) % p;
    for (int y = 1; y < p; ++y)
        if (x * y % p == 1)
            return y;
    throw Error("no inverse mod p");
}

int ratModP(const Rat& r, int p)
{
    mpz_class den = r.get_den();
    if (mpz_fdiv_ui(den.get_mpz_t(), p) == 0)
        throw InputError("relation coefficient has denominator divisible by p");
    mpz_class num = r.get_num();
    int n = static_cast<int>(mpz_fdiv_ui(num.get_mpz_t(), p));
    int d = static_cast<int>(mpz_fdiv_ui(den.get_mpz_t(), p));
    return n * fpInverse(d, p) % p;
}

// composite matrix of a path [a1..ar] (a1 applied first)
FpMat pathMatrix(const RepPoint& e, const std::vector<int>& path, int p)
{
    FpMat m = e.mats[path[0]];
    for (size_t i = 1; i < path.size(); ++i)
        m = fpMul(e.mats[path[i]], m, p);
    return m;
}

bool relationsHold(const Quiver& q, const RepPoint& e, const std::vector<Relation>& rels, int p)
{
    for (const Relation& rel : rels) {
        if (rel.empty())
            continue;
        const Arrow& a0 = q.arrows()[rel[0].path[0]];
        const Arrow& aL = q.arrows()[rel[0].path.back()];
        FpMat acc = FpMat::zero(static_cast<int>(e.dims.c[aL.tgt]),
                                static_cast<int>(e.dims.c[a0.src]));
        for (const PathTerm& t : rel) {
            int c = ratModP(t.coeff, p);
            if (c == 0)
                continue;
            acc = fpAddScaled(acc, pathMatrix(e, t.path, p), c, p);
        }
        if (!acc.isZero())
            return false;
    }
    return true;
}

// All k-dim subspaces of F_p^n as reduced row-echelon bases, cached.
struct SubspaceKey {
    int p, n, k;
    bool operator<(const SubspaceKey& o) const
    {
        return std::tie(p, n, k) < std::tie(o.p, o.n, o.k);
    }
};

const std::vector<FpMat>& subspaces(int p, int n, int k)
{
    static std::map<SubspaceKey, std::vector<FpMat>> cache;
    auto it = cache.find({p, n, k});
    if (it != cache.end())
        return it->second;

    std::vector<FpMat> out;
    if (k == 0) {
        out.push_back(FpMat::zero(0, n));
    } else if (k <= n) {
        // pivot columns strictly increasing; free entries sit right of their
        // pivot and off the other pivot columns
        std::vector<int> piv(k);
        for (int i = 0; i < k; ++i)
            piv[i] = i;
        auto emit = [&]() {
            std::vector<std::pair<int, int>> freePos;
            for (int r = 0; r < k; ++r)
                for (int c = piv[r] + 1; c < n; ++c)
                    if (std::find(piv.begin(), piv.end(), c) == piv.end())
                        freePos.push_back({r, c});
            std::vector<int> v(freePos.size(), 0);
            while (true) {
                FpMat m = FpMat::zero(k, n);
                for (int r = 0; r < k; ++r)
                    m.at(r, piv[r]) = 1;
                for (size_t i = 0; i < freePos.size(); ++i)
                    m.at(freePos[i].first, freePos[i].second) = v[i];
                out.push_back(m);
                size_t i = 0;
                while (i < v.size() && ++v[i] == p)
                    v[i++] = 0;
                if (i == v.size())
                    break;
            }
        };
        while (true) {
            emit();
            int i = k - 1;
            while (i >= 0 && piv[i] == n - k + i)
                --i;
            if (i < 0)
                break;
            ++piv[i];
            for (int j = i + 1; j < k; ++j)
                piv[j] = piv[j - 1] + 1;
        }
    }
    return cache.emplace(SubspaceKey{p, n, k}, std::move(out)).first->second;
}

// is w in the row space of the rref basis m
bool inSpan(const FpMat& m, std::vector<int> w, int p)
{
    for (int r = 0; r < m.rows; ++r) {
        int pivCol = -1;
        for (int c = 0; c < m.cols; ++c)
            if (m.at(r, c)) {
                pivCol = c;
                break;
            }
        if (pivCol < 0)
            continue;
        int c = w[pivCol] % p;
        if (c)
            for (int j = 0; j < m.cols; ++j)
                w[j] = ((w[j] - c * m.at(r, j)) % p + p) % p;
    }
    for (int x : w)
        if (x % p != 0)
            return false;
    return true;
}

// does E admit a subrepresentation with dimension vector a?
bool hasSubrep(const Quiver& q, const RepPoint& e, const DimVector& a)
{
    const int p = e.p;
    const int nv = q.rank();
    std::vector<const std::vector<FpMat>*> cands(nv);
    for (int i = 0; i < nv; ++i) {
        cands[i] = &subspaces(p, static_cast<int>(e.dims.c[i]), static_cast<int>(a.c[i]));
        if (cands[i]->empty())
            return false;
    }
    std::vector<size_t> idx(nv, 0);
    while (true) {
        bool closed = true;
        for (size_t ai = 0; ai < q.arrows().size() && closed; ++ai) {
            const Arrow& ar = q.arrows()[ai];
            const FpMat& u = (*cands[ar.src])[idx[ar.src]];
            const FpMat& v = (*cands[ar.tgt])[idx[ar.tgt]];
            for (int r = 0; r < u.rows && closed; ++r) {
                std::vector<int> w(e.dims.c[ar.tgt], 0);
                for (int out = 0; out < e.mats[ai].rows; ++out) {
                    int s = 0;
                    for (int in = 0; in < e.mats[ai].cols; ++in)
                        s += e.mats[ai].at(out, in) * u.at(r, in);
                    w[out] = s % p;
                }
                if (!inSpan(v, w, p))
                    closed = false;
            }
        }
        if (closed)
            return true;
        int i = 0;
        while (i < nv && ++idx[i] == cands[i]->size())
            idx[i++] = 0;
        if (i == nv)
            return false;
    }
}

} // namespace

void enumerateReps(const Quiver& q, const std::vector<Relation>& rels, const DimVector& d,
                   int p, const std::function<bool(const RepPoint&)>& fn, Int budget)
{
    if (p != 2 && p != 3 && p != 5)
        throw InputError("oracle fields are F_2, F_3, F_5");
    if (d.rank() != q.rank() || !d.nonNegative())
        throw InputError("enumerateReps: bad dimension vector");

    Int entries = 0;
    for (const Arrow& a : q.arrows())
        entries += d.c[a.src] * d.c[a.tgt];
    {
        Int size = 1;
        for (Int i = 0; i < entries; ++i) {
            if (size > budget / p)
                throw BudgetError("oracle enumeration exceeds tuple budget");
            size *= p;
        }
        if (size > budget)
            throw BudgetError("oracle enumeration exceeds tuple budget");
    }

    RepPoint e;
    e.p = p;
    e.dims = d;
    for (const Arrow& a : q.arrows())
        e.mats.push_back(FpMat::zero(static_cast<int>(d.c[a.tgt]), static_cast<int>(d.c[a.src])));

    while (true) {
        if (relationsHold(q, e, rels, p))
            if (!fn(e))
                return;
        // odometer over all matrix entries, earliest entry varies fastest
        size_t m = 0;
        while (m < e.mats.size()) {
            if (e.mats[m].a.empty()) {
                ++m;
                continue;
            }
            size_t i = 0;
            auto& a = e.mats[m].a;
            while (i < a.size() && ++a[i] == p)
                a[i++] = 0;
            if (i < a.size())
                break;
            ++m;
        }
        if (m == e.mats.size())
            break;
    }
}

Int countReps(const Quiver& q, const std::vector<Relation>& rels, const DimVector& d, int p,
              Int budget)
{
    Int n = 0;
    enumerateReps(
        q, rels, d, p,
        [&](const RepPoint&) {
            ++n;
            return true;
        },
        budget);
    return n;
}

bool isSemistable(const Quiver& q, const RepPoint& e, const Weight& theta)
{
    if (theta.eval(e.dims) != 0)
        return false;
    for (const DimVector& a : dimVectorsUpTo(q.rank(), e.dims.delta())) {
        if (a == e.dims || !e.dims.dominates(a))
            continue;
        if (theta.eval(a) <= 0)
            continue;
        if (hasSubrep(q, e, a))
            return false;
    }
    return true;
}

bool isStable(const Quiver& q, const RepPoint& e, const Weight& theta)
{
    if (e.dims.isZero() || theta.eval(e.dims) != 0)
        return false;
    for (const DimVector& a : dimVectorsUpTo(q.rank(), e.dims.delta())) {
        if (a == e.dims || !e.dims.dominates(a))
            continue;
        if (theta.eval(a) < 0)
            continue;
        if (hasSubrep(q, e, a))
            return false;
    }
    return true;
}

Rat bruteStackCount(const Quiver& q, const std::vector<Relation>& rels, const DimVector& d,
                    const Weight& theta, int p, Int budget)
{
    Int n = 0;
    enumerateReps(
        q, rels, d, p,
        [&](const RepPoint& e) {
            if (isSemistable(q, e, theta))
                ++n;
            return true;
        },
        budget);
    Rat den(1);
    for (int i = 0; i < q.rank(); ++i)
        den *= Rat(glOrder(static_cast<int>(d.c[i]), p));
    Rat r = Rat(n) / den;
    r.canonicalize();
    return r;
}

std::vector<DimVector> selfStableDims(const Quiver& q, const std::vector<Relation>& rels,
                                      Int bound, int p, Int budget)
{
    std::vector<DimVector> out;
    for (const DimVector& d : dimVectorsUpTo(q.rank(), bound)) {
        Weight theta = q.skew().thetaOf(d);
        bool found = false;
        enumerateReps(
            q, rels, d, p,
            [&](const RepPoint& e) {
                if (isStable(q, e, theta)) {
                    found = true;
                    return false;
                }
                return true;
            },
            budget);
        if (found)
            out.push_back(d);
    }
    return out;
}

Int glOrder(int n, int p)
{
    Int pn = 1;
    for (int i = 0; i < n; ++i)
        pn *= p;
    Int r = 1, pi = 1;
    for (int i = 0; i < n; ++i) {
        r *= pn - pi;
        pi *= p;
    }
    return r;
}

std::vector<DimVector> dimVectorsUpTo(int rank, Int bound)
{
    std::vector<DimVector> out;
    DimVector d = DimVector::zero(rank);
    while (true) {
        int i = 0;
        while (i < rank) {
            d.c[i] += 1;
            if (d.delta() <= bound)
                break;
            d.c[i] = 0;
            ++i;
        }
        if (i == rank)
            break;
        out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qwall
