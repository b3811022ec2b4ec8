#include "qwall/scattering.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qwall {

namespace {

int sgn(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

std::string wallName(const Wall& w) { return "wall n0=" + w.normal.str(); }

// solve theta(rows[i]) = rhs[i], any particular rational solution
std::optional<Weight> solveLinear(int rank, const std::vector<DimVector>& rows,
                                  const std::vector<Rat>& rhs)
{
    std::vector<std::vector<Rat>> m;
    for (size_t i = 0; i < rows.size(); ++i) {
        std::vector<Rat> row(rank + 1);
        for (int j = 0; j < rank; ++j)
            row[j] = Rat(rows[i].c[j]);
        row[rank] = rhs[i];
        m.push_back(std::move(row));
    }
    size_t r = 0;
    std::vector<int> pivotCol;
    for (int c = 0; c < rank && r < m.size(); ++c) {
        size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[r], m[piv]);
        Rat lead = m[r][c];
        for (int j = 0; j <= rank; ++j)
            m[r][j] /= lead;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            Rat f = m[i][c];
            for (int j = 0; j <= rank; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivotCol.push_back(c);
        ++r;
    }
    for (size_t i = r; i < m.size(); ++i)
        if (m[i][rank] != 0)
            return std::nullopt;
    Weight w = Weight::zero(rank);
    for (size_t i = 0; i < pivotCol.size(); ++i)
        w.c[pivotCol[i]] = m[i][rank];
    return w;
}

struct Trace {
    Int s = 0, t = 0; // primitive direction in slice coordinates
    int wallIndex = -1;
    int eps = 0;
};

// angular order starting at direction (1,0), counterclockwise
bool angularLess(const Trace& a, const Trace& b)
{
    auto half = [](const Trace& v) { return (v.t > 0 || (v.t == 0 && v.s > 0)) ? 0 : 1; };
    int ha = half(a), hb = half(b);
    if (ha != hb)
        return ha < hb;
    Int cross = a.s * b.t - a.t * b.s;
    if (cross != 0)
        return cross > 0;
    return a.wallIndex < b.wallIndex; // same ray: stable by index (they commute)
}

} // namespace

bool Wall::coneContains(const Weight& theta) const
{
    if (cone.fullHyperplane)
        return true;
    for (const SignConstraint& sc : cone.constraints)
        if (Rat(sc.sign) * theta.eval(sc.w) < 0)
            return false;
    return true;
}

ScatteringDiagram::ScatteringDiagram(SkewForm form, int order, std::vector<Wall> walls)
    : form_(std::move(form)), order_(order)
{
    for (Wall& w : walls) {
        if (!w.normal.isPrimitive())
            throw InputError("wall normal must be primitive in N^+");
        if (w.f.rank() != form_.rank())
            throw InputError("wall function rank mismatch");
        if (w.f.order() != order_)
            w.f = w.f.truncated(order_);
        if (!w.f.isUnit() || !w.f.supportedOnRay(w.normal))
            throw InputError("invalid wall function on " + wallName(w));
        for (const SignConstraint& sc : w.cone.constraints)
            if (sc.w.rank() != form_.rank() || (sc.sign != 1 && sc.sign != -1))
                throw InputError("invalid cone constraint on " + wallName(w));
        if (w.f == TruncSeries::one(form_.rank(), order_))
            continue;
        walls_.push_back(std::move(w));
    }
}

ScatteringDiagram ScatteringDiagram::truncated(int newOrder) const
{
    std::vector<Wall> ws;
    for (const Wall& w : walls_)
        ws.push_back(Wall{w.normal, w.cone, w.f.truncated(newOrder)});
    return ScatteringDiagram(form_, newOrder, std::move(ws));
}

std::vector<Crossing> crossings(const ScatteringDiagram& d, const GenericPath& path)
{
    if (path.waypoints.size() < 2)
        throw InputError("path needs at least two waypoints");
    const auto& walls = d.walls();

    // endpoints and interior waypoints must avoid the walls
    for (size_t wp = 0; wp < path.waypoints.size(); ++wp) {
        const Weight& p = path.waypoints[wp];
        for (const Wall& w : walls) {
            if (p.eval(w.normal) == 0 && w.coneContains(p))
                throw GenericityError((wp == 0 || wp + 1 == path.waypoints.size()
                                           ? std::string("path endpoint lies on ")
                                           : std::string("path waypoint lies on ")) +
                                      wallName(w));
        }
    }

    std::vector<Crossing> out;
    for (size_t seg = 0; seg + 1 < path.waypoints.size(); ++seg) {
        const Weight& p = path.waypoints[seg];
        const Weight& q = path.waypoints[seg + 1];
        std::vector<Crossing> segCross;
        for (size_t wi = 0; wi < walls.size(); ++wi) {
            const Wall& w = walls[wi];
            Rat a = p.eval(w.normal), b = q.eval(w.normal);
            if (a == 0 && b == 0) {
                // segment inside the hyperplane: degenerate if it meets the cone
                Rat lo(0), hi(1);
                bool empty = false;
                for (const SignConstraint& sc : w.cone.constraints) {
                    Rat va = Rat(sc.sign) * p.eval(sc.w);
                    Rat vb = Rat(sc.sign) * q.eval(sc.w);
                    Rat dv = vb - va; // constraint value va + t*dv >= 0
                    if (dv == 0) {
                        if (va < 0)
                            empty = true;
                    } else if (dv > 0) {
                        Rat t0 = -va / dv;
                        if (t0 > lo)
                            lo = t0;
                    } else {
                        Rat t0 = -va / dv;
                        if (t0 < hi)
                            hi = t0;
                    }
                }
                if (!empty && lo <= hi)
                    throw GenericityError("path segment runs inside " + wallName(w));
                continue;
            }
            if ((a > 0 && b > 0) || (a < 0 && b < 0))
                continue;
            if (a == 0 || b == 0)
                continue; // endpoint touch off the cone was vetted above
            Rat t = a / (a - b);
            Weight x = p * (Rat(1) - t) + q * t;
            bool inside = true;
            for (const SignConstraint& sc : w.cone.constraints) {
                Rat v = Rat(sc.sign) * x.eval(sc.w);
                if (v < 0) {
                    inside = false;
                    break;
                }
                if (v == 0)
                    throw GenericityError("path crosses the boundary of " + wallName(w));
            }
            if (!inside)
                continue;
            if (x.isZero())
                throw GenericityError("path passes through the origin");
            segCross.push_back(Crossing{static_cast<int>(wi), -sgn(b - a),
                                        static_cast<int>(seg), t});
        }
        std::sort(segCross.begin(), segCross.end(), [](const Crossing& l, const Crossing& r) {
            if (l.t != r.t)
                return l.t < r.t;
            return l.wallIndex < r.wallIndex;
        });
        for (size_t i = 0; i + 1 < segCross.size(); ++i) {
            if (segCross[i].t != segCross[i + 1].t)
                continue;
            const Wall& w1 = walls[segCross[i].wallIndex];
            const Wall& w2 = walls[segCross[i + 1].wallIndex];
            // same hyperplane is fine (the wall elements commute)
            if (w1.normal == w2.normal)
                continue;
            throw GenericityError("path meets the intersection of " + wallName(w1) + " and " +
                                  wallName(w2));
        }
        out.insert(out.end(), segCross.begin(), segCross.end());
    }
    return out;
}

PoissonAuto pathOrderedProduct(const ScatteringDiagram& d, const GenericPath& path)
{
    PoissonAuto g = PoissonAuto::identity(d.form(), d.order());
    for (const Crossing& c : crossings(d, path)) {
        const Wall& w = d.walls()[c.wallIndex];
        g = w.toAuto(d.form(), c.sign).compose(g);
    }
    return g;
}

namespace {

// loop product around a joint theta*, sliced by the plane theta* + sA + tB
PoissonAuto jointLoopProduct(const ScatteringDiagram& d, const Weight& thetaStar,
                             const Weight& a, const Weight& b, std::string* desc)
{
    std::vector<Trace> traces;
    for (size_t wi = 0; wi < d.walls().size(); ++wi) {
        const Wall& w = d.walls()[wi];
        if (thetaStar.eval(w.normal) != 0 || !w.coneContains(thetaStar))
            continue;
        Rat an = a.eval(w.normal), bn = b.eval(w.normal);
        if (an == 0 && bn == 0)
            throw Error("slice plane is not transverse to " + wallName(w));
        std::vector<Int> wn = primitiveIntVector({an, bn});
        for (int s : {+1, -1}) {
            Int vs = -s * wn[1], vt = s * wn[0];
            // first-order feasibility of direction (vs,vt) against the cone
            bool ok = true;
            for (const SignConstraint& sc : w.cone.constraints) {
                Rat c0 = Rat(sc.sign) * thetaStar.eval(sc.w);
                if (c0 > 0)
                    continue;
                Rat cd = Rat(sc.sign) * (a.eval(sc.w) * vs + b.eval(sc.w) * vt);
                if (!(c0 == 0 && cd > 0)) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            // eps = -sign(rot90ccw(v) . wn)
            Int dd = -vt * wn[0] + vs * wn[1];
            Trace tr;
            tr.s = vs;
            tr.t = vt;
            tr.wallIndex = static_cast<int>(wi);
            tr.eps = dd > 0 ? -1 : +1;
            traces.push_back(tr);
        }
    }
    std::sort(traces.begin(), traces.end(), angularLess);
    if (desc) {
        std::ostringstream os;
        os << "joint at " << thetaStar.str();
        *desc = os.str();
    }
    PoissonAuto g = PoissonAuto::identity(d.form(), d.order());
    for (const Trace& tr : traces)
        g = d.walls()[tr.wallIndex].toAuto(d.form(), tr.eps).compose(g);
    return g;
}

// dual weights A, B with A(u)=1, A(v)=0, B(u)=0, B(v)=1
std::pair<Weight, Weight> dualPair(int rank, const DimVector& u, const DimVector& v)
{
    auto a = solveLinear(rank, {u, v}, {Rat(1), Rat(0)});
    auto b = solveLinear(rank, {u, v}, {Rat(0), Rat(1)});
    if (!a || !b)
        throw Error("dualPair: vectors are not independent");
    return {*a, *b};
}

// candidate codimension-two joints with witnesses and slice spans
struct Joint {
    Weight point;
    DimVector u, v;
};

std::vector<Joint> enumerateJoints(const ScatteringDiagram& d)
{
    std::vector<Joint> joints;
    const auto& walls = d.walls();
    if (d.rank() <= 1 || walls.empty())
        return joints;
    if (d.rank() == 2) {
        joints.push_back(Joint{Weight::zero(2), DimVector::unit(2, 0), DimVector::unit(2, 1)});
        return joints;
    }

    std::set<std::vector<Rat>> seen;
    auto push = [&](const Weight& pt, const DimVector& u, const DimVector& v) {
        if (!seen.insert(pt.c).second)
            return;
        joints.push_back(Joint{pt, u, v});
    };

    auto strictsOnSubspace = [&](const std::vector<DimVector>& zeros,
                                 const std::vector<SignConstraint>& cand)
        -> std::optional<Weight> {
        // drop constraints identically zero on the subspace
        std::vector<Weight> kernel = weightKernel(d.rank(), zeros);
        std::vector<SignConstraint> stricts;
        for (const SignConstraint& sc : cand) {
            bool zero = true;
            for (const Weight& kb : kernel)
                if (kb.eval(sc.w) != 0) {
                    zero = false;
                    break;
                }
            if (!zero)
                stricts.push_back(sc);
        }
        return strictFeasiblePoint(d.rank(), zeros, stricts);
    };

    // facet joints of a single wall
    for (const Wall& w : walls) {
        for (size_t ci = 0; ci < w.cone.constraints.size(); ++ci) {
            const SignConstraint& f = w.cone.constraints[ci];
            if (f.w.primitivePart() == w.normal.primitivePart())
                continue; // trivial on the wall hyperplane
            std::vector<SignConstraint> others;
            for (size_t cj = 0; cj < w.cone.constraints.size(); ++cj)
                if (cj != ci)
                    others.push_back(w.cone.constraints[cj]);
            auto pt = strictsOnSubspace({w.normal, f.w}, others);
            if (pt && !pt->isZero())
                push(*pt, w.normal, f.w);
        }
    }
    // pairwise joints
    for (size_t i = 0; i < walls.size(); ++i)
        for (size_t j = i + 1; j < walls.size(); ++j) {
            if (walls[i].normal.primitivePart() == walls[j].normal.primitivePart())
                continue;
            std::vector<SignConstraint> cand = walls[i].cone.constraints;
            cand.insert(cand.end(), walls[j].cone.constraints.begin(),
                        walls[j].cone.constraints.end());
            auto pt = strictsOnSubspace({walls[i].normal, walls[j].normal}, cand);
            if (pt && !pt->isZero())
                push(*pt, walls[i].normal, walls[j].normal);
        }
    return joints;
}

} // namespace

ConsistencyReport checkConsistent(const ScatteringDiagram& d)
{
    ConsistencyReport rep;
    rep.discrepancy = TruncSeries::zero(d.rank(), d.order());
    for (const Joint& j : enumerateJoints(d)) {
        auto [a, b] = dualPair(d.rank(), j.u, j.v);
        std::string desc;
        PoissonAuto loop = jointLoopProduct(d, j.point, a, b, &desc);
        if (!loop.isIdentity()) {
            rep.consistent = false;
            rep.joint = desc;
            rep.discrepancy = loop.logAuto();
            return rep;
        }
    }
    return rep;
}

bool isConsistent(const ScatteringDiagram& d) { return checkConsistent(d).consistent; }

std::vector<Wall> clusterInitial(const Quiver& q, int k)
{
    std::vector<Wall> walls;
    for (int i = 0; i < q.rank(); ++i) {
        DimVector ei = DimVector::unit(q.rank(), i);
        TruncSeries f = TruncSeries::one(q.rank(), k) + TruncSeries::monomial(ei, Rat(1), k);
        walls.push_back(Wall{ei, Cone::hyperplane(), f});
    }
    return walls;
}

bool isIncoming(const SkewForm& form, const Wall& w)
{
    Weight thetaN = form.thetaOf(w.normal);
    if (thetaN.isZero())
        throw UnsupportedError("incoming/outgoing undefined: normal " + w.normal.str() +
                               " is central for the skew form");
    return w.coneContains(thetaN);
}

ScatteringDiagram ksComplete(const SkewForm& form, const std::vector<Wall>& initial, int k)
{
    if (form.rank() != 2)
        throw UnsupportedError("ksComplete is implemented for rank 2 only");
    for (const Wall& w : initial)
        if (!w.cone.fullHyperplane)
            throw InputError("ksComplete initial walls must be full lines through the origin");

    // accumulated Hamiltonians of inserted rays, keyed by primitive normal
    std::map<DimVector, Hamiltonian> rayHam;
    std::map<DimVector, std::vector<Int>> rayDir;

    auto assemble = [&](int order) {
        std::vector<Wall> walls;
        for (const Wall& w : initial)
            walls.push_back(Wall{w.normal, w.cone, w.f.truncated(order)});
        for (const auto& [n0, h] : rayHam) {
            if (h.isZero())
                continue;
            const auto& v = rayDir.at(n0);
            DimVector w(std::vector<Int>{v[0], v[1]});
            walls.push_back(Wall{n0, Cone::signs({SignConstraint{w, +1}}),
                                 wallFunction(n0, h.truncated(order))});
        }
        return ScatteringDiagram(form, order, std::move(walls));
    };

    Weight e1 = Weight::dualUnit(2, 0), e2 = Weight::dualUnit(2, 1);
    for (int ell = 2; ell <= k; ++ell) {
        ScatteringDiagram cur = assemble(ell);
        PoissonAuto loop = jointLoopProduct(cur, Weight::zero(2), e1, e2, nullptr);
        if (loop.isIdentity())
            continue;
        Hamiltonian h = loop.logAuto();
        if (h.lowestDegree() < ell)
            throw Error("ksComplete: discrepancy below current order");
        const TruncSeries part = h.gradedPart(ell);
        for (const auto& [dcur, c] : part.terms()) {
            DimVector n0 = dcur.primitivePart();
            if (n0.c[0] <= 0 || n0.c[1] <= 0)
                throw Error("ksComplete: discrepancy in a coordinate direction " + n0.str());
            Weight thetaN = form.thetaOf(n0);
            if (thetaN.isZero())
                throw UnsupportedError(
                    "ksComplete: cannot orient outgoing ray, normal is central");
            if (rayDir.find(n0) == rayDir.end())
                rayDir[n0] = primitiveIntVector({-thetaN.c[0], -thetaN.c[1]});
            const auto& v = rayDir.at(n0);
            // epsilon of this ray in the canonical counterclockwise loop
            Int dd = -v[1] * n0.c[0] + v[0] * n0.c[1];
            int eps = dd > 0 ? -1 : +1;
            auto it = rayHam.find(n0);
            if (it == rayHam.end())
                it = rayHam.emplace(n0, TruncSeries::zero(2, k)).first;
            it->second += TruncSeries::monomial(dcur, -Rat(eps) * c, k);
        }
        ScatteringDiagram recheck = assemble(ell);
        if (!jointLoopProduct(recheck, Weight::zero(2), e1, e2, nullptr).isIdentity())
            throw Error("ksComplete: insertion failed to cancel discrepancy");
    }

    ScatteringDiagram out = assemble(k);
    ConsistencyReport rep = checkConsistent(out);
    if (!rep.consistent)
        throw Error("ksComplete: completed diagram is inconsistent at " + rep.joint);
    return out;
}

Weight canonicalBasePoint(const ScatteringDiagram& d)
{
    Int maxCoord = 1;
    for (const Wall& w : d.walls())
        for (Int x : w.normal.c)
            maxCoord = std::max(maxCoord, x < 0 ? -x : x);
    Int b = 1 + maxCoord * d.order();
    Weight theta = Weight::zero(d.rank());
    Rat p(1);
    for (int i = 0; i < d.rank(); ++i) {
        theta.c[i] = p;
        p /= b;
    }
    return theta;
}

GenericPath genericPathBetween(const ScatteringDiagram& d, const Weight& from, const Weight& to)
{
    Int maxCoord = 1;
    for (const Wall& w : d.walls())
        for (Int x : w.normal.c)
            maxCoord = std::max(maxCoord, x < 0 ? -x : x);
    Int b = 1 + maxCoord * d.order();

    GenericPath path{{from, to}};
    for (int attempt = 0; attempt < 40; ++attempt) {
        try {
            crossings(d, path);
            return path;
        } catch (const GenericityError&) {
            // deterministic perturbation of an inserted midpoint
            Weight mid = (from + to) * frac(1, 2);
            Rat eps(1);
            for (int j = 0; j <= attempt; ++j)
                eps /= b;
            for (int i = 0; i < d.rank(); ++i) {
                mid.c[i] += eps;
                eps /= b;
            }
            path.waypoints = {from, mid, to};
        }
    }
    crossings(d, path); // let the final error escape
    return path;
}

PoissonAuto groupElement(const ScatteringDiagram& d)
{
    Weight plus = canonicalBasePoint(d);
    Weight minus = -plus;
    if (d.rank() == 1)
        return pathOrderedProduct(d, GenericPath{{plus, minus}});

    // flip one coordinate at a time (counterclockwise in rank 2)
    std::vector<Weight> pts{plus};
    Weight cur = plus;
    for (int i = 0; i < d.rank(); ++i) {
        cur.c[i] = -cur.c[i];
        pts.push_back(cur);
    }
    (void)minus;
    GenericPath path{pts};
    try {
        crossings(d, path);
        return pathOrderedProduct(d, path);
    } catch (const GenericityError&) {
        // fall back to perturbed legs between the same chain of points
        PoissonAuto g = PoissonAuto::identity(d.form(), d.order());
        Weight a = plus;
        for (size_t i = 1; i < pts.size(); ++i) {
            GenericPath leg = genericPathBetween(d, a, pts[i]);
            g = pathOrderedProduct(d, leg).compose(g);
            a = pts[i];
        }
        return g;
    }
}

bool equivalent(const ScatteringDiagram& d1, const ScatteringDiagram& d2)
{
    ConsistencyReport r1 = checkConsistent(d1);
    if (!r1.consistent)
        throw IdentityError("equivalent: first diagram is inconsistent at " + r1.joint);
    ConsistencyReport r2 = checkConsistent(d2);
    if (!r2.consistent)
        throw IdentityError("equivalent: second diagram is inconsistent at " + r2.joint);
    int k = std::min(d1.order(), d2.order());
    return groupElement(d1.truncated(k)) == groupElement(d2.truncated(k));
}

ScatteringDiagram reconstructFromGroup(const PoissonAuto& g, const std::vector<DimVector>& p)
{
    const int rank = g.rank();
    const int k = g.order();

    std::vector<DimVector> prims;
    for (const DimVector& n : p) {
        if (!n.inNPlus())
            throw InputError("reconstructFromGroup: P must lie in N^+");
        DimVector pr = n.primitivePart();
        if (std::find(prims.begin(), prims.end(), pr) == prims.end())
            prims.push_back(pr);
    }
    std::sort(prims.begin(), prims.end());

    Hamiltonian lg = g.logAuto();
    for (const auto& [ddeg, c] : lg.terms())
        if (std::find(prims.begin(), prims.end(), ddeg.primitivePart()) == prims.end())
            throw InputError("reconstructFromGroup: P misses the direction of degree " +
                             ddeg.str());

    std::vector<Wall> walls;
    for (const DimVector& n : prims) {
        std::vector<Weight> kernel = weightKernel(rank, {n});
        const int dim = static_cast<int>(kernel.size());

        // linear forms induced on n^perp by the other hyperplanes
        std::vector<std::vector<Rat>> forms;
        std::vector<DimVector> formSources;
        for (const DimVector& n2 : prims) {
            if (n2 == n)
                continue;
            std::vector<Rat> row(dim);
            bool zero = true;
            for (int j = 0; j < dim; ++j) {
                row[j] = kernel[j].eval(n2);
                if (row[j] != 0)
                    zero = false;
            }
            if (!zero) {
                forms.push_back(std::move(row));
                formSources.push_back(n2);
            }
        }

        auto wallAt = [&](const Weight& witness, const Cone& cone) {
            auto f = g.factorize(witness);
            if (f.zero.isIdentity())
                return;
            Hamiltonian h0 = f.zero.logAuto();
            if (!h0.supportedOnRay(n))
                throw Error("reconstruction: wall Hamiltonian off the ray of " + n.str());
            walls.push_back(Wall{n, cone, wallFunction(n, h0)});
        };

        if (dim == 0) {
            // rank 1: the hyperplane is the origin
            wallAt(Weight::zero(rank), Cone::hyperplane());
            continue;
        }
        if (forms.empty()) {
            wallAt(kernel[0], Cone::hyperplane());
            continue;
        }
        for (const auto& y : centralChambers(forms, dim)) {
            Weight witness = Weight::zero(rank);
            for (int j = 0; j < dim; ++j)
                witness = witness + kernel[j] * y[j];
            std::vector<SignConstraint> cs;
            for (const DimVector& n2 : formSources) {
                int s = sgn(witness.eval(n2));
                if (s != 0)
                    cs.push_back(SignConstraint{n2, s});
            }
            wallAt(witness, Cone::signs(std::move(cs)));
        }
    }

    ScatteringDiagram out(g.form(), k, std::move(walls));
    ConsistencyReport rep = checkConsistent(out);
    if (!rep.consistent)
        throw Error("reconstruction produced an inconsistent diagram at " + rep.joint);
    if (!(groupElement(out) == g))
        throw Error("reconstruction does not reproduce the group element");
    return out;
}

} // namespace qwall
