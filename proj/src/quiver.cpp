#include "qwall/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qwall {

std::string Weight::str() const
{
    std::string s = "(";
    for (int i = 0; i < rank(); ++i) {
        if (i)
            s += ",";
        s += ratStr(c[i]);
    }
    return s + ")";
}

std::string ratStr(const Rat& r)
{
    std::ostringstream os;
    os << r;
    return os.str();
}

Rat parseRat(const std::string& s)
{
    if (s.empty())
        throw InputError("empty rational literal");
    for (size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            throw InputError("bad rational literal '" + s + "'");
    }
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw InputError("bad rational literal '" + s + "'");
    }
}

Quiver Quiver::make(std::vector<std::string> vertexIds, std::vector<Arrow> arrows,
                    std::vector<PotentialTerm> potential)
{
    Quiver q;
    q.vertexIds_ = std::move(vertexIds);
    q.arrows_ = std::move(arrows);
    q.potential_ = std::move(potential);

    const int n = q.rank();
    std::set<std::string> seen;
    for (const auto& id : q.vertexIds_) {
        if (id.empty())
            throw InputError("empty vertex id");
        if (!seen.insert(id).second)
            throw InputError("duplicate vertex id '" + id + "'");
    }

    for (const Arrow& a : q.arrows_) {
        if (a.src < 0 || a.src >= n || a.tgt < 0 || a.tgt >= n)
            throw InputError("arrow endpoint out of range");
        if (a.src == a.tgt)
            throw InputError("vertex loop at '" + q.vertexIds_[a.src] + "' (quivers must have no vertex loops)");
    }
    for (const Arrow& a : q.arrows_)
        for (const Arrow& b : q.arrows_)
            if (a.src == b.tgt && a.tgt == b.src)
                throw InputError("oriented 2-cycle between '" + q.vertexIds_[a.src] + "' and '" +
                                 q.vertexIds_[a.tgt] + "' (quivers must be 2-acyclic)");

    const int na = static_cast<int>(q.arrows_.size());
    for (const PotentialTerm& t : q.potential_) {
        if (t.cycle.size() < 3)
            throw InputError("potential term is not a cycle of length >= 3");
        for (int ai : t.cycle)
            if (ai < 0 || ai >= na)
                throw InputError("potential cycle references arrow out of range");
        for (size_t i = 0; i < t.cycle.size(); ++i) {
            const Arrow& cur = q.arrows_[t.cycle[i]];
            const Arrow& nxt = q.arrows_[t.cycle[(i + 1) % t.cycle.size()]];
            if (cur.tgt != nxt.src)
                throw InputError("potential word is not a closed path of composable arrows");
        }
    }

    q.skew_.m.assign(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            q.skew_.m[i][j] = q.arrowCount(j, i) - q.arrowCount(i, j);
    return q;
}

Int Quiver::arrowCount(int i, int j) const
{
    Int k = 0;
    for (const Arrow& a : arrows_)
        if (a.src == i && a.tgt == j)
            ++k;
    return k;
}

bool Quiver::acyclic() const
{
    // Kahn's algorithm
    const int n = rank();
    std::vector<int> indeg(n, 0);
    for (const Arrow& a : arrows_)
        ++indeg[a.tgt];
    std::vector<int> stack;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0)
            stack.push_back(i);
    int removed = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++removed;
        for (const Arrow& a : arrows_)
            if (a.src == v && --indeg[a.tgt] == 0)
                stack.push_back(a.tgt);
    }
    return removed == n;
}

Int Quiver::eulerForm(const DimVector& d, const DimVector& e) const
{
    if (hasPotential())
        throw UnsupportedError("euler form is only defined for quivers with zero potential");
    return euler().eval(d, e);
}

EulerForm Quiver::euler() const
{
    const int n = rank();
    EulerForm f;
    f.m.assign(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i)
        f.m[i][i] = 1;
    for (const Arrow& a : arrows_)
        f.m[a.src][a.tgt] -= 1;
    return f;
}

Quiver Quiver::extend(const Weight& m) const
{
    if (m.rank() != rank())
        throw InputError("framing class rank mismatch");
    if (!m.nonNegativeIntegral())
        throw InputError("framing class must have non-negative integer coordinates");
    for (const auto& id : vertexIds_)
        if (id == "*")
            throw InputError("vertex id '*' is reserved for the extending vertex");

    std::vector<std::string> vids = vertexIds_;
    vids.push_back("*");
    const int star = rank();
    std::vector<Arrow> arr = arrows_;
    for (int i = 0; i < rank(); ++i) {
        Int mult = m.c[i].get_num().get_si();
        for (Int t = 0; t < mult; ++t)
            arr.push_back(Arrow{star, i});
    }
    return Quiver::make(std::move(vids), std::move(arr), potential_);
}

std::vector<Relation> Quiver::derivedRelations() const
{
    // one cyclic derivative per arrow appearing in W, with
    // d_a(a_1...a_r) = sum_{a_i = a} a_{i+1}...a_r a_1...a_{i-1}
    std::vector<int> arrowsInW;
    for (const PotentialTerm& t : potential_)
        for (int ai : t.cycle)
            if (std::find(arrowsInW.begin(), arrowsInW.end(), ai) == arrowsInW.end())
                arrowsInW.push_back(ai);
    std::sort(arrowsInW.begin(), arrowsInW.end());

    std::vector<Relation> rels;
    for (int a : arrowsInW) {
        Relation rel;
        for (const PotentialTerm& t : potential_) {
            const auto& w = t.cycle;
            const size_t r = w.size();
            for (size_t i = 0; i < r; ++i) {
                if (w[i] != a)
                    continue;
                std::vector<int> path;
                for (size_t j = i + 1; j < r; ++j)
                    path.push_back(w[j]);
                for (size_t j = 0; j < i; ++j)
                    path.push_back(w[j]);
                rel.push_back(PathTerm{t.coeff, std::move(path)});
            }
        }
        rels.push_back(std::move(rel));
    }
    return rels;
}

std::optional<int> Quiver::vertexIndex(const std::string& id) const
{
    for (int i = 0; i < rank(); ++i)
        if (vertexIds_[i] == id)
            return i;
    return std::nullopt;
}

Weight liftWeight(const Weight& theta, const DimVector& d)
{
    if (theta.rank() != d.rank())
        throw InputError("liftWeight: rank mismatch");
    Weight w = theta;
    w.c.push_back(-theta.eval(d));
    return w;
}

Quiver kroneckerQuiver(int arrowCount)
{
    std::vector<Arrow> arr;
    for (int i = 0; i < arrowCount; ++i)
        arr.push_back(Arrow{0, 1});
    return Quiver::make({"1", "2"}, std::move(arr));
}

Quiver singleVertexQuiver() { return Quiver::make({"1"}, {}); }

Quiver cyclicTriangleQuiver(const Rat& c)
{
    // a: 1->2, b: 2->3, c: 3->1, W = c * abc
    std::vector<Arrow> arr{{0, 1}, {1, 2}, {2, 0}};
    std::vector<PotentialTerm> pot;
    if (c != 0)
        pot.push_back(PotentialTerm{c, {0, 1, 2}});
    return Quiver::make({"1", "2", "3"}, std::move(arr), std::move(pot));
}

} // namespace qwall
