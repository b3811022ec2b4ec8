#include "qwall/cone.hpp"

#include <algorithm>

namespace qwall {

std::vector<Weight> weightKernel(int rank, const std::vector<DimVector>& zeros)
{
    // rational RREF of the system theta(n) = 0, rows indexed by zeros
    std::vector<std::vector<Rat>> m;
    for (const DimVector& n : zeros) {
        if (n.rank() != rank)
            throw InputError("weightKernel: rank mismatch");
        std::vector<Rat> row(rank);
        for (int i = 0; i < rank; ++i)
            row[i] = Rat(n.c[i]);
        m.push_back(std::move(row));
    }

    std::vector<int> pivotCol;
    size_t r = 0;
    for (int c = 0; c < rank && r < m.size(); ++c) {
        size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[r], m[piv]);
        Rat lead = m[r][c];
        for (int j = 0; j < rank; ++j)
            m[r][j] /= lead;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            Rat f = m[i][c];
            for (int j = 0; j < rank; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivotCol.push_back(c);
        ++r;
    }

    std::vector<Weight> basis;
    for (int c = 0; c < rank; ++c) {
        if (std::find(pivotCol.begin(), pivotCol.end(), c) != pivotCol.end())
            continue;
        Weight w = Weight::zero(rank);
        w.c[c] = 1;
        for (size_t i = 0; i < pivotCol.size(); ++i)
            w.c[pivotCol[i]] = -m[i][c];
        basis.push_back(std::move(w));
    }
    return basis;
}

std::optional<std::vector<Rat>> strictHomogeneousWitness(std::vector<std::vector<Rat>> rows,
                                                         int dim)
{
    // levels[v] holds the system in variables y_0..y_{v-1}
    std::vector<std::vector<std::vector<Rat>>> levels(dim + 1);
    for (auto& row : rows) {
        if (static_cast<int>(row.size()) != dim)
            throw InputError("strictHomogeneousWitness: row width mismatch");
        bool allZero = std::all_of(row.begin(), row.end(), [](const Rat& x) { return x == 0; });
        if (allZero)
            return std::nullopt; // 0 > 0
        levels[dim].push_back(std::move(row));
    }

    for (int v = dim; v >= 1; --v) {
        std::vector<std::vector<Rat>> pos, neg;
        for (const auto& row : levels[v]) {
            const Rat& a = row[v - 1];
            if (a == 0) {
                std::vector<Rat> t(row.begin(), row.end() - 1);
                if (std::all_of(t.begin(), t.end(), [](const Rat& x) { return x == 0; }))
                    return std::nullopt;
                levels[v - 1].push_back(std::move(t));
            } else if (a > 0) {
                pos.push_back(row);
            } else {
                neg.push_back(row);
            }
        }
        for (const auto& p : pos)
            for (const auto& n : neg) {
                // alpha*n - beta*p with alpha = p[v-1] > 0, beta = n[v-1] < 0
                std::vector<Rat> t(v - 1);
                bool allZero = true;
                for (int j = 0; j + 1 < v; ++j) {
                    t[j] = p[v - 1] * n[j] - n[v - 1] * p[j];
                    if (t[j] != 0)
                        allZero = false;
                }
                if (allZero)
                    return std::nullopt;
                levels[v - 1].push_back(std::move(t));
            }
    }

    // back-substitute, lowest variable first
    std::vector<Rat> y(dim, Rat(0));
    for (int v = 1; v <= dim; ++v) {
        bool hasLo = false, hasHi = false;
        Rat lo, hi;
        for (const auto& row : levels[v]) {
            const Rat& a = row[v - 1];
            if (a == 0)
                continue;
            Rat rest(0);
            for (int j = 0; j + 1 < v; ++j)
                rest += row[j] * y[j];
            Rat bound = -rest / a;
            if (a > 0) {
                if (!hasLo || bound > lo)
                    lo = bound, hasLo = true;
            } else {
                if (!hasHi || bound < hi)
                    hi = bound, hasHi = true;
            }
        }
        if (hasLo && hasHi)
            y[v - 1] = (lo + hi) / 2;
        else if (hasLo)
            y[v - 1] = lo + 1;
        else if (hasHi)
            y[v - 1] = hi - 1;
        else
            y[v - 1] = 0;
    }
    return y;
}

std::optional<Weight> strictFeasiblePoint(int rank, const std::vector<DimVector>& zeros,
                                          const std::vector<SignConstraint>& stricts)
{
    std::vector<Weight> kernel = weightKernel(rank, zeros);
    const int dim = static_cast<int>(kernel.size());
    if (dim == 0)
        return stricts.empty() ? std::optional<Weight>(Weight::zero(rank)) : std::nullopt;

    std::vector<std::vector<Rat>> rows;
    for (const SignConstraint& sc : stricts) {
        std::vector<Rat> row(dim);
        for (int j = 0; j < dim; ++j)
            row[j] = Rat(sc.sign) * kernel[j].eval(sc.w);
        rows.push_back(std::move(row));
    }
    auto y = strictHomogeneousWitness(std::move(rows), dim);
    if (!y)
        return std::nullopt;
    Weight theta = Weight::zero(rank);
    for (int j = 0; j < dim; ++j)
        theta = theta + kernel[j] * (*y)[j];
    return theta;
}

std::vector<std::vector<Rat>> centralChambers(const std::vector<std::vector<Rat>>& formsIn,
                                              int dim)
{
    // dedupe proportional forms (one hyperplane each)
    std::vector<std::vector<Rat>> forms;
    for (const auto& f : formsIn) {
        if (std::all_of(f.begin(), f.end(), [](const Rat& x) { return x == 0; }))
            continue;
        std::vector<Int> p = primitiveIntVector(f);
        for (size_t i = 0; i < p.size(); ++i)
            if (p[i] != 0) {
                if (p[i] < 0)
                    for (auto& x : p)
                        x = -x;
                break;
            }
        std::vector<Rat> canon(p.begin(), p.end());
        if (std::find(forms.begin(), forms.end(), canon) == forms.end())
            forms.push_back(std::move(canon));
    }

    std::vector<std::vector<Rat>> witnesses;
    std::vector<std::vector<Rat>> assigned;
    // DFS over sign vectors with feasibility pruning
    auto rec = [&](auto&& self, size_t i) -> void {
        auto w = strictHomogeneousWitness(assigned, dim);
        if (!w)
            return;
        if (i == forms.size()) {
            witnesses.push_back(std::move(*w));
            return;
        }
        for (int s : {+1, -1}) {
            std::vector<Rat> row = forms[i];
            for (auto& x : row)
                x *= s;
            assigned.push_back(std::move(row));
            self(self, i + 1);
            assigned.pop_back();
        }
    };
    if (forms.empty()) {
        if (dim > 0)
            witnesses.push_back(std::vector<Rat>(dim, Rat(0)));
        return witnesses;
    }
    rec(rec, 0);
    return witnesses;
}

std::vector<Int> primitiveIntVector(const std::vector<Rat>& v)
{
    mpz_class lcm = 1;
    for (const Rat& x : v)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> z;
    for (const Rat& x : v)
        z.push_back(mpz_class(x.get_num() * (lcm / x.get_den())));
    mpz_class g = 0;
    for (const mpz_class& x : z)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    std::vector<Int> out;
    for (const mpz_class& x : z) {
        mpz_class y = g == 0 ? x : mpz_class(x / g);
        if (!y.fits_slong_p())
            throw Error("primitiveIntVector: entry out of range");
        out.push_back(y.get_si());
    }
    return out;
}

} // namespace qwall
