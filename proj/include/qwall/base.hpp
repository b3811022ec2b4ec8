#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwall {

using Int = long; // 64-bit on the supported platforms; interoperates with gmpxx
using Rat = mpq_class;

// mpq_class(n,d) does not canonicalize; always build fractions through this
inline Rat frac(Int n, Int d)
{
    Rat r(n, d);
    r.canonicalize();
    return r;
}

// Error taxonomy; the CLI maps these to its exit-code contract.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InputError : Error {
    using Error::Error;
};
struct BudgetError : Error {
    using Error::Error;
};
struct IdentityError : Error {
    using Error::Error;
};
struct NotInGroupError : Error {
    using Error::Error;
};
struct GenericityError : Error {
    using Error::Error;
};
struct UnsupportedError : Error {
    using Error::Error;
};

// Element of N = Z^{V(Q)}. Arbitrary integer vectors are allowed in form
// evaluations; the N^+ / N^{oplus} predicates are queries, not invariants.
struct DimVector {
    std::vector<Int> c;

    DimVector() = default;
    explicit DimVector(std::vector<Int> v) : c(std::move(v)) {}
    static DimVector zero(int rank) { return DimVector(std::vector<Int>(rank, 0)); }
    static DimVector unit(int rank, int i)
    {
        DimVector d = zero(rank);
        d.c[i] = 1;
        return d;
    }

    int rank() const { return static_cast<int>(c.size()); }
    Int delta() const { return std::accumulate(c.begin(), c.end(), Int{0}); }
    bool isZero() const
    {
        for (Int x : c)
            if (x != 0)
                return false;
        return true;
    }
    bool nonNegative() const
    {
        for (Int x : c)
            if (x < 0)
                return false;
        return true;
    }
    bool inNPlus() const { return nonNegative() && !isZero(); }
    // componentwise e <= *this
    bool dominates(const DimVector& e) const
    {
        if (e.rank() != rank())
            return false;
        for (int i = 0; i < rank(); ++i)
            if (e.c[i] > c[i])
                return false;
        return true;
    }

    Int gcd() const
    {
        Int g = 0;
        for (Int x : c)
            g = std::gcd(g, x < 0 ? -x : x);
        return g;
    }
    bool isPrimitive() const { return inNPlus() && gcd() == 1; }
    DimVector primitivePart() const
    {
        Int g = gcd();
        if (g == 0)
            return *this;
        DimVector d = *this;
        for (Int& x : d.c)
            x /= g;
        return d;
    }

    DimVector operator+(const DimVector& o) const
    {
        DimVector d = *this;
        for (int i = 0; i < rank(); ++i)
            d.c[i] += o.c[i];
        return d;
    }
    DimVector operator-(const DimVector& o) const
    {
        DimVector d = *this;
        for (int i = 0; i < rank(); ++i)
            d.c[i] -= o.c[i];
        return d;
    }
    DimVector operator*(Int s) const
    {
        DimVector d = *this;
        for (Int& x : d.c)
            x *= s;
        return d;
    }
    bool operator==(const DimVector& o) const { return c == o.c; }
    bool operator!=(const DimVector& o) const { return c != o.c; }

    // graded-lexicographic order: by delta, then coordinates; this is the
    // canonical monomial order used for serialization
    bool operator<(const DimVector& o) const
    {
        Int da = delta(), db = o.delta();
        if (da != db)
            return da < db;
        return c < o.c;
    }

    std::string str() const
    {
        std::string s = "(";
        for (int i = 0; i < rank(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(c[i]);
        }
        return s + ")";
    }
};

// Element of M_Q = Hom(N, Q), exact rational coordinates.
struct Weight {
    std::vector<Rat> c;

    Weight() = default;
    explicit Weight(std::vector<Rat> v) : c(std::move(v)) {}
    static Weight zero(int rank) { return Weight(std::vector<Rat>(rank, Rat(0))); }
    static Weight dualUnit(int rank, int i)
    {
        Weight w = zero(rank);
        w.c[i] = 1;
        return w;
    }

    int rank() const { return static_cast<int>(c.size()); }
    Rat eval(const DimVector& d) const
    {
        if (d.rank() != rank())
            throw InputError("weight/vector rank mismatch");
        Rat s = 0;
        for (int i = 0; i < rank(); ++i)
            s += c[i] * d.c[i];
        return s;
    }
    bool isZero() const
    {
        for (const Rat& x : c)
            if (x != 0)
                return false;
        return true;
    }
    // theta in M^+ iff theta(e_i) > 0 for all i
    bool inMPlus() const
    {
        for (const Rat& x : c)
            if (x <= 0)
                return false;
        return true;
    }
    bool integral() const
    {
        for (const Rat& x : c)
            if (x.get_den() != 1)
                return false;
        return true;
    }
    bool nonNegativeIntegral() const
    {
        for (const Rat& x : c)
            if (x.get_den() != 1 || x < 0)
                return false;
        return true;
    }

    Weight operator+(const Weight& o) const
    {
        Weight w = *this;
        for (int i = 0; i < rank(); ++i)
            w.c[i] += o.c[i];
        return w;
    }
    Weight operator-(const Weight& o) const
    {
        Weight w = *this;
        for (int i = 0; i < rank(); ++i)
            w.c[i] -= o.c[i];
        return w;
    }
    Weight operator*(const Rat& s) const
    {
        Weight w = *this;
        for (Rat& x : w.c)
            x *= s;
        return w;
    }
    Weight operator-() const { return *this * Rat(-1); }
    bool operator==(const Weight& o) const { return c == o.c; }
    bool operator!=(const Weight& o) const { return c != o.c; }
    bool operator<(const Weight& o) const { return c < o.c; }

    std::string str() const;
};

std::string ratStr(const Rat& r);
Rat parseRat(const std::string& s);

} // namespace qwall
