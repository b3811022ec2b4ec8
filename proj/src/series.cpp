#include "qwall/series.hpp"

#include <sstream>

namespace qwall {

TruncSeries::TruncSeries(int rank, int order) : rank_(rank), order_(order)
{
    if (rank < 1)
        throw InputError("series rank must be >= 1");
    if (order < 1)
        throw InputError("series order must be >= 1");
}

TruncSeries TruncSeries::one(int rank, int order)
{
    return monomial(DimVector::zero(rank), Rat(1), order);
}

TruncSeries TruncSeries::monomial(const DimVector& d, const Rat& coeff, int order)
{
    TruncSeries s(d.rank(), order);
    if (!d.nonNegative())
        throw InputError("monomial degree must lie in N^oplus");
    if (coeff != 0 && d.delta() <= order)
        s.terms_.push_back({d, coeff});
    return s;
}

Rat TruncSeries::constantTerm() const
{
    if (!terms_.empty() && terms_.front().first.isZero())
        return terms_.front().second;
    return Rat(0);
}

bool TruncSeries::hasConstantTerm() const
{
    return !terms_.empty() && terms_.front().first.isZero();
}

Rat TruncSeries::coeff(const DimVector& d) const
{
    for (const auto& [e, c] : terms_)
        if (e == d)
            return c;
    return Rat(0);
}

TruncSeries TruncSeries::gradedPart(int m) const
{
    TruncSeries s(rank_, order_);
    for (const auto& t : terms_)
        if (t.first.delta() == m)
            s.terms_.push_back(t);
    return s;
}

Int TruncSeries::lowestDegree() const
{
    if (terms_.empty())
        return order_ + 1;
    return terms_.front().first.delta();
}

TruncSeries TruncSeries::truncated(int newOrder) const
{
    TruncSeries s(rank_, newOrder);
    for (const auto& t : terms_)
        if (t.first.delta() <= newOrder)
            s.terms_.push_back(t);
    return s;
}

void TruncSeries::checkCompatible(const TruncSeries& o) const
{
    if (rank_ != o.rank_)
        throw InputError("series rank mismatch");
    if (order_ != o.order_)
        throw InputError("series order mismatch");
}

TruncSeries TruncSeries::fromMap(int rank, int order, const std::map<DimVector, Rat>& m)
{
    TruncSeries s(rank, order);
    for (const auto& [d, c] : m)
        if (c != 0 && d.delta() <= order)
            s.terms_.push_back({d, c});
    return s;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const
{
    checkCompatible(o);
    TruncSeries s(rank_, order_);
    s.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            s.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            s.terms_.push_back(o.terms_[j++]);
        } else {
            Rat c = terms_[i].second + o.terms_[j].second;
            if (c != 0)
                s.terms_.push_back({terms_[i].first, c});
            ++i, ++j;
        }
    }
    return s;
}

TruncSeries TruncSeries::operator-() const
{
    TruncSeries s = *this;
    for (auto& t : s.terms_)
        t.second = -t.second;
    return s;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator*(const TruncSeries& o) const
{
    checkCompatible(o);
    std::map<DimVector, Rat> acc;
    for (const auto& [d, cd] : terms_) {
        const Int dd = d.delta();
        for (const auto& [e, ce] : o.terms_) {
            if (dd + e.delta() > order_)
                continue;
            acc[d + e] += cd * ce;
        }
    }
    return fromMap(rank_, order_, acc);
}

TruncSeries TruncSeries::operator*(const Rat& sc) const
{
    TruncSeries s(rank_, order_);
    if (sc == 0)
        return s;
    s.terms_ = terms_;
    for (auto& t : s.terms_)
        t.second *= sc;
    return s;
}

bool TruncSeries::operator==(const TruncSeries& o) const
{
    return rank_ == o.rank_ && order_ == o.order_ && terms_ == o.terms_;
}

bool TruncSeries::supportedOnRay(const DimVector& n0) const
{
    for (const auto& [d, c] : terms_) {
        if (d.isZero())
            continue;
        // d = j*n0 for a positive integer j
        Int j = 0;
        for (int i = 0; i < rank_; ++i) {
            if (n0.c[i] != 0) {
                if (d.c[i] % n0.c[i] != 0)
                    return false;
                j = d.c[i] / n0.c[i];
                break;
            }
        }
        if (j <= 0 || !(n0 * j == d))
            return false;
    }
    return true;
}

std::string TruncSeries::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        std::string mono;
        for (int i = 0; i < rank_; ++i) {
            if (d.c[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (d.c[i] > 1)
                mono += "^" + std::to_string(d.c[i]);
        }
        if (mono.empty()) {
            os << ratStr(a);
        } else {
            if (a != 1)
                os << ratStr(a) << "*";
            os << mono;
        }
    }
    return os.str();
}

void requireHamiltonian(const TruncSeries& h)
{
    if (h.hasConstantTerm())
        throw InputError("Hamiltonian must have zero constant term");
}

TruncSeries seriesExp(const TruncSeries& h)
{
    requireHamiltonian(h);
    TruncSeries r = TruncSeries::one(h.rank(), h.order());
    TruncSeries term = TruncSeries::one(h.rank(), h.order());
    for (Int j = 1; j <= h.order(); ++j) {
        term *= h;
        term = term * Rat(1, static_cast<long>(j));
        if (term.isZero())
            break;
        r += term;
    }
    return r;
}

TruncSeries seriesLog(const TruncSeries& u)
{
    if (!u.isUnit())
        throw InputError("seriesLog requires constant term 1");
    TruncSeries v = u - TruncSeries::one(u.rank(), u.order());
    TruncSeries r = TruncSeries::zero(u.rank(), u.order());
    TruncSeries pw = TruncSeries::one(u.rank(), u.order());
    for (Int j = 1; j <= u.order(); ++j) {
        pw *= v;
        if (pw.isZero())
            break;
        r += pw * Rat(j % 2 == 1 ? 1 : -1, static_cast<long>(j));
    }
    return r;
}

TruncSeries seriesPow(const TruncSeries& u, Int r)
{
    if (!u.isUnit())
        throw InputError("seriesPow requires constant term 1");
    if (r == 0)
        return TruncSeries::one(u.rank(), u.order());
    return seriesExp(seriesLog(u) * Rat(static_cast<long>(r)));
}

TruncSeries poissonBracket(const SkewForm& form, const TruncSeries& a, const TruncSeries& b)
{
    if (a.rank() != b.rank() || a.order() != b.order())
        throw InputError("poissonBracket: series mismatch");
    std::map<DimVector, Rat> acc;
    for (const auto& [d, cd] : a.terms()) {
        const Int dd = d.delta();
        for (const auto& [e, ce] : b.terms()) {
            if (dd + e.delta() > a.order())
                continue;
            Int w = form.eval(d, e);
            if (w == 0)
                continue;
            acc[d + e] += cd * ce * Rat(w);
        }
    }
    return TruncSeries::fromMap(a.rank(), a.order(), acc);
}

} // namespace qwall
