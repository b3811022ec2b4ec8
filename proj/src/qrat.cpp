#include "qwall/qrat.hpp"

#include <sstream>

namespace qwall {

// ---------------------------------------------------------------- ZPoly

ZPoly ZPoly::constant(Int c)
{
    ZPoly p;
    if (c != 0)
        p.s_ = {c};
    return p;
}

ZPoly ZPoly::constantZ(const mpz_class& c)
{
    ZPoly p;
    if (c != 0) {
        p.big_ = true;
        p.b_ = {c};
        p.shrink();
    }
    return p;
}

ZPoly ZPoly::qPow(int k)
{
    ZPoly p;
    p.s_.assign(k + 1, 0);
    p.s_[k] = 1;
    return p;
}

ZPoly ZPoly::fromCoeffs(std::vector<Int> ascending)
{
    ZPoly p;
    p.s_ = std::move(ascending);
    p.normalize();
    return p;
}

bool ZPoly::isZero() const { return big_ ? b_.empty() : s_.empty(); }

int ZPoly::degree() const
{
    return static_cast<int>((big_ ? b_.size() : s_.size())) - 1;
}

mpz_class ZPoly::coeff(int i) const
{
    if (i < 0 || i > degree())
        return 0;
    return big_ ? b_[i] : mpz_class(static_cast<long>(s_[i]));
}

void ZPoly::promote()
{
    if (big_)
        return;
    big_ = true;
    b_.clear();
    b_.reserve(s_.size());
    for (Int c : s_)
        b_.emplace_back(static_cast<long>(c));
    s_.clear();
}

void ZPoly::shrink()
{
    if (!big_)
        return;
    for (const mpz_class& c : b_)
        if (!c.fits_slong_p())
            return;
    s_.clear();
    s_.reserve(b_.size());
    for (const mpz_class& c : b_)
        s_.push_back(c.get_si());
    b_.clear();
    big_ = false;
}

void ZPoly::normalize()
{
    if (big_) {
        while (!b_.empty() && b_.back() == 0)
            b_.pop_back();
        shrink();
    } else {
        while (!s_.empty() && s_.back() == 0)
            s_.pop_back();
    }
}

ZPoly ZPoly::operator+(const ZPoly& o) const
{
    if (!big_ && !o.big_) {
        ZPoly r;
        r.s_.assign(std::max(s_.size(), o.s_.size()), 0);
        bool ovf = false;
        for (size_t i = 0; i < r.s_.size(); ++i) {
            Int a = i < s_.size() ? s_[i] : 0;
            Int b = i < o.s_.size() ? o.s_[i] : 0;
            if (__builtin_add_overflow(a, b, &r.s_[i])) {
                ovf = true;
                break;
            }
        }
        if (!ovf) {
            r.normalize();
            return r;
        }
    }
    ZPoly a = *this, b = o;
    a.promote();
    b.promote();
    ZPoly r;
    r.big_ = true;
    r.b_.assign(std::max(a.b_.size(), b.b_.size()), 0);
    for (size_t i = 0; i < r.b_.size(); ++i) {
        if (i < a.b_.size())
            r.b_[i] += a.b_[i];
        if (i < b.b_.size())
            r.b_[i] += b.b_[i];
    }
    r.normalize();
    return r;
}

ZPoly ZPoly::operator-() const
{
    ZPoly r = *this;
    if (r.big_) {
        for (auto& c : r.b_)
            c = -c;
    } else {
        for (auto& c : r.s_)
            c = -c; // negation of int64 min cannot arise from normalized inputs
    }
    return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const { return *this + (-o); }

ZPoly ZPoly::operator*(const ZPoly& o) const
{
    if (isZero() || o.isZero())
        return ZPoly();
    if (!big_ && !o.big_) {
        ZPoly r;
        r.s_.assign(s_.size() + o.s_.size() - 1, 0);
        bool ovf = false;
        for (size_t i = 0; i < s_.size() && !ovf; ++i) {
            if (s_[i] == 0)
                continue;
            for (size_t j = 0; j < o.s_.size(); ++j) {
                Int p;
                if (__builtin_mul_overflow(s_[i], o.s_[j], &p) ||
                    __builtin_add_overflow(r.s_[i + j], p, &r.s_[i + j])) {
                    ovf = true;
                    break;
                }
            }
        }
        if (!ovf) {
            r.normalize();
            return r;
        }
    }
    ZPoly a = *this, b = o;
    a.promote();
    b.promote();
    ZPoly r;
    r.big_ = true;
    r.b_.assign(a.b_.size() + b.b_.size() - 1, 0);
    for (size_t i = 0; i < a.b_.size(); ++i) {
        if (a.b_[i] == 0)
            continue;
        for (size_t j = 0; j < b.b_.size(); ++j)
            r.b_[i + j] += a.b_[i] * b.b_[j];
    }
    r.normalize();
    return r;
}

bool ZPoly::operator==(const ZPoly& o) const
{
    if (degree() != o.degree())
        return false;
    for (int i = 0; i <= degree(); ++i)
        if (coeff(i) != o.coeff(i))
            return false;
    return true;
}

mpz_class ZPoly::content() const
{
    mpz_class g = 0;
    for (int i = 0; i <= degree(); ++i) {
        mpz_class c = coeff(i);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

ZPoly ZPoly::divideContent(const mpz_class& g) const
{
    if (g == 1 || isZero())
        return *this;
    ZPoly r = *this;
    r.promote();
    for (auto& c : r.b_)
        c /= g;
    r.normalize();
    return r;
}

int ZPoly::qValuation() const
{
    if (isZero())
        return 0;
    for (int i = 0; i <= degree(); ++i)
        if (coeff(i) != 0)
            return i;
    return 0;
}

ZPoly ZPoly::shiftDown(int k) const
{
    if (k == 0 || isZero())
        return *this;
    ZPoly r;
    if (big_) {
        r.big_ = true;
        r.b_.assign(b_.begin() + k, b_.end());
    } else {
        r.s_.assign(s_.begin() + k, s_.end());
    }
    r.normalize();
    return r;
}

std::optional<ZPoly> ZPoly::divExactMonic(const ZPoly& divisor) const
{
    if (divisor.isZero() || divisor.coeff(divisor.degree()) != 1)
        throw Error("divExactMonic requires a monic divisor");
    if (isZero())
        return ZPoly();
    const int dn = degree(), dd = divisor.degree();
    if (dn < dd)
        return std::nullopt;
    std::vector<mpz_class> rem(dn + 1), quo(dn - dd + 1, 0);
    for (int i = 0; i <= dn; ++i)
        rem[i] = coeff(i);
    for (int i = dn - dd; i >= 0; --i) {
        mpz_class c = rem[i + dd];
        if (c == 0)
            continue;
        quo[i] = c;
        for (int j = 0; j <= dd; ++j)
            rem[i + j] -= c * divisor.coeff(j);
    }
    for (const auto& c : rem)
        if (c != 0)
            return std::nullopt;
    ZPoly r;
    r.big_ = true;
    r.b_ = std::move(quo);
    r.normalize();
    return r;
}

mpz_class ZPoly::evalZ(const mpz_class& x) const
{
    mpz_class v = 0;
    for (int i = degree(); i >= 0; --i)
        v = v * x + coeff(i);
    return v;
}

Rat ZPoly::evalQ(const Rat& x) const
{
    Rat v = 0;
    for (int i = degree(); i >= 0; --i)
        v = v * x + Rat(coeff(i));
    return v;
}

std::string ZPoly::str() const
{
    if (isZero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        mpz_class c = coeff(i);
        if (c == 0)
            continue;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        first = false;
        if (i == 0) {
            os << c.get_str();
        } else {
            if (c != 1)
                os << c.get_str() << "*";
            os << "q";
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------- cyclotomics

const ZPoly& cyclotomic(int d)
{
    static std::map<int, ZPoly> cache;
    auto it = cache.find(d);
    if (it != cache.end())
        return it->second;
    // Phi_d = (q^d - 1) / prod_{e | d, e < d} Phi_e
    ZPoly p = ZPoly::qPow(d) - ZPoly::constant(1);
    for (int e = 1; e < d; ++e) {
        if (d % e != 0)
            continue;
        auto q = p.divExactMonic(cyclotomic(e));
        if (!q)
            throw Error("cyclotomic recursion failed");
        p = *q;
    }
    return cache.emplace(d, std::move(p)).first->second;
}

// ---------------------------------------------------------------- DenFact

ZPoly DenFact::expand() const
{
    ZPoly p = ZPoly::constantZ(content) * ZPoly::qPow(qExp);
    for (const auto& [d, e] : cyc)
        for (int i = 0; i < e; ++i)
            p = p * cyclotomic(d);
    return p;
}

mpz_class DenFact::evalZ(const mpz_class& x) const
{
    mpz_class v = content;
    mpz_class xp;
    mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), qExp);
    v *= xp;
    for (const auto& [d, e] : cyc) {
        mpz_class c = cyclotomic(d).evalZ(x);
        for (int i = 0; i < e; ++i)
            v *= c;
    }
    return v;
}

Rat DenFact::evalQ(const Rat& x) const
{
    Rat v(content);
    for (int i = 0; i < qExp; ++i)
        v *= x;
    for (const auto& [d, e] : cyc) {
        Rat c = cyclotomic(d).evalQ(x);
        for (int i = 0; i < e; ++i)
            v *= c;
    }
    return v;
}

// ------------------------------------------------------------------ QRat

QRat::QRat(Int c) { num_ = ZPoly::constant(c); }

QRat QRat::fromPoly(ZPoly p)
{
    QRat r;
    r.num_ = std::move(p);
    return r;
}

QRat QRat::qPower(Int k)
{
    QRat r;
    if (k >= 0) {
        r.num_ = ZPoly::qPow(static_cast<int>(k));
    } else {
        r.num_ = ZPoly::constant(1);
        r.den_.qExp = static_cast<int>(-k);
    }
    return r;
}

QRat QRat::make(ZPoly num, DenFact den)
{
    QRat r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.reduce();
    return r;
}

QRat QRat::glInverse(int n)
{
    // |GL_n| = q^{n(n-1)/2} prod_{i<=n} (q^i - 1), and q^i - 1 = prod_{d|i} Phi_d
    QRat r(1);
    r.den_.qExp = n * (n - 1) / 2;
    for (int i = 1; i <= n; ++i)
        for (int d = 1; d <= i; ++d)
            if (i % d == 0)
                r.den_.cyc[d] += 1;
    return r;
}

void QRat::reduce()
{
    if (num_.isZero()) {
        den_ = DenFact{};
        return;
    }
    // q-power
    if (den_.qExp > 0) {
        int v = std::min(den_.qExp, num_.qValuation());
        if (v > 0) {
            num_ = num_.shiftDown(v);
            den_.qExp -= v;
        }
    }
    // cyclotomic peeling
    for (auto it = den_.cyc.begin(); it != den_.cyc.end();) {
        while (it->second > 0) {
            auto q = num_.divExactMonic(cyclotomic(it->first));
            if (!q)
                break;
            num_ = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? den_.cyc.erase(it) : std::next(it);
    }
    // integer content
    mpz_class g;
    mpz_class nc = num_.content();
    mpz_gcd(g.get_mpz_t(), nc.get_mpz_t(), den_.content.get_mpz_t());
    if (g > 1) {
        num_ = num_.divideContent(g);
        den_.content /= g;
    }
}

QRat QRat::operator+(const QRat& o) const
{
    if (isZero())
        return o;
    if (o.isZero())
        return *this;
    // common denominator: atom-wise max
    DenFact d;
    mpz_lcm(d.content.get_mpz_t(), den_.content.get_mpz_t(), o.den_.content.get_mpz_t());
    d.qExp = std::max(den_.qExp, o.den_.qExp);
    d.cyc = den_.cyc;
    for (const auto& [k, e] : o.den_.cyc)
        d.cyc[k] = std::max(d.cyc[k], e);

    auto scale = [&](const QRat& r) {
        ZPoly p = r.num_ * ZPoly::constantZ(d.content / r.den_.content) *
                  ZPoly::qPow(d.qExp - r.den_.qExp);
        for (const auto& [k, e] : d.cyc) {
            auto it = r.den_.cyc.find(k);
            int have = it == r.den_.cyc.end() ? 0 : it->second;
            for (int i = have; i < e; ++i)
                p = p * cyclotomic(k);
        }
        return p;
    };
    QRat r;
    r.num_ = scale(*this) + scale(o);
    r.den_ = std::move(d);
    r.reduce();
    return r;
}

QRat QRat::operator-() const
{
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat QRat::operator-(const QRat& o) const { return *this + (-o); }

QRat QRat::operator*(const QRat& o) const
{
    if (isZero() || o.isZero())
        return QRat();
    QRat r;
    r.num_ = num_ * o.num_;
    r.den_.content = den_.content * o.den_.content;
    r.den_.qExp = den_.qExp + o.den_.qExp;
    r.den_.cyc = den_.cyc;
    for (const auto& [k, e] : o.den_.cyc)
        r.den_.cyc[k] += e;
    r.reduce();
    return r;
}

QRat QRat::divInt(Int k) const
{
    if (k == 0)
        throw Error("QRat division by zero integer");
    QRat r = *this;
    if (k < 0) {
        r.num_ = -r.num_;
        k = -k;
    }
    r.den_.content *= static_cast<long>(k);
    r.reduce();
    return r;
}

bool QRat::operator==(const QRat& o) const
{
    // reduced form is canonical: factors are pairwise coprime and peeled off
    return num_ == o.num_ && den_ == o.den_;
}

Rat QRat::evalAt(const Rat& q0) const
{
    Rat dv = den_.evalQ(q0);
    if (dv == 0)
        throw Error("QRat evaluation at a pole");
    Rat r = num_.evalQ(q0) / dv;
    r.canonicalize();
    return r;
}

Rat QRat::evalAtOne() const
{
    if (!regularAtOne())
        throw Error("QRat has a pole at q = 1");
    return evalAt(Rat(1));
}

std::string QRat::str() const
{
    if (den_.isOne())
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.expand().str() + ")";
}

// ------------------------------------------------------------ QTorusElem

QTorusElem::QTorusElem(EulerForm chi, int order) : chi_(std::move(chi)), order_(order) {}

QTorusElem QTorusElem::one(const EulerForm& chi, int order)
{
    QTorusElem t(chi, order);
    t.terms_[DimVector::zero(chi.rank())] = QRat(1);
    return t;
}

QRat QTorusElem::coeff(const DimVector& d) const
{
    auto it = terms_.find(d);
    return it == terms_.end() ? QRat() : it->second;
}

void QTorusElem::setCoeff(const DimVector& d, QRat v)
{
    if (!d.nonNegative())
        throw InputError("quantum torus degrees lie in N^oplus");
    if (d.delta() > order_)
        return;
    if (v.isZero())
        terms_.erase(d);
    else
        terms_[d] = std::move(v);
}

QTorusElem QTorusElem::operator+(const QTorusElem& o) const
{
    QTorusElem r = *this;
    for (const auto& [d, c] : o.terms_) {
        QRat s = r.coeff(d) + c;
        if (s.isZero())
            r.terms_.erase(d);
        else
            r.terms_[d] = std::move(s);
    }
    return r;
}

QTorusElem QTorusElem::operator-(const QTorusElem& o) const
{
    QTorusElem r = *this;
    for (const auto& [d, c] : o.terms_) {
        QRat s = r.coeff(d) - c;
        if (s.isZero())
            r.terms_.erase(d);
        else
            r.terms_[d] = std::move(s);
    }
    return r;
}

QTorusElem QTorusElem::mulImpl(const QTorusElem& o, bool twisted) const
{
    QTorusElem r(chi_, order_);
    for (const auto& [d, a] : terms_) {
        const Int dd = d.delta();
        for (const auto& [e, b] : o.terms_) {
            if (dd + e.delta() > order_)
                continue;
            QRat t = a * b;
            if (twisted) {
                Int w = chi_.eval(e, d);
                if (w != 0)
                    t = t * QRat::qPower(-w);
            }
            DimVector f = d + e;
            QRat s = r.coeff(f) + t;
            if (s.isZero())
                r.terms_.erase(f);
            else
                r.terms_[f] = std::move(s);
        }
    }
    return r;
}

QTorusElem QTorusElem::starMul(const QTorusElem& o) const { return mulImpl(o, true); }
QTorusElem QTorusElem::plainMul(const QTorusElem& o) const { return mulImpl(o, false); }

QTorusElem QTorusElem::log() const
{
    DimVector z = DimVector::zero(chi_.rank());
    if (!(coeff(z) == QRat(1)))
        throw InputError("quantum torus log requires constant term 1");
    QTorusElem u = *this;
    u.terms_.erase(z);
    QTorusElem acc(chi_, order_);
    QTorusElem pw = one(chi_, order_);
    for (Int j = 1; j <= order_; ++j) {
        pw = pw.starMul(u);
        if (pw.terms_.empty())
            break;
        QTorusElem term(chi_, order_);
        for (const auto& [d, c] : pw.terms_) {
            QRat v = c.divInt(j);
            if (j % 2 == 0)
                v = -v;
            term.terms_[d] = std::move(v);
        }
        acc = acc + term;
    }
    return acc;
}

bool QTorusElem::operator==(const QTorusElem& o) const
{
    return order_ == o.order_ && terms_ == o.terms_;
}

} // namespace qwall
