#pragma once

#include "qwall/series.hpp"

namespace qwall {

// A tropical-vertex group element of order k, stored by the images of the
// torus generators: z_i |-> z_i * u_i with each u_i a unit series. The
// action on x^d is derived from invariance of x^n prod_i z_i^{<n,e_i>},
// which every Hamiltonian flow preserves:
//     x^d |-> x^d * prod_i u_i^{-<d,e_i>}.
class PoissonAuto {
public:
    static PoissonAuto identity(const SkewForm& form, int order);
    // z^m |-> z^m * f^{sign*m(n0)} for a primitive n0 and f == 1 mod x^{n0}
    // supported on multiples of n0
    static PoissonAuto wall(const SkewForm& form, const DimVector& n0, const TruncSeries& f,
                            int sign);
    // exp{h,-}
    static PoissonAuto flow(const SkewForm& form, const Hamiltonian& h);
    // validating constructor for untrusted z-images: requires units and
    // checks the element is a Hamiltonian flow (logAuto succeeds)
    static PoissonAuto fromImages(const SkewForm& form, int order,
                                  std::vector<TruncSeries> images);

    int order() const { return order_; }
    int rank() const { return static_cast<int>(images_.size()); }
    const SkewForm& form() const { return form_; }
    const std::vector<TruncSeries>& images() const { return images_; }
    const TruncSeries& image(int i) const { return images_[i]; }

    bool isIdentity() const;

    // x-action, extended linearly to series
    TruncSeries applyTo(const TruncSeries& s) const;
    // z^m |-> z^m * zFactor(m) for m in M with integer coordinates
    TruncSeries zFactor(const Weight& m) const;

    PoissonAuto compose(const PoissonAuto& inner) const; // (*this) o inner
    PoissonAuto inverse() const;
    PoissonAuto power(Int e) const;
    PoissonAuto truncated(int newOrder) const;

    Hamiltonian logAuto() const; // throws NotInGroupError if inconsistent

    struct Factorization;
    // unique g = g_+ o g_0 o g_- with logs supported on theta > 0 / = 0 / < 0
    Factorization factorize(const Weight& theta) const;

    bool operator==(const PoissonAuto& o) const;
    bool operator!=(const PoissonAuto& o) const { return !(*this == o); }

private:
    PoissonAuto(SkewForm form, int order, std::vector<TruncSeries> images)
        : form_(std::move(form)), order_(order), images_(std::move(images))
    {
    }
    SkewForm form_;
    int order_ = 0;
    std::vector<TruncSeries> images_;

    Hamiltonian logAutoUpTo(int maxDegree) const;
};

struct PoissonAuto::Factorization {
    PoissonAuto plus, zero, minus;
};

PoissonAuto composeAll(const std::vector<PoissonAuto>& factors); // factors[0] applied first

// The automorphism Phi_d(x^n) = x^n (1+x^d)^{<d,n>} for d in N^+, possibly
// non-primitive; the standard generator in rank-2 wall-crossing identities.
PoissonAuto clusterAuto(const SkewForm& form, const DimVector& d, int order);

// Hamiltonian of a wall: h with flow(h) = wall(n0, f, +1); f = 1 + ... on the
// ray through n0. Inverse of wallFunction below.
Hamiltonian wallHamiltonian(const DimVector& n0, const TruncSeries& f);
TruncSeries wallFunction(const DimVector& n0, const Hamiltonian& h);

} // namespace qwall
