#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fht/rational.hpp"
#include "fht/root_system.hpp"

namespace fht {

// Point of T = t / Pi: rational simple-coroot coordinates, each reduced
// mod 1.  t = exp of the coordinate vector.
struct TorusElem {
    RatVec coords;

    TorusElem() = default;
    explicit TorusElem(RatVec c) : coords(std::move(c)) { reduce(); }
    static TorusElem zero(int rank) { return TorusElem(RatVec(rank, Rational(0))); }

    size_t rank() const { return coords.size(); }
    void reduce()
    {
        for (auto& x : coords) x = x.mod1();
    }
    friend TorusElem operator+(const TorusElem& a, const TorusElem& b)
    {
        RatVec c(a.coords.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = (a.coords[i] + b.coords[i]).mod1();
        return TorusElem(std::move(c));
    }
    std::string str() const;
    bool operator==(const TorusElem&) const = default;
};

// Element of U(1) as a rational rotation number in [0,1): value v stands for
// e^{2 pi i v}.  Group law is addition mod 1; everything stays exact.
struct Phase {
    Rational value;

    Phase() = default;
    explicit Phase(Rational v) : value(v.mod1()) {}
    static Phase half() { return Phase(Rational(1, 2)); }
    static Phase of_sign(int s) { return s >= 0 ? Phase() : half(); }

    friend Phase operator+(const Phase& a, const Phase& b) { return Phase(a.value + b.value); }
    Phase operator-() const { return Phase(-value); }
    std::string str() const { return value.str(); }
    bool operator==(const Phase&) const = default;
};

enum class ExtVariant { bas, triv };

// Element (t, eta, z) of T x| Pi^bas (or its sigma-free twin T x| Pi^triv);
// the level is fixed within any one computation.
struct GroupElem {
    TorusElem t;
    CorootElem eta;
    Phase z;
    std::int64_t level = 1;

    static GroupElem identity(int rank, std::int64_t level = 1)
    {
        return GroupElem{TorusElem::zero(rank), CorootElem::zero(rank), Phase(), level};
    }
    std::string str() const;
    bool operator==(const GroupElem&) const = default;
};

// kappa_eta^l(t) = t^{-l B_flat(eta)} as a rational phase.
Phase kappa(const RootSystem& rs, const CorootElem& eta, const TorusElem& t, std::int64_t level);

// The asymmetry form: epsilon(beta_i, beta_j) = B(beta_i, beta_j) for i > j,
// else 0, extended bilinearly over the Bourbaki-ordered simple coroots.
IntMat epsilon_form(const RootSystem& rs);
std::int64_t epsilon(const RootSystem& rs, const CorootElem& a, const CorootElem& b);
// sigma = (-1)^epsilon, the 2-cocycle of the basic central extension of Pi.
int sigma(const RootSystem& rs, const CorootElem& a, const CorootElem& b);

// Group law of T x| Pi^bas (with sigma^level) or T x| Pi^triv (without).
GroupElem multiply(const RootSystem& rs, const GroupElem& a, const GroupElem& b,
                   ExtVariant variant);

// eta_epsilon = (1/2) B_sharp(epsilon(-, eta)); satisfies
// exp(eta_epsilon)^{B_flat(mu)} = sigma(mu, eta) for all mu in Pi.
TorusElem eta_epsilon(const RootSystem& rs, const CorootElem& eta);

// Psi(t, eta, z) = (t exp(eta_epsilon), eta, z): group isomorphism from the
// level-1 bas variant to the triv variant.
GroupElem psi(const RootSystem& rs, const GroupElem& g);

} // namespace fht
