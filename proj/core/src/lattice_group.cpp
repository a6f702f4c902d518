#include "fht/lattice_group.hpp"

#include <stdexcept>

#include "fht/errors.hpp"

namespace fht {

std::string TorusElem::str() const
{
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += coords[i].str();
    }
    return s + ")";
}

std::string GroupElem::str() const
{
    return "(t=" + t.str() + ", eta=" + eta.str() + ", z=" + z.str() + ")";
}

Phase kappa(const RootSystem& rs, const CorootElem& eta, const TorusElem& t, std::int64_t level)
{
    if (eta.rank() != t.rank() || eta.rank() != static_cast<size_t>(rs.rank()))
        throw std::invalid_argument("kappa: dimension mismatch");
    const Weight bf = rs.b_flat(eta);
    Rational pair(0);
    for (size_t i = 0; i < t.rank(); ++i) pair += Rational(bf[i]) * t.coords[i];
    return Phase(Rational(-level) * pair);
}

IntMat epsilon_form(const RootSystem& rs)
{
    const int r = rs.rank();
    IntMat e(r, IntVec(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < i; ++j) e[i][j] = rs.gram_coroot()[i][j];
    return e;
}

std::int64_t epsilon(const RootSystem& rs, const CorootElem& a, const CorootElem& b)
{
    const int r = rs.rank();
    std::int64_t s = 0;
    for (int i = 0; i < r; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < i; ++j) s += a[i] * rs.gram_coroot()[i][j] * b[j];
    }
    return s;
}

int sigma(const RootSystem& rs, const CorootElem& a, const CorootElem& b)
{
    return epsilon(rs, a, b) % 2 == 0 ? 1 : -1;
}

GroupElem multiply(const RootSystem& rs, const GroupElem& a, const GroupElem& b,
                   ExtVariant variant)
{
    if (a.level != b.level)
        throw std::invalid_argument("multiply: level mismatch (" + std::to_string(a.level) +
                                    " vs " + std::to_string(b.level) + ")");
    GroupElem out;
    out.level = a.level;
    out.t = a.t + b.t;
    out.eta = a.eta + b.eta;
    out.z = a.z + b.z + kappa(rs, a.eta, b.t, a.level);
    if (variant == ExtVariant::bas) {
        // sigma(eta1, eta2)^level as a phase: level * epsilon / 2 mod 1.
        out.z = out.z + Phase(Rational(a.level * epsilon(rs, a.eta, b.eta), 2));
    }
    return out;
}

TorusElem eta_epsilon(const RootSystem& rs, const CorootElem& eta)
{
    const int r = rs.rank();
    const IntMat e = epsilon_form(rs);
    // Contraction epsilon(-, eta) as a functional on t, in fundamental-weight
    // coordinates: component i is epsilon(beta_i, eta).
    Weight contraction = Weight::zero(r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) contraction[i] += e[i][j] * eta[j];
    RatVec up = rs.b_sharp(contraction);
    for (auto& x : up) x = (x / Rational(2)).mod1();
    return TorusElem(std::move(up));
}

GroupElem psi(const RootSystem& rs, const GroupElem& g)
{
    if (g.level != 1)
        throw std::invalid_argument("psi: defined on the basic (level 1) extension only");
    GroupElem out = g;
    out.t = g.t + eta_epsilon(rs, g.eta);
    return out;
}

} // namespace fht
