#include "stab/spectrum.hpp"
#include "stab/errors.hpp"
#include "stab/unipoly.hpp"

#include <sstream>

namespace stab {

namespace {

Rational binom(long long n, long long k) {
    Rational r(1);
    for (long long i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
    return r;
}

void check_shape(const WeightSpectrum& spec) {
    if (spec.n < 1) throw BadInput("spectrum: n must be >= 1");
    if (spec.r < 1) throw BadInput("spectrum: r must be >= 1");
    if (spec.weights.empty()) throw BadInput("spectrum: no samples");
    for (const auto& [k, w] : spec.weights) {
        (void)w;
        if (k < 1) throw BadInput("spectrum: sample keys must be >= 1");
    }
}

UniPoly fit_series(const std::vector<Sample>& samples, int degree, int guard,
                   const std::string& label) {
    int have = static_cast<int>(samples.size());
    if (have < degree + 1 + guard) {
        std::ostringstream os;
        os << label << ": need " << degree + 1 + guard << " samples for a degree-" << degree
           << " fit with " << guard << " guards, got " << have;
        throw DegenerateSamples(os.str());
    }
    try {
        return fit_polynomial(samples, degree, guard);
    } catch (const GuardMismatch& g) {
        throw GuardMismatch(g.bad_k, label + ": " + g.what());
    }
}

} // namespace

bool operator==(const ConfigInvariants& a, const ConfigInvariants& b) {
    return a.n == b.n && a.r == b.r && a.a0 == b.a0 && a.a1 == b.a1 && a.b0 == b.b0 &&
           a.b1 == b.b1 && a.Q == b.Q && a.np_pow == b.np_pow;
}

ConfigInvariants make_invariants(int n, long long r, const Rational& a0, const Rational& a1,
                                 const Rational& b0, const Rational& b1, const Rational& Q,
                                 const std::map<long long, Rational>& np_pow) {
    if (n < 1) throw BadInput("invariants: n must be >= 1");
    if (r < 1) throw BadInput("invariants: r must be >= 1");
    if (a0.sign() <= 0) throw BadInput("invariants: a0 must be positive");
    if (Q.sign() <= 0) throw NonPositiveQ("invariants: leading squared-trace coefficient is not positive");

    ConfigInvariants inv;
    inv.n = n;
    inv.r = r;
    inv.a0 = a0;
    inv.a1 = a1;
    inv.b0 = b0;
    inv.b1 = b1;
    inv.Q = Q;
    inv.np_pow = np_pow;
    inv.futaki = b1 - b0 * a1 / a0;
    inv.psi = SqrtRatio::over_sqrt(-b1, Rational(r).pow(n - 2) * Q);
    for (const auto& [p, np] : np_pow) {
        if (p < 2 || p % 2 != 0) throw BadInput("invariants: moments need even p >= 2");
        if (np.sign() < 0)
            throw NonPositiveQ("invariants: centered moment N_" + std::to_string(p) +
                               " is negative, data is not a weight spectrum");
        if (np.is_zero()) continue; // psi_hat undefined for a vanishing moment
        // psi_hat_p = -futaki / (r^(n/q - 1) * N_p), 1/q = 1 - 1/p
        Rational mag = inv.futaki.abs().pow(p) / (Rational(r).pow(n * (p - 1) - p) * np);
        inv.psi_hat[p] = RootRatio::pth_root(-inv.futaki.sign(), mag, p);
    }
    return inv;
}

ConfigInvariants invariants_from_spectrum(const WeightSpectrum& spec,
                                          const std::vector<long long>& p_list, int guard) {
    check_shape(spec);
    long long pmax = 1;
    for (long long p : p_list) {
        if (p < 2 || p % 2 != 0) throw BadInput("invariants: p list entries must be even and >= 2");
        pmax = std::max(pmax, p);
    }

    std::vector<Sample> dim_samples;
    // power_samples[j] holds (k, sum of w^j) for j = 1..pmax
    std::vector<std::vector<Sample>> power_samples(static_cast<std::size_t>(pmax) + 1);
    for (const auto& [k, ws] : spec.weights) {
        dim_samples.push_back({k, Rational(static_cast<long long>(ws.size()))});
        std::vector<BigInt> sums(static_cast<std::size_t>(pmax) + 1, BigInt(0));
        for (long long w : ws) {
            BigInt pw(1);
            for (long long j = 1; j <= pmax; ++j) {
                pw *= w;
                sums[static_cast<std::size_t>(j)] += pw;
            }
        }
        for (long long j = 1; j <= pmax; ++j)
            power_samples[static_cast<std::size_t>(j)].push_back({k, Rational(sums[static_cast<std::size_t>(j)])});
    }

    int n = spec.n;
    UniPoly dim_fit = fit_series(dim_samples, n, guard, "dimension series");
    Rational a0 = leading_coefficient(dim_fit, n);
    Rational a1 = dim_fit.coeff(n - 1);
    if (a0.sign() <= 0) throw BadInput("invariants: dimension series has nonpositive leading term");

    UniPoly tr_fit = fit_series(power_samples[1], n + 1, guard, "trace series");
    Rational b0 = leading_coefficient(tr_fit, n + 1);
    Rational b1 = tr_fit.coeff(n);

    UniPoly tr2_fit = fit_series(power_samples[2], n + 2, guard, "squared trace series");
    Rational Q = leading_coefficient(tr2_fit, n + 2);
    if (Q.sign() <= 0)
        throw NonPositiveQ("invariants: squared trace grows slower than k^(n+2), psi undefined");

    // c_j = leading coefficient of Tr A^j; centered moments come from the
    // binomial expansion around the mean weight b0/a0
    std::vector<Rational> c(static_cast<std::size_t>(pmax) + 1);
    c[0] = a0;
    c[1] = b0;
    c[2] = Q;
    for (long long j = 3; j <= pmax; ++j) {
        UniPoly f = fit_series(power_samples[static_cast<std::size_t>(j)], n + static_cast<int>(j),
                               guard, "trace power " + std::to_string(j));
        c[static_cast<std::size_t>(j)] = leading_coefficient(f, n + static_cast<int>(j));
    }

    std::map<long long, Rational> np_pow;
    Rational mean = b0 / a0;
    for (long long p : p_list) {
        Rational acc(0);
        for (long long j = 0; j <= p; ++j)
            acc += binom(p, j) * (-mean).pow(p - j) * c[static_cast<std::size_t>(j)];
        np_pow[p] = acc;
    }
    return make_invariants(n, spec.r, a0, a1, b0, b1, Q, np_pow);
}

ConfigInvariants twist(const ConfigInvariants& inv, const Rational& nu) {
    Rational b0 = inv.b0 + nu * inv.a0;
    Rational b1 = inv.b1 + nu * inv.a1;
    Rational Q = inv.Q + Rational(2) * inv.b0 * nu + inv.a0 * nu * nu;
    return make_invariants(inv.n, inv.r, inv.a0, inv.a1, b0, b1, Q, inv.np_pow);
}

ConfigInvariants base_change(const ConfigInvariants& inv, long long d) {
    if (d < 1) throw BadInput("base_change: d must be >= 1");
    Rational dd(d);
    std::map<long long, Rational> np;
    for (const auto& [p, v] : inv.np_pow) np[p] = v * dd.pow(p);
    return make_invariants(inv.n, inv.r, inv.a0, inv.a1, dd * inv.b0, dd * inv.b1,
                           dd * dd * inv.Q, np);
}

WeightSpectrum twist_spectrum(const WeightSpectrum& spec, long long nu) {
    WeightSpectrum out = spec;
    for (auto& [k, ws] : out.weights)
        for (auto& w : ws) w += nu * k;
    return out;
}

WeightSpectrum base_change_spectrum(const WeightSpectrum& spec, long long d) {
    if (d < 1) throw BadInput("base_change: d must be >= 1");
    WeightSpectrum out = spec;
    for (auto& [k, ws] : out.weights) {
        (void)k;
        for (auto& w : ws) w *= d;
    }
    return out;
}

Rational optimal_nu(const ConfigInvariants& inv) {
    if (inv.futaki.sign() >= 0)
        throw NonNegativeFutaki("optimal_nu: no destabilizing twist, futaki invariant is " +
                                inv.futaki.str());
    // denominator a0*b1 - a1*b0 = a0*futaki < 0, never zero here
    return (inv.a1 * inv.Q - inv.b0 * inv.b1) / (inv.a0 * inv.b1 - inv.a1 * inv.b0);
}

SqrtRatio twist_supremum(const ConfigInvariants& inv) {
    Rational nu = optimal_nu(inv);
    auto n2 = inv.np_pow.find(2);
    if (n2 != inv.np_pow.end() && n2->second.is_zero())
        throw NonPositiveQ("twist_supremum: centered quadratic moment vanishes");
    return twist(inv, nu).psi;
}

LowerBoundReport lower_bound_report(const ConfigInvariants& inv) {
    LowerBoundReport rep;
    rep.inv = inv;
    rep.n2_centered = inv.Q - inv.b0 * inv.b0 / inv.a0;
    rep.n2_alternative = inv.Q - inv.b1 * inv.b1 / inv.a0;
    rep.destabilizing = inv.futaki.sign() < 0;
    if (rep.destabilizing) {
        rep.nu_star = optimal_nu(inv);
        rep.sup = twist_supremum(inv);
    }
    std::ostringstream note;
    if (rep.n2_centered != rep.n2_alternative) {
        note << "centered quadratic moment uses the mean weight b0/a0: " << rep.n2_centered.str()
             << "; centering on b1 would give " << rep.n2_alternative.str()
             << " and is not a lower bound";
    }
    if (!rep.destabilizing) {
        if (note.tellp() > 0) note << ". ";
        note << "futaki invariant is nonnegative, no twisted lower bound to report";
    }
    rep.note = note.str();
    return rep;
}

} // namespace stab
