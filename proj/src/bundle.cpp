#include "stab/bundle.hpp"
#include "stab/errors.hpp"
#include "stab/threading.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stab {

namespace {

void check_pieces(const BundleSpec& spec) {
    if (spec.pieces.empty()) throw BadInput("bundle spec has no pieces");
    for (const auto& p : spec.pieces) {
        if (p.rank < 1) throw BadInput("piece rank must be >= 1");
        if (p.multiplicity < 1) throw BadInput("piece multiplicity must be >= 1");
    }
}

} // namespace

std::vector<BundlePiece> canonical_pieces(const BundleSpec& spec) {
    check_pieces(spec);
    std::vector<BundlePiece> out = spec.pieces;
    std::sort(out.begin(), out.end(), [](const BundlePiece& a, const BundlePiece& b) {
        Rational ma = slope(a.rank, a.degree), mb = slope(b.rank, b.degree);
        if (ma != mb) return ma > mb;
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.degree < b.degree;
    });
    std::vector<BundlePiece> merged;
    for (const auto& p : out) {
        if (!merged.empty() && merged.back().rank == p.rank && merged.back().degree == p.degree)
            merged.back().multiplicity += p.multiplicity;
        else
            merged.push_back(p);
    }
    return merged;
}

long long total_units(const BundleSpec& spec) {
    check_pieces(spec);
    long long n = 0;
    for (const auto& p : spec.pieces) n += p.multiplicity;
    return n;
}

Rational slope(long long rank, long long degree) {
    if (rank < 1) throw BadInput("slope: rank must be >= 1");
    return Rational(degree, rank);
}

SqrtRatio phi(const Flag& flag) {
    if (flag.empty()) throw BadInput("phi: empty flag");
    Rational sum(0);
    for (const auto& st : flag) {
        if (st.rank < 1) throw BadInput("phi: step rank must be >= 1");
        sum += Rational(st.degree * st.degree, st.rank);
    }
    return SqrtRatio::times_sqrt(Rational(1), sum);
}

SqrtRatio psi_flag(const Flag& flag, const std::vector<Rational>& weights) {
    if (flag.empty()) throw BadInput("psi_flag: empty flag");
    if (weights.size() != flag.size())
        throw WeightsDiffer("psi_flag: weight count does not match flag length");
    Rational num(0), den(0);
    bool any = false;
    for (std::size_t i = 0; i < flag.size(); ++i) {
        if (flag[i].rank < 1) throw BadInput("psi_flag: step rank must be >= 1");
        if (!weights[i].is_zero()) any = true;
        num -= Rational(flag[i].degree) * weights[i];
        den += Rational(flag[i].rank) * weights[i] * weights[i];
    }
    if (!any) throw ZeroWeights("psi_flag: all weights are zero");
    return SqrtRatio::over_sqrt(num, den);
}

std::vector<Rational> optimal_weights(const Flag& flag) {
    if (flag.empty()) throw BadInput("optimal_weights: empty flag");
    std::vector<Rational> mu;
    mu.reserve(flag.size());
    for (const auto& st : flag) mu.push_back(slope(st.rank, st.degree));
    for (std::size_t i = 1; i < mu.size(); ++i)
        if (!(mu[i] < mu[i - 1]))
            throw NotSlopeDecreasing("optimal_weights: slopes must strictly decrease");
    Rational g(0);
    for (const auto& m : mu)
        if (!m.is_zero()) g = g.is_zero() ? m.abs() : rational_gcd(g, m.abs());
    if (g.is_zero()) throw AllSlopesZero("optimal_weights: every slope is zero");
    std::vector<Rational> w;
    w.reserve(mu.size());
    for (const auto& m : mu) w.push_back(-(m / g));
    return w;
}

Flag merge_step(const Flag& flag, std::size_t index) {
    if (flag.size() < 2 || index + 1 >= flag.size())
        throw BadInput("merge_step: index out of range");
    Flag out;
    out.reserve(flag.size() - 1);
    for (std::size_t i = 0; i < flag.size(); ++i) {
        if (i == index) {
            out.push_back({flag[i].rank + flag[i + 1].rank, flag[i].degree + flag[i + 1].degree});
            ++i;
        } else {
            out.push_back(flag[i]);
        }
    }
    return out;
}

Flag harder_narasimhan(const BundleSpec& spec) {
    auto pieces = canonical_pieces(spec);
    Flag flag;
    for (const auto& p : pieces) {
        Rational mu = slope(p.rank, p.degree);
        if (!flag.empty() && slope(flag.back().rank, flag.back().degree) == mu) {
            flag.back().rank += p.rank * p.multiplicity;
            flag.back().degree += p.degree * p.multiplicity;
        } else {
            flag.push_back({p.rank * p.multiplicity, p.degree * p.multiplicity});
        }
    }
    return flag;
}

SqrtRatio phi_hn(const BundleSpec& spec) { return phi(harder_narasimhan(spec)); }

long long weight_bound_for(const BundleSpec& spec) {
    auto pieces = canonical_pieces(spec);
    long long l = 1;
    for (const auto& p : pieces) l = std::lcm(l, p.rank);
    long long b = 0;
    for (const auto& p : pieces) b = std::max(b, l * std::abs(p.degree) / p.rank);
    return std::max<long long>(b, 1);
}

namespace {

constexpr int kMaxUnits = 8;

struct CompAgg {
    int q = 0;
    std::array<long long, kMaxUnits> R{};
    std::array<long long, kMaxUnits> D{};
};

// Ordered partitions of the multiset {type t, count[t] copies}.  Blocks are
// emitted as count vectors; identical pieces are interchangeable so this
// enumerates each flag exactly once.
template <typename F>
void walk_compositions(std::vector<long long>& rem, long long remaining_total,
                       std::vector<std::vector<long long>>& acc, const F& f) {
    if (remaining_total == 0) {
        f(acc);
        return;
    }
    std::vector<long long> c(rem.size(), 0);
    long long csum = 0;
    for (;;) {
        std::size_t i = 0;
        while (i < c.size()) {
            if (c[i] < rem[i]) {
                ++c[i];
                ++csum;
                break;
            }
            csum -= c[i];
            c[i] = 0;
            ++i;
        }
        if (i == c.size()) break;
        for (std::size_t t = 0; t < rem.size(); ++t) rem[t] -= c[t];
        acc.push_back(c);
        walk_compositions(rem, remaining_total - csum, acc, f);
        acc.pop_back();
        for (std::size_t t = 0; t < rem.size(); ++t) rem[t] += c[t];
    }
}

struct Best {
    bool set = false;
    long long n = 0, s = 1; // candidate value n / sqrt(s)
    std::size_t comp = 0;
    std::array<int, kMaxUnits> w{};
    int q = 0;
};

// sign of a/sqrt(b) - c/sqrt(d) for b, d > 0
inline int cmp_ratio(long long a, long long b, long long c, long long d) {
    int sa = (a > 0) - (a < 0), sc = (c > 0) - (c < 0);
    if (sa != sc) return sa < sc ? -1 : 1;
    if (sa == 0) return 0;
    __int128 lhs = static_cast<__int128>(a) * a * d;
    __int128 rhs = static_cast<__int128>(c) * c * b;
    if (lhs == rhs) return 0;
    return ((lhs > rhs) == (sa > 0)) ? 1 : -1;
}

inline bool lex_less(const std::array<int, kMaxUnits>& a, int qa,
                     const std::array<int, kMaxUnits>& b, int qb) {
    return std::lexicographical_compare(a.begin(), a.begin() + qa, b.begin(), b.begin() + qb);
}

// candidate replaces best on strictly larger value, ties broken by earliest
// composition then lexicographically smallest weights; keeps the parallel and
// serial scans byte-identical
inline void offer(Best& best, long long n, long long s, std::size_t comp,
                  const std::array<int, kMaxUnits>& w, int q) {
    if (best.set) {
        int c = cmp_ratio(n, s, best.n, best.s);
        if (c < 0) return;
        if (c == 0 && (comp > best.comp || (comp == best.comp && !lex_less(w, q, best.w, best.q))))
            return;
    }
    best.set = true;
    best.n = n;
    best.s = s;
    best.comp = comp;
    best.w = w;
    best.q = q;
}

struct ScanState {
    const CompAgg* agg;
    long long bound;
    std::size_t comp;
    Best* best;
    unsigned long long leaves = 0;
    std::array<int, kMaxUnits> w{};
};

void scan_level(ScanState& st, int level, int wlo, long long s1, long long s2) {
    const CompAgg& a = *st.agg;
    int hi = static_cast<int>(st.bound) - (a.q - 1 - level);
    if (level + 1 == a.q) {
        long long dj = a.D[level], rj = a.R[level];
        long long dterm = dj * wlo;
        long long t = rj * wlo * wlo;
        long long two_r = 2 * rj;
        long long rstep = rj * (2 * wlo + 1);
        for (int w = wlo; w <= hi; ++w) {
            if (!(a.q == 1 && w == 0)) {
                ++st.leaves;
                st.w[level] = w;
                offer(*st.best, -(s1 + dterm), s2 + t, st.comp, st.w, a.q);
            }
            dterm += dj;
            t += rstep;
            rstep += two_r;
        }
        return;
    }
    for (int w = wlo; w <= hi; ++w) {
        st.w[level] = w;
        scan_level(st, level + 1, w + 1, s1 + a.D[level] * w, s2 + a.R[level] * w * w);
    }
}

long double comb(long long n, long long k) {
    if (k < 0 || k > n) return 0.0L;
    long double r = 1.0L;
    for (long long i = 0; i < k; ++i) r = r * static_cast<long double>(n - i) / (i + 1);
    return r;
}

SupPsiResult sup_psi_impl(const BundleSpec& spec, long long weight_bound,
                          unsigned long long budget, bool parallel) {
    auto types = canonical_pieces(spec);
    long long units = total_units(spec);
    if (units > kMaxUnits) {
        std::ostringstream os;
        os << "brute_force_sup_psi: " << units << " pieces with multiplicity, limit is "
           << kMaxUnits;
        throw TooLarge(os.str());
    }
    if (weight_bound < 1) throw BadInput("brute_force_sup_psi: weight bound must be >= 1");
    long long abs_deg = 0, tot_rank = 0;
    for (const auto& p : types) {
        abs_deg += std::abs(p.degree) * p.multiplicity;
        tot_rank += p.rank * p.multiplicity;
    }
    // keep every cross-multiplied comparison inside 128 bits
    if (weight_bound > 100000 || abs_deg > 100000 || tot_rank > 1000000)
        throw TooLarge("brute_force_sup_psi: weight bound or piece sizes exceed the exact "
                       "comparison range");

    std::vector<long long> counts;
    counts.reserve(types.size());
    for (const auto& p : types) counts.push_back(p.multiplicity);

    std::vector<CompAgg> comps;
    {
        std::vector<long long> rem = counts;
        std::vector<std::vector<long long>> acc;
        walk_compositions(rem, units, acc, [&](const std::vector<std::vector<long long>>& blocks) {
            CompAgg a;
            a.q = static_cast<int>(blocks.size());
            for (int j = 0; j < a.q; ++j)
                for (std::size_t t = 0; t < types.size(); ++t) {
                    a.R[j] += blocks[j][t] * types[t].rank;
                    a.D[j] += blocks[j][t] * types[t].degree;
                }
            comps.push_back(a);
        });
    }

    long double est = 0.0L;
    for (const auto& a : comps)
        est += a.q == 1 ? static_cast<long double>(2 * weight_bound)
                        : comb(2 * weight_bound + 1, a.q);
    if (est > static_cast<long double>(budget)) {
        std::ostringstream os;
        os << "brute_force_sup_psi: about " << static_cast<double>(est)
           << " weight vectors, budget is " << budget
           << "; lower the weight bound or use fewer pieces";
        throw TooLarge(os.str());
    }

    Best best;
    unsigned long long leaves = 0;
    const int B = static_cast<int>(weight_bound);

    auto scan_comp = [&](std::size_t ci, Best& b, unsigned long long& lv) {
        ScanState st;
        st.agg = &comps[ci];
        st.bound = B;
        st.comp = ci;
        st.best = &b;
        scan_level(st, 0, -B, 0, 0);
        lv += st.leaves;
    };

#ifdef _OPENMP
    if (parallel) {
        int nt = worker_count();
        std::vector<Best> bests(static_cast<std::size_t>(nt));
#pragma omp parallel for schedule(dynamic) num_threads(nt) reduction(+ : leaves)
        for (std::size_t ci = 0; ci < comps.size(); ++ci)
            scan_comp(ci, bests[static_cast<std::size_t>(omp_get_thread_num())], leaves);
        for (const auto& b : bests)
            if (b.set) offer(best, b.n, b.s, b.comp, b.w, b.q);
    } else
#else
    (void)parallel;
#endif
    {
        for (std::size_t ci = 0; ci < comps.size(); ++ci) scan_comp(ci, best, leaves);
    }

    if (!best.set) throw TooLarge("brute_force_sup_psi: nothing enumerated");

    SupPsiResult res;
    res.sup = SqrtRatio::over_sqrt(Rational(best.n), Rational(best.s));
    res.types = types;
    res.weights.assign(best.w.begin(), best.w.begin() + best.q);
    res.leaves = leaves;
    {
        std::vector<long long> rem = counts;
        std::vector<std::vector<long long>> acc;
        std::size_t idx = 0;
        walk_compositions(rem, units, acc, [&](const std::vector<std::vector<long long>>& blocks) {
            if (idx++ == best.comp) res.blocks = blocks;
        });
    }
    return res;
}

} // namespace

SupPsiResult brute_force_sup_psi_serial(const BundleSpec& spec, long long weight_bound,
                                        unsigned long long budget) {
    return sup_psi_impl(spec, weight_bound, budget, false);
}

SupPsiResult brute_force_sup_psi(const BundleSpec& spec, long long weight_bound,
                                 unsigned long long budget) {
    return sup_psi_impl(spec, weight_bound, budget, true);
}

} // namespace stab
