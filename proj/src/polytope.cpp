#include "stab/polytope.hpp"
#include "stab/errors.hpp"
#include "stab/threading.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace stab {

namespace {

BigInt dot(const std::vector<long long>& a, const std::vector<long long>& b) {
    BigInt s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += BigInt(a[i]) * b[i];
    return s;
}

int rational_rank(std::vector<std::vector<Rational>> m) {
    int rank = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[pivot]);
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < m.size(); ++r) {
            if (m[r][col].is_zero()) continue;
            Rational factor = m[r][col] / m[static_cast<std::size_t>(rank)][col];
            for (std::size_t c2 = col; c2 < cols; ++c2)
                m[r][c2] -= factor * m[static_cast<std::size_t>(rank)][c2];
        }
        ++rank;
    }
    return rank;
}

int rank_of_normals(const std::vector<std::vector<long long>>& rows, int n) {
    std::vector<std::vector<Rational>> m;
    for (const auto& r : rows) {
        std::vector<Rational> row;
        for (int i = 0; i < n; ++i) row.push_back(Rational(r[static_cast<std::size_t>(i)]));
        m.push_back(row);
    }
    return rational_rank(std::move(m));
}

// any nonzero direction with <u, d> >= 0 for every facet normal u witnesses
// an unbounded intersection; extreme rays of that cone saturate n-1
// independent constraints, so the candidate set below is exhaustive
bool has_recession_ray(const std::vector<std::vector<long long>>& normals, int n) {
    std::vector<std::vector<BigInt>> candidates;
    auto add = [&](std::vector<BigInt> d) {
        bool nonzero = false;
        for (const auto& x : d)
            if (x != 0) nonzero = true;
        if (!nonzero) return;
        candidates.push_back(d);
        for (auto& x : d) x = -x;
        candidates.push_back(d);
    };
    if (n == 1) {
        add({BigInt(1)});
    } else if (n == 2) {
        for (const auto& u : normals) add({BigInt(u[1]), BigInt(-u[0])});
    } else {
        for (std::size_t i = 0; i < normals.size(); ++i)
            for (std::size_t j = i + 1; j < normals.size(); ++j) {
                const auto& a = normals[i];
                const auto& b = normals[j];
                add({BigInt(a[1]) * b[2] - BigInt(a[2]) * b[1],
                     BigInt(a[2]) * b[0] - BigInt(a[0]) * b[2],
                     BigInt(a[0]) * b[1] - BigInt(a[1]) * b[0]});
            }
    }
    for (const auto& d : candidates) {
        bool inside = true;
        for (const auto& u : normals) {
            BigInt s(0);
            for (int i = 0; i < n; ++i) s += BigInt(u[static_cast<std::size_t>(i)]) * d[static_cast<std::size_t>(i)];
            if (s < 0) {
                inside = false;
                break;
            }
        }
        if (inside) return true;
    }
    return false;
}

} // namespace

void validate(const LatticePolytope& p) {
    if (p.n < 1 || p.n > 3)
        throw UnsupportedDimension("polytope: dimension " + std::to_string(p.n) +
                                   " not supported, use 1 to 3");
    std::size_t n = static_cast<std::size_t>(p.n);
    if (p.vertices.size() < n + 1) throw BadInput("polytope: too few vertices");
    if (p.facets.size() < n + 1) throw BadInput("polytope: too few facets");
    for (const auto& v : p.vertices)
        if (v.size() != n) throw BadInput("polytope: vertex dimension mismatch");
    {
        std::set<std::vector<long long>> uniq(p.vertices.begin(), p.vertices.end());
        if (uniq.size() != p.vertices.size()) throw BadInput("polytope: repeated vertex");
    }
    std::vector<std::vector<long long>> normals;
    for (const auto& f : p.facets) {
        if (f.normal.size() != n) throw BadInput("polytope: facet dimension mismatch");
        if (std::all_of(f.normal.begin(), f.normal.end(), [](long long x) { return x == 0; }))
            throw BadInput("polytope: zero facet normal");
        normals.push_back(f.normal);
    }

    // every vertex inside, every facet supported by at least n vertices,
    // every vertex a genuine corner
    std::vector<std::size_t> support(p.facets.size(), 0);
    for (const auto& v : p.vertices) {
        std::vector<std::vector<long long>> active;
        for (std::size_t fi = 0; fi < p.facets.size(); ++fi) {
            BigInt s = dot(p.facets[fi].normal, v) + p.facets[fi].offset;
            if (s < 0) {
                std::ostringstream os;
                os << "polytope: a vertex violates facet " << fi;
                throw BadInput(os.str());
            }
            if (s == 0) {
                ++support[fi];
                active.push_back(p.facets[fi].normal);
            }
        }
        if (rank_of_normals(active, p.n) < p.n)
            throw BadInput("polytope: listed vertex is not a corner of the facet description");
    }
    for (std::size_t fi = 0; fi < p.facets.size(); ++fi)
        if (support[fi] < n) {
            std::ostringstream os;
            os << "polytope: facet " << fi << " touches fewer than " << n << " vertices";
            throw BadInput(os.str());
        }

    if (rank_of_normals(normals, p.n) < p.n || has_recession_ray(normals, p.n))
        throw BadInput("polytope: facet description is unbounded");
}

LatticePolytope segment_polytope(long long lo, long long hi) {
    if (lo >= hi) throw BadInput("segment: need lo < hi");
    LatticePolytope p;
    p.n = 1;
    p.vertices = {{lo}, {hi}};
    p.facets = {{{1}, -lo}, {{-1}, hi}};
    return p;
}

LatticePolytope box_polytope(const std::vector<long long>& sides) {
    int n = static_cast<int>(sides.size());
    if (n < 1 || n > 3) throw UnsupportedDimension("box: dimension must be 1 to 3");
    for (long long s : sides)
        if (s < 1) throw BadInput("box: sides must be positive");
    LatticePolytope p;
    p.n = n;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<long long> v;
        for (int i = 0; i < n; ++i) v.push_back((mask >> i) & 1 ? sides[static_cast<std::size_t>(i)] : 0);
        p.vertices.push_back(v);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<long long> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.facets.push_back({e, 0});
        e[static_cast<std::size_t>(i)] = -1;
        p.facets.push_back({e, sides[static_cast<std::size_t>(i)]});
    }
    return p;
}

LatticePolytope simplex_polytope(int n, long long m) {
    if (n < 1 || n > 3) throw UnsupportedDimension("simplex: dimension must be 1 to 3");
    if (m < 1) throw BadInput("simplex: size must be positive");
    LatticePolytope p;
    p.n = n;
    p.vertices.push_back(std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        std::vector<long long> v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(i)] = m;
        p.vertices.push_back(v);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<long long> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.facets.push_back({e, 0});
    }
    p.facets.push_back({std::vector<long long>(static_cast<std::size_t>(n), -1), m});
    return p;
}

void validate(const LatticePolytope& p, const PLConvexFunction& f) {
    validate(p);
    if (f.pieces.empty()) throw BadInput("pl function: no pieces");
    for (const auto& piece : f.pieces)
        if (piece.c.size() != static_cast<std::size_t>(p.n))
            throw BadInput("pl function: piece dimension mismatch");
}

Rational pl_eval(const PLConvexFunction& f, const std::vector<Rational>& x) {
    if (f.pieces.empty()) throw BadInput("pl function: no pieces");
    bool first = true;
    Rational best;
    for (const auto& piece : f.pieces) {
        Rational v(piece.d);
        for (std::size_t i = 0; i < x.size(); ++i) v += Rational(piece.c[i]) * x[i];
        if (first || v > best) best = v;
        first = false;
    }
    return best;
}

std::vector<std::vector<long long>> lattice_points(const LatticePolytope& p, long long k) {
    validate(p);
    if (k < 1) throw BadInput("lattice_points: k must be >= 1");
    std::size_t n = static_cast<std::size_t>(p.n);
    std::vector<long long> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = hi[i] = k * p.vertices[0][i];
        for (const auto& v : p.vertices) {
            lo[i] = std::min(lo[i], k * v[i]);
            hi[i] = std::max(hi[i], k * v[i]);
        }
    }
    auto inside = [&](const std::vector<long long>& x) {
        for (const auto& f : p.facets) {
            long long s = k * f.offset;
            for (std::size_t i = 0; i < n; ++i) s += f.normal[i] * x[i];
            if (s < 0) return false;
        }
        return true;
    };
    std::vector<std::vector<long long>> out;
    std::vector<long long> x(n);
    if (n == 1) {
        for (x[0] = lo[0]; x[0] <= hi[0]; ++x[0])
            if (inside(x)) out.push_back(x);
    } else if (n == 2) {
        for (x[0] = lo[0]; x[0] <= hi[0]; ++x[0])
            for (x[1] = lo[1]; x[1] <= hi[1]; ++x[1])
                if (inside(x)) out.push_back(x);
    } else {
        for (x[0] = lo[0]; x[0] <= hi[0]; ++x[0])
            for (x[1] = lo[1]; x[1] <= hi[1]; ++x[1])
                for (x[2] = lo[2]; x[2] <= hi[2]; ++x[2])
                    if (inside(x)) out.push_back(x);
    }
    return out;
}

long long point_weight(const PLConvexFunction& f, const std::vector<long long>& alpha,
                       long long k) {
    bool first = true;
    long long best = 0;
    for (const auto& piece : f.pieces) {
        long long v = piece.d * k;
        for (std::size_t i = 0; i < alpha.size(); ++i) v += piece.c[i] * alpha[i];
        if (first || v > best) best = v;
        first = false;
    }
    return best;
}

namespace {

WeightSpectrum spectrum_impl(const LatticePolytope& p, const PLConvexFunction& f, long long k_min,
                             long long k_max, bool parallel) {
    validate(p, f);
    if (k_min < 1 || k_max < k_min) throw BadInput("weight_spectrum: bad k range");
    std::vector<long long> ks;
    for (long long k = k_min; k <= k_max; ++k) ks.push_back(k);
    std::vector<std::vector<long long>> per_k(ks.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(worker_count()) if (parallel)
#endif
    for (std::size_t i = 0; i < ks.size(); ++i) {
        auto pts = lattice_points(p, ks[i]);
        std::vector<long long> w;
        w.reserve(pts.size());
        for (const auto& a : pts) w.push_back(point_weight(f, a, ks[i]));
        std::sort(w.begin(), w.end());
        per_k[i] = std::move(w);
    }
    (void)parallel;

    WeightSpectrum s;
    s.n = p.n;
    s.r = 1;
    for (std::size_t i = 0; i < ks.size(); ++i) s.weights[ks[i]] = std::move(per_k[i]);
    return s;
}

} // namespace

WeightSpectrum weight_spectrum_serial(const LatticePolytope& p, const PLConvexFunction& f,
                                      long long k_min, long long k_max) {
    return spectrum_impl(p, f, k_min, k_max, false);
}

WeightSpectrum weight_spectrum(const LatticePolytope& p, const PLConvexFunction& f, long long k_min,
                               long long k_max) {
    return spectrum_impl(p, f, k_min, k_max, true);
}

} // namespace stab
