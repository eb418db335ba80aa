#include "stab/toric_integrals.hpp"
#include "stab/errors.hpp"
#include "stab/threading.hpp"

#include <algorithm>
#include <numeric>

namespace stab {

namespace {

Rational dot_r(const std::vector<long long>& a, const RPoint& x) {
    Rational s(0);
    for (std::size_t i = 0; i < x.size(); ++i) s += Rational(a[i]) * x[i];
    return s;
}

Rational affine_at(const PLPiece& piece, const RPoint& x) {
    return dot_r(piece.c, x) + Rational(piece.d);
}

Rational cross2(const RPoint& o, const RPoint& a, const RPoint& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// convex position assumed; anchor at the lexicographic minimum and sweep
std::vector<RPoint> order_convex_ccw(std::vector<RPoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const RPoint& a, const RPoint& b) {
        if (a[0] != b[0]) return a[0] < b[0];
        return a[1] < b[1];
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    RPoint anchor = pts.front();
    std::sort(pts.begin() + 1, pts.end(), [&](const RPoint& a, const RPoint& b) {
        Rational c = cross2(anchor, a, b);
        if (!c.is_zero()) return c.sign() > 0;
        // collinear with the anchor: nearer point first
        Rational da = (a[0] - anchor[0]).abs() + (a[1] - anchor[1]).abs();
        Rational db = (b[0] - anchor[0]).abs() + (b[1] - anchor[1]).abs();
        return da < db;
    });
    return pts;
}

// half-plane <a, x> + b >= 0 applied to an ordered convex polygon
std::vector<RPoint> clip_polygon(const std::vector<RPoint>& poly, const std::vector<long long>& a,
                                 long long b) {
    std::vector<RPoint> out;
    std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        const RPoint& cur = poly[i];
        const RPoint& nxt = poly[(i + 1) % m];
        Rational sc = dot_r(a, cur) + Rational(b);
        Rational sn = dot_r(a, nxt) + Rational(b);
        if (sc.sign() >= 0) out.push_back(cur);
        if ((sc.sign() > 0 && sn.sign() < 0) || (sc.sign() < 0 && sn.sign() > 0)) {
            Rational t = sc / (sc - sn);
            RPoint mid(2);
            mid[0] = cur[0] + t * (nxt[0] - cur[0]);
            mid[1] = cur[1] + t * (nxt[1] - cur[1]);
            out.push_back(mid);
        }
    }
    std::vector<RPoint> dedup;
    for (const auto& q : out)
        if (dedup.empty() || q != dedup.back()) dedup.push_back(q);
    if (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    return dedup;
}

Rational polygon_area(const std::vector<RPoint>& poly) {
    Rational twice(0);
    std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        const RPoint& a = poly[i];
        const RPoint& b = poly[(i + 1) % m];
        twice += a[0] * b[1] - a[1] * b[0];
    }
    return twice.abs() / Rational(2);
}

// complete homogeneous symmetric polynomial of degree `deg`
Rational h_complete(const std::vector<Rational>& xs, long long deg) {
    std::vector<Rational> h(static_cast<std::size_t>(deg) + 1, Rational(0));
    h[0] = Rational(1);
    for (const auto& x : xs)
        for (long long j = 1; j <= deg; ++j)
            h[static_cast<std::size_t>(j)] += x * h[static_cast<std::size_t>(j - 1)];
    return h[static_cast<std::size_t>(deg)];
}

Rational factorial(long long m) {
    Rational r(1);
    for (long long i = 2; i <= m; ++i) r *= Rational(i);
    return r;
}

// integral of an affine function's p-th power over a simplex:
//   n! * vol * p!/(n+p)! * h_p(values at the n+1 vertices)
Rational simplex_power_integral(const Rational& vol, const std::vector<Rational>& values,
                                long long power) {
    long long n = static_cast<long long>(values.size()) - 1;
    return factorial(n) * vol * factorial(power) / factorial(n + power) *
           h_complete(values, power);
}

std::vector<RPoint> vertices_as_rational(const LatticePolytope& p) {
    std::vector<RPoint> pts;
    for (const auto& v : p.vertices) {
        RPoint q;
        for (long long x : v) q.push_back(Rational(x));
        pts.push_back(q);
    }
    return pts;
}

Rational det3(const RPoint& a, const RPoint& b, const RPoint& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

RPoint sub(const RPoint& a, const RPoint& b) {
    RPoint r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

// facet polygon of a 3-polytope, ordered around its centroid in the
// projection that drops the dominant normal axis
std::vector<RPoint> order_facet_cycle(std::vector<RPoint> pts, const std::vector<long long>& normal) {
    std::size_t drop = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (std::abs(normal[i]) > std::abs(normal[drop])) drop = i;
    std::size_t u = (drop + 1) % 3, v = (drop + 2) % 3;
    RPoint centroid(3, Rational(0));
    for (const auto& q : pts)
        for (std::size_t i = 0; i < 3; ++i) centroid[i] += q[i];
    for (std::size_t i = 0; i < 3; ++i) centroid[i] /= Rational(static_cast<long long>(pts.size()));
    auto half = [&](const RPoint& q) {
        Rational dy = q[v] - centroid[v];
        Rational dx = q[u] - centroid[u];
        return (dy.sign() > 0 || (dy.sign() == 0 && dx.sign() > 0)) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const RPoint& a, const RPoint& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        Rational cr = (a[u] - centroid[u]) * (b[v] - centroid[v]) -
                      (a[v] - centroid[v]) * (b[u] - centroid[u]);
        return cr.sign() > 0;
    });
    return pts;
}

// tetrahedra fanned from the first vertex over every facet avoiding it
template <typename Visit>
void fan_tetrahedra(const LatticePolytope& p, const Visit& visit) {
    auto pts = vertices_as_rational(p);
    const RPoint& apex = pts[0];
    for (const auto& f : p.facets) {
        auto on_facet = [&](const RPoint& q) {
            Rational s(f.offset);
            for (std::size_t i = 0; i < 3; ++i) s += Rational(f.normal[i]) * q[i];
            return s.is_zero();
        };
        if (on_facet(apex)) continue;
        std::vector<RPoint> cyc;
        for (const auto& q : pts)
            if (on_facet(q)) cyc.push_back(q);
        if (cyc.size() < 3) continue;
        cyc = order_facet_cycle(std::move(cyc), f.normal);
        for (std::size_t i = 1; i + 1 < cyc.size(); ++i) {
            Rational vol =
                det3(sub(cyc[0], apex), sub(cyc[i], apex), sub(cyc[i + 1], apex)).abs() /
                Rational(6);
            if (!vol.is_zero()) visit(vol, std::vector<RPoint>{apex, cyc[0], cyc[i], cyc[i + 1]});
        }
    }
}

Rational region_power_integral(int n, const LinearityRegion& reg, const PLPiece& piece,
                               const Rational& shift, long long power) {
    if (n == 1) {
        const RPoint& a = reg.vertices[0];
        const RPoint& b = reg.vertices[1];
        Rational vol = (b[0] - a[0]).abs();
        return simplex_power_integral(vol, {affine_at(piece, a) - shift, affine_at(piece, b) - shift},
                                      power);
    }
    Rational total(0);
    for (std::size_t i = 1; i + 1 < reg.vertices.size(); ++i) {
        const RPoint& a = reg.vertices[0];
        const RPoint& b = reg.vertices[i];
        const RPoint& c = reg.vertices[i + 1];
        Rational vol = cross2(a, b, c).abs() / Rational(2);
        if (vol.is_zero()) continue;
        total += simplex_power_integral(vol,
                                        {affine_at(piece, a) - shift, affine_at(piece, b) - shift,
                                         affine_at(piece, c) - shift},
                                        power);
    }
    return total;
}

Rational integral_with_shift(const LatticePolytope& p, const PLConvexFunction& f,
                             long long power, const Rational& shift) {
    if (power < 1) throw BadInput("exact_integral: power must be >= 1");
    if (p.n == 3) {
        if (f.pieces.size() != 1)
            throw UnsupportedDimension(
                "exact_integral: piecewise integrands are supported up to dimension 2; "
                "dimension 3 needs a single affine piece");
        Rational total(0);
        fan_tetrahedra(p, [&](const Rational& vol, const std::vector<RPoint>& tet) {
            std::vector<Rational> vals;
            for (const auto& q : tet) vals.push_back(affine_at(f.pieces[0], q) - shift);
            total += simplex_power_integral(vol, vals, power);
        });
        return total;
    }
    Rational total(0);
    for (const auto& reg : linearity_regions(p, f))
        total += region_power_integral(p.n, reg, f.pieces[reg.piece], shift, power);
    return total;
}

} // namespace

std::vector<LinearityRegion> linearity_regions(const LatticePolytope& p,
                                               const PLConvexFunction& f) {
    validate(p, f);
    std::vector<LinearityRegion> out;
    if (p.n == 3) {
        if (f.pieces.size() != 1)
            throw UnsupportedDimension(
                "linearity_regions: piecewise functions are supported up to dimension 2");
        out.push_back({0, vertices_as_rational(p)});
        return out;
    }
    if (p.n == 1) {
        Rational lo(p.vertices[0][0]), hi(p.vertices[0][0]);
        for (const auto& v : p.vertices) {
            lo = std::min(lo, Rational(v[0]));
            hi = std::max(hi, Rational(v[0]));
        }
        for (std::size_t j = 0; j < f.pieces.size(); ++j) {
            Rational a = lo, b = hi;
            bool empty = false;
            for (std::size_t i = 0; i < f.pieces.size() && !empty; ++i) {
                if (i == j) continue;
                long long slope_d = f.pieces[j].c[0] - f.pieces[i].c[0];
                Rational off(f.pieces[j].d - f.pieces[i].d);
                // slope_d * x + off >= 0
                if (slope_d == 0) {
                    if (off.sign() < 0) empty = true;
                } else if (slope_d > 0) {
                    a = std::max(a, -off / Rational(slope_d));
                } else {
                    b = std::min(b, -off / Rational(slope_d));
                }
            }
            if (!empty && a < b) out.push_back({j, {{a}, {b}}});
        }
        return out;
    }
    auto base = order_convex_ccw(vertices_as_rational(p));
    for (std::size_t j = 0; j < f.pieces.size(); ++j) {
        std::vector<RPoint> cell = base;
        for (std::size_t i = 0; i < f.pieces.size() && cell.size() >= 3; ++i) {
            if (i == j) continue;
            std::vector<long long> a(2);
            a[0] = f.pieces[j].c[0] - f.pieces[i].c[0];
            a[1] = f.pieces[j].c[1] - f.pieces[i].c[1];
            cell = clip_polygon(cell, a, f.pieces[j].d - f.pieces[i].d);
        }
        if (cell.size() >= 3 && !polygon_area(cell).is_zero()) out.push_back({j, cell});
    }
    return out;
}

Rational polytope_volume(const LatticePolytope& p) {
    validate(p);
    if (p.n == 1) {
        Rational lo(p.vertices[0][0]), hi(p.vertices[0][0]);
        for (const auto& v : p.vertices) {
            lo = std::min(lo, Rational(v[0]));
            hi = std::max(hi, Rational(v[0]));
        }
        return hi - lo;
    }
    if (p.n == 2) return polygon_area(order_convex_ccw(vertices_as_rational(p)));
    Rational total(0);
    fan_tetrahedra(p, [&](const Rational& vol, const std::vector<RPoint>&) { total += vol; });
    return total;
}

Rational average_value(const LatticePolytope& p, const PLConvexFunction& f) {
    validate(p, f);
    return integral_with_shift(p, f, 1, Rational(0)) / polytope_volume(p);
}

Rational exact_integral(const LatticePolytope& p, const PLConvexFunction& f, long long power,
                        bool centered) {
    validate(p, f);
    Rational shift = centered ? average_value(p, f) : Rational(0);
    return integral_with_shift(p, f, power, shift);
}

Rational n_infinity(const LatticePolytope& p, const PLConvexFunction& f) {
    Rational mean = average_value(p, f);
    Rational best(0);
    for (const auto& reg : linearity_regions(p, f))
        for (const auto& q : reg.vertices) {
            Rational dev = (affine_at(f.pieces[reg.piece], q) - mean).abs();
            best = std::max(best, dev);
        }
    return best;
}

MomentRateReport moment_rate_report(const LatticePolytope& p, const PLConvexFunction& f,
                                    long long k_min, long long k_max,
                                    const std::vector<long long>& r_list) {
    validate(p, f);
    if (k_min < 1 || k_max < k_min) throw BadInput("moment_rate_report: bad k range");
    for (long long r : r_list)
        if (r < 1) throw BadInput("moment_rate_report: powers must be >= 1");

    MomentRateReport rep;
    rep.volume = polytope_volume(p);
    rep.target_mean = integral_with_shift(p, f, 1, Rational(0));
    Rational mean = rep.target_mean / rep.volume;
    for (long long r : r_list) rep.centered_targets[r] = integral_with_shift(p, f, r, mean);

    std::vector<long long> ks;
    for (long long k = k_min; k <= k_max; ++k) ks.push_back(k);
    std::vector<Rational> mean_res(ks.size());
    std::vector<std::map<long long, Rational>> centered_res(ks.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
#endif
    for (std::size_t i = 0; i < ks.size(); ++i) {
        long long k = ks[i];
        auto pts = lattice_points(p, k);
        BigInt trace(0);
        for (const auto& alpha : pts) trace += point_weight(f, alpha, k);
        Rational kn1 = Rational(k).pow(p.n + 1);
        mean_res[i] = (Rational(trace) / kn1 - rep.target_mean).abs();

        Rational mk = Rational(trace) / Rational(static_cast<long long>(pts.size()));
        for (long long r : r_list) {
            Rational sum(0);
            for (const auto& alpha : pts) sum += (Rational(point_weight(f, alpha, k)) - mk).pow(r);
            Rational knr = Rational(k).pow(p.n + static_cast<int>(r));
            centered_res[i][r] = (sum / knr - rep.centered_targets[r]).abs();
        }
    }

    for (std::size_t i = 0; i < ks.size(); ++i) {
        rep.mean_residuals.push_back({ks[i], mean_res[i]});
        rep.mean_rate_constant = std::max(rep.mean_rate_constant, Rational(ks[i]) * mean_res[i]);
        for (long long r : r_list) {
            rep.centered_residuals[r].push_back({ks[i], centered_res[i][r]});
            rep.centered_rate_constants[r] =
                std::max(rep.centered_rate_constants[r], Rational(ks[i]) * centered_res[i][r]);
        }
    }
    return rep;
}

} // namespace stab
