#include "stab/unipoly.hpp"
#include "stab/errors.hpp"

#include <set>
#include <sstream>

namespace stab {

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Rational& s) const {
    std::vector<Rational> out(c_);
    for (auto& x : out) x *= s;
    return UniPoly(std::move(out));
}

std::string UniPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[i].str();
        if (i >= 1) os << "*k";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

UniPoly fit_polynomial(const std::vector<Sample>& samples, int degree, int guard) {
    if (degree < 0) throw BadInput("fit_polynomial: negative degree");
    if (guard < 0) throw BadInput("fit_polynomial: negative guard");
    size_t need = static_cast<size_t>(degree) + 1 + static_cast<size_t>(guard);
    if (samples.size() < need) {
        std::ostringstream os;
        os << "fit_polynomial: need at least " << need << " samples, got " << samples.size();
        throw DegenerateSamples(os.str());
    }
    std::set<long long> seen;
    for (const auto& [k, v] : samples) {
        (void)v;
        if (!seen.insert(k).second) {
            std::ostringstream os;
            os << "fit_polynomial: duplicate sample at k=" << k;
            throw DegenerateSamples(os.str());
        }
    }

    size_t m = static_cast<size_t>(degree) + 1;
    // Newton divided differences on the first m samples
    std::vector<Rational> dd(m);
    for (size_t i = 0; i < m; ++i) dd[i] = samples[i].second;
    std::vector<Rational> nodes(m);
    for (size_t i = 0; i < m; ++i) nodes[i] = Rational(samples[i].first);
    for (size_t level = 1; level < m; ++level)
        for (size_t i = m - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);

    UniPoly p = UniPoly::constant(dd[m - 1]);
    for (size_t i = m - 1; i-- > 0;) {
        // p <- p*(x - x_i) + dd[i]
        p = p * UniPoly({-nodes[i], Rational(1)});
        p += UniPoly::constant(dd[i]);
    }

    for (size_t i = m; i < samples.size(); ++i) {
        if (p.eval(Rational(samples[i].first)) != samples[i].second) {
            std::ostringstream os;
            os << "fit_polynomial: guard sample at k=" << samples[i].first
               << " disagrees with the degree-" << degree
               << " fit; the low end of the k-range is not yet polynomial, raise the"
               << " smallest k (and extend the range past k=" << samples.back().first
               << " to keep enough samples)";
            throw GuardMismatch(samples[i].first, os.str());
        }
    }
    return p;
}

Rational leading_coefficient(const UniPoly& p, int expected_degree) {
    if (p.degree() > expected_degree) {
        std::ostringstream os;
        os << "leading_coefficient: polynomial has degree " << p.degree()
           << ", expected at most " << expected_degree;
        throw DegreeExceeded(os.str());
    }
    return p.coeff(expected_degree);
}

} // namespace stab
