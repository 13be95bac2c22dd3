#include "lipwb/plfun.hpp"

#include "lipwb/errors.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace lipwb {

PiecewiseLinearFunction::PiecewiseLinearFunction(QVec x, QVec y, bool ext_left, bool ext_right, Q base_coord)
    : xs(std::move(x)), ys(std::move(y)), extend_left(ext_left), extend_right(ext_right), base(std::move(base_coord)) {
    if (xs.empty() || xs.size() != ys.size()) throw DomainError("breakpoints and values must be non-empty and aligned");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i] <= xs[i - 1]) throw DomainError("breakpoints must be strictly increasing");
    if (!in_domain(base)) throw DomainError("base coordinate outside the domain");
    if ((*this)(base) != 0) throw DomainError("value at the base coordinate must be 0");
}

bool PiecewiseLinearFunction::in_domain(const Q& x) const {
    if (x < xs.front() && !extend_left) return false;
    if (x > xs.back() && !extend_right) return false;
    return true;
}

Q PiecewiseLinearFunction::operator()(const Q& x) const {
    if (!in_domain(x)) throw DomainError("x outside the domain: " + to_string(x));
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t i = static_cast<std::size_t>(it - xs.begin()) - 1;
    if (xs[i] == x) return ys[i];
    return ys[i] + (ys[i + 1] - ys[i]) * (x - xs[i]) / (xs[i + 1] - xs[i]);
}

Q pl_norm(const PiecewiseLinearFunction& f) {
    Q best = 0;
    for (std::size_t i = 0; i < f.segments(); ++i) best = std::max(best, qabs(f.segment_slope(i)));
    return best;
}

Q pl_pointwise_sup(const PiecewiseLinearFunction& f, const Q& x) {
    if (!f.in_domain(x)) throw DomainError("x outside the domain: " + to_string(x));
    const Q fx = f(x);
    auto sl = [&](const Q& q) -> Q { return (f(q) - fx) / (q - x); };
    Q best = 0;
    for (std::size_t i = 0; i < f.xs.size(); ++i)
        if (f.xs[i] != x) best = std::max(best, qabs((f.ys[i] - fx) / (f.xs[i] - x)));
    for (std::size_t i = 0; i < f.segments(); ++i) {
        const Q &a = f.xs[i], &b = f.xs[i + 1];
        if (a < x && x < b) {
            best = std::max(best, qabs(f.segment_slope(i)));
            continue;
        }
        // slope from x is monotone along a segment not containing x, so the
        // breakpoints above bound it; check that at the midpoint.
        Q sa = a == x ? f.segment_slope(i) : sl(a);
        Q sb = b == x ? f.segment_slope(i) : sl(b);
        Q sm = sl((a + b) / 2);
        if (!((sa <= sm && sm <= sb) || (sb <= sm && sm <= sa)))
            throw std::logic_error("segment monotonicity violated near " + to_string(a));
    }
    return best;
}

AttainmentFlags classify(const PiecewiseLinearFunction& f) {
    AttainmentFlags fl;
    fl.norm = pl_norm(f);
    fl.sna = true;
    const std::size_t nb = f.xs.size();
    for (std::size_t i = 0; i < f.segments(); ++i)
        if (qabs(f.segment_slope(i)) == fl.norm) {
            fl.max_segments.push_back(i);
            fl.pna_intervals.emplace_back(f.xs[i], f.xs[i + 1]);
        }
    for (std::size_t i = 0; i < nb; ++i) {
        const Q& x = f.xs[i];
        if (nb > 1 && pl_pointwise_sup(f, x) == fl.norm) fl.pna_points.push_back(x);
        std::optional<Q> right, left;
        if (i + 1 < nb) right = f.segment_slope(i);
        else if (f.extend_right) right = Q(0);
        if (i > 0) left = f.segment_slope(i - 1);
        else if (f.extend_left) left = Q(0);
        if (right && qabs(*right) == fl.norm) fl.der_points.emplace_back(x, +1);
        if (left && qabs(*left) == fl.norm) fl.der_points.emplace_back(x, -1);
        bool adj = (i + 1 < nb && qabs(f.segment_slope(i)) == fl.norm) || (i > 0 && qabs(f.segment_slope(i - 1)) == fl.norm);
        if (adj) fl.ldira_points.push_back(x);
    }
    return fl;
}

Q tent_peak(unsigned n) {
    mpz_class num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), 2, 2 * n - 1);
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(n) * n + 1);
    Q q(num + 1, den);
    q.canonicalize();
    return q;
}

Q tent_height(unsigned n) {
    mpz_class num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), 2, 2 * n - 1);
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(n) * n + 1);
    Q q(num - 1, den);
    q.canonicalize();
    return q;
}

PiecewiseLinearFunction gen_tent(unsigned n) {
    if (n < 1) throw DomainError("tent index starts at 1");
    Q c = tent_peak(n), h = tent_height(n);
    QVec xs{0, c - h, c, c + h}, ys{0, 0, h, 0};
    if (c + h < 1) {
        xs.push_back(1);
        ys.push_back(0);
    }
    return PiecewiseLinearFunction(xs, ys);
}

PiecewiseLinearFunction tent_sum(const QVec& a) {
    QVec xs{0}, ys{0};
    const unsigned len = static_cast<unsigned>(a.size());
    for (unsigned n = len; n >= 1; --n) {
        xs.push_back(pow2_neg(static_cast<unsigned long>(n) * n));
        ys.push_back(0);
        xs.push_back(tent_peak(n));
        ys.push_back(a[n - 1] * tent_height(n));
    }
    xs.push_back(1);
    ys.push_back(0);
    return PiecewiseLinearFunction(xs, ys);
}

ZigzagPoints zigzag_points(const Q& eps, const Q& eta, unsigned K) {
    if (K < 1) throw DomainError("zigzag level must be >= 1");
    if (!(eta > 0 && eta < 1)) throw ModelDefinitionError("zigzag: eta must lie in ]0,1[");
    if (!(eps > 0 && eps < 1)) throw ModelDefinitionError("zigzag: eps must lie in ]0,1[");
    // p_2 falls left of 0 otherwise
    if (!(eps < 1 - eta)) throw ModelDefinitionError("zigzag: eps must be below 1 - eta");
    ZigzagPoints z;
    z.p.emplace_back(Q(1), Q(0));
    for (unsigned n = 1; n <= K; ++n) {
        Q s = 1 - qpow(eta, n);
        const Q& px = z.p.back().first;
        Q qx = s * px / (eps + s);
        Q qy = eps * qx;
        z.q.emplace_back(qx, qy);
        z.p.emplace_back(qx - qy / s, Q(0));
    }
    return z;
}

PiecewiseLinearFunction gen_zigzag(const Q& eps, const Q& eta, unsigned K) {
    auto z = zigzag_points(eps, eta, K);
    QVec xs{0}, ys{0};
    for (unsigned n = K; n >= 1; --n) {
        xs.push_back(z.p[n].first);
        ys.push_back(0);
        xs.push_back(z.q[n - 1].first);
        ys.push_back(z.q[n - 1].second);
    }
    xs.push_back(1);
    ys.push_back(0);
    return PiecewiseLinearFunction(xs, ys);
}

Example62Points example62_points(unsigned K) {
    if (K < 1) throw DomainError("level must be >= 1");
    Example62Points e;
    e.t.emplace_back(Q(1), Q(1, 2));
    for (unsigned n = 1; n <= K; ++n) {
        // first factor is 3/4; the n >= 2 factors follow 1/2 + 2^-n
        Q factor = n == 1 ? Q(3, 4) : Q(1, 2) + pow2_neg(n);
        const auto& t = e.t.back();
        e.s.emplace_back(t.first * factor, t.second);
        Q m = 1 - pow2_neg(n + 1);
        const auto& s = e.s.back();
        Q x = (m * s.first - s.second) / (m - Q(1, 2));
        e.t.emplace_back(x, x / 2);
    }
    return e;
}

PiecewiseLinearFunction gen_example62(unsigned K) {
    auto e = example62_points(K);
    QVec px{0}, py{0};
    px.push_back(e.t[K].first);
    py.push_back(e.t[K].second);
    for (unsigned n = K; n >= 1; --n) {
        px.push_back(e.s[n - 1].first);
        py.push_back(e.s[n - 1].second);
        px.push_back(e.t[n - 1].first);
        py.push_back(e.t[n - 1].second);
    }
    QVec xs, ys;
    for (std::size_t i = px.size(); i-- > 1;) {
        xs.push_back(-px[i]);
        ys.push_back(-py[i]);
    }
    xs.insert(xs.end(), px.begin(), px.end());
    ys.insert(ys.end(), py.begin(), py.end());
    return PiecewiseLinearFunction(xs, ys, true, true);
}

PiecewiseLinearFunction symmetrize(const PiecewiseLinearFunction& f) {
    if (f.xs.front() != 0) throw DomainError("symmetrize expects a function on [0, b]");
    if (f.ys.front() != 0) throw DomainError("symmetrize expects f(0) = 0");
    QVec xs, ys;
    for (std::size_t i = f.xs.size(); i-- > 1;) {
        xs.push_back(-f.xs[i]);
        ys.push_back(f.ys[i]);
    }
    xs.insert(xs.end(), f.xs.begin(), f.xs.end());
    ys.insert(ys.end(), f.ys.begin(), f.ys.end());
    return PiecewiseLinearFunction(xs, ys, f.extend_right, f.extend_right);
}

}  // namespace lipwb
