#include "lipwb/lipfun.hpp"

#include "lipwb/errors.hpp"

namespace lipwb {

LipschitzFunction::LipschitzFunction(SpacePtr sp, QVec vals) : space(std::move(sp)), values(std::move(vals)) {
    if (!space) throw DomainError("function without a space");
    if (values.size() != space->size()) throw DomainError("value count differs from point count");
    if (values[0] != 0) throw DomainError("function must vanish at the base point");
}

LipschitzFunction LipschitzFunction::zero(SpacePtr sp) {
    QVec v(sp->size(), Q(0));
    return LipschitzFunction(std::move(sp), std::move(v));
}

bool LipschitzFunction::is_zero() const {
    for (const auto& v : values)
        if (v != 0) return false;
    return true;
}

Q slope(const LipschitzFunction& f, std::size_t p, std::size_t q) {
    if (p == q) throw DomainError("slope needs distinct points");
    if (p >= f.size() || q >= f.size()) throw DomainError("point index out of range");
    return (f.values[q] - f.values[p]) / f.space->d(p, q);
}

Q lip_norm(const LipschitzFunction& f) {
    const std::size_t n = f.size();
    if (n < 2) throw DomainError("norm needs at least two points");
    Q best = 0, s;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            s = f.values[q] - f.values[p];
            if (s < 0) s = -s;
            // compare s / d > best without dividing
            if (s > best * f.space->d(p, q)) best = s / f.space->d(p, q);
        }
    return best;
}

Q pointwise_sup(const LipschitzFunction& f, std::size_t p) {
    Q best = 0;
    for (std::size_t q = 0; q < f.size(); ++q)
        if (q != p) best = std::max(best, qabs(slope(f, p, q)));
    return best;
}

AttainmentReport attainment_report(const LipschitzFunction& f) {
    const std::size_t n = f.size();
    AttainmentReport rep;
    rep.norm = 0;
    rep.pointwise_sup.assign(n, Q(0));
    rep.pointwise_defect.assign(n, Q(0));
    if (n < 2) throw DomainError("report needs at least two points");
    if (f.is_zero()) return rep;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            Q s = qabs(slope(f, p, q));
            if (s > rep.pointwise_sup[p]) rep.pointwise_sup[p] = s;
            if (s > rep.pointwise_sup[q]) rep.pointwise_sup[q] = s;
        }
    for (const auto& s : rep.pointwise_sup) rep.norm = std::max(rep.norm, s);
    for (std::size_t p = 0; p < n; ++p) rep.pointwise_defect[p] = rep.norm - rep.pointwise_sup[p];
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            Q s = slope(f, p, q);
            if (qabs(s) != rep.norm) continue;
            if (s > 0) {
                rep.strong_pairs.emplace_back(p, q);
                rep.strong_pairs.emplace_back(q, p);
            } else {
                rep.strong_pairs.emplace_back(q, p);
                rep.strong_pairs.emplace_back(p, q);
            }
        }
    return rep;
}

LipschitzFunction combine(const std::vector<LipschitzFunction>& family, const QVec& coeffs) {
    if (family.empty()) throw DomainError("empty family");
    if (coeffs.size() > family.size()) throw DomainError("more coefficients than family members");
    const auto& sp = family.front().space;
    for (const auto& f : family)
        if (f.space != sp) throw DomainError("family members live on different spaces");
    QVec v(sp->size(), Q(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (family[k].values[i] != 0) v[i] += coeffs[k] * family[k].values[i];
    }
    return LipschitzFunction(sp, std::move(v));
}

LipschitzFunction add(const LipschitzFunction& f, const LipschitzFunction& g) {
    if (f.space != g.space) throw DomainError("functions live on different spaces");
    QVec v(f.values);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += g.values[i];
    return LipschitzFunction(f.space, std::move(v));
}

LipschitzFunction scale(const Q& a, const LipschitzFunction& f) {
    QVec v(f.values);
    for (auto& x : v) x *= a;
    return LipschitzFunction(f.space, std::move(v));
}

}  // namespace lipwb
