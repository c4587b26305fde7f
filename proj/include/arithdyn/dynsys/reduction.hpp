#pragma once

#include <string>
#include <vector>

#include "arithdyn/dynsys/model.hpp"
#include "arithdyn/dynsys/presentation.hpp"
#include "arithdyn/places/place.hpp"
#include "arithdyn/places/valuation.hpp"

namespace arithdyn {

/// Φ_p: the coordinates of a p-model evaluated in κ(p), as a projective point.
template <class R>
struct ReducedPoint {
    Place place;
    std::size_t d = 0;
    std::vector<R> a, b;

    Model<R> as_model() const {
        Model<R> m;
        m.d = d;
        m.a = a;
        m.b = b;
        return m;
    }
    bool is_zero() const { return as_model().is_zero_model(); }
    std::vector<R> coords() const { return as_model().coords(); }
};

template <class K>
using ResidueOf = typename field_traits<K>::residue;

/// Reduction of an arbitrary model: rescale to a p-model, then take residues.
template <class K>
ReducedPoint<ResidueOf<K>> reduce_model(const Model<K>& m, const Place& p) {
    ResidueMap<K> r(p);
    auto [pm, n] = normalize_p_model(m, p);
    ReducedPoint<ResidueOf<K>> out{p, m.d, {}, {}};
    for (const auto& c : pm.a) out.a.push_back(r(c));
    for (const auto& c : pm.b) out.b.push_back(r(c));
    return out;
}

template <class K>
ReducedPoint<ResidueOf<K>> reduce_presentation(const Presentation<K>& phi, const Place& p) {
    return reduce_model(phi.model(), p);
}

}  // namespace arithdyn
