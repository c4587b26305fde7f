#pragma once

// Pointwise check of critical good reduction for the degree-2 family whose
// critical points are K-rational: reduce the two critical points and their
// images place by place and look for collisions directly.

#include <vector>

#include "arithdyn/critical.hpp"
#include "arithdyn/dynsys/families.hpp"

namespace oracle {

using namespace arithdyn;

struct PointwiseCritical {
    ProjPoint<RatFunc> P, Q, phiP, phiQ;
};

/// Requires b′ = −b/a², so that 1 − λ1λ2 = (b/a)²t^{2N} and the critical
/// points (−1 ± (b/a)t^N)/λ2 are rational.
inline PointwiseCritical example2_critical_points(long N, const Example2Params& prm) {
    Model<RatFunc> m = example2(N, prm);
    const RatFunc l2 = m.b[1];
    const RatFunc s = RatFunc(prm.b / prm.a) * RatFunc::t().pow(N);
    PointwiseCritical out;
    out.P = {RatFunc(-1L) + s, l2};
    out.Q = {RatFunc(-1L) - s, l2};
    auto image = [&](const ProjPoint<RatFunc>& X) {
        return ProjPoint<RatFunc>{m.form_a()(X.alpha, X.beta), m.form_b()(X.alpha, X.beta)};
    };
    out.phiP = image(out.P);
    out.phiQ = image(out.Q);
    return out;
}

struct PointwiseVerdict {
    bool points_collide = false;
    bool values_collide = false;
    bool bad() const { return points_collide || values_collide; }
};

inline PointwiseVerdict pointwise_verdict(const PointwiseCritical& c, const Place& p) {
    PointwiseVerdict v;
    v.points_collide = reduce_point(c.P, p) == reduce_point(c.Q, p);
    v.values_collide = reduce_point(c.phiP, p) == reduce_point(c.phiQ, p);
    return v;
}

}  // namespace oracle
