#pragma once

#include <random>

#include "fixtures.hpp"
#include "mpla/skeletal.hpp"

namespace fx {

inline mpla::SkeletalTriple random_skeletal_triple(std::mt19937& rng, const mpla::MPRepresentation<Q>& r, bool zero) {
    auto B = mpla::skeletal_cocycle_basis(r);
    std::vector<Q> v(B.rows(), Q(0));
    if (!zero)
        for (std::size_t j = 0; j < B.cols(); ++j) {
            Q c = rand_q(rng);
            for (std::size_t i = 0; i < B.rows(); ++i) v[i] += c * B(i, j);
        }
    return {r.base, r, mpla::MPCochain<Q>::unflatten(r.m(), r.n(), r.p, r.q, 3, v)};
}

// g0 abelian of dimension 3 acting on a line by e0, mu3(e0,e1,e2) = 1, paired with a trivial line
inline mpla::SkeletalMatchedPair skeletal_with_mu3() {
    mpla::LieRep<Q> rep(LieAlgebra<Q>::abelian(3), 1);
    rep.action(0, 0, 0) = 1;
    mpla::SkewMultiMap<Q> th(3, 3, 1);
    th.coeff(0, 0) = 1;
    mpla::SkeletalMatchedPair s;
    s.G = mpla::skeletal_from(LieAlgebra<Q>::abelian(3), rep, th);
    s.H = mpla::TwoTermLInfinity(1, 1);
    s.rho = mpla::SkeletalRep(s.G, 1, 1);
    s.psi = mpla::SkeletalRep(s.H, 3, 1);
    return s;
}

// at least twenty valid skeletal matched pairs, as triples
inline std::vector<mpla::SkeletalTriple> skeletal_triples() {
    std::mt19937 rng(2024);
    std::vector<mpla::SkeletalTriple> out;
    for (const auto& mp : small_matched_pairs()) {
        if (mp.m() + mp.n() > 4) continue;
        for (const auto& r : {mpla::adjoint_representation(mp), mpla::coadjoint_representation(mp)}) {
            out.push_back(random_skeletal_triple(rng, r, true));
            out.push_back(random_skeletal_triple(rng, r, false));
        }
    }
    out.push_back(mpla::skeletal_to_triple(skeletal_with_mu3()));
    return out;
}

} // namespace fx
