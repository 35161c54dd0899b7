#pragma once

#include "aperiodic/data.hpp"
#include "aperiodic/selfsim.hpp"

#include <random>

namespace testing_support {

using namespace aperiodic;

inline const WangTileSet& U() {
    static const WangTileSet u = WangTileSet::from_strings(data::u_tile_strings());
    return u;
}

inline const Morphism2d& Phi() {
    static const Morphism2d m = data::phi();
    return m;
}

inline const PartitionU& PU() {
    static const PartitionU p = build_partition_u();
    return p;
}

inline QPhi phi() { return QPhi::phi(); }
inline QPhi phi_pow(int k) {
    QPhi r(1), f = k >= 0 ? phi() : phi().inverse();
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) r *= f;
    return r;
}

inline QPhi rat(long p, long q = 1) { return QPhi::rational(p, q); }

// rational point with denominators 10007, 10009: off every atom boundary in practice
inline Point random_point(std::mt19937& g, const Lattice& L = {}) {
    std::uniform_int_distribution<long> dx(1, 10006), dy(1, 10008);
    return {L.l1 * rat(dx(g), 10007), L.l2 * rat(dy(g), 10009)};
}

inline Word2d rows(std::vector<std::vector<Letter>> r) { return Word2d::from_rows_top_down(r); }

}  // namespace testing_support
