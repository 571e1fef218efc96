#include "beltwave/discretization.hpp"

namespace beltwave {

Discretization::Discretization(const Lattice& lat, int truncation, int z_nodes, double depth)
    : lat_(lat),
      N_(truncation),
      cheb_(z_nodes, depth),
      padded_(truncation, 2 * (2 * truncation + 1)) {
    const int dim = 2 * N_ + 1;
    modes_.resize(dim * dim);
    k2_.resize(dim * dim);
    for (int n1 = -N_; n1 <= N_; ++n1)
        for (int n2 = -N_; n2 <= N_; ++n2) {
            const int idx = mode_index(n1, n2);
            modes_[idx] = {n1, n2, lat_.wave_vector(n1, n2)};
            k2_[idx] = modes_[idx].k.squaredNorm();
        }
}

}  // namespace beltwave
