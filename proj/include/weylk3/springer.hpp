#pragma once

#include "weylk3/matgroup.hpp"

namespace weylk3 {

struct SpringerDatum {
    int e = 0;
    int delta = 0;       // |{d in Deg : e | d}| = max eigenspace dimension
    int delta_star = 0;  // |{d* in Codeg : e | d*}|
    bool empty = true;
    uint32_t we_class = 0;  // class index in W of the chosen w_e
    WMat we;
    std::vector<std::pair<RootOfUnity, int>> eigen;
};

// delta/delta*/w_e for one e; w_e is of minimal order among classes attaining
// the maximal zeta_e-eigenspace dimension, ties broken by the lexicographically
// smallest representative
SpringerDatum springer_data(int e, const std::vector<int>& degrees,
                            const std::vector<int>& codegrees);

// multiset {xi^-1 xi_i} minus {xi^-d : d in degrees} for the tangent action at
// a smooth fixed point; throws if the containment fails
std::vector<RootOfUnity> tangent_eigenvalues(const std::vector<RootOfUnity>& eigen,
                                             const std::vector<int>& degrees, int chosen_index);

}  // namespace weylk3
