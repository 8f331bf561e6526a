#include "weylk3/pipeline.hpp"

namespace weylk3 {

HodgePair hodge_ci(const std::vector<int>& degrees, int ambient_dim) {
    int n = ambient_dim;
    if ((int)degrees.size() != n - 2)
        throw std::domain_error("hodge_ci: not a surface complete intersection");
    // geometric genus: coefficient of t^(sum d - n - 1) in prod(1-t^d)/(1-t)^(n+1)
    int m = 0;
    for (int d : degrees) m += d;
    m -= n + 1;
    HodgePair h{0, 0, 0};
    if (m >= 0) {
        std::vector<Rat> ser(m + 1, Rat(0));
        ser[0] = 1;
        // multiply by 1/(1-t)^(n+1): repeated prefix sums
        for (int k = 0; k < n + 1; ++k)
            for (int i = 1; i <= m; ++i) ser[i] += ser[i - 1];
        // multiply by prod (1 - t^d)
        for (int d : degrees) {
            std::vector<Rat> nxt(m + 1, Rat(0));
            for (int i = 0; i <= m; ++i) {
                nxt[i] += ser[i];
                if (i + d <= m) nxt[i + d] -= ser[i];
            }
            // careful: subtract shifted, recompute in place
            ser = std::move(nxt);
        }
        h.h20 = ser[m].get_num();
    }
    // Euler number via the Chern series: e = (prod d) * [h^2] (1+h)^(n+1)/prod(1+d h)
    // expand to order 2 exactly
    Rat c0(1), c1(0), c2(0);
    // (1+h)^(n+1)
    c1 = n + 1;
    c2 = Rat((n + 1) * n, 2);
    for (int d : degrees) {
        // multiply by 1/(1 + d h) = 1 - d h + d^2 h^2 - ...
        Rat n0 = c0;
        Rat n1 = c1 - Rat(d) * c0;
        Rat n2 = c2 - Rat(d) * c1 + Rat(d) * Rat(d) * c0;
        c0 = n0;
        c1 = n1;
        c2 = n2;
    }
    Int prod = 1;
    for (int d : degrees) prod *= d;
    Rat e = Rat(prod) * c2;
    if (e.get_den() != 1) throw std::runtime_error("hodge_ci: non-integral Euler number");
    h.euler = e.get_num();
    h.h11 = h.euler - 2 - 2 * h.h20;
    return h;
}

ClassFunction lefschetz_character() {
    const Census& census = fixed_point_census();
    ClassFunction f;
    for (const auto& e : census.entries) f.values.push_back(census.euler_chi(e.class_index));
    return f;
}

std::map<std::pair<long, int>, long> lefschetz_decomposition() {
    const CharacterTable& T = e6_character_table();
    ClassFunction chi = lefschetz_character();
    auto mult = T.decompose(chi);
    // chi_X = 2 * trivial + chi^(2)
    std::map<std::pair<long, int>, long> out;
    for (int r = 0; r < T.num_classes(); ++r) {
        long m = (long)mult[r].get_si();
        if (T.db[r].first == 1 && T.db[r].second == 0) m -= 2;  // remove 2 * trivial
        if (m < 0) throw std::runtime_error("lefschetz: trivial multiplicity below 2");
        if (m) out[{(long)T.db[r].first.get_si(), T.db[r].second}] = m;
    }
    return out;
}

}  // namespace weylk3
