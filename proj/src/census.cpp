#include "weylk3/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

namespace weylk3 {

Scheme build_X() {
    const auto& inv = fundamental_invariants();
    return Scheme::projective(kDim, {inv.f2, inv.f6, inv.f8});
}

Scheme build_Y(const Rat& lambda, const Rat& mu) {
    const auto& inv = fundamental_invariants();
    QMPoly f23 = inv.f2 * inv.f2 * inv.f2;
    QMPoly f24 = f23 * inv.f2;
    return Scheme::projective(kDim, {inv.f5, inv.f6 + f23 * lambda, inv.f8 + f24 * mu});
}

// ---- class naming --------------------------------------------------------------

std::map<std::string, uint32_t> named_classes() {
    static std::map<std::string, uint32_t> names = [] {
        const auto& W = weyl_e6();
        const auto& classes = W.conjugacy_classes();
        std::map<std::string, uint32_t> out;
        for (uint32_t i = 0; i < classes.size(); ++i) {
            const auto& cl = classes[i];
            const WMat& g = W.elem(cl.rep);
            int tr = 0;
            for (int k = 0; k < kDim; ++k) tr += g.at(k, k);
            if (cl.order == 1) out["id"] = i;
            if (cl.order == 2 && cl.det == -1 && tr == 4) out["s1"] = i;
            if (cl.det != 1) continue;
            int e1 = eigenspace_dim(g, 1);
            switch (cl.order) {
                case 2:
                    if (e1 == 2) out["w2"] = i;
                    if (e1 == 4) out["v2"] = i;
                    break;
                case 3:
                    if (e1 == 0) out["w3"] = i;
                    if (e1 == 2) out["v3"] = i;
                    if (e1 == 4) out["u3"] = i;
                    break;
                case 4:
                    if (eigenspace_dim(g, 2) == 0) out["w4"] = i;
                    if (eigenspace_dim(g, 2) == 2) out["v4"] = i;
                    break;
                case 5:
                    out["w5"] = i;
                    break;
                case 6:
                    if (eigenspace_dim(g, 6) == 2) out["w6"] = i;
                    break;
                case 9:
                    out["w9"] = i;
                    break;
                case 12:
                    out["w12"] = i;
                    break;
            }
        }
        return out;
    }();
    return names;
}

// ---- census --------------------------------------------------------------------

namespace {

const int kCensusVersion = 3;

std::string census_cache_path() { return cache_directory() + "/census-v" +
                                         std::to_string(kCensusVersion) + ".txt"; }

bool load_census(Census& c) {
    std::ifstream in(census_cache_path());
    if (!in) return false;
    size_t n;
    if (!(in >> n)) return false;
    c.entries.clear();
    for (size_t i = 0; i < n; ++i) {
        CensusEntry e;
        std::string deg, name;
        int cert, ind;
        if (!(in >> e.class_index >> e.order >> e.det >> ind >> name >> e.dim >> deg >> cert))
            return false;
        e.in_derived = ind;
        e.name = name == "-" ? "" : name;
        e.degree = Int(deg);
        e.certified = cert;
        c.entries.push_back(std::move(e));
    }
    return true;
}

void save_census(const Census& c) {
    std::error_code ec;
    std::filesystem::create_directories(cache_directory(), ec);
    std::ofstream out(census_cache_path());
    out << c.entries.size() << "\n";
    for (const auto& e : c.entries)
        out << e.class_index << " " << e.order << " " << e.det << " " << (e.in_derived ? 1 : 0)
            << " " << (e.name.empty() ? "-" : e.name) << " " << e.dim << " " << e.degree.get_str()
            << " " << (e.certified ? 1 : 0) << "\n";
}

// dimension of X itself: a point exhibits nonemptiness, the complete
// intersection bound gives dim >= 2, and the modular staircase bounds it by 2
int dimension_of_X_certified(const Scheme& X) {
    // [v9] lies on X
    const auto& W = weyl_e6();
    auto names = named_classes();
    const WMat& w9 = W.elem(W.conjugacy_classes()[names.at("w9")].rep);
    auto v9 = eigenvector(w9, Cyclo::zeta(9));
    for (const auto& f : X.gens) {
        Cyclo val = f.eval<Cyclo>(v9, [](const Rat& q) { return Cyclo(q); });
        if (!val.is_zero()) throw std::runtime_error("census: v9 not on X");
    }
    // modular staircase: dim_Q <= dim_Fp
    GFp::p = 2147483647ull;
    std::vector<MPoly<GFp>> mg;
    for (const auto& g : X.gens) mg.push_back(qm_to_gfp(g));
    auto G = groebner<GFp>(std::move(mg), drl(kDim));
    int dim_p = std::max(monomial_krull_dim(G.lt_gens(), kDim), 0) - 1;
    if (dim_p != 2) throw std::runtime_error("census: unexpected modular dimension of X");
    // every component of a 3-form intersection has dim >= 2; nonempty => dim >= 2
    return 2;
}

// dimension of X^{s1} = X ∩ P(V^{s1}): restrictions are nonzero forms, so the
// intersection is nonempty of dim >= 1; the modular staircase pins it at 2
int dimension_of_Xs1_certified(const WMat& s1) {
    const auto& inv = fundamental_invariants();
    auto basis = rational_eigenspace_basis(s1, 1);
    if (basis.size() != 5) throw std::runtime_error("census: reflection hyperplane not 5-dim");
    std::vector<QMPoly> restricted;
    for (const QMPoly* f : {&inv.f2, &inv.f6, &inv.f8}) {
        QMPoly r = restrict_to_subspace(*f, basis);
        if (r.is_zero()) throw std::runtime_error("census: restriction vanished");
        restricted.push_back(std::move(r));
    }
    GFp::p = 2147483647ull;
    std::vector<MPoly<GFp>> mg;
    for (const auto& g : restricted) mg.push_back(qm_to_gfp(g));
    auto G = groebner<GFp>(std::move(mg), drl(5));
    return std::max(monomial_krull_dim(G.lt_gens(), 5), 0) - 1;
}

}  // namespace

const Census& fixed_point_census() {
    static Census census = [] {
        Census c;
        if (load_census(c)) return c;
        const auto& W = weyl_e6();
        const auto& classes = W.conjugacy_classes();
        auto names = named_classes();
        Scheme X = build_X();
        std::map<uint32_t, std::string> name_of;
        for (auto& [n, i] : names)
            if (n != "id") name_of[i] = n;

        c.entries.resize(classes.size());
        std::vector<std::future<void>> jobs;
        unsigned threads = std::max(2u, std::thread::hardware_concurrency());
        std::atomic<uint32_t> next{0};
        auto worker = [&]() {
            for (;;) {
                uint32_t i = next.fetch_add(1);
                if (i >= classes.size()) return;
                CensusEntry e;
                e.class_index = i;
                e.order = classes[i].order;
                e.det = classes[i].det;
                e.in_derived = classes[i].det == 1;
                e.name = name_of.count(i) ? name_of[i] : "";
                e.certified = false;
                const WMat& g = W.elem(classes[i].rep);
                int tr = 0;
                for (int k = 0; k < kDim; ++k) tr += g.at(k, k);
                if (e.order == 1) {
                    e.dim = dimension_of_X_certified(X);
                    e.certified = true;
                } else if (e.order == 2 && e.det == -1 && tr == 4) {
                    e.dim = dimension_of_Xs1_certified(g);
                    e.certified = true;
                } else {
                    Scheme fixed = fixed_point_scheme(g).meet(X);
                    e.dim = fixed.dimension();
                    if (e.dim == 0) e.degree = fixed.degree_zero_dimensional();
                }
                c.entries[i] = std::move(e);
            }
        };
        for (unsigned t = 0; t < threads; ++t) jobs.push_back(std::async(std::launch::async, worker));
        for (auto& j : jobs) j.get();
        save_census(c);
        return c;
    }();
    return census;
}

const CensusEntry& Census::by_name(const std::string& n) const {
    for (const auto& e : entries)
        if (e.name == n) return e;
    throw std::domain_error("census: no class named " + n);
}

int Census::euler_chi(uint32_t class_index) const {
    const auto& e = entries[class_index];
    if (e.dim <= 0) return e.dim < 0 ? 0 : (int)e.degree.get_si();
    // the three positive-dimensional classes carry the special values
    if (e.order == 1) return 9504;
    if (e.order == 2) return -2 * 6 * 8 * (2 + 6 + 8 - 4 - 1);  // smooth (2,6,8) in P^4
    if (e.order == 3) return -36;                               // two genus-10 curves
    throw std::domain_error("census: unexpected positive-dimensional class");
}

bool census_contained_in_f5f9(const std::string& name) {
    const auto& W = weyl_e6();
    const auto& inv = fundamental_invariants();
    auto names = named_classes();
    const WMat& g = W.elem(W.conjugacy_classes()[names.at(name)].rep);
    Scheme fixed = fixed_point_scheme(g).meet(build_X());
    Scheme zf59 = Scheme::projective(kDim, {inv.f5, inv.f9});
    return fixed.contained_in(zf59);
}

// ---- eigen pieces and common-fixed-point scans -----------------------------------

EigenPieces eigen_pieces_of(const WMat& g) {
    const auto& inv = fundamental_invariants();
    EigenPieces out;
    for (auto& [root, mult] : eigen_multiset(g)) {
        (void)mult;
        Cyclo lambda = root.value();
        // kernel of (g - lambda) over the cyclotomic field
        Mat<Cyclo> m(kDim, std::vector<Cyclo>(kDim, Cyclo(0)));
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) {
                m[i][j] = Cyclo(g.at(i, j));
                if (i == j) m[i][j] = m[i][j] - lambda;
            }
        auto basis = kernel_basis(m);
        if (basis.empty()) continue;
        EigenPieces::Piece piece;
        piece.lambda = lambda;
        piece.basis = basis;
        int k = (int)basis.size();
        Ord o = drl(k);
        std::vector<MPoly<Cyclo>> images(kDim, MPoly<Cyclo>(o));
        for (int v = 0; v < kDim; ++v) {
            for (int j = 0; j < k; ++j)
                if (!basis[j][v].is_zero()) {
                    images[v].m.push_back(mono_var(j));
                    images[v].c.push_back(basis[j][v]);
                }
            images[v].sort_terms();
        }
        for (const QMPoly* f : {&inv.f2, &inv.f6, &inv.f8}) {
            piece.forms.push_back(compose_linear<Rat, Cyclo>(
                *f, images, o, [](const Rat& q) { return Cyclo(q); }));
        }
        // does X meet this piece?
        if (k == 1) {
            piece.has_points = true;
            for (auto& f : piece.forms)
                if (!f.is_zero()) piece.has_points = false;
        } else if (k == 2) {
            // gcd of binary forms
            piece.has_points = false;
            // dehomogenize at second variable; also check the point [1:0]
            bool all_zero_at_10 = true;
            std::vector<UPoly<Cyclo>> uni;
            for (auto& f : piece.forms) {
                UPoly<Cyclo> u;
                for (size_t t = 0; t < f.m.size(); ++t) {
                    int e0 = mono_exp(f.m[t], 0);
                    if ((int)u.c.size() <= e0) u.c.resize(e0 + 1, Cyclo(0));
                    u.c[e0] = u.c[e0] + f.c[t];
                }
                u.trim();
                uni.push_back(u);
                Cyclo lead(0);  // coefficient of x0^deg (value at [1:0])
                for (size_t t = 0; t < f.m.size(); ++t)
                    if (mono_exp(f.m[t], 1) == 0) lead = lead + f.c[t];
                if (!lead.is_zero()) all_zero_at_10 = false;
            }
            UPoly<Cyclo> gcd_all = uni[0];
            for (size_t t = 1; t < uni.size(); ++t) gcd_all = UPoly<Cyclo>::gcd(gcd_all, uni[t]);
            if (gcd_all.degree() > 0 || all_zero_at_10) piece.has_points = true;
        } else {
            // k >= 3: a triple of forms in P^(k-1); for k = 4 nonempty by the
            // projective dimension theorem, for k = 3 decide by a Groebner basis
            bool some_zero = false;
            for (auto& f : piece.forms) some_zero = some_zero || f.is_zero();
            if (k >= 4 || some_zero) {
                piece.has_points = true;
            } else {
                auto G = groebner<Cyclo>(piece.forms, o);
                piece.has_points = monomial_krull_dim(G.lt_gens(), k) >= 1;
            }
        }
        out.pieces.push_back(std::move(piece));
    }
    return out;
}

bool common_fixed_point_on_X(const EigenPieces& pieces, const WMat& w) {
    for (const auto& piece : pieces.pieces) {
        int k = (int)piece.basis.size();
        for (auto& [root, mult] : eigen_multiset(w)) {
            (void)mult;
            Cyclo mu = root.value();
            // kernel of (w*B - mu*B) over the common field, in piece coordinates
            Mat<Cyclo> m(kDim, std::vector<Cyclo>(k, Cyclo(0)));
            for (int i = 0; i < kDim; ++i)
                for (int j = 0; j < k; ++j) {
                    Cyclo acc(0);
                    for (int l = 0; l < kDim; ++l)
                        if (w.at(i, l)) acc = acc + Cyclo(w.at(i, l)) * piece.basis[j][l];
                    m[i][j] = acc - mu * piece.basis[j][i];
                }
            auto ker = kernel_basis(m);
            int e = (int)ker.size();
            if (e == 0) continue;
            if (e == k) {
                if (piece.has_points) return true;
                continue;
            }
            // restrict the piece forms to the kernel subspace
            Ord oe = drl(e);
            std::vector<MPoly<Cyclo>> images(k, MPoly<Cyclo>(oe));
            for (int v = 0; v < k; ++v) {
                for (int j = 0; j < e; ++j)
                    if (!ker[j][v].is_zero()) {
                        images[v].m.push_back(mono_var(j));
                        images[v].c.push_back(ker[j][v]);
                    }
                images[v].sort_terms();
            }
            std::vector<MPoly<Cyclo>> rest;
            bool all_zero = true;
            for (const auto& f : piece.forms) {
                rest.push_back(compose_linear<Cyclo, Cyclo>(f, images, oe,
                                                            [](const Cyclo& x) { return x; }));
                if (!rest.back().is_zero()) all_zero = false;
            }
            if (e == 1) {
                if (all_zero) return true;
                continue;
            }
            if (e == 2) {
                bool all_zero_at_10 = true;
                std::vector<UPoly<Cyclo>> uni;
                bool nonempty = false;
                for (auto& f : rest) {
                    if (f.is_zero()) continue;
                    UPoly<Cyclo> u;
                    for (size_t t = 0; t < f.m.size(); ++t) {
                        int e0 = mono_exp(f.m[t], 0);
                        if ((int)u.c.size() <= e0) u.c.resize(e0 + 1, Cyclo(0));
                        u.c[e0] = u.c[e0] + f.c[t];
                    }
                    u.trim();
                    uni.push_back(u);
                    Cyclo lead(0);
                    for (size_t t = 0; t < f.m.size(); ++t)
                        if (mono_exp(f.m[t], 1) == 0) lead = lead + f.c[t];
                    if (!lead.is_zero()) all_zero_at_10 = false;
                }
                if (uni.empty())
                    nonempty = true;
                else {
                    UPoly<Cyclo> g = uni[0];
                    for (size_t t = 1; t < uni.size(); ++t) g = UPoly<Cyclo>::gcd(g, uni[t]);
                    nonempty = g.degree() > 0 || all_zero_at_10;
                }
                if (nonempty) return true;
                continue;
            }
            // e == 3: projective plane
            std::vector<MPoly<Cyclo>> nz;
            for (auto& f : rest)
                if (!f.is_zero()) nz.push_back(f);
            if (nz.size() <= 2) return true;  // at most 2 curves in P^2 always meet
            auto G = groebner<Cyclo>(nz, oe);
            if (monomial_krull_dim(G.lt_gens(), e) >= 1) return true;
        }
    }
    return false;
}

namespace {

// elements of W' (other than the powers of g) fixing a point of X^g, plus g
std::vector<WMat> scan_stabilizer(const WMat& g) {
    const auto& D = weyl_e6_derived();
    EigenPieces pieces = eigen_pieces_of(g);
    std::vector<WMat> hits;
    std::mutex mx;
    unsigned threads = std::max(2u, std::thread::hardware_concurrency());
    std::atomic<uint32_t> next{0};
    auto worker = [&]() {
        std::vector<WMat> local;
        for (;;) {
            uint32_t i = next.fetch_add(1);
            if (i >= D.order()) break;
            const WMat& w = D.elem(i);
            if (w == WMat::identity()) continue;
            if (common_fixed_point_on_X(pieces, w)) local.push_back(w);
        }
        std::lock_guard<std::mutex> lock(mx);
        for (auto& w : local) hits.push_back(w);
    };
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < threads; ++t) jobs.push_back(std::async(std::launch::async, worker));
    for (auto& j : jobs) j.get();
    return hits;
}

}  // namespace

FiniteMatrixGroup stabilizer_group_v3() {
    const auto& W = weyl_e6();
    auto names = named_classes();
    const WMat& v3 = W.elem(W.conjugacy_classes()[names.at("v3")].rep);
    auto hits = scan_stabilizer(v3);
    hits.push_back(v3);
    return weyl_e6_derived().subgroup(hits);
}

FiniteMatrixGroup stabilizer_group_u3() {
    const auto& W = weyl_e6();
    auto names = named_classes();
    const WMat& u3 = W.elem(W.conjugacy_classes()[names.at("u3")].rep);
    auto hits = scan_stabilizer(u3);
    // keep only elements outside <u3>, then adjoin u3 (the paper's G_B)
    WMat u3sq = u3 * u3;
    std::vector<WMat> gens;
    for (auto& w : hits)
        if (!(w == u3) && !(w == u3sq)) gens.push_back(w);
    gens.push_back(u3);
    return weyl_e6_derived().subgroup(gens);
}

bool club_scan_v2() {
    const auto& W = weyl_e6();
    auto names = named_classes();
    const WMat& v2 = W.elem(W.conjugacy_classes()[names.at("v2")].rep);
    auto hits = scan_stabilizer(v2);
    // expect exactly {v2}
    return hits.size() == 1 && hits[0] == v2;
}

}  // namespace weylk3
