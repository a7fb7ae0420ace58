// Abelian relations and rank: the jet-level solver for the linear system of
// relation coefficients, Abel's derivation method for quasi-parallel webs,
// Chern bounds, and the infinitesimal-automorphism machinery (canonical
// integrals, eigenvalue Wronskians, rank assembly).
#pragma once

#include <optional>
#include <vector>

#include "webgeo/curvature.hpp"
#include "webgeo/webmodel.hpp"

namespace webgeo {

// one abelian relation at jet level: eta_i = g_i(u_i) du_i with
// sum_i eta_i = 0 to the stated order
struct AbelianRelationJet {
    std::vector<std::vector<Rational>> g; // k coefficient sequences, degree = index
    Point base;
    int order = 0;
    bool exactly_verified = false; // set when the relation is certified as a RatFunc identity
};

struct RankReport {
    int rank_estimate = 0;
    bool stabilized = false;
    std::vector<int> orders_tested;
    std::vector<int> dims; // D_N per tested order
    int chern_bound = 0;
    bool mihaileanu_zero = false;
    int polynomial_certificates = 0;
};

// dimension of the span of the j-th symmetric conormal powers at the base
int ell_j(const PlanarWeb& w, int j);

// sum over j of max(0, k - ell^{j+1}); equals pi(2,k) for smooth planar webs
int chern_bound(const PlanarWeb& w);

struct RankResult {
    RankReport report;
    std::vector<AbelianRelationJet> basis;
};

struct RankOptions {
    int N_max = 0;  // 0 = default 4k
    int window = 0; // 0 = default k
    bool compute_mihaileanu = true;
    bool certify_polynomial = true;
};

// Jet solver: for increasing N solves the exact linear system demanding
// sum g_i(u_i) du_i = 0 to form order 2N-1 with deg g_i <= 2N, and reports
// D_N = dim of the image of those solutions in order-N coefficient space.
// rank_estimate is the stabilized D_N over `window` consecutive orders.
RankResult rank_jets(const PlanarWeb& w, const RankOptions& opt = {});

// exact certificate: sum p_i(u_i) du_i == 0 as rational functions
bool verify_polynomial_relation(const PlanarWeb& w, const std::vector<std::vector<Rational>>& polys);

struct QuasiParallelReport {
    int ode_order = 0; // the ell of the reduced equation
    bool maximal = false;
};

// Abel's method for W(u_1,...,u_k, u) with linear homogeneous u_i: applies
// the commuting hamiltonian derivations and reduces by the hamiltonian of u
// until the coefficients depend on u alone. maximal <=> ell = k.
QuasiParallelReport abel_quasi_parallel(const std::vector<RatFunc>& linear_integrals, const RatFunc& u);

// polynomial vector field v = vx d/dx + vy d/dy
struct VectorField {
    RatFunc vx, vy;
    RatFunc apply(const RatFunc& f) const { return vx * f.derivative_x() + vy * f.derivative_y(); }
};

// L_v omega ^ omega == 0 for every defining form
bool is_infinitesimal_automorphism(const PlanarWeb& w, const VectorField& v);

// closed rational forms du_i = omega_i / <omega_i, v> with <du_i, v> = 1
std::vector<OneForm> canonical_forms(const PlanarWeb& w, const VectorField& v);

struct EigenPolynomial {
    UniPoly P_w;                      // the Wronskian factor, lambda^{k-1} stripped
    std::vector<Rational> candidates; // constant rational roots, always including 0
};

// Wronskian eigenvalue machinery for a web with transverse automorphism v
// and witness field w
EigenPolynomial eigen_polynomial(const PlanarWeb& web, const VectorField& v, const VectorField& w);

struct AutomorphismRankResult {
    RankReport report;
    std::vector<Rational> eigenvalues;    // candidates that produced relations
    std::vector<int> eigen_multiplicity;  // relation-space dimension per candidate
    std::optional<int> rank_extended_web; // independent rank of W boxtimes F_v when computable
};

struct AutomorphismRankOptions {
    int jet_order = 0;                      // 0 = automatic
    int poly_degree_cap = 0;                // 0 = k
    std::optional<RatFunc> fv_integral;     // rational first integral of F_v for the T:1 cross-check
    std::vector<VectorField> witnesses;     // empty = default pair
};

AutomorphismRankResult rank_with_automorphism(const PlanarWeb& w, const VectorField& v,
                                              const AutomorphismRankOptions& opt = {});

} // namespace webgeo
