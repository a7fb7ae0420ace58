#include "webgeo/abelrank.hpp"

#include <algorithm>
#include <stdexcept>

#include "webgeo/linalg.hpp"

namespace webgeo {

namespace {

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

int ell_j(const PlanarWeb& w, int j) {
    if (j < 1) throw std::invalid_argument("ell_j: j must be positive");
    int k = w.size();
    Mat<Rational> M(k, j + 1);
    for (int i = 0; i < k; ++i) {
        auto [A, B] = w.foliations[i].omega();
        Rational a = A.eval(w.base.first, w.base.second);
        Rational b = B.eval(w.base.first, w.base.second);
        // omega^j has coordinates binom(j,m) a^m b^(j-m)
        for (int m = 0; m <= j; ++m) M.at(i, m) = Rational(binom(j, m)) * a.pow(m) * b.pow(j - m);
    }
    return (int)M.rank();
}

int chern_bound(const PlanarWeb& w) {
    int k = w.size();
    int total = 0;
    for (int j = 0; j <= k - 3; ++j) total += std::max(0, k - ell_j(w, j + 1));
    return total;
}

namespace {

struct JetSystem {
    // columns of the relation system: the two form components of u_i^d du_i
    std::vector<Jet2> col_a, col_b;
    int k = 0, M = 0;
};

JetSystem build_system(const std::vector<Jet2>& us, int M) {
    JetSystem sys;
    sys.k = (int)us.size();
    sys.M = M;
    for (const auto& u : us) {
        Jet2 ux = u.derivative_x(), uy = u.derivative_y(); // order M-1
        Jet2 pw = Jet2::constant(Rational(1), u.base(), M - 1);
        Jet2 ut = u.truncated(M - 1);
        for (int d = 0; d <= M; ++d) {
            sys.col_a.push_back(pw * ux);
            sys.col_b.push_back(pw * uy);
            if (d < M) pw = pw * ut;
        }
    }
    return sys;
}

Mat<Rational> system_matrix(const JetSystem& sys, int max_col_degree) {
    // rows: dx and dy coefficients of all monomials of total degree <= M-1;
    // columns restricted to d <= max_col_degree per foliation
    int M = sys.M;
    size_t nmono = Jet2::size_of(M - 1);
    size_t ncols = (size_t)sys.k * (max_col_degree + 1);
    Mat<Rational> A(2 * nmono, ncols);
    for (int i = 0; i < sys.k; ++i)
        for (int d = 0; d <= max_col_degree; ++d) {
            size_t src = (size_t)i * (M + 1) + d;
            size_t dst = (size_t)i * (max_col_degree + 1) + d;
            const Jet2 &ca = sys.col_a[src], &cb = sys.col_b[src];
            size_t r = 0;
            for (int deg = 0; deg <= M - 1; ++deg)
                for (int j = 0; j <= deg; ++j, ++r) {
                    A.at(2 * r, dst) = ca.at(deg - j, j);
                    A.at(2 * r + 1, dst) = cb.at(deg - j, j);
                }
        }
    return A;
}

} // namespace

bool verify_polynomial_relation(const PlanarWeb& w, const std::vector<std::vector<Rational>>& polys) {
    if ((int)polys.size() != w.size())
        throw std::invalid_argument("verify_polynomial_relation: one coefficient sequence per foliation");
    RatFunc sa(0), sb(0);
    for (int i = 0; i < w.size(); ++i) {
        if (!w.foliations[i].has_rational_integral())
            throw std::domain_error("verify_polynomial_relation: foliation lacks a rational first integral");
        const RatFunc& u = w.foliations[i].integral();
        RatFunc pu(0);
        for (auto it = polys[i].rbegin(); it != polys[i].rend(); ++it) pu = pu * u + RatFunc(*it);
        sa += pu * u.derivative_x();
        sb += pu * u.derivative_y();
    }
    return sa.is_zero() && sb.is_zero();
}

RankResult rank_jets(const PlanarWeb& w, const RankOptions& opt) {
    int k = w.size();
    if (k < 2) throw std::invalid_argument("rank_jets: need at least two foliations");
    int N_max = opt.N_max > 0 ? opt.N_max : 4 * k;
    int window = opt.window > 0 ? opt.window : k;

    RankResult out;
    out.report.chern_bound = chern_bound(w);
    if (opt.compute_mihaileanu && k >= 3)
        out.report.mihaileanu_zero = mihaileanu_curvature(w).is_zero();

    // centered first-integral jets at the largest order needed
    int Mtop = 2 * N_max;
    std::vector<Jet2> us;
    for (const auto& f : w.foliations) us.push_back(f.integral_jet(w.base, Mtop));

    int streak = 0, last = -1;
    int N = std::max(1, k - 2);
    std::vector<std::vector<Rational>> final_null;
    for (; N <= N_max; ++N) {
        int M = 2 * N;
        std::vector<Jet2> trunc;
        for (const auto& u : us) trunc.push_back(u.truncated(M));
        JetSystem sys = build_system(trunc, M);
        Mat<Rational> A = system_matrix(sys, M);
        // D_N = #low columns - rank(A) + rank(A restricted to high columns)
        size_t nlow = (size_t)k * (N + 1);
        size_t rankA = A.rank();
        // submatrix of the columns with d > N
        Mat<Rational> H(A.rows(), (size_t)k * (M - N));
        size_t hc = 0;
        for (int i = 0; i < k; ++i)
            for (int d = N + 1; d <= M; ++d, ++hc)
                for (size_t r = 0; r < A.rows(); ++r) H.at(r, hc) = A.at(r, (size_t)i * (M + 1) + d);
        size_t rankH = H.rank();
        int D = (int)(nlow - rankA + rankH);
        out.report.orders_tested.push_back(N);
        out.report.dims.push_back(D);
        if (D == last)
            ++streak;
        else {
            streak = 1;
            last = D;
        }
        if (streak >= window) {
            out.report.stabilized = true;
            final_null = A.nullspace();
            break;
        }
        if (N == N_max) final_null = A.nullspace();
    }
    out.report.rank_estimate = last < 0 ? 0 : last;

    // basis: independent order-N truncations of the solutions
    int Nfin = out.report.orders_tested.empty() ? 0 : out.report.orders_tested.back();
    int Mfin = 2 * Nfin;
    if (!final_null.empty() && out.report.rank_estimate > 0) {
        size_t nlow = (size_t)k * (Nfin + 1);
        Mat<Rational> P(final_null.size(), nlow);
        for (size_t r = 0; r < final_null.size(); ++r)
            for (int i = 0; i < k; ++i)
                for (int d = 0; d <= Nfin; ++d)
                    P.at(r, (size_t)i * (Nfin + 1) + d) = final_null[r][(size_t)i * (Mfin + 1) + d];
        auto piv = P.rref();
        size_t keep = std::min(piv.size(), (size_t)out.report.rank_estimate);
        for (size_t r = 0; r < keep; ++r) {
            AbelianRelationJet rel;
            rel.base = w.base;
            rel.order = Nfin;
            rel.g.resize(k);
            for (int i = 0; i < k; ++i) {
                rel.g[i].resize(Nfin + 1, Rational(0));
                for (int d = 0; d <= Nfin; ++d) rel.g[i][d] = P.at(r, (size_t)i * (Nfin + 1) + d);
            }
            out.basis.push_back(std::move(rel));
        }
    }

    // certification of genuinely polynomial relations
    bool all_rational = true;
    for (const auto& f : w.foliations) all_rational = all_rational && f.has_rational_integral();
    if (opt.certify_polynomial && all_rational) {
        PlanarWeb centered = w;
        for (auto& f : centered.foliations) {
            RatFunc u = f.integral();
            Rational v = u.eval(w.base.first, w.base.second);
            f = FoliationPresentation::first_integral(u - RatFunc(v));
        }
        for (auto& rel : out.basis) {
            rel.exactly_verified = verify_polynomial_relation(centered, rel.g);
            if (rel.exactly_verified) ++out.report.polynomial_certificates;
        }
    }

    // Mihaileanu criterium self-check: a maximal-rank smooth web must have K = 0
    if (opt.compute_mihaileanu && k >= 3 && !out.report.mihaileanu_zero && out.report.stabilized &&
        out.report.rank_estimate >= out.report.chern_bound)
        throw std::logic_error("rank_jets: nonzero Mihaileanu curvature with maximal stabilized rank");
    return out;
}

QuasiParallelReport abel_quasi_parallel(const std::vector<RatFunc>& linear_integrals, const RatFunc& u) {
    size_t k = linear_integrals.size();
    if (k < 2) throw std::invalid_argument("abel_quasi_parallel: need at least two linear forms");
    std::vector<std::pair<Rational, Rational>> ab;
    for (const auto& lf : linear_integrals) {
        if (!lf.is_polynomial() || lf.num().total_degree() != 1 || !lf.num().coeff(0, 0).is_zero())
            throw std::invalid_argument("abel_quasi_parallel: integrals must be linear homogeneous");
        ab.push_back({lf.num().coeff(1, 0), lf.num().coeff(0, 1)});
    }
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
            if ((ab[i].first * ab[j].second - ab[j].first * ab[i].second).is_zero())
                throw std::invalid_argument("abel_quasi_parallel: linear forms are not pairwise independent");
    RatFunc ux = u.derivative_x(), uy = u.derivative_y();
    if (ux.is_zero() && uy.is_zero()) throw std::invalid_argument("abel_quasi_parallel: u is constant");
    if (uy.is_zero() || (!ux.is_zero() && (ux / uy).is_constant()))
        throw std::invalid_argument("abel_quasi_parallel: u defines a parallel foliation");
    for (const auto& [a, b] : ab) {
        RatFunc viu = RatFunc(b) * ux - RatFunc(a) * uy;
        if (viu.is_zero()) throw std::invalid_argument("abel_quasi_parallel: u not transverse to a linear form");
    }

    // representation of sum f_i g^(i)(u); apply the hamiltonian derivations
    std::vector<RatFunc> f{RatFunc(1)};
    auto apply = [&](const std::vector<RatFunc>& g, const RatFunc& wx, const RatFunc& wy) {
        std::vector<RatFunc> out(g.size() + 1, RatFunc(0));
        RatFunc wu = wx * ux + wy * uy;
        for (size_t i = 0; i < g.size(); ++i) {
            out[i] += wx * g[i].derivative_x() + wy * g[i].derivative_y();
            out[i + 1] += g[i] * wu;
        }
        while (!out.empty() && out.back().is_zero()) out.pop_back();
        return out;
    };
    for (const auto& [a, b] : ab) f = apply(f, RatFunc(b), RatFunc(-a));
    if (!f.empty() && !f[0].is_zero())
        throw std::logic_error("abel_quasi_parallel: order-zero term survived the derivations");

    // normalize and reduce along the hamiltonian of u until coefficients are
    // functions of u alone
    auto top_normalize = [](std::vector<RatFunc>& g) {
        while (!g.empty() && g.back().is_zero()) g.pop_back();
        if (g.empty()) return;
        RatFunc lead = g.back();
        for (auto& e : g) e = e / lead;
    };
    top_normalize(f);
    RatFunc hx = uy, hy = -ux; // hamiltonian of u
    int depth = 0, cap = 3 * (int)k + 6;
    while (true) {
        std::vector<RatFunc> dh;
        bool all_zero = true;
        for (const auto& e : f) {
            RatFunc d = hx * e.derivative_x() + hy * e.derivative_y();
            all_zero = all_zero && d.is_zero();
            dh.push_back(d);
        }
        if (all_zero) break;
        while (!dh.empty() && dh.back().is_zero()) dh.pop_back();
        if (dh.size() <= 1) throw std::domain_error("abel_quasi_parallel: reduction degenerated");
        f = dh;
        top_normalize(f);
        if (++depth > cap) throw std::domain_error("abel_quasi_parallel: reduction did not terminate");
    }
    QuasiParallelReport rep;
    rep.ode_order = (int)f.size() - 1;
    rep.maximal = rep.ode_order == (int)k;
    return rep;
}

bool is_infinitesimal_automorphism(const PlanarWeb& w, const VectorField& v) {
    for (const auto& f : w.foliations) {
        auto [A, B] = f.omega();
        RatFunc P = v.apply(A) + A * v.vx.derivative_x() + B * v.vy.derivative_x();
        RatFunc Q = v.apply(B) + A * v.vx.derivative_y() + B * v.vy.derivative_y();
        if (!(P * B - Q * A).is_zero()) return false;
    }
    return true;
}

std::vector<OneForm> canonical_forms(const PlanarWeb& w, const VectorField& v) {
    std::vector<OneForm> out;
    for (int i = 0; i < w.size(); ++i) {
        auto [A, B] = w.foliations[i].omega();
        RatFunc pairing = A * v.vx + B * v.vy;
        if (pairing.is_zero())
            throw std::domain_error("canonical_forms: v is tangent to foliation " + std::to_string(i + 1));
        if (pairing.defined_at(w.base.first, w.base.second) &&
            pairing.eval(w.base.first, w.base.second).is_zero())
            throw std::domain_error("canonical_forms: v tangent to foliation " + std::to_string(i + 1) +
                                    " at the base point");
        OneForm du{A / pairing, B / pairing};
        if (du.a.derivative_y() != du.b.derivative_x())
            throw std::logic_error("canonical_forms: canonical form failed to be closed");
        out.push_back(std::move(du));
    }
    return out;
}

namespace {

// determinant over the polynomial ring Q(x,y)[lambda] by fraction-free
// Bareiss elimination
UniPoly det_unipoly(std::vector<std::vector<UniPoly>> m) {
    size_t n = m.size();
    UniPoly prev = UniPoly::constant(RatFunc(1), "lam");
    bool neg = false;
    for (size_t c = 0; c + 1 < n; ++c) {
        size_t sel = n;
        for (size_t r = c; r < n; ++r)
            if (!m[r][c].is_zero()) {
                sel = r;
                break;
            }
        if (sel == n) return UniPoly("lam");
        if (sel != c) {
            std::swap(m[sel], m[c]);
            neg = !neg;
        }
        for (size_t r = c + 1; r < n; ++r) {
            for (size_t cc = c + 1; cc < n; ++cc) {
                UniPoly num = m[c][c] * m[r][cc] - m[r][c] * m[c][cc];
                auto [q, rem] = num.divmod(prev);
                if (!rem.is_zero()) throw std::logic_error("det_unipoly: Bareiss division not exact");
                m[r][cc] = q;
            }
            m[r][c] = UniPoly("lam");
        }
        prev = m[c][c];
    }
    UniPoly d = m[n - 1][n - 1];
    return neg ? -d : d;
}

} // namespace

EigenPolynomial eigen_polynomial(const PlanarWeb& web, const VectorField& v, const VectorField& w) {
    auto dus = canonical_forms(web, v);
    int k = web.size();
    std::vector<std::vector<UniPoly>> M((size_t)k, std::vector<UniPoly>((size_t)k, UniPoly("lam")));
    for (int i = 0; i < k; ++i) {
        RatFunc s = dus[i].a * w.vx + dus[i].b * w.vy;
        UniPoly Q = UniPoly::constant(RatFunc(1), "lam");
        M[0][i] = Q;
        UniPoly lam_s({RatFunc(0), s}, "lam");
        for (int j = 1; j < k; ++j) {
            // Q -> w(Q) + lambda s Q, coefficientwise derivation
            UniPoly wQ("lam");
            for (int d = 0; d <= Q.degree(); ++d) wQ.set_coeff(d, w.apply(Q.coeff(d)));
            Q = wQ + lam_s * Q;
            M[j][i] = Q;
        }
    }
    UniPoly det = det_unipoly(std::move(M));
    // the Wronskian always carries the factor lambda^{k-1}
    for (int d = 0; d < k - 1; ++d)
        if (!det.coeff(d).is_zero()) throw std::logic_error("eigen_polynomial: missing lambda^(k-1) factor");
    UniPoly P("lam");
    for (int d = k - 1; d <= det.degree(); ++d) P.set_coeff(d - (k - 1), det.coeff(d));

    EigenPolynomial out;
    out.P_w = P;
    out.candidates.push_back(Rational(0)); // the zero eigenvalue is always examined
    if (!P.is_zero()) {
        // constant rational roots: specialize at two sample points, intersect,
        // confirm exactly
        std::vector<Rational> cand;
        int samples = 0;
        for (long nx = 1; nx <= 7 && samples < 2; ++nx) {
            Point pt{Rational(nx), Rational(nx + 1)};
            bool ok = true;
            UniPoly spec("lam");
            for (int d = 0; d <= P.degree(); ++d) {
                const RatFunc& c = P.coeff(d);
                if (!c.defined_at(pt.first, pt.second)) {
                    ok = false;
                    break;
                }
                spec.set_coeff(d, RatFunc(c.eval(pt.first, pt.second)));
            }
            if (!ok || spec.is_zero()) continue;
            auto roots = rational_roots(spec);
            std::sort(roots.begin(), roots.end());
            roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
            if (samples == 0)
                cand = roots;
            else {
                std::vector<Rational> tmp;
                std::set_intersection(cand.begin(), cand.end(), roots.begin(), roots.end(),
                                      std::back_inserter(tmp));
                cand = tmp;
            }
            ++samples;
        }
        for (const auto& r : cand) {
            if (r.is_zero()) continue;
            if (P.eval(RatFunc(r)).is_zero()) out.candidates.push_back(r);
        }
    }
    std::sort(out.candidates.begin(), out.candidates.end());
    return out;
}

AutomorphismRankResult rank_with_automorphism(const PlanarWeb& w, const VectorField& v,
                                              const AutomorphismRankOptions& opt) {
    int k = w.size();
    if (!is_infinitesimal_automorphism(w, v))
        throw std::domain_error("rank_with_automorphism: v is not an infinitesimal automorphism of the web");
    auto dus = canonical_forms(w, v);

    std::vector<VectorField> wits = opt.witnesses;
    if (wits.empty()) {
        wits.push_back(VectorField{RatFunc::var_x(), -RatFunc::var_y()});     // x d/dx - y d/dy
        wits.push_back(VectorField{RatFunc(1), RatFunc(2)});                  // d/dx + 2 d/dy
    }
    std::vector<Rational> candidates;
    bool first = true;
    for (const auto& wit : wits) {
        auto ep = eigen_polynomial(w, v, wit);
        std::vector<Rational> cs = ep.candidates;
        if (first) {
            candidates = cs;
            first = false;
        } else {
            std::vector<Rational> tmp;
            std::set_intersection(candidates.begin(), candidates.end(), cs.begin(), cs.end(),
                                  std::back_inserter(tmp));
            candidates = tmp;
        }
    }

    int cap = opt.poly_degree_cap > 0 ? opt.poly_degree_cap : k;
    AutomorphismRankResult out;
    out.report.chern_bound = chern_bound(w);
    out.report.mihaileanu_zero = k >= 3 ? mihaileanu_curvature(w).is_zero() : false;

    // canonical first integrals as jets
    int total = 0;
    bool all_stable = true;
    for (const auto& lam : candidates) {
        int dim = -1;
        bool stable = false;
        for (int N = std::max(6, 2 * k); N <= 8 * k && !stable; N += 2) {
            std::vector<Jet2> ujets;
            for (const auto& du : dus)
                ujets.push_back(primitive_of_closed(JetForm{expand(du.a, w.base, N), expand(du.b, w.base, N)}));
            // columns: u^d e^(lambda u) du, d <= cap
            size_t nmono = Jet2::size_of(N - 1);
            Mat<Rational> A(2 * nmono, (size_t)k * (cap + 1));
            for (int i = 0; i < k; ++i) {
                Jet2 e = exp_jet(ujets[i].scaled(lam));
                Jet2 dux = ujets[i].derivative_x(), duy = ujets[i].derivative_y();
                Jet2 pw = Jet2::constant(Rational(1), w.base, N - 1);
                Jet2 ut = ujets[i].truncated(N - 1);
                Jet2 et = e.truncated(N - 1);
                for (int d = 0; d <= cap; ++d) {
                    Jet2 ca = pw * et * dux, cb = pw * et * duy;
                    size_t r = 0;
                    for (int deg = 0; deg <= N - 1; ++deg)
                        for (int j = 0; j <= deg; ++j, ++r) {
                            A.at(2 * r, (size_t)i * (cap + 1) + d) = ca.at(deg - j, j);
                            A.at(2 * r + 1, (size_t)i * (cap + 1) + d) = cb.at(deg - j, j);
                        }
                    if (d < cap) pw = pw * ut;
                }
            }
            int nullity = (int)(A.cols() - A.rank());
            if (nullity == dim) stable = true;
            dim = nullity;
        }
        all_stable = all_stable && stable;
        if (dim > 0) {
            out.eigenvalues.push_back(lam);
            out.eigen_multiplicity.push_back(dim);
            total += dim;
        }
    }
    out.report.rank_estimate = total;
    out.report.stabilized = all_stable;

    if (opt.fv_integral) {
        PlanarWeb ext = w;
        ext.foliations.push_back(FoliationPresentation::first_integral(*opt.fv_integral));
        RankOptions ro;
        ro.window = 3;
        ro.compute_mihaileanu = false;
        ro.certify_polynomial = false;
        out.rank_extended_web = rank_jets(ext, ro).report.rank_estimate;
    }
    return out;
}

} // namespace webgeo
