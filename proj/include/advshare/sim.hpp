#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <optional>
#include <vector>

#include "advshare/scheme.hpp"

namespace advshare {

// Dense state vector of an n-qudit register over GF(q), share 1 most
// significant in the index. Capped at 2^16 amplitudes.
struct QuantumState {
    const Field* f = nullptr;
    std::size_t n = 0;
    Eigen::VectorXcd amps;
};

namespace detail {

inline std::size_t checked_power(std::uint64_t q, std::size_t e, std::uint64_t cap, const char* what) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        r *= q;
        if (r > cap) throw Error("StateTooLarge", std::string(what) + " exceeds the size cap");
    }
    return static_cast<std::size_t>(r);
}

}  // namespace detail

// Split a self-dual space into (a|0) and (0|b) generator halves. Works on the
// RREF basis, whose rows are pure-type exactly when the space is CSS.
inline std::optional<std::pair<Subspace, Subspace>> css_split(const Subspace& C) {
    const Field& F = *C.f;
    const std::size_t n = C.ambient / 2;
    MatrixFq gx(F, 0, n), gz(F, 0, n);
    for (std::size_t r = 0; r < C.dim(); ++r) {
        bool a_zero = true, b_zero = true;
        for (std::size_t c = 0; c < n; ++c) {
            if (C.basis.at(r, c) != 0) a_zero = false;
            if (C.basis.at(r, n + c) != 0) b_zero = false;
        }
        if (!a_zero && !b_zero) return std::nullopt;
        Vec half(n);
        for (std::size_t c = 0; c < n; ++c) half[c] = C.basis.at(r, b_zero ? c : n + c);
        (b_zero ? gx : gz).append_row(half);
    }
    return std::make_pair(Subspace::span(F, n, Support::coordinate, std::move(gx)),
                          Subspace::span(F, n, Support::coordinate, std::move(gz)));
}

// Uniform superposition over the X-type classical code: the joint +1
// eigenvector of every stabilizer of a CSS self-dual space.
inline QuantumState phi_state(const CodeTriple& t) {
    const Field& F = *t.f;
    const auto split = css_split(t.C_max);
    if (!split) throw Error("NotCss", "C_max has a mixed-type basis row; rerun completion with the CSS preference");
    const auto& [cx, cz] = *split;
    if (cx.dim() + cz.dim() != t.n || !euclidean_dual(cx).contains_subspace(cz))
        throw Error("NotCss", "CSS halves are not Euclidean-dual to each other");

    const std::size_t dim = detail::checked_power(F.q(), t.n, 1u << 16, "state vector");
    QuantumState st{&F, t.n, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim))};
    std::size_t count = 0;
    detail::for_each_element(cx, [&](const Vec& c) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < t.n; ++i) idx = idx * F.q() + c[i];
        st.amps[static_cast<Eigen::Index>(idx)] = 1.0;
        ++count;
    });
    st.amps /= std::sqrt(static_cast<double>(count));
    return st;
}

// X(a)Z(b): |v> -> w^Tr(<b,v>) |v+a>, with w the p-th root of unity. For
// q = p^m this is the tensor action of the p-level shift/phase pairs under
// the basis expansion; the trace form collapses that to field arithmetic.
inline QuantumState apply_pauli(const QuantumState& st, const Vec& ab) {
    const Field& F = *st.f;
    if (ab.size() != 2 * st.n) throw Error("AmbientMismatch", "operator label length must be 2n");
    const std::size_t q = F.q();
    const std::size_t dim = static_cast<std::size_t>(st.amps.size());

    std::vector<std::complex<double>> roots(F.p());
    for (std::uint32_t e = 0; e < F.p(); ++e) {
        const double ang = 2.0 * std::numbers::pi_v<double> * e / F.p();
        roots[e] = {std::cos(ang), std::sin(ang)};
    }
    // per-share shift and phase-exponent tables
    std::vector<std::vector<std::size_t>> shift(st.n, std::vector<std::size_t>(q));
    std::vector<std::vector<std::uint32_t>> phase(st.n, std::vector<std::uint32_t>(q));
    for (std::size_t i = 0; i < st.n; ++i)
        for (Fq x = 0; x < q; ++x) {
            shift[i][x] = F.add(x, ab[i]);
            phase[i][x] = F.trace(F.mul(ab[st.n + i], x));
        }

    QuantumState out{&F, st.n, Eigen::VectorXcd::Zero(st.amps.size())};
    std::vector<Fq> digits(st.n, 0);  // digits[0] = least significant = share n
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::size_t target = 0;
        std::uint32_t e = 0;
        for (std::size_t i = 0; i < st.n; ++i) {
            const Fq v = digits[st.n - 1 - i];  // value at share i
            target = target * q + shift[i][v];
            e += phase[i][v];
        }
        out.amps[static_cast<Eigen::Index>(target)] +=
            roots[e % F.p()] * st.amps[static_cast<Eigen::Index>(idx)];
        for (std::size_t i = 0; i < st.n; ++i) {
            if (++digits[i] < q) break;
            digits[i] = 0;
        }
    }
    return out;
}

inline QuantumState encode_state(const Scheme& sch, const QuantumState& phi, const Vec& m, const Vec& r) {
    return apply_pauli(phi, encode_label(sch, m, r).vec);
}

// Reshape the state into a q^|A| x q^|A-bar| matrix: rho_A = M M^dagger.
inline Eigen::MatrixXcd reduce_columns(const QuantumState& st, const ShareSet& A) {
    const Field& F = *st.f;
    const std::size_t q = F.q();
    const ShareSet Abar = complement_shares(A, st.n);
    std::size_t rows = 1, cols = 1;
    for (std::size_t i = 0; i < A.size(); ++i) rows *= q;
    for (std::size_t i = 0; i < Abar.size(); ++i) cols *= q;
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows),
                                                static_cast<Eigen::Index>(cols));
    std::vector<Fq> digits(st.n, 0);
    const std::size_t dim = static_cast<std::size_t>(st.amps.size());
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::size_t r = 0, c = 0;
        for (int share : A) r = r * q + digits[st.n - 1 - static_cast<std::size_t>(share)];
        for (int share : Abar) c = c * q + digits[st.n - 1 - static_cast<std::size_t>(share)];
        M(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            st.amps[static_cast<Eigen::Index>(idx)];
        for (std::size_t i = 0; i < st.n; ++i) {
            if (++digits[i] < q) break;
            digits[i] = 0;
        }
    }
    return M;
}

// rho = V V^dagger, weights folded into the columns. The nonzero spectrum can
// be read off whichever Gram side is smaller, which keeps the full-register
// subsets cheap (few columns) without ever materializing large densities.
struct LowRankDensity {
    Eigen::MatrixXcd V;

    // Re-factor rho = V V^dagger through its spectral decomposition whenever V
    // is wider than tall, so metric costs stay cubic in min(rows, cols).
    void compress() {
        if (V.cols() <= V.rows()) return;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(V * V.adjoint());
        Eigen::Index rank = 0;
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
            if (es.eigenvalues()[i] > 1e-15) ++rank;
        Eigen::MatrixXcd next(V.rows(), rank);
        Eigen::Index at = 0;
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
            if (es.eigenvalues()[i] > 1e-15)
                next.col(at++) = es.eigenvectors().col(i) * std::sqrt(es.eigenvalues()[i]);
        V = std::move(next);
    }

    Eigen::VectorXd nonzero_eigenvalues() const {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es;
        if (V.cols() <= V.rows())
            es.compute(V.adjoint() * V, Eigen::EigenvaluesOnly);
        else
            es.compute(V * V.adjoint(), Eigen::EigenvaluesOnly);
        return es.eigenvalues();
    }

    double entropy(double base) const {
        const Eigen::VectorXd ev = nonzero_eigenvalues();
        double h = 0;
        for (Eigen::Index i = 0; i < ev.size(); ++i)
            if (ev[i] > 1e-14) h -= ev[i] * std::log(ev[i]);
        return h / std::log(base);
    }

    static double overlap(const LowRankDensity& a, const LowRankDensity& b) {
        return (a.V.adjoint() * b.V).squaredNorm();
    }

    static double trace_distance(const LowRankDensity& a, const LowRankDensity& b) {
        const Eigen::Index ca = a.V.cols(), cb = b.V.cols();
        Eigen::MatrixXcd X(a.V.rows(), ca + cb);
        X.leftCols(ca) = a.V;
        X.rightCols(cb) = b.V;
        // rho - sigma = X S X^dagger with S = diag(I, -I); reduce through a
        // thin QR so only an (ca+cb)-sized Hermitian problem remains.
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(X);
        Eigen::MatrixXcd R = qr.matrixQR()
                                 .topRows(std::min<Eigen::Index>(ca + cb, X.rows()))
                                 .triangularView<Eigen::Upper>();
        Eigen::VectorXd signs(ca + cb);
        signs.head(ca).setOnes();
        signs.tail(cb).setConstant(-1.0);
        const Eigen::MatrixXcd small = R * signs.asDiagonal() * R.adjoint();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(small, Eigen::EigenvaluesOnly);
        return 0.5 * es.eigenvalues().cwiseAbs().sum();
    }
};

// Hermitian reduced density matrix on a share subset; the dense counterpart
// of LowRankDensity for subsets small enough to materialize.
struct SubsystemDensity {
    ShareSet subset;
    Eigen::MatrixXcd rho;

    void validate() const {
        if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
            throw Error("NotADensity", "matrix is not Hermitian");
        if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10)
            throw Error("NotADensity", "trace differs from 1");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-10)
            throw Error("NotADensity", "negative eigenvalue");
    }
};

inline constexpr std::size_t kDenseSideCap = 2048;

// Columns of the randomness-averaged density of secret m on subset A:
// rho = (1/q^s) sum_r  reduce(enc(m,r)) reduce(enc(m,r))^dagger.
inline LowRankDensity secret_density_columns(const Scheme& sch, const QuantumState& phi,
                                             const Vec& m, const ShareSet& A) {
    const Field& F = *sch.triple.f;
    const std::size_t q = F.q();
    std::size_t rcount = 1;
    for (int j = 0; j < sch.triple.s; ++j) rcount *= q;
    std::size_t rows = 1, cols_per = 1;
    for (std::size_t i = 0; i < A.size(); ++i) rows *= q;
    for (std::size_t i = A.size(); i < sch.triple.n; ++i) cols_per *= q;

    LowRankDensity out;
    out.V = Eigen::MatrixXcd(static_cast<Eigen::Index>(rows),
                             static_cast<Eigen::Index>(rcount * cols_per));
    const double wr = 1.0 / std::sqrt(static_cast<double>(rcount));
    Vec r(static_cast<std::size_t>(sch.triple.s), 0);
    for (std::size_t rc = 0; rc < rcount; ++rc) {
        std::size_t c = rc;
        for (auto& rj : r) {
            rj = static_cast<Fq>(c % q);
            c /= q;
        }
        const QuantumState enc = encode_state(sch, phi, m, r);
        out.V.middleCols(static_cast<Eigen::Index>(rc * cols_per),
                         static_cast<Eigen::Index>(cols_per)) = wr * reduce_columns(enc, A);
    }
    out.compress();
    return out;
}

// Map from requested subsets to dense randomness-averaged densities.
inline std::map<ShareSet, SubsystemDensity> encode_density(const Scheme& sch, const Vec& m,
                                                           const std::vector<ShareSet>& subsets) {
    const Field& F = *sch.triple.f;
    detail::checked_power(F.q(), sch.triple.n, 1u << 16, "state vector");
    const QuantumState phi = phi_state(sch.triple);
    std::map<ShareSet, SubsystemDensity> out;
    for (const ShareSet& A : subsets) {
        const ShareSet norm = normalize_shares(A, sch.triple.n);
        detail::checked_power(F.q(), norm.size(), kDenseSideCap, "reduced density");
        const LowRankDensity lr = secret_density_columns(sch, phi, m, norm);
        SubsystemDensity d;
        d.subset = norm;
        d.rho = lr.V * lr.V.adjoint();
        d.validate();
        out.emplace(norm, std::move(d));
    }
    return out;
}

inline double trace_distance(const SubsystemDensity& a, const SubsystemDensity& b) {
    if (a.rho.rows() != b.rho.rows()) throw Error("DimensionMismatch", "densities of different sizes");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.rho - b.rho, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

inline double overlap(const SubsystemDensity& a, const SubsystemDensity& b) {
    if (a.rho.rows() != b.rho.rows()) throw Error("DimensionMismatch", "densities of different sizes");
    return (a.rho * b.rho).trace().real();
}

inline double von_neumann_entropy(const SubsystemDensity& d, double base) {
    d.validate();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(d.rho, Eigen::EigenvaluesOnly);
    double h = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double ev = es.eigenvalues()[i];
        if (ev > 1e-14) h -= ev * std::log(ev);
    }
    return h / std::log(base);
}

// chi = S(mean) - mean S, base-q entropies.
inline double holevo(const std::vector<std::pair<double, SubsystemDensity>>& ensemble, double base) {
    if (ensemble.empty()) throw Error("DimensionMismatch", "empty ensemble");
    Eigen::MatrixXcd mean = Eigen::MatrixXcd::Zero(ensemble[0].second.rho.rows(),
                                                   ensemble[0].second.rho.cols());
    double avg = 0;
    for (const auto& [w, d] : ensemble) {
        mean += w * d.rho;
        avg += w * von_neumann_entropy(d, base);
    }
    SubsystemDensity m{ensemble[0].second.subset, std::move(mean)};
    return von_neumann_entropy(m, base) - avg;
}

struct SubsetCertification {
    ShareSet subset;
    std::size_t leakage = 0;
    AccessClass cls = AccessClass::forbidden;
    double chi = 0;               // base-q Holevo information of the secret ensemble
    double chi_leakage_gap = 0;   // |chi - leakage|
    double secrecy_max_td = 0;    // max_m  td(rho_m, rho_0)
    double max_pair_overlap = 0;  // max_{m != m'} Tr(rho_m rho_m')
    double min_pair_overlap = 0;
};

struct ProtocolCertification {
    std::vector<SubsetCertification> subsets;
    double advance_invariance = 0;  // max_{m,r} td(reduceB(enc), reduceB(phi))
};

// Numerical certification of the protocol: per-subset secrecy,
// distinguishability and Holevo leakage, plus invariance of the advance
// shares' reduced state under every encoding.
inline ProtocolCertification verify_protocol(const Scheme& sch, const std::vector<ShareSet>& subsets) {
    const Field& F = *sch.triple.f;
    const std::size_t q = F.q();
    const QuantumState phi = phi_state(sch.triple);
    std::size_t mcount = 1, rcount = 1;
    for (int i = 0; i < sch.triple.k; ++i) mcount *= q;
    for (int j = 0; j < sch.triple.s; ++j) rcount *= q;

    std::vector<Vec> secrets(mcount, Vec(static_cast<std::size_t>(sch.triple.k), 0));
    for (std::size_t mc = 0; mc < mcount; ++mc) {
        std::size_t c = mc;
        for (auto& mi : secrets[mc]) {
            mi = static_cast<Fq>(c % q);
            c /= q;
        }
    }

    ProtocolCertification cert;
    for (const ShareSet& rawA : subsets) {
        const ShareSet A = normalize_shares(rawA, sch.triple.n);
        SubsetCertification sc;
        sc.subset = A;
        const Classification cls = classify(sch.triple, A);
        sc.leakage = cls.leakage;
        sc.cls = cls.cls;

        std::vector<LowRankDensity> per_secret;
        per_secret.reserve(mcount);
        for (const Vec& m : secrets) per_secret.push_back(secret_density_columns(sch, phi, m, A));

        double avg_entropy = 0;
        Eigen::Index total_cols = 0;
        for (const auto& d : per_secret) {
            avg_entropy += d.entropy(static_cast<double>(q)) / static_cast<double>(mcount);
            total_cols += d.V.cols();
        }
        LowRankDensity mean;
        mean.V = Eigen::MatrixXcd(per_secret[0].V.rows(), total_cols);
        Eigen::Index at = 0;
        const double wm = 1.0 / std::sqrt(static_cast<double>(mcount));
        for (const auto& d : per_secret) {
            mean.V.middleCols(at, d.V.cols()) = wm * d.V;
            at += d.V.cols();
        }
        mean.compress();
        sc.chi = mean.entropy(static_cast<double>(q)) - avg_entropy;
        sc.chi_leakage_gap = std::abs(sc.chi - static_cast<double>(sc.leakage));

        sc.secrecy_max_td = 0;
        for (std::size_t mc = 1; mc < mcount; ++mc)
            sc.secrecy_max_td = std::max(
                sc.secrecy_max_td, LowRankDensity::trace_distance(per_secret[mc], per_secret[0]));

        sc.max_pair_overlap = 0;
        sc.min_pair_overlap = mcount > 1 ? 2.0 : 0.0;
        for (std::size_t i = 0; i < mcount; ++i)
            for (std::size_t j = i + 1; j < mcount; ++j) {
                const double ov = LowRankDensity::overlap(per_secret[i], per_secret[j]);
                sc.max_pair_overlap = std::max(sc.max_pair_overlap, ov);
                sc.min_pair_overlap = std::min(sc.min_pair_overlap, ov);
            }
        if (mcount <= 1) sc.min_pair_overlap = 0;
        cert.subsets.push_back(std::move(sc));
    }

    // the reduced state on B of every encoding equals that of |phi>
    cert.advance_invariance = 0;
    if (!sch.B.empty()) {
        LowRankDensity base;
        base.V = reduce_columns(phi, sch.B);
        base.compress();
        Vec r(static_cast<std::size_t>(sch.triple.s), 0);
        for (const Vec& m : secrets)
            for (std::size_t rc = 0; rc < rcount; ++rc) {
                std::size_t c = rc;
                for (auto& rj : r) {
                    rj = static_cast<Fq>(c % q);
                    c /= q;
                }
                LowRankDensity red;
                red.V = reduce_columns(encode_state(sch, phi, m, r), sch.B);
                red.compress();
                cert.advance_invariance =
                    std::max(cert.advance_invariance, LowRankDensity::trace_distance(red, base));
            }
    }
    return cert;
}

}  // namespace advshare
