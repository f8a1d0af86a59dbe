#include "telsim/qstate.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace telsim {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kStateTol = 1e-9;

const cxd kI(0.0, 1.0);

}  // namespace

PureState::PureState(cxd alpha, cxd beta) {
    amp_ << alpha, beta;
    if (std::abs(amp_.norm() - 1.0) > kNormTol) {
        throw InvalidStateError("PureState amplitudes are not unit norm");
    }
}

PureState PureState::normalized(cxd alpha, cxd beta) {
    Eigen::Vector2cd v;
    v << alpha, beta;
    const double n = v.norm();
    if (n <= 0.0) {
        throw InvalidStateError("cannot normalize the zero vector");
    }
    return PureState(alpha / n, beta / n);
}

Eigen::Vector3d PureState::bloch() const {
    const cxd a = alpha(), b = beta();
    return {2.0 * std::real(std::conj(a) * b), 2.0 * std::imag(std::conj(a) * b),
            std::norm(a) - std::norm(b)};
}

std::string to_string(BellLabel label) {
    switch (label) {
        case BellLabel::PhiPlus: return "phi+";
        case BellLabel::PhiMinus: return "phi-";
        case BellLabel::PsiPlus: return "psi+";
        case BellLabel::PsiMinus: return "psi-";
    }
    return "?";
}

Eigen::Vector4cd BellState::vector() const {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
    switch (label) {
        case BellLabel::PhiPlus: v(0) = s; v(3) = s; break;
        case BellLabel::PhiMinus: v(0) = s; v(3) = -s; break;
        case BellLabel::PsiPlus: v(1) = s; v(2) = s; break;
        case BellLabel::PsiMinus: v(1) = s; v(2) = -s; break;
    }
    return v;
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries, std::vector<int> dims)
    : m_(std::move(entries)), dims_(std::move(dims)) {
    const int d = static_cast<int>(m_.rows());
    if (m_.cols() != d || (d != 2 && d != 4)) {
        throw InvalidStateError("DensityMatrix must be 2x2 or 4x4");
    }
    int dprod = 1;
    for (int s : dims_) dprod *= s;
    if (dims_.empty() || dprod != d) {
        throw InvalidStateError("subsystem dims do not match matrix dimension");
    }
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kStateTol) {
        throw InvalidStateError("DensityMatrix is not Hermitian");
    }
    if (std::abs(m_.trace() - cxd(1.0, 0.0)) > kStateTol) {
        throw InvalidStateError("DensityMatrix trace is not 1");
    }
    // Rounding noise from MLE / Monte Carlo gets clipped at -1e-9.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kStateTol) {
        throw InvalidStateError("DensityMatrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::pure(const PureState& psi) {
    return DensityMatrix(psi.projector(), {2});
}

DensityMatrix DensityMatrix::pure(const BellState& bell) {
    const Eigen::Vector4cd v = bell.vector();
    return DensityMatrix(v * v.adjoint(), {2, 2});
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    if (dim == 2) return DensityMatrix(Eigen::MatrixXcd::Identity(2, 2) / 2.0, {2});
    if (dim == 4) return DensityMatrix(Eigen::MatrixXcd::Identity(4, 4) / 4.0, {2, 2});
    throw InvalidStateError("maximally_mixed supports dim 2 or 4");
}

DensityMatrix DensityMatrix::from_unnormalized(const Eigen::MatrixXcd& m, std::vector<int> dims) {
    const double tr = std::real(m.trace());
    if (!(tr > 0.0)) {
        throw InvalidStateError("unnormalized state has non-positive trace");
    }
    Eigen::MatrixXcd h = (m + m.adjoint()) / (2.0 * tr);
    return DensityMatrix(std::move(h), std::move(dims));
}

Eigen::Vector3d DensityMatrix::bloch() const {
    if (dim() != 2) throw InvalidStateError("bloch() requires a single-qubit state");
    return {2.0 * std::real(m_(1, 0)), 2.0 * std::imag(m_(1, 0)),
            std::real(m_(0, 0) - m_(1, 1))};
}

AnalyzerSetting::AnalyzerSetting(double x, double y, double z)
    : AnalyzerSetting(Eigen::Vector3d(x, y, z)) {}

AnalyzerSetting::AnalyzerSetting(const Eigen::Vector3d& v) : bloch_vector(v) {
    if (std::abs(bloch_vector.norm() - 1.0) > kNormTol) {
        throw InvalidStateError("analyzer Bloch vector is not unit length");
    }
}

AnalyzerSetting AnalyzerSetting::from_label(char label) {
    switch (label) {
        case 'H': return AnalyzerSetting(0, 0, 1);
        case 'V': return AnalyzerSetting(0, 0, -1);
        case 'D': return AnalyzerSetting(1, 0, 0);
        case 'A': return AnalyzerSetting(-1, 0, 0);
        case 'R': return AnalyzerSetting(0, 1, 0);
        case 'L': return AnalyzerSetting(0, -1, 0);
        default: throw InvalidStateError(std::string("unknown analyzer label: ") + label);
    }
}

PureState AnalyzerSetting::state() const {
    const double theta = std::acos(std::clamp(bloch_vector.z(), -1.0, 1.0));
    const double phi = std::atan2(bloch_vector.y(), bloch_vector.x());
    return PureState(std::cos(theta / 2.0), std::exp(kI * phi) * std::sin(theta / 2.0));
}

const std::vector<char>& canonical_labels() {
    static const std::vector<char> labels = {'H', 'V', 'D', 'A', 'R', 'L'};
    return labels;
}

double fidelity(const DensityMatrix& rho, const PureState& psi) {
    if (rho.dim() != 2) throw InvalidStateError("fidelity expects a single-qubit rho");
    const cxd f = psi.vector().adjoint() * rho.entries() * psi.vector();
    return std::real(f);
}

double average_fidelity(double f_poles, double f_equator) {
    if (f_poles < 0.0 || f_poles > 1.0 || f_equator < 0.0 || f_equator > 1.0) {
        throw InvalidStateError("fidelities must lie in [0, 1]");
    }
    return f_poles / 3.0 + 2.0 * f_equator / 3.0;
}

double visibility_twofold(double r_max, double r_min) {
    if (r_min < 0.0 || r_max < r_min || r_max <= 0.0) {
        throw InvalidStateError("visibility requires r_max >= r_min >= 0 and r_max > 0");
    }
    return (r_max - r_min) / (r_max + r_min);
}

double visibility_hom(double r_max, double r_min) {
    if (r_min < 0.0 || r_max < r_min || r_max <= 0.0) {
        throw InvalidStateError("visibility requires r_max >= r_min >= 0 and r_max > 0");
    }
    return (r_max - r_min) / r_max;
}

Eigen::Matrix2cd pauli_correction(BellLabel outcome, BellLabel shared) {
    // Project qubits (A, B) of |psi>_A (x) |shared>_BC onto <outcome|_AB. The
    // map psi -> conditional state on C is linear, psi_C = K psi_A, and K is
    // proportional to a Pauli. The correction is K^dagger rescaled to unit
    // modulus, phase-normalized so the largest entry is real positive.
    const Eigen::Vector4cd out = BellState{outcome}.vector();
    const Eigen::Vector4cd sh = BellState{shared}.vector();
    Eigen::Matrix2cd k = Eigen::Matrix2cd::Zero();
    // K(c, a) = sum_b conj(out(a, b)) * sh(b, c)
    for (int c = 0; c < 2; ++c) {
        for (int a = 0; a < 2; ++a) {
            cxd sum = 0.0;
            for (int b = 0; b < 2; ++b) {
                sum += std::conj(out(2 * a + b)) * sh(2 * b + c);
            }
            k(c, a) = sum;
        }
    }
    const double scale = std::sqrt(std::abs((k.adjoint() * k)(0, 0).real()) +
                                   std::abs((k.adjoint() * k)(1, 1).real())) /
                         std::sqrt(2.0);
    Eigen::Matrix2cd u = k.adjoint() / scale;
    // Fix the unobservable global phase.
    cxd lead = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (std::abs(u(i, j)) > std::abs(lead)) lead = u(i, j);
    u *= std::abs(lead) / lead;
    return u;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() * b.dim() > 4) {
        throw InvalidStateError("tensor product exceeds two qubits");
    }
    Eigen::MatrixXcd out(a.dim() * b.dim(), a.dim() * b.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            out.block(i * b.dim(), j * b.dim(), b.dim(), b.dim()) = a.entries()(i, j) * b.entries();
    std::vector<int> dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return DensityMatrix(std::move(out), std::move(dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, int subsystem) {
    if (rho.dim() != 4 || rho.dims().size() != 2) {
        throw InvalidStateError("partial_trace expects a two-qubit state");
    }
    if (subsystem != 0 && subsystem != 1) {
        throw InvalidStateError("subsystem must be 0 or 1");
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2, 2);
    const auto& m = rho.entries();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            cxd sum = 0.0;
            for (int k = 0; k < 2; ++k) {
                // Trace over the first (subsystem 0) or second (subsystem 1) qubit.
                sum += (subsystem == 0) ? m(2 * k + i, 2 * k + j) : m(2 * i + k, 2 * j + k);
            }
            out(i, j) = sum;
        }
    }
    return DensityMatrix(std::move(out), {2});
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    Eigen::MatrixXcd diff = a.entries() - b.entries();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(diff, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace telsim
