#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

// Exact linear algebra for polarization qubits: pure states, Bell states,
// density matrices, Pauli corrections, and the fidelity/visibility formulas
// used throughout the toolkit.

namespace telsim {

using cxd = std::complex<double>;

// Thrown when an input violates a physical-state invariant (non-Hermitian
// density matrix, non-unit trace, out-of-range fidelity, ...).
class InvalidStateError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Single polarization qubit |psi> = alpha|H> + beta|V>, unit norm to 1e-12.
class PureState {
public:
    PureState(cxd alpha, cxd beta);

    // Normalizes (alpha, beta); throws on the zero vector.
    static PureState normalized(cxd alpha, cxd beta);

    cxd alpha() const { return amp_(0); }
    cxd beta() const { return amp_(1); }
    const Eigen::Vector2cd& vector() const { return amp_; }
    Eigen::Matrix2cd projector() const { return amp_ * amp_.adjoint(); }

    // Bloch vector with |H> at +z, |D> at +x, |R> at +y.
    Eigen::Vector3d bloch() const;

    PureState orthogonal() const { return PureState(-std::conj(beta()), std::conj(alpha())); }

private:
    Eigen::Vector2cd amp_;
};

enum class BellLabel { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

std::string to_string(BellLabel label);

// One of the four canonical maximally entangled two-qubit states, ordered
// in the |HH>, |HV>, |VH>, |VV> basis.
struct BellState {
    BellLabel label;

    Eigen::Vector4cd vector() const;
};

// d x d complex density matrix with d = 2 or 4. Construction validates
// Hermiticity (1e-9), positivity (eigenvalues >= -1e-9, clipped), and unit
// trace (1e-9).
class DensityMatrix {
public:
    DensityMatrix(Eigen::MatrixXcd entries, std::vector<int> dims);

    static DensityMatrix pure(const PureState& psi);
    static DensityMatrix pure(const BellState& bell);
    static DensityMatrix maximally_mixed(int dim);

    // Normalizes an unnormalized Hermitian accumulator (e.g. conditional
    // state weights); throws when the trace is not positive.
    static DensityMatrix from_unnormalized(const Eigen::MatrixXcd& m, std::vector<int> dims);

    const Eigen::MatrixXcd& entries() const { return m_; }
    const std::vector<int>& dims() const { return dims_; }
    int dim() const { return static_cast<int>(m_.rows()); }

    Eigen::Vector3d bloch() const;  // dim 2 only

private:
    Eigen::MatrixXcd m_;
    std::vector<int> dims_;
};

// Projective measurement axis on the Bloch sphere, unit length to 1e-12.
struct AnalyzerSetting {
    Eigen::Vector3d bloch_vector;

    AnalyzerSetting(double x, double y, double z);
    explicit AnalyzerSetting(const Eigen::Vector3d& v);

    // Canonical waveplate settings: H, V, D, A, R, L.
    static AnalyzerSetting from_label(char label);

    PureState state() const;
    AnalyzerSetting antipode() const { return AnalyzerSetting(-bloch_vector); }
};

// Canonical six-setting tomography/analysis set {H, V, D, A, R, L}.
const std::vector<char>& canonical_labels();

// Dimensionless classicality bounds quoted against measured quantities.
namespace bounds {
inline constexpr double kFidelity = 2.0 / 3.0;
inline constexpr double kFringeVisibility = 1.0 / 3.0;
inline constexpr double kHom = 0.5;
inline constexpr double kChshVisibility = 0.70710678118654752440;  // 1/sqrt(2)
}  // namespace bounds

// <psi|rho|psi>, real to 1e-12. rho must be a valid single-qubit state.
double fidelity(const DensityMatrix& rho, const PureState& psi);

// F_avg = (1/3) F_poles + (2/3) F_equator; inputs must lie in [0, 1].
double average_fidelity(double f_poles, double f_equator);

// (R_max - R_min) / (R_max + R_min); requires r_max >= r_min, r_max > 0.
double visibility_twofold(double r_max, double r_min);

// (R_max - R_min) / R_max; same preconditions.
double visibility_hom(double r_max, double r_min);

// Pauli (up to global phase) that maps Bob's conditional state back onto
// Alice's input, given the BSM outcome and the shared Bell resource.
Eigen::Matrix2cd pauli_correction(BellLabel outcome, BellLabel shared);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// Traces out one qubit of a two-qubit state; subsystem is 0 (first) or 1.
DensityMatrix partial_trace(const DensityMatrix& rho, int subsystem);

// Trace distance between single-qubit states (used by tests and tomography
// diagnostics).
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace telsim
