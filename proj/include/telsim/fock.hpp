#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

// Sparse few-photon Fock-space states over a fixed list of optical modes,
// with exact linear-optics transforms, loss Kraus branching, and diagonal
// (threshold-detector) expectations. Photon numbers stay small (truncated
// pair emission), so states hold a handful of kets and every operation is
// exact enumeration.

namespace telsim::fock {

using cxd = std::complex<double>;

// Occupation numbers pack 4 bits per mode: up to 12 modes, 15 photons each.
using Key = std::uint64_t;
inline constexpr int kMaxModes = 12;
inline constexpr int kMaxOccupancy = 15;

inline int occupation(Key key, int mode) {
    return static_cast<int>((key >> (4 * mode)) & 0xFULL);
}

inline Key set_occupation(Key key, int mode, int n) {
    return (key & ~(0xFULL << (4 * mode))) | (static_cast<Key>(n) << (4 * mode));
}

inline int total_photons(Key key) {
    int total = 0;
    while (key != 0) {
        total += static_cast<int>(key & 0xFULL);
        key >>= 4;
    }
    return total;
}

inline int photons_in(Key key, const std::vector<int>& modes) {
    int total = 0;
    for (int m : modes) total += occupation(key, m);
    return total;
}

namespace detail {

inline const std::array<double, kMaxOccupancy + 1>& factorials() {
    static const auto table = [] {
        std::array<double, kMaxOccupancy + 1> f{};
        f[0] = 1.0;
        for (int n = 1; n <= kMaxOccupancy; ++n) f[n] = f[n - 1] * n;
        return f;
    }();
    return table;
}

inline double binom(int n, int k) {
    const auto& f = factorials();
    return f[n] / (f[k] * f[n - k]);
}

}  // namespace detail

struct Term {
    Key key = 0;
    cxd amp{0.0, 0.0};
};

// Sparse pure state; terms are kept sorted by key with unique keys. States
// are generally unnormalized: the squared norm of a loss branch is the
// branch probability.
class State {
public:
    static State vacuum() {
        State s;
        s.terms_.push_back({0, cxd(1.0, 0.0)});
        return s;
    }

    static State empty_state() { return State{}; }

    bool empty() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    double norm2() const {
        double n = 0.0;
        for (const auto& t : terms_) n += std::norm(t.amp);
        return n;
    }

    void scale(cxd c) {
        for (auto& t : terms_) t.amp *= c;
    }

    // Applies (sum_m combo[m].second * a_dagger[combo[m].first]) once.
    State applied_creation(const std::vector<std::pair<int, cxd>>& combo) const {
        State out;
        out.terms_.reserve(terms_.size() * combo.size());
        for (const auto& t : terms_) {
            for (const auto& [mode, coeff] : combo) {
                if (coeff == cxd(0.0, 0.0)) continue;
                const int n = occupation(t.key, mode);
                if (n >= kMaxOccupancy) throw std::overflow_error("fock occupancy overflow");
                out.terms_.push_back(
                    {set_occupation(t.key, mode, n + 1), t.amp * coeff * std::sqrt(n + 1.0)});
            }
        }
        out.compact();
        return out;
    }

    State applied_creation_power(const std::vector<std::pair<int, cxd>>& combo, int power) const {
        State out = *this;
        for (int i = 0; i < power; ++i) out = out.applied_creation(combo);
        return out;
    }

    // Exact 2-mode linear-optics transform: a_dagger[old j] -> sum_i u(i, j)
    // a_dagger[new i], acting in place on modes (m1, m2).
    State transformed_pair(int m1, int m2, const Eigen::Matrix2cd& u) const {
        const auto& fact = detail::factorials();
        State out;
        for (const auto& t : terms_) {
            const int n1 = occupation(t.key, m1);
            const int n2 = occupation(t.key, m2);
            const Key base = set_occupation(set_occupation(t.key, m1, 0), m2, 0);
            const cxd prefactor = t.amp / std::sqrt(fact[n1] * fact[n2]);
            for (int k = 0; k <= n1; ++k) {
                const cxd ck = detail::binom(n1, k) * pow_int(u(0, 0), k) * pow_int(u(1, 0), n1 - k);
                for (int l = 0; l <= n2; ++l) {
                    const cxd cl =
                        detail::binom(n2, l) * pow_int(u(0, 1), l) * pow_int(u(1, 1), n2 - l);
                    const int p = k + l;
                    const int q = n1 + n2 - k - l;
                    if (p > kMaxOccupancy || q > kMaxOccupancy) {
                        throw std::overflow_error("fock occupancy overflow");
                    }
                    const cxd amp = prefactor * ck * cl * std::sqrt(fact[p] * fact[q]);
                    if (amp == cxd(0.0, 0.0)) continue;
                    out.terms_.push_back({set_occupation(set_occupation(base, m1, p), m2, q), amp});
                }
            }
        }
        out.compact();
        return out;
    }

    void add_term(Key key, cxd amp) { terms_.push_back({key, amp}); }

    void finalize() { compact(); }

    void prune(double eps = 1e-15) {
        std::erase_if(terms_, [eps](const Term& t) { return std::abs(t.amp) < eps; });
    }

    // Amplitude lookup by key (terms are sorted).
    cxd amplitude(Key key) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                                   [](const Term& t, Key k) { return t.key < k; });
        return (it != terms_.end() && it->key == key) ? it->amp : cxd(0.0, 0.0);
    }

private:
    static cxd pow_int(cxd base, int e) {
        cxd r(1.0, 0.0);
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    }

    void compact() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return a.key < b.key; });
        std::size_t w = 0;
        for (std::size_t r = 0; r < terms_.size(); ++r) {
            if (w > 0 && terms_[w - 1].key == terms_[r].key) {
                terms_[w - 1].amp += terms_[r].amp;
            } else {
                terms_[w++] = terms_[r];
            }
        }
        terms_.resize(w);
        prune();
    }

    std::vector<Term> terms_;
};

inline State superpose(cxd ca, const State& a, cxd cb, const State& b) {
    State out = a;
    out.scale(ca);
    for (const auto& t : b.terms()) out.add_term(t.key, cb * t.amp);
    out.finalize();
    return out;
}

// Photon-loss channel on a set of modes with common transmittance eta,
// expanded into its Kraus branches (one per per-mode loss-count vector).
// Each returned state is unnormalized; its squared norm is the branch
// probability. Sampling a branch by that probability is an exact unraveling
// of the channel, which is what the Monte Carlo backend does.
inline std::vector<State> loss_branches(const State& s, const std::vector<int>& modes,
                                        double eta) {
    if (eta < 0.0 || eta > 1.0) throw std::invalid_argument("eta must lie in [0, 1]");
    if (s.empty()) return {};
    if (eta == 1.0 || modes.empty()) return {s};

    std::vector<int> max_occ(modes.size(), 0);
    for (const auto& t : s.terms()) {
        for (std::size_t i = 0; i < modes.size(); ++i) {
            max_occ[i] = std::max(max_occ[i], occupation(t.key, modes[i]));
        }
    }

    std::vector<State> branches;
    std::vector<int> losses(modes.size(), 0);
    const auto emit = [&] {
        State branch;
        for (const auto& t : s.terms()) {
            double factor = 1.0;
            Key key = t.key;
            bool dead = false;
            for (std::size_t i = 0; i < modes.size(); ++i) {
                const int n = occupation(t.key, modes[i]);
                const int k = losses[i];
                if (k > n) {
                    dead = true;
                    break;
                }
                factor *= detail::binom(n, k) * std::pow(eta, n - k) * std::pow(1.0 - eta, k);
                key = set_occupation(key, modes[i], n - k);
            }
            if (!dead && factor > 0.0) branch.add_term(key, t.amp * std::sqrt(factor));
        }
        branch.finalize();
        if (!branch.empty()) branches.push_back(std::move(branch));
    };
    // Odometer over loss-count vectors.
    while (true) {
        emit();
        std::size_t i = 0;
        while (i < modes.size() && losses[i] == max_occ[i]) losses[i++] = 0;
        if (i == modes.size()) break;
        ++losses[i];
    }
    return branches;
}

// Expectation of a diagonal operator W(key) over an (unnormalized) state.
template <class W>
double expect_diag(const State& s, W&& w) {
    double e = 0.0;
    for (const auto& t : s.terms()) e += std::norm(t.amp) * w(t.key);
    return e;
}

// Weighted one-photon reduced matrix rho_w of a two-mode (H, V) subsystem:
// <theta| rho_w |theta> = E[ W * n_theta ] for any analyzer state theta.
// Built from M_ij = <psi| W a_dagger_i a_j |psi>; rho_w = M^T.
template <class W>
Eigen::Matrix2cd weighted_one_photon_matrix(const State& s, int mode_h, int mode_v, W&& w) {
    const int modes[2] = {mode_h, mode_v};
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    for (const auto& t : s.terms()) {
        for (int j = 0; j < 2; ++j) {
            const int nj = occupation(t.key, modes[j]);
            if (nj == 0) continue;
            const Key lowered = set_occupation(t.key, modes[j], nj - 1);
            for (int i = 0; i < 2; ++i) {
                const int ni = occupation(lowered, modes[i]);
                const Key raised = set_occupation(lowered, modes[i], ni + 1);
                const cxd other = s.amplitude(raised);
                if (other == cxd(0.0, 0.0)) continue;
                m(i, j) += t.amp * std::conj(other) * std::sqrt(static_cast<double>(nj)) *
                           std::sqrt(ni + 1.0) * w(raised);
            }
        }
    }
    return m.transpose();
}

}  // namespace telsim::fock
