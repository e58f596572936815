#pragma once
/**
 * common.hpp - Shared basics: arm tags, error types, seeded Gaussian RNG.
 */

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualguard {

enum class Arm { Left = 0, Right = 1 };

inline constexpr std::array<Arm, 2> kArms{Arm::Left, Arm::Right};

inline int arm_index(Arm a) { return static_cast<int>(a); }

inline Arm other_arm(Arm a) { return a == Arm::Left ? Arm::Right : Arm::Left; }

inline const char* arm_name(Arm a) { return a == Arm::Left ? "left" : "right"; }

/// Precondition or invariant breach (dimension mismatch, non-finite input, ...).
struct ContractViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Corrupt or inconsistent noise schedule encountered at use time.
struct ScheduleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A guided denoising step failed; carries the step index and the last cost seen.
struct GuidedStepError : std::runtime_error {
    int step_k;
    double last_cost;
    GuidedStepError(int k, double cost, const std::string& what)
        : std::runtime_error(what), step_k(k), last_cost(cost) {}
};

/// A cost term was activated without the bindings or parameters it needs.
struct SchedulingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Keypoint tracking misuse (e.g. reconstructing before the offset is known).
struct TrackingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Configuration rejected; carries every validation error, not just the first.
struct ConfigError : std::runtime_error {
    std::vector<std::string> errors;
    explicit ConfigError(std::vector<std::string> errs)
        : std::runtime_error(join(errs)), errors(std::move(errs)) {}

  private:
    static std::string join(const std::vector<std::string>& errs) {
        std::string out = "config validation failed:";
        for (const auto& e : errs) {
            out += "\n  - ";
            out += e;
        }
        return out;
    }
};

/**
 * Deterministic Gaussian source. Wraps mt19937_64 with an explicit
 * Box-Muller transform so every normal draw consumes exactly two engine
 * outputs; the stream is reproducible across standard libraries, and two
 * samplers seeded alike stay aligned draw-for-draw.
 */
class GaussianRng {
  public:
    explicit GaussianRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    /// Uniform in (0, 1].
    double uniform() {
        // 53-bit mantissa, shifted into (0,1].
        const std::uint64_t bits = next() >> 11;
        return (static_cast<double>(bits) + 1.0) * (1.0 / 9007199254740992.0);
    }

    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    Eigen::MatrixXd normal_matrix(Eigen::Index rows, Eigen::Index cols) {
        Eigen::MatrixXd m(rows, cols);
        for (Eigen::Index r = 0; r < rows; ++r)
            for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = normal();
        return m;
    }

    Eigen::VectorXd normal_vector(Eigen::Index n) {
        Eigen::VectorXd v(n);
        for (Eigen::Index i = 0; i < n; ++i) v(i) = normal();
        return v;
    }

    std::uint64_t next_u64() { return next(); }

    /// Independent per-episode stream: splitmix64 over (base, index).
    static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
        std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

  private:
    // splitmix64; small, fast, and identical everywhere.
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

inline bool all_finite(const Eigen::Ref<const Eigen::MatrixXd>& m) {
    return m.allFinite();
}

}  // namespace dualguard
