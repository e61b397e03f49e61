#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sievelab/sieve.hpp"

namespace sievelab {

inline constexpr double kEulerGamma = 0.5772156649015329;

struct SiftingProduct {
    int alpha = 0;      // 1, 2 or 4
    uint64_t bound = 0; // primes 5 <= p <= bound
    double value = 1.0;
};

/// prod(1 - alpha/p) over primes 5 <= p <= bound, ascending accumulation.
SiftingProduct sifting_product(int alpha, uint64_t bound);
double sifting_product_over(std::span<const uint64_t> primes, int alpha, uint64_t bound);

/// Running form of the same product, extended one prime at a time so that
/// per-m sweeps reproduce sifting_product() exactly.
class SiftingAccumulator {
public:
    explicit SiftingAccumulator(int alpha);
    void push(uint64_t p) { value_ *= 1.0 - alpha_ / static_cast<double>(p); }
    double value() const { return value_; }

private:
    double alpha_;
    double value_ = 1.0;
};

/// m * e^{k*gamma} * prod(1 - k/p) over primes 5 <= p <= 6m; the k = 2 form
/// lower-bounds the twin count, k = 4 the quadruplet count.
double mertens_lower_bound(int k, uint64_t m);

enum class CorrectionKind : uint8_t { C12, C14, C24 };

struct CorrectionConstant {
    CorrectionKind kind;
    uint64_t bound;
    double value;
};

/// C12: prod p(p-2)/(p-1)^2; C14: prod (p-4)p^3/(p-1)^4;
/// C24: prod (p-4)p/(p-2)^2 — all over primes 5 <= p <= bound.
CorrectionConstant correction_constant(CorrectionKind kind, uint64_t bound);
double correction_over_primes(std::span<const uint64_t> primes, CorrectionKind kind,
                              uint64_t bound);

enum class EtaMode : uint8_t { difference, sum };

/// kappa * prod (d-1)/(d-2) over the distinct prime divisors d >= 5 of g.
/// difference mode: kappa = 2 when 3 | g, else 1.
/// sum mode: kappa = 1 when 3 | g, else 0.5.
double eta2(uint64_t g, EtaMode mode);

/// Observed ratio of shifted twin-pattern counts to the quadruplet count;
/// no closed form is available, so this is measurement, not prediction.
double eta4_empirical(const TwinFlags& twin, uint64_t shift, uint64_t m);

/// Density-loss quotient of mixed-log sums over integer t in [2, n-2]:
/// k=2: sum 1/(log t log(n-t)) over sum 1/log^2 t;
/// k=4: same with both factors squared.
double mu(int k, uint64_t n);

enum class PredictTarget : uint8_t {
    twin,
    gap,
    goldbach,
    quad_from_primes,
    quad_from_twins,
    twin_goldbach,
};

std::string to_string(PredictTarget t);

struct Predictor {
    PredictTarget target;
    uint64_t n = 0;
    double predicted = 0.0;
    std::map<std::string, double> inputs; // counts and constants consumed
};

/// C12 * pi(a,n) * pi(b,n) / m with m = n/6 (as a real number) and all
/// products cut at bound n.
Predictor predict_twin(const PrimeFlags& flags, uint64_t n);

enum class GapSource : uint8_t { actual_twin, predicted_twin };

/// eta2(g) times either the sieved twin count at n or the twin predictor.
Predictor predict_gap(const PrimeFlags& flags, uint64_t g, uint64_t n,
                      GapSource source = GapSource::actual_twin);

/// pi2(g) * mu2(g) * eta2(g, sum).
Predictor predict_goldbach(const PrimeFlags& flags, uint64_t g);

/// C14 * m * [pi(a,n)/m]^2 * [pi(b,n)/m]^2.
Predictor predict_quad_from_primes(const PrimeFlags& flags, uint64_t n);

/// C24 * m * [pi2(n)/m]^2.
Predictor predict_quad_from_twins(const PrimeFlags& flags, uint64_t n);

/// m * eta4 * mu4(6m) * C14 * [(pi(a)+pi(b))/m]^4 with eta4 = 1 recorded;
/// the split-factor variant [pi(a)/m]^2 [pi(b)/m]^2 is reported in inputs.
Predictor predict_twin_goldbach(const PrimeFlags& flags, uint64_t m);

/// I_m = m * prod(1 - 4/p) over primes 5 <= p <= 6m, for each requested m
/// (ascending); exhibits the divergence trend.
std::vector<double> divergence_trend(int k, std::span<const uint64_t> m_values);

} // namespace sievelab
