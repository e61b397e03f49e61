#include "sievelab/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "sievelab/counting.hpp"

namespace sievelab {

namespace {

void check_alpha(int alpha) {
    if (alpha != 1 && alpha != 2 && alpha != 4)
        throw std::domain_error("sifting product: alpha must be 1, 2 or 4");
}

PrimeFlags flags_covering(uint64_t value_bound) {
    return build_flags(value_bound / 6 + 1);
}

// Direct products are fine at desk scale; switch to log accumulation once
// the factor count grows past what repeated multiplication keeps accurate.
constexpr size_t kLogDomainThreshold = 1'000'000;

} // namespace

double sifting_product_over(std::span<const uint64_t> primes, int alpha, uint64_t bound) {
    check_alpha(alpha);
    if (bound < 5) throw std::domain_error("sifting product: bound must be >= 5");
    if (primes.size() > kLogDomainThreshold) {
        double logsum = 0.0;
        for (uint64_t p : primes) {
            if (p > bound) break;
            logsum += std::log1p(-alpha / static_cast<double>(p));
        }
        return std::exp(logsum);
    }
    double value = 1.0;
    for (uint64_t p : primes) {
        if (p > bound) break;
        value *= 1.0 - alpha / static_cast<double>(p);
    }
    return value;
}

SiftingProduct sifting_product(int alpha, uint64_t bound) {
    check_alpha(alpha);
    if (bound < 5) throw std::domain_error("sifting product: bound must be >= 5");
    const PrimeFlags flags = flags_covering(bound);
    const auto primes = primes_upto(flags, bound);
    return {alpha, bound, sifting_product_over(primes, alpha, bound)};
}

SiftingAccumulator::SiftingAccumulator(int alpha) : alpha_(static_cast<double>(alpha)) {
    check_alpha(alpha);
}

double mertens_lower_bound(int k, uint64_t m) {
    if (k != 2 && k != 4)
        throw std::domain_error("mertens_lower_bound: k must be 2 or 4");
    if (m == 0) throw std::domain_error("mertens_lower_bound: m must be positive");
    return static_cast<double>(m) * std::exp(k * kEulerGamma) *
           sifting_product(k, 6 * m).value;
}

double correction_over_primes(std::span<const uint64_t> primes, CorrectionKind kind,
                              uint64_t bound) {
    double value = 1.0;
    for (uint64_t pp : primes) {
        if (pp > bound) break;
        const double p = static_cast<double>(pp);
        switch (kind) {
            case CorrectionKind::C12: value *= p * (p - 2) / ((p - 1) * (p - 1)); break;
            case CorrectionKind::C14: {
                const double q = (p - 1) * (p - 1);
                value *= (p - 4) * p * p * p / (q * q);
                break;
            }
            case CorrectionKind::C24: value *= (p - 4) * p / ((p - 2) * (p - 2)); break;
        }
    }
    return value;
}

CorrectionConstant correction_constant(CorrectionKind kind, uint64_t bound) {
    if (bound < 5) throw std::domain_error("correction_constant: bound must be >= 5");
    const PrimeFlags flags = flags_covering(bound);
    const auto primes = primes_upto(flags, bound);
    return {kind, bound, correction_over_primes(primes, kind, bound)};
}

double eta2(uint64_t g, EtaMode mode) {
    if (g < 2 || g % 2 != 0) throw std::domain_error("eta2: need an even g >= 2");
    const bool div3 = g % 3 == 0;
    double value = mode == EtaMode::difference ? (div3 ? 2.0 : 1.0) : (div3 ? 1.0 : 0.5);

    uint64_t rest = g;
    while (rest % 2 == 0) rest /= 2;
    while (rest % 3 == 0) rest /= 3;
    for (uint64_t d = 5; d * d <= rest; d += (d % 6 == 5 ? 2 : 4)) {
        if (rest % d != 0) continue;
        value *= static_cast<double>(d - 1) / static_cast<double>(d - 2);
        while (rest % d == 0) rest /= d;
    }
    if (rest > 1) value *= static_cast<double>(rest - 1) / static_cast<double>(rest - 2);
    return value;
}

double eta4_empirical(const TwinFlags& twin, uint64_t shift, uint64_t m) {
    const uint64_t denom = count_twin_patterns(twin, 1, m).count;
    if (denom == 0)
        throw std::domain_error("eta4_empirical: quadruplet count is zero");
    return static_cast<double>(count_twin_patterns(twin, shift, m).count) /
           static_cast<double>(denom);
}

double mu(int k, uint64_t n) {
    if (k != 2 && k != 4) throw std::domain_error("mu: k must be 2 or 4");
    if (n < 6) throw std::domain_error("mu: n must be >= 6");
    double num = 0.0, den = 0.0;
    for (uint64_t t = 2; t <= n - 2; ++t) {
        const double lt = std::log(static_cast<double>(t));
        const double ln = std::log(static_cast<double>(n - t));
        if (k == 2) {
            num += 1.0 / (lt * ln);
            den += 1.0 / (lt * lt);
        } else {
            num += 1.0 / (lt * lt * ln * ln);
            den += 1.0 / (lt * lt * lt * lt);
        }
    }
    return num / den;
}

std::string to_string(PredictTarget t) {
    switch (t) {
        case PredictTarget::twin: return "twin";
        case PredictTarget::gap: return "gap";
        case PredictTarget::goldbach: return "goldbach";
        case PredictTarget::quad_from_primes: return "quad_from_primes";
        case PredictTarget::quad_from_twins: return "quad_from_twins";
        case PredictTarget::twin_goldbach: return "twin_goldbach";
    }
    return "?";
}

Predictor predict_twin(const PrimeFlags& flags, uint64_t n) {
    const double pa = static_cast<double>(count_primes(flags, WheelClass::A, n));
    const double pb = static_cast<double>(count_primes(flags, WheelClass::B, n));
    const auto primes = primes_upto(flags, n);
    const double c12 = correction_over_primes(primes, CorrectionKind::C12, n);
    const double m = static_cast<double>(n) / 6.0;
    return {PredictTarget::twin,
            n,
            c12 * pa * pb / m,
            {{"c12", c12},
             {"m", m},
             {"pi_a", pa},
             {"pi_b", pb},
             {"product_bound", static_cast<double>(n)}}};
}

Predictor predict_gap(const PrimeFlags& flags, uint64_t g, uint64_t n, GapSource source) {
    const double eta = eta2(g, EtaMode::difference);
    double base;
    if (source == GapSource::actual_twin) {
        base = static_cast<double>(count_gap_pairs(flags, 2, n).count);
    } else {
        base = predict_twin(flags, n).predicted;
    }
    return {PredictTarget::gap,
            n,
            eta * base,
            {{"eta2", eta},
             {"g", static_cast<double>(g)},
             {"twin_base", base},
             {"twin_base_predicted", source == GapSource::predicted_twin ? 1.0 : 0.0}}};
}

Predictor predict_goldbach(const PrimeFlags& flags, uint64_t g) {
    if (g < 10) throw std::domain_error("predict_goldbach: need g >= 10");
    const double pi2 = static_cast<double>(count_gap_pairs(flags, 2, g).count);
    const double mu2 = mu(2, g);
    const double eta = eta2(g, EtaMode::sum);
    return {PredictTarget::goldbach,
            g,
            pi2 * mu2 * eta,
            {{"eta2_sum", eta}, {"mu2", mu2}, {"pi2", pi2}}};
}

Predictor predict_quad_from_primes(const PrimeFlags& flags, uint64_t n) {
    const double pa = static_cast<double>(count_primes(flags, WheelClass::A, n));
    const double pb = static_cast<double>(count_primes(flags, WheelClass::B, n));
    const auto primes = primes_upto(flags, n);
    const double c14 = correction_over_primes(primes, CorrectionKind::C14, n);
    const double m = static_cast<double>(n) / 6.0;
    return {PredictTarget::quad_from_primes,
            n,
            c14 * m * (pa / m) * (pa / m) * (pb / m) * (pb / m),
            {{"c14", c14},
             {"m", m},
             {"pi_a", pa},
             {"pi_b", pb},
             {"product_bound", static_cast<double>(n)}}};
}

Predictor predict_quad_from_twins(const PrimeFlags& flags, uint64_t n) {
    const double pi2 = static_cast<double>(count_gap_pairs(flags, 2, n).count);
    const auto primes = primes_upto(flags, n);
    const double c24 = correction_over_primes(primes, CorrectionKind::C24, n);
    const double m = static_cast<double>(n) / 6.0;
    return {PredictTarget::quad_from_twins,
            n,
            c24 * m * (pi2 / m) * (pi2 / m),
            {{"c24", c24},
             {"m", m},
             {"pi2", pi2},
             {"product_bound", static_cast<double>(n)}}};
}

Predictor predict_twin_goldbach(const PrimeFlags& flags, uint64_t m) {
    if (m == 0) throw std::domain_error("predict_twin_goldbach: m must be positive");
    const uint64_t n = 6 * m;
    const double pa = static_cast<double>(count_primes(flags, WheelClass::A, n));
    const double pb = static_cast<double>(count_primes(flags, WheelClass::B, n));
    const auto primes = primes_upto(flags, n);
    const double c14 = correction_over_primes(primes, CorrectionKind::C14, n);
    const double mu4 = mu(4, n);
    const double eta4 = 1.0; // no closed form; neutral value, recorded
    const double md = static_cast<double>(m);
    const double ratio = (pa + pb) / md;
    const double predicted = md * eta4 * mu4 * c14 * ratio * ratio * ratio * ratio;
    const double split = md * eta4 * mu4 * c14 * (pa / md) * (pa / md) * (pb / md) * (pb / md);
    return {PredictTarget::twin_goldbach,
            n,
            predicted,
            {{"c14", c14},
             {"eta4", eta4},
             {"m", md},
             {"mu4", mu4},
             {"pi_a", pa},
             {"pi_b", pb},
             {"predicted_split_pi", split},
             {"product_bound", static_cast<double>(n)}}};
}

std::vector<double> divergence_trend(int k, std::span<const uint64_t> m_values) {
    if (k != 4) throw std::domain_error("divergence_trend: only k = 4 is defined");
    if (m_values.empty()) return {};
    uint64_t prev = 0;
    for (uint64_t m : m_values) {
        if (m < 2 || m <= prev)
            throw std::invalid_argument("divergence_trend: m_values must ascend, each >= 2");
        prev = m;
    }

    const uint64_t top = 6 * m_values.back();
    const PrimeFlags flags = flags_covering(top);
    const auto primes = primes_upto(flags, top);
    const bool log_domain = primes.size() > 1'000'000;

    std::vector<double> out;
    out.reserve(m_values.size());
    size_t pi = 0;
    double value = 1.0, logsum = 0.0;
    for (uint64_t m : m_values) {
        const uint64_t bound = 6 * m;
        while (pi < primes.size() && primes[pi] <= bound) {
            if (log_domain)
                logsum += std::log1p(-4.0 / static_cast<double>(primes[pi]));
            else
                value *= 1.0 - 4.0 / static_cast<double>(primes[pi]);
            ++pi;
        }
        const double prod = log_domain ? std::exp(logsum) : value;
        out.push_back(static_cast<double>(m) * prod);
    }
    return out;
}

} // namespace sievelab
