#include "sievelab/density.hpp"

#include <stdexcept>

namespace sievelab {

namespace {

bool value_is_prime(const PrimeFlags& flags, uint64_t v) {
    if (v < 2) return false;
    if (v == 2 || v == 3) return true;
    if (v % 6 == 5) return flags.a_bit((v + 1) / 6);
    if (v % 6 == 1) return flags.b_bit((v - 1) / 6);
    return false;
}

CoverageReport report_from(const Bitmap& covered, uint64_t limit) {
    CoverageReport report;
    report.limit = limit;
    uint64_t cum = 0;
    double sch = 1.0;
    for (uint64_t k = 1; k <= limit; ++k) {
        if (covered.test(k)) {
            ++cum;
        } else {
            report.missing.push_back(k);
        }
        const double ratio = static_cast<double>(cum) / static_cast<double>(k);
        if (ratio < sch) sch = ratio;
    }
    report.schnirelmann_prefix = sch;
    report.natural_estimate = static_cast<double>(cum) / static_cast<double>(limit);
    return report;
}

Bitmap pairwise_or_shift(const Bitmap& base, const Bitmap& addend, uint64_t limit) {
    Bitmap out(limit);
    for (uint64_t x = 1; x < limit; ++x) {
        if (base.test(x)) Bitmap::or_shifted(out, addend, x, limit);
    }
    return out;
}

} // namespace

IndexSet make_index_set(SetSource source, uint64_t limit, const PrimeFlags& flags) {
    if (limit == 0) throw std::domain_error("make_index_set: limit must be positive");
    Bitmap members(limit);
    switch (source) {
        case SetSource::L:
        case SetSource::R:
        case SetSource::T: {
            if (limit > flags.m_max())
                throw std::out_of_range("make_index_set: limit beyond sieve indices");
            for (uint64_t i = 1; i <= limit; ++i) {
                const bool in = source == SetSource::L   ? flags.a_bit(i)
                                : source == SetSource::R ? flags.b_bit(i)
                                                         : flags.a_bit(i) && flags.b_bit(i);
                if (in) members.set(i);
            }
            break;
        }
        case SetSource::PrimesWith1: {
            if (limit > 6 * flags.m_max() + 1)
                throw std::out_of_range("make_index_set: limit beyond sieve values");
            members.set(1);
            for (uint64_t v = 2; v <= limit; ++v)
                if (value_is_prime(flags, v)) members.set(v);
            break;
        }
        case SetSource::TwinPrimes: {
            if (limit + 2 > 6 * flags.m_max() + 1)
                throw std::out_of_range("make_index_set: limit+2 beyond sieve values");
            for (uint64_t v = 2; v <= limit; ++v) {
                if (value_is_prime(flags, v) &&
                    (value_is_prime(flags, v + 2) || (v >= 2 && value_is_prime(flags, v - 2))))
                    members.set(v);
            }
            break;
        }
    }
    return {source, limit, std::move(members)};
}

DensityEstimate density(const IndexSet& set) {
    uint64_t cum = 0;
    double sch = 1.0;
    for (uint64_t k = 1; k <= set.limit; ++k) {
        if (set.members.test(k)) ++cum;
        const double ratio = static_cast<double>(cum) / static_cast<double>(k);
        if (ratio < sch) sch = ratio;
    }
    return {sch, static_cast<double>(cum) / static_cast<double>(set.limit)};
}

CoverageReport sumset_coverage(const IndexSet& s1, const IndexSet& s2, uint64_t limit) {
    if (limit == 0) throw std::domain_error("sumset_coverage: limit must be positive");
    if (s1.limit < limit || s2.limit < limit)
        throw std::out_of_range("sumset_coverage: source sets smaller than limit");

    Bitmap covered(limit);
    for (uint64_t v = 1; v <= limit; ++v)
        if (s1.members.test(v) || s2.members.test(v)) covered.set(v);
    for (uint64_t x = 1; x < limit; ++x) {
        if (s1.members.test(x)) Bitmap::or_shifted(covered, s2.members, x, limit);
    }
    return report_from(covered, limit);
}

CoverageReport basis_order3_check(SetSource kind, uint64_t limit, const PrimeFlags& flags) {
    if (kind != SetSource::PrimesWith1 && kind != SetSource::TwinPrimes)
        throw std::domain_error("basis_order3_check: kind must be PrimesWith1 or TwinPrimes");
    const IndexSet set = make_index_set(kind, limit, flags);

    const Bitmap pair_sums = pairwise_or_shift(set.members, set.members, limit);
    const Bitmap triple_sums = pairwise_or_shift(set.members, pair_sums, limit);

    Bitmap covered = set.members;
    auto& cw = covered.words();
    for (size_t w = 0; w < cw.size(); ++w)
        cw[w] |= pair_sums.words()[w] | triple_sums.words()[w];

    return report_from(covered, limit);
}

} // namespace sievelab
