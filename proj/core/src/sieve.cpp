#include "sievelab/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace sievelab {

namespace {

constexpr uint64_t kCapacityLimit = (std::numeric_limits<uint64_t>::max() - 1) / 6;

uint64_t isqrt(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

struct ClearPlan {
    uint64_t p;
    uint64_t res_a, res_b;   // first_index residues in [1, p]
    uint64_t self_a, self_b; // index of p itself, 0 if p is not in that class
};

// First progression member >= lo for residue res in [1, p].
uint64_t first_member(uint64_t res, uint64_t p, uint64_t lo) {
    if (res >= lo) return res;
    const uint64_t steps = (lo - res + p - 1) / p;
    return res + steps * p;
}

void clear_block(Bitmap& bits, uint64_t res, uint64_t p, uint64_t self,
                 uint64_t lo, uint64_t hi) {
    for (uint64_t i = first_member(res, p, lo); i <= hi; i += p) {
        if (i != self) bits.clear(i);
    }
}

} // namespace

PrimeFlags build_flags(uint64_t m_max, const BuildOptions& opts) {
    if (m_max == 0) throw std::domain_error("build_flags: m_max must be positive");
    if (m_max > kCapacityLimit)
        throw std::overflow_error("build_flags: 6*m_max+1 overflows 64 bits");

    Bitmap a(m_max, true);
    Bitmap b(m_max, true);

    const uint64_t top = 6 * m_max + 1;
    const uint64_t root = isqrt(top);

    std::vector<ClearPlan> plans;
    if (root >= 5) {
        // Base primes come from a recursively sieved range covering sqrt(top).
        const PrimeFlags base = build_flags(root / 6 + 1, opts);
        for (uint64_t p : primes_upto(base, root)) {
            const auto descs = composite_progressions(p);
            plans.push_back({p, descs[0].first_index, descs[1].first_index,
                             self_index(p, WheelClass::A), self_index(p, WheelClass::B)});
        }
    }

    if (!plans.empty()) {
        // Blocks are word-aligned so parallel workers never share a word.
        const uint64_t block = std::max<uint64_t>((opts.block_indices + 63) / 64 * 64, 64);
        const uint64_t nblocks = (m_max + block - 1) / block;

        auto work = [&](uint64_t blk_begin, uint64_t blk_end) {
            for (uint64_t blk = blk_begin; blk < blk_end; ++blk) {
                const uint64_t lo = blk * block + 1;
                const uint64_t hi = std::min(m_max, lo + block - 1);
                for (const auto& plan : plans) {
                    clear_block(a, plan.res_a, plan.p, plan.self_a, lo, hi);
                    clear_block(b, plan.res_b, plan.p, plan.self_b, lo, hi);
                }
            }
        };

        unsigned threads = opts.threads != 0 ? opts.threads
                                             : std::max(1u, std::thread::hardware_concurrency());
        threads = static_cast<unsigned>(std::min<uint64_t>(threads, nblocks));
        if (threads <= 1) {
            work(0, nblocks);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(threads);
            const uint64_t per = (nblocks + threads - 1) / threads;
            for (unsigned t = 0; t < threads; ++t) {
                const uint64_t begin = t * per;
                const uint64_t end = std::min<uint64_t>(nblocks, begin + per);
                if (begin >= end) break;
                pool.emplace_back(work, begin, end);
            }
            for (auto& th : pool) th.join();
        }
    }

    return PrimeFlags(m_max, std::move(a), std::move(b));
}

TwinFlags twin_flags(const PrimeFlags& flags) {
    Bitmap t = flags.a();
    const auto& bw = flags.b().words();
    auto& tw = t.words();
    for (size_t i = 0; i < tw.size(); ++i) tw[i] &= bw[i];
    return TwinFlags(flags.m_max(), std::move(t));
}

TwinFlags twin_flags_from_bitmap(uint64_t m_max, Bitmap t) {
    if (t.size() != m_max)
        throw std::invalid_argument("twin_flags_from_bitmap: size mismatch");
    return TwinFlags(m_max, std::move(t));
}

bool verify_well_structured(const PrimeFlags& flags, uint64_t p) {
    if (p > 6 * flags.m_max() - 1)
        throw std::domain_error("verify_well_structured: p beyond term range");
    const auto descs = composite_progressions(p); // validates p

    for (const auto& d : descs) {
        const Bitmap& bits = flags.klass(d.target);
        const uint64_t self = self_index(p, d.target);
        const uint64_t res = d.first_index % p;
        for (uint64_t i = 1; i <= flags.m_max(); ++i) {
            const bool divisible = term(d.target, i) % p == 0;
            if (divisible != (i % p == res)) return false;
            if (divisible && i != self && bits.test(i)) return false;
        }
    }
    return true;
}

bool verify_double_sieve(const TwinFlags& twin, uint64_t p) {
    if (p > 6 * twin.m_max() - 1)
        throw std::domain_error("verify_double_sieve: p beyond term range");
    const auto descs = composite_progressions(p);
    const uint64_t res_a = descs[0].first_index % p;
    const uint64_t res_b = descs[1].first_index % p;
    if (res_a == res_b) return false; // the two classes must be disjoint

    const uint64_t self =
        std::max(self_index(p, WheelClass::A), self_index(p, WheelClass::B));
    for (uint64_t i = 1; i <= twin.m_max(); ++i) {
        const bool divisible = (6 * i - 1) % p == 0 || (6 * i + 1) % p == 0;
        const uint64_t r = i % p;
        if (divisible != (r == res_a || r == res_b)) return false;
        if (divisible && i != self && twin.t_bit(i)) return false;
    }
    return true;
}

std::vector<uint64_t> primes_upto(const PrimeFlags& flags, uint64_t bound) {
    if (bound > 6 * flags.m_max() + 1)
        throw std::out_of_range("primes_upto: bound beyond sieve range");
    std::vector<uint64_t> primes;
    for (uint64_t i = 1; i <= flags.m_max(); ++i) {
        const uint64_t av = 6 * i - 1;
        if (av > bound) break;
        if (flags.a_bit(i)) primes.push_back(av);
        const uint64_t bv = av + 2;
        if (bv <= bound && flags.b_bit(i)) primes.push_back(bv);
    }
    return primes;
}

namespace {

void write_u64_le(std::ostream& out, uint64_t v) {
    char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(buf, 8);
}

uint64_t read_u64_le(std::istream& in) {
    char buf[8];
    in.read(buf, 8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<uint64_t>(static_cast<unsigned char>(buf[i])) << (8 * i);
    return v;
}

void write_bitmap(std::ostream& out, const Bitmap& bits) {
    const uint64_t nbytes = (bits.size() + 7) / 8;
    const auto& words = bits.words();
    std::vector<char> buf(nbytes);
    for (uint64_t j = 0; j < nbytes; ++j)
        buf[j] = static_cast<char>((words[j / 8] >> (8 * (j % 8))) & 0xFF);
    out.write(buf.data(), static_cast<std::streamsize>(nbytes));
}

Bitmap read_bitmap(std::istream& in, uint64_t size) {
    const uint64_t nbytes = (size + 7) / 8;
    std::vector<char> buf(nbytes);
    in.read(buf.data(), static_cast<std::streamsize>(nbytes));
    Bitmap bits(size);
    auto& words = bits.words();
    for (uint64_t j = 0; j < nbytes; ++j)
        words[j / 8] |= static_cast<uint64_t>(static_cast<unsigned char>(buf[j])) << (8 * (j % 8));
    bits.trim();
    return bits;
}

constexpr char kMagic[4] = {'S', 'V', 'L', '1'};

} // namespace

void save_flags(const PrimeFlags& flags, std::ostream& out) {
    out.write(kMagic, 4);
    const char reserved[4] = {0, 0, 0, 0};
    out.write(reserved, 4);
    write_u64_le(out, flags.m_max());
    write_bitmap(out, flags.a());
    write_bitmap(out, flags.b());
    if (!out) throw std::runtime_error("save_flags: write failed");
}

PrimeFlags load_flags(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || !std::equal(magic, magic + 4, kMagic))
        throw std::runtime_error("load_flags: bad magic");
    char reserved[4];
    in.read(reserved, 4);
    const uint64_t m_max = read_u64_le(in);
    if (!in || m_max == 0 || m_max > kCapacityLimit)
        throw std::runtime_error("load_flags: bad header");
    Bitmap a = read_bitmap(in, m_max);
    Bitmap b = read_bitmap(in, m_max);
    if (!in) throw std::runtime_error("load_flags: truncated data");
    return PrimeFlags(m_max, std::move(a), std::move(b));
}

} // namespace sievelab
