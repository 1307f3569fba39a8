#include "popzeta/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace popzeta {

namespace {

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

constexpr u64 kSegment = u64(1) << 20;
constexpr u64 kMaxLimit = u64(1) << 34;  // ~1.7e10; keeps the table under a few GB

}  // namespace

std::vector<u64> sieve_primes(u64 limit) {
    if (limit < 2) throw std::domain_error("sieve_primes: limit must be >= 2");
    if (limit > kMaxLimit) throw std::length_error("sieve_primes: limit exceeds memory budget");

    // Base sieve up to sqrt(limit).
    u64 root = isqrt(limit);
    std::vector<char> mark(root + 1, 1);
    std::vector<u64> base;
    for (u64 i = 2; i <= root; ++i) {
        if (!mark[i]) continue;
        base.push_back(i);
        for (u64 j = i * i; j <= root; j += i) mark[j] = 0;
    }

    std::vector<u64> primes;
    primes.reserve(limit > 10 ? static_cast<std::size_t>(1.2 * limit / std::log(double(limit))) + 16 : 8);
    for (u64 p : base)
        if (p <= limit) primes.push_back(p);

    std::vector<char> seg;
    for (u64 low = root + 1; low <= limit; low += kSegment) {
        u64 high = std::min(limit, low + kSegment - 1);
        seg.assign(high - low + 1, 1);
        for (u64 p : base) {
            if (p * p > high) break;
            u64 start = std::max(p * p, ((low + p - 1) / p) * p);
            for (u64 j = start; j <= high; j += p) seg[j - low] = 0;
        }
        for (u64 i = low; i <= high; ++i)
            if (seg[i - low]) primes.push_back(i);
    }
    return primes;
}

std::vector<u64> sieve_range(u64 lo, u64 hi) {
    if (hi < 2 || hi < lo) return {};
    lo = std::max<u64>(lo, 2);
    if (hi > kMaxLimit) throw std::length_error("sieve_range: limit exceeds memory budget");

    u64 root = isqrt(hi);
    std::vector<u64> base = sieve_primes(std::max<u64>(root, 2));

    std::vector<u64> primes;
    std::vector<char> seg;
    for (u64 low = lo; low <= hi; low += kSegment) {
        u64 high = std::min(hi, low + kSegment - 1);
        seg.assign(high - low + 1, 1);
        for (u64 p : base) {
            if (p * p > high) break;
            u64 start = std::max(p * p, ((low + p - 1) / p) * p);
            for (u64 j = start; j <= high; j += p) seg[j - low] = 0;
        }
        for (u64 i = low; i <= high; ++i)
            if (seg[i - low] && i >= 2) primes.push_back(i);
    }
    return primes;
}

PrimeTable::PrimeTable(u64 limit) : limit_(limit), primes_(sieve_primes(limit)) {}

PrimeTable::PrimeTable(u64 limit, std::vector<u64> primes)
    : limit_(limit), primes_(std::move(primes)) {}

u64 PrimeTable::nth(std::size_t n) const {
    if (n < 1 || n > primes_.size()) throw std::out_of_range("PrimeTable::nth: index past table");
    return primes_[n - 1];
}

bool PrimeTable::contains(u64 n) const {
    return std::binary_search(primes_.begin(), primes_.end(), n);
}

u64 PrimeTable::pi(u64 x) const {
    if (x > limit_) throw std::out_of_range("PrimeTable::pi: x past table limit");
    return static_cast<u64>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

namespace {

std::mutex g_cache_mutex;
std::shared_ptr<const PrimeTable> g_cache;

}  // namespace

std::shared_ptr<const PrimeTable> primes_upto(u64 limit) {
    limit = std::max<u64>(limit, 16);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    if (g_cache && g_cache->limit() >= limit) return g_cache;

    if (!g_cache) {
        g_cache = std::make_shared<PrimeTable>(limit);
        return g_cache;
    }
    // Extend by sieving only the new range; grow geometrically to amortize.
    u64 target = std::max(limit, g_cache->limit() + g_cache->limit() / 2);
    target = std::min(target, kMaxLimit);
    std::vector<u64> primes(g_cache->primes().begin(), g_cache->primes().end());
    std::vector<u64> tail = sieve_range(g_cache->limit() + 1, target);
    primes.insert(primes.end(), tail.begin(), tail.end());
    g_cache = std::make_shared<PrimeTable>(target, std::move(primes));
    return g_cache;
}

ArithmeticalList ArithmeticalList::make(unsigned r0, unsigned r) {
    if (r0 < 1 || r < 1) throw std::domain_error("ArithmeticalList: r0 and r must be >= 1");
    if (r0 > r) throw std::invalid_argument("ArithmeticalList: requires r0 <= r");
    ArithmeticalList m;
    m.kind_ = ListKind::arithmetical;
    m.r0_ = r0;
    m.r_ = r;
    return m;
}

ArithmeticalList ArithmeticalList::all_primes() { return make(1, 1); }

ArithmeticalList ArithmeticalList::from_primes(std::vector<u64> primes) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    if (!primes.empty()) {
        auto table = primes_upto(primes.back());
        for (u64 p : primes)
            if (!table->contains(p))
                throw std::invalid_argument("ArithmeticalList: " + std::to_string(p) + " is not prime");
    }
    ArithmeticalList m;
    m.kind_ = ListKind::explicit_set;
    m.explicit_primes_ = std::move(primes);
    return m;
}

ArithmeticalList ArithmeticalList::complement() const {
    ArithmeticalList m;
    m.kind_ = ListKind::complement;
    m.base_ = std::make_shared<const ArithmeticalList>(*this);
    return m;
}

ArithmeticalList ArithmeticalList::shift(unsigned j) const {
    if (kind_ != ListKind::arithmetical || r0_ != 1)
        throw std::domain_error("shift: requires an arithmetical list with r0 == 1");
    if (j >= r_) throw std::domain_error("shift: j must satisfy 0 <= j < r");
    return make(1 + j, r_);
}

unsigned ArithmeticalList::first_index() const {
    if (kind_ != ListKind::arithmetical) throw std::domain_error("first_index: list is not arithmetical");
    return r0_;
}

unsigned ArithmeticalList::reason() const {
    if (kind_ != ListKind::arithmetical) throw std::domain_error("reason: list is not arithmetical");
    return r_;
}

void ArithmeticalList::ensure(u64 bound) {
    if (bound <= bound_) return;
    switch (kind_) {
        case ListKind::arithmetical: {
            auto table = primes_upto(bound);
            auto all = table->primes();
            std::size_t n = 0;
            while (true) {
                std::size_t idx = r0_ - 1 + n * static_cast<std::size_t>(r_);
                if (idx >= all.size() || all[idx] > bound) break;
                ++n;
            }
            members_.clear();
            members_.reserve(n);
            for (std::size_t i = 0; i < n; ++i)
                members_.push_back(all[r0_ - 1 + i * static_cast<std::size_t>(r_)]);
            break;
        }
        case ListKind::explicit_set: {
            members_.clear();
            for (u64 p : explicit_primes_)
                if (p <= bound) members_.push_back(p);
            break;
        }
        case ListKind::complement: {
            ArithmeticalList base = *base_;
            base.ensure(bound);
            auto in = base.members(bound);
            auto table = primes_upto(bound);
            members_.clear();
            for (u64 p : table->primes()) {
                if (p > bound) break;
                if (!std::binary_search(in.begin(), in.end(), p)) members_.push_back(p);
            }
            break;
        }
    }
    bound_ = bound;
}

std::span<const u64> ArithmeticalList::members(u64 bound) const {
    if (bound > bound_)
        throw std::out_of_range("ArithmeticalList::members: not materialized to requested bound");
    auto end = std::upper_bound(members_.begin(), members_.end(), bound);
    return {members_.data(), static_cast<std::size_t>(end - members_.begin())};
}

bool ArithmeticalList::contains(u64 p) const {
    if (p > bound_)
        throw std::out_of_range("ArithmeticalList::contains: not materialized to requested value");
    return std::binary_search(members_.begin(), members_.end(), p);
}

std::string ArithmeticalList::describe() const {
    switch (kind_) {
        case ListKind::arithmetical:
            if (r0_ == 1 && r_ == 1) return "P";
            return "M[" + std::to_string(r0_) + ":" + std::to_string(r_) + "]";
        case ListKind::explicit_set: {
            std::string s = "{";
            for (std::size_t i = 0; i < explicit_primes_.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(explicit_primes_[i]);
            }
            return s + "}";
        }
        case ListKind::complement:
            return "P-" + base_->describe();
    }
    return "?";
}

ArithmeticalList make_list(unsigned r0, unsigned r, u64 bound) {
    if (bound < 2) throw std::domain_error("make_list: bound must be >= 2");
    ArithmeticalList m = ArithmeticalList::make(r0, r);
    m.ensure(bound);
    return m;
}

ArithmeticalList shift_list(const ArithmeticalList& m, unsigned j, u64 bound) {
    ArithmeticalList s = m.shift(j);
    s.ensure(bound);
    return s;
}

}  // namespace popzeta
