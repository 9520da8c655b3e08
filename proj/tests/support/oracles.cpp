#include "oracles.hpp"

#include <algorithm>

namespace bipart::testing {

namespace {

void walk(int remaining, int max_part, Partition& current,
          const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        walk(remaining - part, part, current, visit);
        current.pop_back();
    }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
    Partition current;
    walk(n, n, current, visit);
}

std::uint64_t count_partitions(int n) {
    std::uint64_t count = 0;
    for_each_partition(n, [&](const Partition&) { ++count; });
    return count;
}

int crank_of(const Partition& parts) {
    const auto ones = static_cast<int>(std::count(parts.begin(), parts.end(), 1));
    if (ones == 0) return parts.empty() ? 0 : parts.front();
    const auto larger = static_cast<int>(
        std::count_if(parts.begin(), parts.end(), [ones](int p) { return p > ones; }));
    return larger - ones;
}

std::map<int, std::uint64_t> crank_histogram(int n) {
    std::map<int, std::uint64_t> hist;
    for_each_partition(n, [&](const Partition& p) { ++hist[crank_of(p)]; });
    return hist;
}

std::uint64_t count_steady_pairs_by_partitions(int m, int n) {
    std::vector<Partition> alphas;
    std::vector<Partition> betas;
    for_each_partition(m, [&](const Partition& p) { alphas.push_back(p); });
    for_each_partition(n, [&](const Partition& p) { betas.push_back(p); });
    std::uint64_t count = 0;
    for (const Partition& a : alphas) {
        for (const Partition& b : betas) {
            const std::size_t len = std::max(a.size(), b.size());
            auto at = [](const Partition& p, std::size_t i) { return i < p.size() ? p[i] : 0; };
            bool ok = true;
            for (std::size_t i = 0; ok && i + 1 < len; ++i) {
                ok = std::min(at(a, i), at(b, i)) >= std::max(at(a, i + 1), at(b, i + 1));
            }
            if (ok) ++count;
        }
    }
    return count;
}

std::vector<std::int64_t> finite_euler_product(int step, int order) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(order) + 1, 0);
    out[0] = 1;
    for (int e = step; e <= order; e += step) {
        std::vector<std::int64_t> next = out;
        for (int k = e; k <= order; ++k) next[static_cast<std::size_t>(k)] -= out[static_cast<std::size_t>(k - e)];
        out = std::move(next);
    }
    return out;
}

BigSeries random_series(std::mt19937_64& rng, std::size_t order, bool unit_constant) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    BigSeries s(order);
    for (std::size_t j = 0; j <= order; ++j) s[j] = coeff(rng);
    if (unit_constant) s[0] = (rng() & 1) ? 1 : -1;
    return s;
}

}  // namespace bipart::testing
