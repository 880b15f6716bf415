#include "eulerian/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eulerian {

Perm::Perm(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : entries_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("Perm: entries are not a rearrangement of 1.." +
                                        std::to_string(n));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

namespace {

int ascents_of(const std::vector<int>& p) {
    int count = 0;
    for (std::size_t j = 1; j < p.size(); ++j) {
        if (p[j - 1] < p[j]) ++count;
    }
    return count;
}

int maj_of(const std::vector<int>& p) {
    int sum = 0;
    for (std::size_t j = 1; j < p.size(); ++j) {
        if (p[j - 1] > p[j]) sum += static_cast<int>(j);
    }
    return sum;
}

int amaj_of(const std::vector<int>& p) {
    int sum = 0;
    for (std::size_t j = 1; j < p.size(); ++j) {
        if (p[j - 1] < p[j]) sum += static_cast<int>(j);
    }
    return sum;
}

void require_within_bound(int n, int bound, const char* what) {
    if (n < 1) {
        throw std::invalid_argument(std::string(what) + ": n must be positive");
    }
    if (n > bound) {
        throw ResourceError(std::string(what) + ": n = " + std::to_string(n) +
                            " exceeds the enumeration bound " + std::to_string(bound));
    }
}

}  // namespace

int ascent_count(const Perm& p) { return ascents_of(p.entries()); }

int descent_count(const Perm& p) { return p.size() - 1 - ascents_of(p.entries()); }

int major_index(const Perm& p) { return maj_of(p.entries()); }

int ascent_major_index(const Perm& p) { return amaj_of(p.entries()); }

std::vector<long long> eulerian_by_enumeration(int n, int bound) {
    require_within_bound(n, bound, "eulerian_by_enumeration");
    std::vector<long long> counts(static_cast<std::size_t>(n), 0);
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    // Iterative lexicographic generation over all n! rearrangements.
    do {
        ++counts[static_cast<std::size_t>(ascents_of(p))];
    } while (std::next_permutation(p.begin(), p.end()));
    return counts;
}

long long MajAscentTable::at(int k, int i) const {
    if (k < 0 || k >= static_cast<int>(counts_.size())) return 0;
    const auto& row = counts_[static_cast<std::size_t>(k)];
    if (i < 0 || i >= static_cast<int>(row.size())) return 0;
    return row[static_cast<std::size_t>(i)];
}

MajAscentTable maj_ascent_table(int n, int bound) {
    require_within_bound(n, bound, "maj_ascent_table");
    const int max_maj = n * (n - 1) / 2;
    std::vector<std::vector<long long>> counts(
        static_cast<std::size_t>(n),
        std::vector<long long>(static_cast<std::size_t>(max_maj) + 1, 0));
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
        counts[static_cast<std::size_t>(ascents_of(p))][static_cast<std::size_t>(maj_of(p))] += 1;
    } while (std::next_permutation(p.begin(), p.end()));
    return MajAscentTable(n, std::move(counts));
}

Poly direct_weighted_sum(const Progression& prog, int n, long m, int start) {
    if (n < 0) {
        throw std::invalid_argument("direct_weighted_sum: n must be nonnegative");
    }
    Poly sum;
    for (long i = start; i <= m; ++i) {
        sum += Poly::monomial(rat_pow(prog.term(i), static_cast<unsigned long>(n)),
                              static_cast<std::size_t>(i));
    }
    return sum;
}

}  // namespace eulerian
