#pragma once

// Exact partition numbers p(n).
//
// The production path is Euler's pentagonal-number recurrence
//   p(n) = sum_{k>=1} (-1)^(k+1) [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ].
// brute_force_partition() is an independent oracle (dynamic programming over
// the largest part) used only by tests.

#include "hoturan/numeric.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hoturan {

class PartitionTable {
public:
    PartitionTable() : values_{Integer(1)} {}

    /// Builds p(0..max_index).
    explicit PartitionTable(Index max_index) : PartitionTable() { extend_to(max_index); }

    /// Adopts externally supplied values (e.g. from a cache); the caller is
    /// responsible for validation.
    static PartitionTable from_values(std::vector<Integer> values)
    {
        if (values.empty())
            throw std::invalid_argument("PartitionTable: empty value list");
        PartitionTable t;
        t.values_ = std::move(values);
        return t;
    }

    Index max_index() const { return static_cast<Index>(values_.size()) - 1; }
    const std::vector<Integer>& values() const { return values_; }

    /// p(n) for n <= max_index(); never mutates.
    const Integer& at(Index n) const
    {
        if (n < 0 || n > max_index())
            throw std::out_of_range("PartitionTable: index " + std::to_string(n) + " beyond table (max " +
                                    std::to_string(max_index()) + ")");
        return values_[static_cast<std::size_t>(n)];
    }
    const Integer& operator[](Index n) const { return at(n); }

    void extend_to(Index n)
    {
        if (n <= max_index())
            return;
        values_.reserve(static_cast<std::size_t>(n) + 1);
        for (Index m = max_index() + 1; m <= n; ++m)
            values_.push_back(recurrence_value(m));
    }

    /// Right-hand side of the pentagonal recurrence at m, from stored p(0..m-1).
    Integer recurrence_value(Index m) const
    {
        Integer acc = 0;
        for (Index k = 1;; ++k) {
            Index g1 = k * (3 * k - 1) / 2;
            if (g1 > m)
                break;
            Index g2 = k * (3 * k + 1) / 2;
            const bool plus = (k % 2) == 1;
            const Integer& a = values_[static_cast<std::size_t>(m - g1)];
            if (plus)
                acc += a;
            else
                acc -= a;
            if (g2 <= m) {
                const Integer& b = values_[static_cast<std::size_t>(m - g2)];
                if (plus)
                    acc += b;
                else
                    acc -= b;
            }
        }
        return acc;
    }

    /// Whether the stored p(m) matches the recurrence (m = 0 must be 1).
    bool satisfies_recurrence(Index m) const
    {
        if (m == 0)
            return values_[0] == 1;
        return values_[static_cast<std::size_t>(m)] == recurrence_value(m);
    }

    friend bool operator==(const PartitionTable& a, const PartitionTable& b) { return a.values_ == b.values_; }

private:
    std::vector<Integer> values_;
};

/// Exact p(n); grows the table as needed.
inline const Integer& partition(Index n, PartitionTable& table)
{
    if (n < 0)
        throw std::invalid_argument("partition: negative index");
    table.extend_to(n);
    return table.at(n);
}

inline constexpr Index kBruteForceCap = 200;

/// Independent oracle: counts partitions by dynamic programming over the
/// largest allowed part.
inline Integer brute_force_partition(Index n, Index cap = kBruteForceCap)
{
    if (n < 0)
        throw std::invalid_argument("brute_force_partition: negative index");
    if (n > cap)
        throw std::invalid_argument("brute_force_partition: n=" + std::to_string(n) + " exceeds cap " +
                                    std::to_string(cap));
    std::vector<Integer> ways(static_cast<std::size_t>(n) + 1, Integer(0));
    ways[0] = 1;
    for (Index part = 1; part <= n; ++part)
        for (Index total = part; total <= n; ++total)
            ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - part)];
    return ways[static_cast<std::size_t>(n)];
}

} // namespace hoturan
