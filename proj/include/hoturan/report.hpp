#pragma once

// Per-n verdict reports and the ordered parallel range runner.

#include "hoturan/sign.hpp"

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hoturan {

enum class Verdict { Holds, Fails, Undecided };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Undecided: return "undecided";
    }
    return "?";
}

/// Verdict for the claim "value > 0".
inline Verdict positive_verdict(SignVerdict s)
{
    switch (s) {
    case SignVerdict::Positive: return Verdict::Holds;
    case SignVerdict::Negative:
    case SignVerdict::Zero: return Verdict::Fails;
    case SignVerdict::Undecided: return Verdict::Undecided;
    }
    return Verdict::Undecided;
}

/// Fails dominates Undecided dominates Holds.
inline Verdict combine(Verdict a, Verdict b)
{
    if (a == Verdict::Fails || b == Verdict::Fails)
        return Verdict::Fails;
    if (a == Verdict::Undecided || b == Verdict::Undecided)
        return Verdict::Undecided;
    return Verdict::Holds;
}

struct VerdictEntry {
    Index n = 0;
    Verdict verdict = Verdict::Undecided;
    std::optional<RatInterval> margin; ///< enclosure of the slack; positive when the claim holds
    std::string note;
};

struct ReportSummary {
    std::size_t holds = 0, fails = 0, undecided = 0;
};

/// Ordered, append-only list of per-n verdicts for one named inequality.
class InequalityReport {
public:
    InequalityReport() = default;
    InequalityReport(std::string name, Index n_lo, Index n_hi, unsigned precision_bits)
        : name_(std::move(name)), n_lo_(n_lo), n_hi_(n_hi), bits_(precision_bits)
    {
    }

    const std::string& name() const { return name_; }
    Index n_lo() const { return n_lo_; }
    Index n_hi() const { return n_hi_; }
    unsigned precision_bits() const { return bits_; }
    const std::vector<VerdictEntry>& verdicts() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    void append(VerdictEntry e)
    {
        Index expected = entries_.empty() ? n_lo_ : entries_.back().n + 1;
        if (e.n != expected || e.n > n_hi_)
            throw std::logic_error("InequalityReport: out-of-order entry for n=" + std::to_string(e.n));
        entries_.push_back(std::move(e));
    }

    ReportSummary summary() const
    {
        ReportSummary s;
        for (const auto& e : entries_) {
            switch (e.verdict) {
            case Verdict::Holds: ++s.holds; break;
            case Verdict::Fails: ++s.fails; break;
            case Verdict::Undecided: ++s.undecided; break;
            }
        }
        return s;
    }

    bool all_hold() const
    {
        auto s = summary();
        return s.fails == 0 && s.undecided == 0;
    }

    /// Complete when there is one verdict per n in range.
    bool complete() const { return static_cast<Index>(entries_.size()) == std::max<Index>(0, n_hi_ - n_lo_ + 1); }

    double wall_time_ms = 0;

private:
    std::string name_;
    Index n_lo_ = 0, n_hi_ = -1;
    unsigned bits_ = kDefaultBits;
    std::vector<VerdictEntry> entries_;
};

/// Precision schedule shared by every certified check.
struct CheckOptions {
    Precision precision{kDefaultBits};
    unsigned max_bits = kMaxBits;
    unsigned parallelism = 1;
};

/// Evaluates check(n) for n in [lo, hi] on a worker pool; the report is in
/// ascending n regardless of completion order. An empty range (lo > hi)
/// yields an empty report.
template <class Check>
InequalityReport run_range(std::string name, Index lo, Index hi, const CheckOptions& opts, Check&& check)
{
    InequalityReport report(std::move(name), lo, hi, opts.precision.bits());
    if (lo > hi)
        return report;
    const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    std::vector<VerdictEntry> slots(count);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                VerdictEntry e = check(lo + static_cast<Index>(i));
                e.n = lo + static_cast<Index>(i);
                slots[i] = std::move(e);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure)
                    failure = std::current_exception();
                next.store(count);
                return;
            }
        }
    };

    unsigned threads = std::max(1u, opts.parallelism);
    if (threads == 1 || count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads && t < count; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    for (auto& e : slots)
        report.append(std::move(e));
    return report;
}

} // namespace hoturan
