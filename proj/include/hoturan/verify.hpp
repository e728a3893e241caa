#pragma once

// Named registry of per-n checks, shared by the CLI and the acceptance suite.

#include "hoturan/hrr.hpp"
#include "hoturan/proof.hpp"
#include "hoturan/turan.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hoturan {

using NamedCheck = std::function<VerdictEntry(Index, const PartitionTable&, const CheckOptions&)>;

struct Verification {
    std::string name;
    Index min_n = 1;
    Index table_ahead = 0; ///< p(n + table_ahead) must be available
    std::string summary;
    NamedCheck check;
};

inline const std::vector<Verification>& verifications()
{
    using T = const PartitionTable&;
    using O = const CheckOptions&;
    static const std::vector<Verification> all = {
        {"log-concave", 1, 1, "u(n) < 1", [](Index n, T t, O) { return log_concave_check(n, t); }},
        {"higher-turan", 1, 2, "4(1-u_n)(1-u_{n+1}) - (1-u_n u_{n+1})^2 > 0",
         [](Index n, T t, O) { return higher_turan_check(n, t); }},
        {"theorem13", 1, 2, "same inequality, rational form", [](Index n, T t, O) { return theorem13_check(n, t); }},
        {"sandwich", 1, 0, "B1(n) < p(n) < B2(n)", [](Index n, T t, O o) { return sandwich_check(n, t, o); }},
        {"fg-bounds", 2, 1, "f(n) < u_n < g(n)", [](Index n, T t, O o) { return fg_check(n, t, o); }},
        {"theorem31", 2, 0, "g(n+1) < f(n) + 110/mu(n-1)^5", [](Index n, T, O o) { return theorem31_check(n, o); }},
        {"t-factor", 2, 0, "-e^{w+y-2z} t1 + e^{x-2y+z} t2 + 110 t3 > 0",
         [](Index n, T, O o) { return t_factor_positivity(n, o); }},
        {"theorem41", 2, 1, "f(n) + 110/mu(n-1)^5 < Q(u_n)",
         [](Index n, T t, O o) { return theorem41_check(n, t, o); }},
        {"chain", 1, 2, "u_n < u_{n+1} < Q(u_n)", [](Index n, T t, O o) { return chain_check(n, t, o); }},
        {"chain-left", 1, 2, "u_n < u_{n+1}", [](Index n, T t, O) { return chain_left_check(n, t); }},
        {"dp", 2, 1, "pi/sqrt(24 n^3) > 1/u_n - 1", [](Index n, T t, O o) { return desalvo_pak_check(n, t, o); }},
        {"dp-weak", 2, 1, "(1 + 1/n) u_n > 1",
         [](Index n, T t, O) { return desalvo_pak_weak_check(n, t); }},
        {"conjecture2", 2, 2, "4(1-u_n)(1-u_{n+1}) < (1 + pi/sqrt(24 n^3))(1 - u_n u_{n+1})^2",
         [](Index n, T t, O o) { return conjecture2_check(n, t, o); }},
        {"lemma42", 4, 0, "f(n) < H/G < 1 (and the golden range once x >= 134)",
         [](Index n, T, O o) { return lemma42_check(n, o); }},
        {"eta", 2, 0, "eta bounds at x = mu(n-1)", [](Index n, T, O o) { return eta_check(n, o); }},
        {"series", 2, 0, "truncated series sandwich at x = mu(n-1)", [](Index n, T, O o) { return series_check(n, o); }},
        {"taylor", 1, 0, "phi(t) < e^t < Phi(t) at t = -n/10", [](Index n, T, O o) { return taylor_check(n, o); }},
    };
    return all;
}

inline const Verification* find_verification(const std::string& name)
{
    for (const auto& v : verifications())
        if (v.name == name)
            return &v;
    return nullptr;
}

inline std::string verification_names()
{
    std::string out;
    for (const auto& v : verifications()) {
        if (!out.empty())
            out += ", ";
        out += v.name;
    }
    return out;
}

class UnknownVerification : public std::invalid_argument {
public:
    explicit UnknownVerification(const std::string& name)
        : std::invalid_argument("unknown verification '" + name + "'; valid names: " + verification_names())
    {
    }
};

/// Runs `name` over [from, to]; the table is extended as needed.
inline InequalityReport run_verification(const std::string& name, Index from, Index to, PartitionTable& table,
                                         const CheckOptions& opts = {})
{
    const Verification* v = find_verification(name);
    if (!v)
        throw UnknownVerification(name);
    if (from < v->min_n)
        throw std::invalid_argument(name + ": range must start at n >= " + std::to_string(v->min_n));
    if (from > to)
        throw std::invalid_argument(name + ": empty range (from > to)");
    if (table.max_index() < to + v->table_ahead)
        table.extend_to(to + v->table_ahead);
    const PartitionTable& t = table;
    auto start = std::chrono::steady_clock::now();
    InequalityReport r = run_range(name, from, to, opts, [&](Index n) { return v->check(n, t, opts); });
    r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// First index from which `name` holds up to `to`, scanning from its minimum n.
inline ThresholdResult run_threshold(const std::string& name, Index to, PartitionTable& table,
                                     const CheckOptions& opts = {})
{
    const Verification* v = find_verification(name);
    if (!v)
        throw UnknownVerification(name);
    return threshold_from_report(run_verification(name, v->min_n, to, table, opts));
}

} // namespace hoturan
