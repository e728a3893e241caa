#pragma once

// Command dispatch for the hoturan tool. Parsing of argv lives in
// tools/hoturan.cpp; everything here works on a RunConfig so it can be
// driven from tests.

#include "hoturan/cache.hpp"
#include "hoturan/jensen.hpp"
#include "hoturan/verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <ostream>
#include <string>

namespace hoturan {

enum class Command { Partition, BuildCache, Verify, Thresholds, Jensen, Coeffs };
enum class OutputFormat { Text, Json, Csv };

namespace exit_code {
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kUndecided = 2;
inline constexpr int kUsage = 3;
} // namespace exit_code

struct RunConfig {
    Command command = Command::Verify;
    std::string name;  ///< verification name or expansion target
    Index n = 0;       ///< partition
    Index from = 0, to = 0;
    unsigned m = 3;    ///< jensen degree
    unsigned precision_bits = kDefaultBits;
    unsigned max_bits = kMaxBits;
    std::string cache_path = "./pcache.txt";
    OutputFormat output_format = OutputFormat::Text;
    unsigned parallelism = 1;
    bool full_validate = false;
    bool color = false;
};

inline std::optional<OutputFormat> parse_format(const std::string& s)
{
    if (s == "text")
        return OutputFormat::Text;
    if (s == "json")
        return OutputFormat::Json;
    if (s == "csv")
        return OutputFormat::Csv;
    return std::nullopt;
}

class UsageError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline void validate(const RunConfig& c)
{
    if (c.precision_bits < kMinBits || c.precision_bits > kMaxBits)
        throw UsageError("--precision must be in [8, 4096]");
    if (c.max_bits < c.precision_bits || c.max_bits > kMaxBits)
        throw UsageError("--max-bits must be in [precision, 4096]");
    if (c.parallelism < 1)
        throw UsageError("-j must be >= 1");
    if (c.command == Command::Verify && c.from > c.to)
        throw UsageError("--from must not exceed --to");
    if ((c.command == Command::Partition && c.n < 0) || (c.command == Command::BuildCache && c.to < 0))
        throw UsageError("index must be >= 0");
}

inline CheckOptions check_options(const RunConfig& c)
{
    CheckOptions o;
    o.precision = Precision(c.precision_bits);
    o.max_bits = c.max_bits;
    o.parallelism = c.parallelism;
    return o;
}

/// Table from the cache file when present, otherwise computed.
inline PartitionTable acquire_table(const RunConfig& c, Index need)
{
    PartitionTable t;
    if (!c.cache_path.empty() && std::filesystem::exists(c.cache_path)) {
        CacheLoadOptions lo;
        lo.full_validation = c.full_validate;
        t = load_cache(c.cache_path, lo);
    }
    if (t.max_index() < need)
        t.extend_to(need);
    return t;
}

inline int exit_status(const InequalityReport& r)
{
    auto s = r.summary();
    if (s.fails)
        return exit_code::kFails;
    if (s.undecided)
        return exit_code::kUndecided;
    return exit_code::kHolds;
}

namespace detail {

inline std::string paint(const RunConfig& c, Verdict v)
{
    std::string s = to_string(v);
    if (!c.color)
        return s;
    const char* code = v == Verdict::Holds ? "32" : v == Verdict::Fails ? "31" : "33";
    return std::string("\033[") + code + "m" + s + "\033[0m";
}

inline unsigned retry_bits(const RunConfig& c) { return std::min(kMaxBits, std::max(c.max_bits, c.precision_bits) * 2); }

} // namespace detail

inline nlohmann::ordered_json report_json(const InequalityReport& r, const RunConfig& c)
{
    using json = nlohmann::ordered_json;
    json verdicts = json::array();
    for (const auto& e : r.verdicts()) {
        json v = {{"n", e.n}, {"verdict", to_string(e.verdict)}};
        if (e.margin) {
            v["margin_lo"] = to_scientific_directed(e.margin->lo(), false);
            v["margin_hi"] = to_scientific_directed(e.margin->hi(), true);
        }
        if (!e.note.empty())
            v["note"] = e.note;
        verdicts.push_back(std::move(v));
    }
    auto s = r.summary();
    json out = {{"name", r.name()},
                {"range", {r.n_lo(), r.n_hi()}},
                {"precision_bits", r.precision_bits()},
                {"verdicts", std::move(verdicts)},
                {"summary", {{"holds", s.holds}, {"fails", s.fails}, {"undecided", s.undecided}}},
                {"wall_time_ms", r.wall_time_ms}};
    if (s.undecided)
        out["retry_precision_bits"] = detail::retry_bits(c);
    return out;
}

inline void write_report(const InequalityReport& r, const RunConfig& c, std::ostream& out)
{
    switch (c.output_format) {
    case OutputFormat::Json:
        out << report_json(r, c).dump(2) << "\n";
        return;
    case OutputFormat::Csv:
        out << "n,verdict,margin_lo,margin_hi\n";
        for (const auto& e : r.verdicts()) {
            out << e.n << "," << to_string(e.verdict) << ",";
            if (e.margin)
                out << to_scientific_directed(e.margin->lo(), false) << ","
                    << to_scientific_directed(e.margin->hi(), true);
            else
                out << ",";
            out << "\n";
        }
        return;
    case OutputFormat::Text: {
        auto s = r.summary();
        for (const auto& e : r.verdicts()) {
            if (e.verdict == Verdict::Holds && e.note.empty())
                continue;
            out << "  n=" << e.n << " " << detail::paint(c, e.verdict);
            if (e.margin)
                out << " margin in [" << to_scientific_directed(e.margin->lo(), false, 8) << ", "
                    << to_scientific_directed(e.margin->hi(), true, 8) << "]";
            if (!e.note.empty())
                out << " (" << e.note << ")";
            out << "\n";
        }
        out << r.name() << " n=" << r.n_lo() << ".." << r.n_hi() << " at " << r.precision_bits()
            << " bits: " << s.holds << " holds, " << s.fails << " fails, " << s.undecided << " undecided\n";
        if (s.undecided)
            out << "retry with --max-bits " << detail::retry_bits(c) << "\n";
        return;
    }
    }
}

/// {k, coefficient: {pi power: rational}} for every nonzero coefficient.
inline nlohmann::ordered_json coefficients_json(const XPoly& f)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (long k = f.valuation(); k <= f.degree(); ++k) {
        const PiNumber& c = f.coeff(k);
        if (c.is_zero())
            continue;
        nlohmann::ordered_json m = nlohmann::ordered_json::object();
        for (long j = 0; j <= c.degree(); ++j)
            if (c.coeff(j) != 0)
                m[std::to_string(j)] = c.coeff(j).get_str();
        arr.push_back({{"k", k}, {"coefficient", std::move(m)}});
    }
    return arr;
}

namespace detail {

inline int cmd_verify(const RunConfig& c, std::ostream& out)
{
    const Verification* v = find_verification(c.name);
    if (!v)
        throw UnknownVerification(c.name);
    if (c.from < v->min_n)
        throw UsageError(c.name + ": --from must be >= " + std::to_string(v->min_n));
    PartitionTable t = acquire_table(c, c.to + v->table_ahead);
    auto r = run_verification(c.name, c.from, c.to, t, check_options(c));
    write_report(r, c, out);
    return exit_status(r);
}

inline void write_threshold(const ThresholdResult& r, const RunConfig& c, std::ostream& out)
{
    if (c.output_format == OutputFormat::Json) {
        nlohmann::ordered_json j = {{"name", r.name},
                            {"range", {r.n_lo, r.n_max}},
                            {"threshold", r.found() ? nlohmann::ordered_json(r.threshold) : nlohmann::ordered_json(nullptr)},
                            {"failures", r.failures},
                            {"label", r.label()}};
        out << j.dump(2) << "\n";
    } else if (c.output_format == OutputFormat::Csv) {
        out << "name,threshold,n_max,failures\n"
            << r.name << "," << (r.found() ? std::to_string(r.threshold) : "") << "," << r.n_max << ","
            << r.failures.size() << "\n";
    } else {
        if (r.found())
            out << r.name << ": holds for " << r.threshold << " <= n <= " << r.n_max;
        else
            out << r.name << ": fails at n_max=" << r.n_max;
        out << " (" << r.label() << ")";
        if (!r.failures.empty())
            out << "; last failure n=" << r.failures.back() << ", " << r.failures.size() << " failures in total";
        out << "\n";
    }
}

inline int cmd_thresholds(const RunConfig& c, std::ostream& out)
{
    const Verification* v = find_verification(c.name);
    if (!v)
        throw UnknownVerification(c.name);
    if (c.to < v->min_n)
        throw UsageError(c.name + ": --to must be >= " + std::to_string(v->min_n));
    PartitionTable t = acquire_table(c, c.to + v->table_ahead);
    ThresholdResult r = run_threshold(c.name, c.to, t, check_options(c));
    write_threshold(r, c, out);
    return r.found() ? exit_code::kHolds : exit_code::kFails;
}

inline int cmd_jensen(const RunConfig& c, std::ostream& out)
{
    if (c.m < 2 || c.m > 8)
        throw UsageError("--m must be in [2, 8]");
    if (c.to < 0)
        throw UsageError("--to must be >= 0");
    PartitionTable t = acquire_table(c, c.to + c.m);
    JensenThreshold r = find_N_of_m(c.m, c.to, t, check_options(c));
    if (c.output_format == OutputFormat::Json) {
        nlohmann::ordered_json j = {{"m", r.m},
                            {"n_max", r.n_max},
                            {"N", r.conclusive ? nlohmann::ordered_json(r.N) : nlohmann::ordered_json(nullptr)},
                            {"failures", r.failures},
                            {"label", r.label()}};
        out << j.dump(2) << "\n";
    } else if (c.output_format == OutputFormat::Csv) {
        out << "m,N,n_max,failures\n"
            << r.m << "," << (r.conclusive ? std::to_string(r.N) : "") << "," << r.n_max << "," << r.failures.size()
            << "\n";
    } else {
        out << "N(" << r.m << ") = ";
        if (r.conclusive)
            out << r.N;
        else
            out << "none";
        out << " (" << r.label() << ")";
        if (!r.failures.empty())
            out << "; " << r.failures.size() << " shifts below N are not real-rooted";
        out << "\n";
    }
    return r.conclusive ? exit_code::kHolds : exit_code::kFails;
}

inline int cmd_coeffs(const RunConfig& c, std::ostream& out)
{
    auto which = parse_expansion(c.name);
    if (!which)
        throw UsageError("unknown expansion '" + c.name + "'; valid: sec3, sec4-lemma, sec4-gamma");
    const HGPair& hg = expand_HG(*which);
    if (c.output_format == OutputFormat::Text) {
        auto dump = [&](const char* label, const XPoly& f) {
            for (long k = f.degree(); k >= f.valuation(); --k)
                if (!f.coeff(k).is_zero())
                    out << label << "_" << k << " = " << to_string(f.coeff(k)) << "\n";
        };
        dump("H", hg.H);
        if (!hg.G.is_zero())
            dump("G", hg.G);
    } else if (c.output_format == OutputFormat::Csv) {
        out << "poly,k,pi_power,coefficient\n";
        auto dump = [&](const char* label, const XPoly& f) {
            for (long k = f.valuation(); k <= f.degree(); ++k)
                for (long j = 0; j <= f.coeff(k).degree(); ++j)
                    if (f.coeff(k).coeff(j) != 0)
                        out << label << "," << k << "," << j << "," << f.coeff(k).coeff(j).get_str() << "\n";
        };
        dump("H", hg.H);
        if (!hg.G.is_zero())
            dump("G", hg.G);
    } else {
        nlohmann::ordered_json j = {{"name", c.name}, {"H", coefficients_json(hg.H)}};
        if (!hg.G.is_zero())
            j["G"] = coefficients_json(hg.G);
        out << j.dump(2) << "\n";
    }
    return exit_code::kHolds;
}

} // namespace detail

/// Executes one command; returns the process exit status.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    try {
        validate(c);
        switch (c.command) {
        case Command::Partition: {
            PartitionTable t = acquire_table(c, c.n);
            out << t.at(c.n) << "\n";
            return exit_code::kHolds;
        }
        case Command::BuildCache: {
            PartitionTable t(c.to);
            save_cache(t, c.cache_path);
            out << "wrote p(0.." << c.to << ") to " << c.cache_path << "\n";
            return exit_code::kHolds;
        }
        case Command::Verify: return detail::cmd_verify(c, out);
        case Command::Thresholds: return detail::cmd_thresholds(c, out);
        case Command::Jensen: return detail::cmd_jensen(c, out);
        case Command::Coeffs: return detail::cmd_coeffs(c, out);
        }
    } catch (const UndecidedError& e) {
        err << "undecided: " << e.what() << " (try --max-bits " << detail::retry_bits(c) << ")\n";
        return exit_code::kUndecided;
    } catch (const CacheError& e) {
        err << "cache error: " << e.what() << "\n";
        return exit_code::kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kUsage;
    }
    return exit_code::kUsage;
}

} // namespace hoturan
