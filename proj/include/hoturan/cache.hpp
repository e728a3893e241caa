#pragma once

// On-disk partition table cache.
//
// Format (UTF-8 text): one record per line, "n<TAB>p(n)" with n contiguous
// from 0, followed by a final line "#sha256:<hex>" holding the SHA-256 digest
// of every preceding byte.

#include "hoturan/partition.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hoturan {

class CacheError : public std::runtime_error {
public:
    CacheError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "cache line " + std::to_string(line) + ": " + what : "cache: " + what),
          line_(line)
    {
    }
    /// 1-based line number, 0 when the failure is not tied to a line.
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

inline std::string sha256_hex(std::string_view bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256: digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

inline std::string serialize_cache(const PartitionTable& table)
{
    std::string body;
    for (Index n = 0; n <= table.max_index(); ++n) {
        body += std::to_string(n);
        body += '\t';
        body += table.at(n).get_str();
        body += '\n';
    }
    return body + "#sha256:" + sha256_hex(body) + "\n";
}

inline void save_cache(const PartitionTable& table, const std::string& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw CacheError(0, "cannot open " + path + " for writing");
    out << serialize_cache(table);
    if (!out)
        throw CacheError(0, "write failed for " + path);
}

struct CacheLoadOptions {
    bool full_validation = false; ///< re-check the recurrence at every index
    std::size_t sample_size = 64; ///< random indices checked otherwise (plus the last one)
};

inline PartitionTable parse_cache(std::string_view text, const CacheLoadOptions& opts = {})
{
    if (text.empty())
        throw CacheError(0, "empty cache file");

    std::vector<Integer> values;
    std::size_t pos = 0, line_no = 0;
    bool have_digest = false;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::size_t end = eol == std::string_view::npos ? text.size() : eol;
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        if (have_digest)
            throw CacheError(line_no, "content after checksum line");
        if (line.starts_with("#sha256:")) {
            std::string expected(line.substr(8));
            std::string actual = sha256_hex(text.substr(0, pos));
            if (expected != actual)
                throw CacheError(line_no, "checksum mismatch");
            have_digest = true;
        } else {
            std::size_t tab = line.find('\t');
            if (tab == std::string_view::npos || tab == 0 || tab + 1 == line.size())
                throw CacheError(line_no, "malformed record (expected n<TAB>value)");
            std::string idx(line.substr(0, tab)), val(line.substr(tab + 1));
            if (!std::all_of(idx.begin(), idx.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
                !std::all_of(val.begin(), val.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw CacheError(line_no, "malformed record (non-digit characters)");
            if (idx != std::to_string(values.size()))
                throw CacheError(line_no, "non-contiguous index " + idx + " (expected " +
                                              std::to_string(values.size()) + ")");
            values.emplace_back(val);
            if (values.back() <= 0 || (values.size() > 1 && values.back() < values[values.size() - 2]))
                throw CacheError(line_no, "value not positive and nondecreasing");
        }
        pos = end + 1;
    }
    if (!have_digest)
        throw CacheError(line_no, "missing #sha256 checksum line");
    if (values.empty())
        throw CacheError(0, "empty table");

    PartitionTable table = PartitionTable::from_values(std::move(values));
    const Index last = table.max_index();

    std::set<Index> check;
    if (opts.full_validation || static_cast<std::size_t>(last) + 1 <= opts.sample_size + 1) {
        for (Index n = 0; n <= last; ++n)
            check.insert(n);
    } else {
        // Deterministic sample so repeated loads agree.
        std::mt19937_64 rng(static_cast<std::uint64_t>(last) * 0x9e3779b97f4a7c15ULL + 1);
        std::uniform_int_distribution<Index> pick(0, last);
        check.insert(0);
        check.insert(last);
        while (check.size() < opts.sample_size + 2)
            check.insert(pick(rng));
    }
    for (Index n : check)
        if (!table.satisfies_recurrence(n))
            throw CacheError(static_cast<std::size_t>(n) + 1,
                             "recurrence validation failed at n=" + std::to_string(n));
    return table;
}

inline PartitionTable load_cache(const std::string& path, const CacheLoadOptions& opts = {})
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CacheError(0, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_cache(ss.str(), opts);
}

} // namespace hoturan
