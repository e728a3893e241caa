#include "hoturan/cache.hpp"
#include "hoturan/partition.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <unistd.h>

using namespace hoturan;

namespace {

// Literal enumeration of nonincreasing sequences, for small n only.
long enumerate_partitions(long remaining, long max_part)
{
    if (remaining == 0)
        return 1;
    long count = 0;
    for (long part = std::min(remaining, max_part); part >= 1; --part)
        count += enumerate_partitions(remaining - part, part);
    return count;
}

std::string temp_path(const std::string& stem)
{
    return (std::filesystem::temp_directory_path() / (stem + "_" + std::to_string(::getpid()) + ".txt")).string();
}

std::string with_digest(const std::string& body) { return body + "#sha256:" + sha256_hex(body) + "\n"; }

} // namespace

TEST(BruteForce, MatchesEnumeration)
{
    for (long n = 0; n <= 30; ++n)
        EXPECT_EQ(brute_force_partition(n), enumerate_partitions(n, n)) << "n=" << n;
}

TEST(BruteForce, SmallValues)
{
    EXPECT_EQ(brute_force_partition(4), 5);
    EXPECT_EQ(brute_force_partition(1), 1);
    EXPECT_EQ(brute_force_partition(10), 42);
}

TEST(BruteForce, RejectsBeyondCap)
{
    EXPECT_THROW(brute_force_partition(201), std::invalid_argument);
    EXPECT_NO_THROW(brute_force_partition(200));
}

TEST(Partition, Examples)
{
    PartitionTable t;
    EXPECT_EQ(partition(0, t), 1);
    EXPECT_EQ(partition(5, t), enumerate_partitions(5, 5));
    EXPECT_EQ(partition(5, t), 7);
    // Frozen from the dynamic-programming oracle.
    EXPECT_EQ(brute_force_partition(100), Integer("190569292"));
    EXPECT_EQ(partition(100, t), Integer("190569292"));
    EXPECT_EQ(t.max_index(), 100);
}

TEST(Partition, AgreesWithOracleTo200)
{
    PartitionTable t(200);
    for (Index n = 0; n <= 200; ++n)
        ASSERT_EQ(t.at(n), brute_force_partition(n)) << "n=" << n;
}

TEST(Partition, TableInvariants)
{
    PartitionTable t(2000);
    EXPECT_EQ(t.at(0), 1);
    for (Index n = 1; n <= t.max_index(); ++n) {
        ASSERT_GT(t.at(n), 0);
        ASSERT_GE(t.at(n), t.at(n - 1));
        ASSERT_TRUE(t.satisfies_recurrence(n));
    }
}

TEST(Partition, Deterministic)
{
    PartitionTable a(3000), b;
    b.extend_to(1500);
    b.extend_to(3000);
    EXPECT_TRUE(a == b);
}

TEST(Partition, AtDoesNotExtend)
{
    PartitionTable t(10);
    EXPECT_THROW((void)t.at(11), std::out_of_range);
    EXPECT_EQ(t.max_index(), 10);
}

TEST(Cache, RoundTrip)
{
    PartitionTable t(10);
    std::string path = temp_path("pcache_rt");
    save_cache(t, path);
    PartitionTable back = load_cache(path);
    EXPECT_TRUE(back == t);
    std::filesystem::remove(path);
}

TEST(Cache, RoundTripLargeSampledValidation)
{
    PartitionTable t(1500);
    PartitionTable back = parse_cache(serialize_cache(t));
    EXPECT_TRUE(back == t);
    PartitionTable full = parse_cache(serialize_cache(t), {.full_validation = true});
    EXPECT_TRUE(full == t);
}

TEST(Cache, WrongValueFailsRecurrence)
{
    std::string body = "0\t1\n1\t1\n2\t2\n3\t4\n4\t5\n";
    try {
        parse_cache(with_digest(body));
        FAIL() << "expected CacheError";
    } catch (const CacheError& e) {
        EXPECT_EQ(e.line(), 4u);
        EXPECT_NE(std::string(e.what()).find("recurrence"), std::string::npos);
    }
}

TEST(Cache, EmptyFile)
{
    EXPECT_THROW(parse_cache(""), CacheError);
    // Checksum-only file: no records.
    EXPECT_THROW(parse_cache(with_digest("")), CacheError);
}

TEST(Cache, ChecksumMismatch)
{
    std::string tampered = "0\t1\n1\t1\n2\t2\n3\t3\n4\t5\n5\t7\n#sha256:" + std::string(64, 'a') + "\n";
    try {
        parse_cache(tampered);
        FAIL();
    } catch (const CacheError& e) {
        EXPECT_EQ(e.line(), 7u);
    }
}

TEST(Cache, NonContiguousIndex)
{
    try {
        parse_cache(with_digest("0\t1\n1\t1\n3\t3\n"));
        FAIL();
    } catch (const CacheError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(Cache, MalformedLine)
{
    try {
        parse_cache(with_digest("0\t1\n1 1\n"));
        FAIL();
    } catch (const CacheError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(parse_cache(with_digest("0\t1\n1\tx\n")), CacheError);
}

TEST(Cache, MissingDigest) { EXPECT_THROW(parse_cache("0\t1\n1\t1\n"), CacheError); }

TEST(Cache, FileFormatIsLineOriented)
{
    std::string text = serialize_cache(PartitionTable(3));
    std::string body = "0\t1\n1\t1\n2\t2\n3\t3\n";
    EXPECT_EQ(text, body + "#sha256:" + sha256_hex(body) + "\n");
    // SHA-256 of the empty string, as a known vector.
    EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}
