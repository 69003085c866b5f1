#include <doctest.h>

#include <sstream>

#include <f2lin/io.hpp>

#include "support.hpp"

using namespace f2lin;
using namespace testsupport;

TEST_CASE("ascii round trip") {
    BitMatrix a = mat({"101", "010"});
    std::stringstream ss;
    io::write_matrix(ss, a, io::Format::ascii);
    CHECK(ss.str() == "2 3\n101\n010\n");
    io::Format fmt;
    BitMatrix b = io::read_matrix(ss, &fmt);
    CHECK(fmt == io::Format::ascii);
    CHECK(b == a);
}

TEST_CASE("binary layout") {
    BitMatrix a(1, 65);
    a.set(0, 0, true);
    a.set(0, 64, true);
    std::stringstream ss;
    io::write_matrix(ss, a, io::Format::binary);
    std::string s = ss.str();
    REQUIRE(s.size() == 4 + 1 + 8 + 8 + 2 * 8);
    CHECK(s.substr(0, 4) == "BMF2");
    CHECK(s[4] == 0x01);
    CHECK(static_cast<unsigned char>(s[5]) == 1);   // nrows LE
    CHECK(static_cast<unsigned char>(s[13]) == 65); // ncols LE
    CHECK(static_cast<unsigned char>(s[21]) == 1);  // word 0, bit 0
    CHECK(static_cast<unsigned char>(s[29]) == 1);  // word 1, bit 0
    BitMatrix b = io::read_matrix(ss);
    CHECK(b == a);
}

TEST_CASE("ascii/binary/ascii round trip is lossless") {
    SplitMix64 gen(120);
    for (int t = 0; t < 40; ++t) {
        std::size_t m = gen.next() % 40;
        std::size_t n = 1 + gen.next() % 150; // odd widths included
        BitMatrix a = random_matrix(m, n, 0.4, gen.next());
        std::stringstream s1, s2, s3;
        io::write_matrix(s1, a, io::Format::ascii);
        BitMatrix b = io::read_matrix(s1);
        io::write_matrix(s2, b, io::Format::binary);
        BitMatrix c = io::read_matrix(s2);
        io::write_matrix(s3, c, io::Format::ascii);
        CHECK(s3.str() == s1.str());
        CHECK(c == a);
    }
}

TEST_CASE("malformed inputs are rejected") {
    auto reject = [](const std::string& content) {
        std::stringstream ss(content);
        CHECK_THROWS_AS(io::read_matrix(ss), io::FormatError);
    };
    reject("");
    reject("2\n");
    reject("2 3\n101\n");           // missing row
    reject("1 3\n10\n");            // short row
    reject("1 3\n1x1\n");           // bad character
    reject("1 2 3\n10\n");          // trailing token
    reject("BMF9nonsense");         // bad magic... starts with B but wrong
    reject(std::string("BMF2") + '\x02' + std::string(16, '\0')); // bad version

    // nonzero padding bits in a binary payload
    std::stringstream good;
    io::write_matrix(good, mat({"10"}), io::Format::binary);
    std::string bytes = good.str();
    bytes[21 + 7] = '\x80'; // top bit of the row word
    std::stringstream bad(bytes);
    CHECK_THROWS_AS(io::read_matrix(bad), io::FormatError);
}

TEST_CASE("permutation output") {
    Permutation p = Permutation::identity(4);
    p[0] = 2;
    std::stringstream ss;
    io::write_permutation(ss, p);
    CHECK(ss.str() == "2 1 2 3\n");
    Permutation q = io::read_permutation(ss);
    CHECK(q == p);
}
