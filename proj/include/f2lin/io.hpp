#pragma once

// On-disk matrix formats.
//
// Binary ("BMF2"): magic bytes "BMF2", version byte 0x01, then nrows and
// ncols as unsigned 64-bit little-endian integers, then nrows*ceil(ncols/64)
// little-endian 64-bit words, row-major, least significant bit = lowest
// column index, padding bits zero.
//
// ASCII: a first line "<nrows> <ncols>", then nrows lines of exactly ncols
// characters from {0,1}.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include <f2lin/bitmat.hpp>
#include <f2lin/perm.hpp>

namespace f2lin::io {

enum class Format { ascii, binary };

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_matrix(std::ostream& out, const BitMatrix& a, Format fmt);
void write_matrix(const std::filesystem::path& path, const BitMatrix& a, Format fmt);

// sniffs the magic bytes to pick the format; throws FormatError on malformed
// input, including nonzero padding bits in a binary payload
BitMatrix read_matrix(std::istream& in, Format* detected = nullptr);
BitMatrix read_matrix(const std::filesystem::path& path, Format* detected = nullptr);

// one line of space-separated transposition-vector entries
void write_permutation(std::ostream& out, const Permutation& p);
void write_permutation(const std::filesystem::path& path, const Permutation& p);
Permutation read_permutation(std::istream& in);
Permutation read_permutation(const std::filesystem::path& path);

} // namespace f2lin::io
