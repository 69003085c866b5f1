#include <f2lin/io.hpp>

#include <array>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace f2lin::io {

namespace {

constexpr std::array<char, 4> magic = {'B', 'M', 'F', '2'};
constexpr char version = 0x01;

void put_u64le(std::ostream& out, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 8);
}

std::uint64_t get_u64le(std::istream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    if (!in) throw FormatError("truncated binary matrix file");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

void write_binary(std::ostream& out, const BitMatrix& a) {
    out.write(magic.data(), magic.size());
    out.put(version);
    put_u64le(out, a.nrows());
    put_u64le(out, a.ncols());
    std::size_t words = (a.ncols() + 63) / 64;
    for (std::size_t i = 0; i < a.nrows(); ++i)
        for (std::size_t w = 0; w < words; ++w) put_u64le(out, a.row(i)[w]);
}

void write_ascii(std::ostream& out, const BitMatrix& a) {
    out << a.nrows() << ' ' << a.ncols() << '\n';
    std::string line(a.ncols(), '0');
    for (std::size_t i = 0; i < a.nrows(); ++i) {
        for (std::size_t j = 0; j < a.ncols(); ++j) line[j] = a.get(i, j) ? '1' : '0';
        out << line << '\n';
    }
}

BitMatrix read_binary(std::istream& in) {
    std::array<char, 4> got{};
    in.read(got.data(), got.size());
    if (!in || got != magic) throw FormatError("bad magic in binary matrix file");
    int ver = in.get();
    if (ver != version) throw FormatError("unsupported binary matrix version");
    std::uint64_t nrows = get_u64le(in);
    std::uint64_t ncols = get_u64le(in);
    constexpr std::uint64_t dim_limit = std::uint64_t{1} << 32;
    if (nrows >= dim_limit || ncols >= dim_limit)
        throw FormatError("matrix dimensions overflow");
    std::uint64_t words = (ncols + 63) / 64;
    if (nrows != 0 && words > std::numeric_limits<std::size_t>::max() / 8 / nrows)
        throw FormatError("matrix dimensions overflow");
    BitMatrix a(static_cast<std::size_t>(nrows), static_cast<std::size_t>(ncols));
    unsigned used = ncols % 64;
    for (std::size_t i = 0; i < nrows; ++i) {
        for (std::size_t w = 0; w < words; ++w) a.row(i)[w] = get_u64le(in);
        if (used && (a.row(i)[words - 1] & ~detail::low_mask(used)))
            throw FormatError("nonzero padding bits in binary matrix file");
    }
    return a;
}

BitMatrix read_ascii(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw FormatError("missing header line");
    std::istringstream hs(header);
    std::uint64_t nrows = 0, ncols = 0;
    if (!(hs >> nrows >> ncols)) throw FormatError("malformed header line");
    std::string rest;
    if (hs >> rest) throw FormatError("malformed header line");
    constexpr std::uint64_t dim_limit = std::uint64_t{1} << 32;
    if (nrows >= dim_limit || ncols >= dim_limit)
        throw FormatError("matrix dimensions overflow");
    BitMatrix a(static_cast<std::size_t>(nrows), static_cast<std::size_t>(ncols));
    std::string line;
    for (std::size_t i = 0; i < nrows; ++i) {
        if (!std::getline(in, line)) throw FormatError("missing matrix row");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.size() != ncols) throw FormatError("matrix row has the wrong length");
        for (std::size_t j = 0; j < ncols; ++j) {
            if (line[j] == '1')
                a.set(i, j, true);
            else if (line[j] != '0')
                throw FormatError("matrix row contains characters other than 0/1");
        }
    }
    return a;
}

} // namespace

void write_matrix(std::ostream& out, const BitMatrix& a, Format fmt) {
    if (fmt == Format::binary)
        write_binary(out, a);
    else
        write_ascii(out, a);
    if (!out) throw FormatError("write failed");
}

void write_matrix(const std::filesystem::path& path, const BitMatrix& a, Format fmt) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open for writing: " + path.string());
    write_matrix(out, a, fmt);
}

BitMatrix read_matrix(std::istream& in, Format* detected) {
    // an ASCII file starts with a digit, the binary magic with 'B'
    if (in.peek() == 'B') {
        if (detected) *detected = Format::binary;
        return read_binary(in);
    }
    if (detected) *detected = Format::ascii;
    return read_ascii(in);
}

BitMatrix read_matrix(const std::filesystem::path& path, Format* detected) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open for reading: " + path.string());
    return read_matrix(in, detected);
}

void write_permutation(std::ostream& out, const Permutation& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out << ' ';
        out << p[i];
    }
    out << '\n';
}

void write_permutation(const std::filesystem::path& path, const Permutation& p) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open for writing: " + path.string());
    write_permutation(out, p);
    if (!out) throw FormatError("write failed");
}

Permutation read_permutation(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("missing permutation line");
    std::istringstream ls(line);
    std::vector<std::size_t> v;
    std::size_t x;
    while (ls >> x) v.push_back(x);
    Permutation p = Permutation::identity(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i];
    return p;
}

Permutation read_permutation(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open for reading: " + path.string());
    return read_permutation(in);
}

} // namespace f2lin::io
