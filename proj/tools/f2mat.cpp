// f2mat: generate, decompose, echelonize and benchmark dense matrices over
// GF(2).
//
// Exit codes: 0 success, 1 selftest/verification failure, 2 I/O or usage
// error.

#include <chrono>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <f2lin/gauss.hpp>
#include <f2lin/io.hpp>
#include <f2lin/m4ri.hpp>
#include <f2lin/mmpf.hpp>
#include <f2lin/pls.hpp>
#include <f2lin/selftest.hpp>

namespace {

using namespace f2lin;

std::size_t run_rref(BitMatrix& a, Algorithm alg, const EliminationConfig& cfg) {
    switch (alg) {
    case Algorithm::gauss: return gauss_rref(a);
    case Algorithm::m4ri: return m4ri_rref(a, cfg.k);
    case Algorithm::mmpf: {
        PlsResult f = mmpf_pls(a, cfg.k);
        rref_from_pls(a, f.rank, f.P, f.Q);
        return f.rank;
    }
    case Algorithm::pls: {
        PlsResult f = pls_recursive(a, cfg);
        rref_from_pls(a, f.rank, f.P, f.Q);
        return f.rank;
    }
    case Algorithm::hybrid: return hybrid_rref(a, cfg);
    }
    return 0;
}

struct CommonOpts {
    std::string algorithm = "pls";
    unsigned k = 0;
    std::size_t cutoff = 0;
    double threshold = 0.15;

    EliminationConfig config() const {
        EliminationConfig cfg;
        cfg.k = k;
        cfg.cutoff_bytes = cutoff;
        cfg.hybrid_threshold = threshold;
        cfg.algorithm = algorithm_from_string(algorithm);
        return cfg;
    }
};

int cmd_gen(const std::string& out, std::size_t rows, std::size_t cols, double density,
            std::uint64_t seed, const std::string& format) {
    BitMatrix a(rows, cols);
    a.randomize(density, seed);
    io::write_matrix(out, a, format == "bin" ? io::Format::binary : io::Format::ascii);
    return 0;
}

int cmd_rref(const std::string& in, const std::string& out, const CommonOpts& opts) {
    io::Format fmt = io::Format::ascii;
    BitMatrix a = io::read_matrix(in, &fmt);
    std::size_t r = run_rref(a, opts.config().algorithm, opts.config());
    io::write_matrix(out, a, fmt);
    std::cout << "rank=" << r << '\n';
    return 0;
}

int cmd_pls(const std::string& in, const std::string& out_packed, const std::string& out_p,
            const std::string& out_q, const CommonOpts& opts) {
    io::Format fmt = io::Format::ascii;
    BitMatrix a = io::read_matrix(in, &fmt);
    PlsResult f = pls_recursive(a, opts.config());
    io::write_matrix(out_packed, a, fmt);
    io::write_permutation(out_p, f.P);
    io::write_permutation(out_q, f.Q);
    std::cout << "rank=" << f.rank << '\n';
    return 0;
}

int cmd_bench(std::size_t rows, std::size_t cols, double density, std::uint64_t seed,
              const std::string& algorithm, unsigned reps, const CommonOpts& opts) {
    EliminationConfig cfg = opts.config();
    Algorithm alg = algorithm_from_string(algorithm);
    std::cout << "algorithm,rows,cols,density,rep,seconds,rank\n";
    for (unsigned rep = 0; rep < reps; ++rep) {
        BitMatrix a(rows, cols);
        a.randomize(density, seed + rep);
        auto t0 = std::chrono::steady_clock::now();
        std::size_t r = run_rref(a, alg, cfg);
        auto t1 = std::chrono::steady_clock::now();
        double seconds = std::chrono::duration<double>(t1 - t0).count();
        std::printf("%s,%zu,%zu,%g,%u,%.6f,%zu\n", algorithm.c_str(), rows, cols, density, rep,
                    seconds, r);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dense linear algebra over GF(2)"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "write a random matrix");
    std::size_t g_rows = 0, g_cols = 0;
    double g_density = 0.5;
    std::uint64_t g_seed = 0;
    std::string g_out, g_format = "ascii";
    gen->add_option("--rows", g_rows)->required();
    gen->add_option("--cols", g_cols)->required();
    gen->add_option("--density", g_density);
    gen->add_option("--seed", g_seed);
    gen->add_option("--out", g_out)->required();
    gen->add_option("--format", g_format)->check(CLI::IsMember({"ascii", "bin"}));

    // rref
    auto* rref = app.add_subcommand("rref", "reduced row echelon form");
    std::string r_in, r_out;
    CommonOpts r_opts;
    rref->add_option("--in", r_in)->required();
    rref->add_option("--out", r_out)->required();
    rref->add_option("--algorithm", r_opts.algorithm)
        ->check(CLI::IsMember({"gauss", "m4ri", "mmpf", "pls", "hybrid"}));
    rref->add_option("--k", r_opts.k);
    rref->add_option("--cutoff", r_opts.cutoff);
    rref->add_option("--threshold", r_opts.threshold);

    // pls
    auto* pls = app.add_subcommand("pls", "PLS decomposition");
    std::string p_in, p_packed, p_p, p_q;
    CommonOpts p_opts;
    pls->add_option("--in", p_in)->required();
    pls->add_option("--out-packed", p_packed)->required();
    pls->add_option("--out-p", p_p)->required();
    pls->add_option("--out-q", p_q)->required();

    // bench
    auto* bench = app.add_subcommand("bench", "time echelonization, CSV on stdout");
    std::size_t b_rows = 0, b_cols = 0;
    double b_density = 0.5;
    std::uint64_t b_seed = 0;
    unsigned b_reps = 10;
    std::string b_algorithm = "pls";
    CommonOpts b_opts;
    bench->add_option("--rows", b_rows)->required();
    bench->add_option("--cols", b_cols)->required();
    bench->add_option("--density", b_density);
    bench->add_option("--seed", b_seed);
    bench->add_option("--algorithm", b_algorithm)
        ->check(CLI::IsMember({"gauss", "m4ri", "mmpf", "pls", "hybrid"}));
    bench->add_option("--reps", b_reps);
    bench->add_option("--k", b_opts.k);
    bench->add_option("--cutoff", b_opts.cutoff);
    bench->add_option("--threshold", b_opts.threshold);

    // selftest
    auto* selftest = app.add_subcommand("selftest", "run the built-in checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(g_out, g_rows, g_cols, g_density, g_seed, g_format);
        if (rref->parsed()) return cmd_rref(r_in, r_out, r_opts);
        if (pls->parsed()) return cmd_pls(p_in, p_packed, p_p, p_q, p_opts);
        if (bench->parsed())
            return cmd_bench(b_rows, b_cols, b_density, b_seed, b_algorithm, b_reps, b_opts);
        if (selftest->parsed()) return f2lin::selftest::run(std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
