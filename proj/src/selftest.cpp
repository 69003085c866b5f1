#include <f2lin/selftest.hpp>

#include <ostream>
#include <sstream>

#include <f2lin/gauss.hpp>
#include <f2lin/io.hpp>
#include <f2lin/m4ri.hpp>
#include <f2lin/mmpf.hpp>
#include <f2lin/mul.hpp>
#include <f2lin/pls.hpp>
#include <f2lin/prng.hpp>

namespace f2lin::selftest {

namespace {

struct Failure {
    std::string what;
};

std::size_t rref_with(BitMatrix& a, Algorithm alg, const EliminationConfig& cfg) {
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

void check_rref_agreement() {
    constexpr Algorithm algs[] = {Algorithm::gauss, Algorithm::m4ri, Algorithm::mmpf,
                                  Algorithm::pls, Algorithm::hybrid};
    const double densities[] = {0.05, 0.3, 0.5};
    SplitMix64 gen(0x5e1f7e57);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t m = 1 + gen.next() % 96;
        std::size_t n = 1 + gen.next() % 96;
        double d = densities[trial % 3];
        std::uint64_t seed = gen.next();
        BitMatrix a(m, n);
        a.randomize(d, seed);

        EliminationConfig cfg;
        cfg.cutoff_bytes = 256; // force recursion even at these sizes
        BitMatrix ref = a;
        std::size_t ref_rank = gauss_rref(ref);
        for (Algorithm alg : algs) {
            BitMatrix work = a;
            std::size_t r = rref_with(work, alg, cfg);
            if (r != ref_rank || !(work == ref)) {
                std::ostringstream os;
                os << "rref mismatch: algorithm=" << to_string(alg) << " dims=" << m << "x" << n
                   << " density=" << d << " seed=" << seed;
                throw Failure{os.str()};
            }
        }
    }
}

void check_pls_reconstruction() {
    SplitMix64 gen(0xdec0ded);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t m = 1 + gen.next() % 80;
        std::size_t n = 1 + gen.next() % 80;
        std::uint64_t seed = gen.next();
        BitMatrix a(m, n);
        a.randomize(trial % 2 ? 0.5 : 0.1, seed);

        for (int path = 0; path < 3; ++path) {
            BitMatrix work = a;
            PlsResult f;
            if (path == 0) {
                f = gauss_pls(work);
            } else if (path == 1) {
                f = mmpf_pls(work);
            } else {
                EliminationConfig cfg;
                cfg.cutoff_bytes = 128;
                f = pls_recursive(work, cfg);
            }
            if (!pls_verify(a, work, f)) {
                std::ostringstream os;
                os << "PLS reconstruction failed: path=" << path << " dims=" << m << "x" << n
                   << " seed=" << seed;
                throw Failure{os.str()};
            }
        }
    }
}

void check_multiply() {
    SplitMix64 gen(0x4c0ffee);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t m = 1 + gen.next() % 48;
        std::size_t s = 1 + gen.next() % 48;
        std::size_t n = 1 + gen.next() % 48;
        BitMatrix a(m, s), b(s, n);
        a.randomize(0.5, gen.next());
        b.randomize(0.5, gen.next());
        unsigned k = 1 + trial % 6;
        if (!(mul_m4rm(a, b, k) == mul_naive(a, b)))
            throw Failure{"mul_m4rm disagrees with mul_naive"};
    }
}

void check_table_cost() {
    for (unsigned k = 1; k <= 6; ++k) {
        BitMatrix a(k, 32);
        for (unsigned i = 0; i < k; ++i) a.set(i, i, true);
        stats::reset();
        make_table(a, 0, 0, k);
        if (stats::counters().row_adds != (std::uint64_t{1} << k) - 1)
            throw Failure{"make_table did not use 2^k - 1 row additions"};
    }
}

void check_roundtrip() {
    SplitMix64 gen(0x10f11e);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t m = 1 + gen.next() % 40;
        std::size_t n = 1 + gen.next() % 90;
        BitMatrix a(m, n);
        a.randomize(0.4, gen.next());
        std::stringstream bin, asc;
        io::write_matrix(bin, a, io::Format::binary);
        BitMatrix b = io::read_matrix(bin);
        io::write_matrix(asc, b, io::Format::ascii);
        BitMatrix c = io::read_matrix(asc);
        if (!(c == a)) throw Failure{"ascii/binary round trip altered the matrix"};
    }
}

} // namespace

int run(std::ostream& log) {
    struct Step {
        const char* name;
        void (*fn)();
    };
    const Step steps[] = {
        {"rref agreement across algorithms", check_rref_agreement},
        {"PLS reconstruction", check_pls_reconstruction},
        {"multiplication oracle", check_multiply},
        {"table build cost", check_table_cost},
        {"file format round trip", check_roundtrip},
    };
    for (const Step& step : steps) {
        try {
            step.fn();
            log << "ok: " << step.name << '\n';
        } catch (const Failure& f) {
            log << "FAILED: " << step.name << ": " << f.what << '\n';
            return 1;
        }
    }
    return 0;
}

} // namespace f2lin::selftest
