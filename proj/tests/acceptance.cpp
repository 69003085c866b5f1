// Acceptance suite: one line per criterion, nonzero exit if a hard criterion
// fails. Set F2_CI=1 to downgrade the timing-sensitive density criterion to a
// warning on shared machines.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <f2lin/gauss.hpp>
#include <f2lin/io.hpp>
#include <f2lin/m4ri.hpp>
#include <f2lin/mmpf.hpp>
#include <f2lin/mul.hpp>
#include <f2lin/pls.hpp>

#include "support.hpp"

using namespace f2lin;
using namespace testsupport;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
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

double time_once(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

double median5(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

Outcome rref_agreement() {
    constexpr Algorithm algs[] = {Algorithm::gauss, Algorithm::m4ri, Algorithm::mmpf,
                                  Algorithm::pls, Algorithm::hybrid};
    const double densities[] = {0.01, 0.1, 0.5, 1.0};
    const std::size_t forced_cols[] = {63, 64, 65, 127, 129};
    SplitMix64 gen(0xacce97);
    int done = 0;
    for (int trial = 0; trial < 520; ++trial) {
        std::size_t m, n;
        switch (trial % 8) {
        case 0: m = 1; n = 1 + gen.next() % 128; break;                    // single row
        case 1: m = 1 + gen.next() % 128; n = 1; break;                    // single column
        case 2: m = 1 + gen.next() % 128; n = forced_cols[trial % 5]; break;
        default: m = 1 + gen.next() % 128; n = 1 + gen.next() % 128; break;
        }
        double d = densities[trial % 4];
        std::uint64_t seed = gen.next();
        BitMatrix a(m, n);
        a.randomize(d, seed);
        EliminationConfig cfg;
        cfg.cutoff_bytes = 512; // keep the recursive path honest at small dims
        BitMatrix ref = a;
        std::size_t ref_rank = gauss_rref(ref);
        for (Algorithm alg : algs) {
            BitMatrix work = a;
            std::size_t r = rref_with(work, alg, cfg);
            if (r != ref_rank || !(work == ref)) {
                std::ostringstream os;
                os << "mismatch at " << m << "x" << n << " density " << d << " seed " << seed
                   << " algorithm " << to_string(alg);
                return {false, os.str()};
            }
        }
        ++done;
    }
    return {true, std::to_string(done) + " matrices, 5 algorithms bit-identical"};
}

Outcome reconstruction() {
    SplitMix64 gen(0x5ec0);
    const double densities[] = {0.02, 0.1, 0.5, 0.9};
    int done = 0;
    for (int trial = 0; trial < 320; ++trial) {
        std::size_t m = 1 + gen.next() % 256;
        std::size_t n = 1 + gen.next() % 256;
        BitMatrix a(m, n);
        a.randomize(densities[trial % 4], gen.next());
        for (int path = 0; path < 4; ++path) {
            BitMatrix packed = a;
            PlsResult f;
            if (path == 0) {
                f = gauss_pls(packed);
            } else if (path == 1) {
                f = mmpf_pls(packed);
            } else {
                EliminationConfig cfg;
                cfg.cutoff_bytes = path == 2 ? 64 : (std::size_t{1} << 30);
                f = pls_recursive(packed, cfg);
            }
            if (!factors_well_formed(packed, f))
                return {false, "malformed factors on path " + std::to_string(path)};
            if (!reconstructs(a, packed, f)) {
                std::ostringstream os;
                os << "P*L*S != A on path " << path << " at " << m << "x" << n;
                return {false, os.str()};
            }
        }
        ++done;
    }
    return {true, std::to_string(done) + " matrices, 4 decomposition paths reconstruct"};
}

Outcome rank_sensitivity() {
    SplitMix64 gen(0x4a4b);
    const std::size_t n = 128;
    constexpr Algorithm algs[] = {Algorithm::gauss, Algorithm::m4ri, Algorithm::mmpf,
                                  Algorithm::pls, Algorithm::hybrid};
    for (std::size_t r : {std::size_t{0}, std::size_t{1}, n / 4, n / 2, n}) {
        for (int rep = 0; rep < 4; ++rep) {
            BitMatrix a = random_matrix_of_rank(n, n, r, gen);
            for (Algorithm alg : algs) {
                EliminationConfig cfg;
                cfg.algorithm = alg;
                cfg.cutoff_bytes = 1024;
                if (rank(a, cfg) != r) {
                    std::ostringstream os;
                    os << "algorithm " << to_string(alg) << " missed rank " << r;
                    return {false, os.str()};
                }
            }
        }
    }
    return {true, "ranks {0,1,n/4,n/2,n} exact for all five algorithms"};
}

Outcome multiply_oracle() {
    SplitMix64 gen(0x6d75);
    for (int t = 0; t < 210; ++t) {
        std::size_t m = 1 + gen.next() % 96;
        std::size_t s = 1 + gen.next() % 96;
        std::size_t n = 1 + gen.next() % 96;
        BitMatrix a = random_matrix(m, s, 0.5, gen.next());
        BitMatrix b = random_matrix(s, n, 0.5, gen.next());
        BitMatrix want = mul_naive(a, b);
        unsigned k = 1 + t % 6;
        if (!(mul_m4rm(a, b, k) == want))
            return {false, "mul_m4rm disagreed with mul_naive at k=" + std::to_string(k)};
    }
    for (int t = 0; t < 110; ++t) {
        std::size_t r = 1 + gen.next() % 96;
        std::size_t n = 1 + gen.next() % 64;
        BitMatrix stored = random_matrix(r, r, 0.5, gen.next());
        BitMatrix l(r, r);
        for (std::size_t i = 0; i < r; ++i) {
            l.set(i, i, true);
            for (std::size_t j = 0; j < i; ++j) l.set(i, j, stored.get(i, j));
        }
        BitMatrix b = random_matrix(r, n, 0.5, gen.next());
        BitMatrix x = b;
        trsm_lower_left_unit(stored.view(), x.view());
        if (!(mul_naive(l, x) == b)) return {false, "trsm multiply-back failed"};
    }
    return {true, "210 multiply pairs and 110 triangular solves exact"};
}

Outcome cutoff_invariance() {
    SplitMix64 gen(0xc0ff);
    const std::size_t cutoffs[] = {1, 4096, std::size_t{1} << 30};
    const double densities[] = {0.02, 0.2, 0.5};
    std::vector<std::pair<std::size_t, std::size_t>> cuts;
    for (int trial = 0; trial < 100; ++trial) {
        BitMatrix a(512, 512);
        a.randomize(densities[trial % 3], gen.next());
        BitMatrix ref;
        std::size_t ref_rank = 0;
        for (int ci = 0; ci < 3; ++ci) {
            EliminationConfig cfg;
            cfg.cutoff_bytes = cutoffs[ci];
            stats::reset();
            stats::counters().cut_log = &cuts;
            BitMatrix work = a;
            PlsResult f = pls_recursive(work, cfg);
            rref_from_pls(work, f.rank, f.P, f.Q);
            stats::counters().cut_log = nullptr;
            if (ci == 0) {
                ref = work;
                ref_rank = f.rank;
            } else if (f.rank != ref_rank || !(work == ref)) {
                return {false, "rank or RREF changed with cutoff " + std::to_string(cutoffs[ci])};
            }
        }
    }
    if (cuts.empty()) return {false, "recursion never split"};
    for (auto [n, n0] : cuts)
        if (n >= 128 && n0 % 64 != 0)
            return {false, "cut " + std::to_string(n0) + " of " + std::to_string(n) +
                               " not word aligned"};
    return {true, "100 matrices invariant over 3 cutoffs; " + std::to_string(cuts.size()) +
                      " cuts all word-aligned"};
}

Outcome performance_trend() {
    const std::size_t n = 8192;
    std::vector<double> t_gauss, t_m4ri, t_pls;
    for (int rep = 0; rep < 5; ++rep) {
        BitMatrix a(n, n);
        a.randomize(0.5, 977 + rep);
        {
            BitMatrix w = a;
            t_m4ri.push_back(time_once([&] { m4ri_rref(w); }));
        }
        {
            BitMatrix w = a;
            EliminationConfig cfg;
            t_pls.push_back(time_once([&] {
                PlsResult f = pls_recursive(w, cfg);
                rref_from_pls(w, f.rank, f.P, f.Q);
            }));
        }
        {
            BitMatrix w = a;
            t_gauss.push_back(time_once([&] { gauss_rref(w); }));
        }
    }
    double g = median5(t_gauss), m = median5(t_m4ri), p = median5(t_pls);
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << "gauss " << g << "s, m4ri " << m << "s, pls " << p << "s";
    bool ok = p <= 1.10 * m && g >= 3.0 * m && g >= 3.0 * p;
    return {ok, os.str()};
}

Outcome density_trend(bool& soft) {
    soft = std::getenv("F2_CI") != nullptr;
    const std::size_t n = 4096;
    const double densities[] = {0.01, 0.05, 0.15, 0.5};
    std::ostringstream os;
    os.precision(3);
    os << std::fixed;
    bool ok = true;
    for (double d : densities) {
        std::vector<double> tm, tp, th;
        for (int rep = 0; rep < 5; ++rep) {
            BitMatrix a(n, n);
            a.randomize(d, 1300 + rep);
            {
                BitMatrix w = a;
                tm.push_back(time_once([&] { m4ri_rref(w); }));
            }
            {
                BitMatrix w = a;
                EliminationConfig cfg;
                tp.push_back(time_once([&] {
                    PlsResult f = pls_recursive(w, cfg);
                    rref_from_pls(w, f.rank, f.P, f.Q);
                }));
            }
            {
                BitMatrix w = a;
                EliminationConfig cfg;
                cfg.hybrid_threshold = 0.15;
                th.push_back(time_once([&] { hybrid_rref(w, cfg); }));
            }
        }
        double m = median5(tm), p = median5(tp), h = median5(th);
        double best = std::min(m, p);
        if (h > 1.25 * best) ok = false;
        os << "d=" << d << ": m4ri " << m << "s pls " << p << "s hybrid " << h << "s; ";
    }
    return {ok, os.str()};
}

Outcome table_cost() {
    for (unsigned k = 1; k <= 8; ++k) {
        BitMatrix a(k, 80);
        for (unsigned i = 0; i < k; ++i) a.set(i, i, true);
        stats::reset();
        make_table(a, 0, 0, k);
        if (stats::counters().row_adds != (std::uint64_t{1} << k) - 1)
            return {false, "k=" + std::to_string(k) + " used " +
                               std::to_string(stats::counters().row_adds) + " additions"};
    }
    return {true, "2^k - 1 row additions for k = 1..8"};
}

Outcome roundtrip() {
    SplitMix64 gen(0xf11e);
    for (int t = 0; t < 110; ++t) {
        std::size_t m = gen.next() % 60;
        std::size_t n = 1 + gen.next() % 200;
        BitMatrix a = random_matrix(m, n, 0.4, gen.next());
        std::stringstream s1, s2, s3;
        io::write_matrix(s1, a, io::Format::ascii);
        BitMatrix b = io::read_matrix(s1);
        io::write_matrix(s2, b, io::Format::binary);
        BitMatrix c = io::read_matrix(s2);
        io::write_matrix(s3, c, io::Format::ascii);
        if (!(c == a) || s3.str() != s1.str()) return {false, "round trip altered the matrix"};
    }
    return {true, "110 ascii/binary/ascii round trips lossless"};
}

} // namespace

int main() {
    int failures = 0;
    auto report = [&](const char* name, const Outcome& o, bool soft = false) {
        const char* tag = o.pass ? "PASS" : (soft ? "WARN" : "FAIL");
        std::printf("%s %s: %s\n", tag, name, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass && !soft) ++failures;
    };

    report("canonical-rref-agreement", rref_agreement());
    report("reconstruction", reconstruction());
    report("rank-sensitivity", rank_sensitivity());
    report("multiply-oracle", multiply_oracle());
    report("cutoff-word-cut-invariance", cutoff_invariance());
    report("m4ri-table-cost", table_cost());
    report("file-format-round-trip", roundtrip());
    report("performance-trend", performance_trend());
    bool soft = false;
    Outcome density = density_trend(soft);
    report("density-regression-trend", density, soft);

    return failures == 0 ? 0 : 1;
}
