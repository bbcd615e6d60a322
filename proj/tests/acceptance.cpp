// Acceptance suite. Run without arguments for all criteria, or name criteria (AC-1 ... AC-10).

#include "hallsod/index_sets.hpp"
#include "hallsod/pbw.hpp"
#include "hallsod/shuffle.hpp"

#include "oracles.hpp"
#include "schema_check.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <sys/wait.h>

using namespace hallsod;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

const Quiver& tripled() {
    static const Quiver q = Quiver::builtin("tripled-jordan");
    return q;
}

Outcome ac1() {
    Outcome o;
    const auto t = Clock::now();
    o.require(kernel_identity_holds(), "formal kernel differs from the factored kernel");
    o.require(seconds_since(t) < 1.0, "slower than 1 s");
    o.detail = o.pass ? "formal and a2 kernels agree exactly" : o.detail;
    return o;
}

ShuffleElement random_symmetric(std::mt19937_64& rng, int degree, const KernelParams& k) {
    std::uniform_int_distribution<int> coef(-4, 4), pw(0, 2);
    std::string text = "[" + std::to_string(degree) + "]";
    // power sums are symmetric
    for (int t = 0; t < 3; ++t) {
        const int e = pw(rng);
        const int c = coef(rng);
        std::string sum = "(";
        for (int i = 1; i <= degree; ++i) sum += (i > 1 ? "+z" : "z") + std::to_string(i) + "^" + std::to_string(e);
        text += (t ? "+" : "") + std::string("(") + std::to_string(c) + ")*" + sum + ")";
    }
    text += "+1";
    return parse_element(text, k);
}

Outcome ac2() {
    Outcome o;
    const auto t = Clock::now();
    const KernelParams k{KernelMode::a2};
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> deg(1, 2);
    for (int i = 0; i < 20 && o.pass; ++i) {
        const ShuffleElement f = random_symmetric(rng, deg(rng), k);
        const ShuffleElement g = random_symmetric(rng, deg(rng), k);
        const ShuffleElement h = random_symmetric(rng, deg(rng), k);
        EqualityOptions opts{Strategy::probabilistic, 5, 100 + static_cast<std::uint64_t>(i)};
        o.require(equals(mul(mul(f, g, k), h, k), mul(f, mul(g, h, k), k), opts),
                  "triple " + std::to_string(i) + " not associative");
    }
    const ShuffleElement a = parse_element("[1]z1+1", k), b = parse_element("[1]2*z1", k), c = ShuffleElement::one(1);
    o.require(equals(mul(mul(a, b, k), c, k), mul(a, mul(b, c, k), k)), "exact (1,1,1) instance fails");
    const double s = seconds_since(t);
    o.require(s < 30.0, "slower than 30 s");
    if (o.pass) o.detail = "20 random triples at 5 points each plus one exact instance, " + std::to_string(s) + " s";
    return o;
}

Outcome ac3() {
    Outcome o;
    const KernelParams k{KernelMode::a2};
    const std::vector<Rational> q{2, 3};
    const ShuffleElement one = ShuffleElement::one(1);
    const Rational v = mul(one, one, k).eval({5, 1}, q);
    o.require(v == Rational(-12, 29), "1*1 at (5,1) gave " + to_string(v));
    o.require(zeta(5, q, k) == Rational(63, 58), "zeta(5) gave " + to_string(zeta(5, q, k)));
    o.require(zeta(Rational(1, 5), q, k) == Rational(-3, 2), "zeta(1/5) wrong");
    if (o.pass) o.detail = "-12/29, 63/58, -3/2";
    return o;
}

Outcome ac4() {
    Outcome o;
    PolytopeCache cache(tripled());
    for (std::int64_t w = -8; w <= 8; ++w) {
        o.require(window_count(cache, 1, w) == 1, "m(1," + std::to_string(w) + ") != 1");
        const std::int64_t m2 = window_count(cache, 2, w);
        o.require(m2 == (w % 2 == 0 ? 2 : 1), "m(2," + std::to_string(w) + ") = " + std::to_string(m2));
        o.require(m2 == static_cast<std::int64_t>(oracle::windows(2, w, 3, 12).size()), "m(2,w) differs from the scan");
    }
    for (int d = 1; d <= 4; ++d) {
        for (std::int64_t w = -8; w <= 8; ++w) {
            const auto a = window_count(cache, d, w), b = window_count(cache, d, w + d);
            o.require(a == b, "m(" + std::to_string(d) + "," + std::to_string(w) + ") not periodic");
        }
    }
    if (o.pass) o.detail = "m(1,w)=1, m(2,w)=2/1 by parity, periodic for d<=4, |w|<=8";
    return o;
}

Outcome ac5() {
    Outcome o;
    const auto t = Clock::now();
    PolytopeCache cache(tripled());
    std::size_t count = 0;
    for (int d = 1; d <= 4 && o.pass; ++d) {
        const DimVector dv = DimVector::single(d);
        const Weight delta(dv);
        const WPolytope& P = cache.get(dv);
        for (std::int64_t w = -6 * d; w <= 6 * d; ++w) {
            for (const Weight& chi : dominant_in_box(dv, w, -6, 6)) {
                ++count;
                const StandardForm f = decompose(cache, chi, delta);
                Weight rebuilt = f.residual;
                for (const FormNode& n : f.nodes) {
                    rebuilt -= n.r * n.N;
                    o.require(n.r > Rational(1, 2), "r <= 1/2 at " + to_string(chi));
                    o.require(n.parent < 0 || n.r < f.nodes[n.parent].r, "r not decreasing at " + to_string(chi));
                }
                o.require(rebuilt == chi + rho(dv), "reconstruction fails at " + to_string(chi));
                o.require(contains(P, f.residual, Rational(1, 2)), "residual outside W/2 at " + to_string(chi));
                const StandardForm g = decompose(cache, chi, delta);
                o.require(g.residual == f.residual && g.nodes.size() == f.nodes.size() &&
                              partition_of(g) == partition_of(f) && r_sequence(g) == r_sequence(f),
                          "nondeterministic at " + to_string(chi));
            }
        }
    }
    const double s = seconds_since(t);
    o.require(s < 120.0, "slower than 2 min");
    if (o.pass) o.detail = std::to_string(count) + " weights, zero violations, " + std::to_string(s) + " s";
    return o;
}

Outcome ac6() {
    Outcome o;
    const auto t = Clock::now();
    PolytopeCache cache(tripled());
    for (int d = 1; d <= 3; ++d) {
        for (std::int64_t w = -4; w <= 4; ++w) {
            const BijectionReport r = verify_bijection(cache, d, w, 8);
            o.require(r.holds(), "d=" + std::to_string(d) + " w=" + std::to_string(w) + ": " +
                                     (r.violations.empty() ? "" : r.violations.front()));
            const DimVector dv = DimVector::single(d);
            for (const Weight& chi : dominant_in_box(dv, w, -8, 8)) {
                const PartitionA v = omega_shift(tripled(), partition_of(decompose(cache, chi, Weight(dv))));
                o.require(strictly_decreasing_slopes(v), "slopes not decreasing for " + to_string(chi));
            }
        }
    }
    const double s = seconds_since(t);
    o.require(s < 120.0, "slower than 2 min");
    if (o.pass) o.detail = "d<=3, |w|<=4, bound 8: zero violations, " + std::to_string(s) + " s";
    return o;
}

Outcome ac7() {
    Outcome o;
    const auto t = Clock::now();
    PolytopeCache cache(tripled());
    const PbwTable tab = primitive_dims(cache, 4, 8);
    o.require(tab.status == PbwStatus::OK, "status " + to_string(tab.status));
    for (const auto& [key, m] : tab.m) {
        o.require(reconstruct_m(tab, key.first, key.second) == m, "reconstruction mismatch");
    }
    for (const auto& [key, p] : tab.p) {
        o.require(p == 1, "p(" + std::to_string(key.first) + "," + std::to_string(key.second) + ") = " + p.str() +
                              ", m = " + tab.m.at(key).str());
    }
    o.require(seconds_since(t) < 60.0, "slower than 1 min");
    if (o.pass) o.detail = "p = 1 on d<=4, |w|<=8";
    return o;
}

Outcome ac8() {
    Outcome o;
    PolytopeCache cache(tripled());
    const DimVector d2 = DimVector::single(2);
    Truncation trunc;
    trunc.slope_bound = 5;
    const IndexSet S = enum_S(cache, d2, 0, Weight(d2), trunc);
    for (const auto& a : S.entries) {
        for (const auto& b : S.entries) {
            const Verdict v = compare(cache, a.A, b.A, Weight(d2));
            if (a.A == b.A) {
                o.require(v == Verdict::equal, "compare not reflexive at " + to_string(a.A));
            } else {
                o.require(v != Verdict::equal, "no direction between " + to_string(a.A) + " and " + to_string(b.A));
            }
        }
    }
    const PartitionA big = one_vertex({{1, 5}, {1, -5}});
    const PartitionA small = one_vertex({{1, 1}, {1, -1}});
    const PartitionA big_v = omega_shift(tripled(), big);
    const auto rb = oracle::two_part(1, big_v.parts[0].w, 1, big_v.parts[1].w);
    const auto rs = oracle::two_part(1, 1, 1, -1);
    o.require(rb.r == Rational(11, 6) && rs.r == Rational(5, 6), "oracle r values differ from 11/6 and 5/6");
    o.require(slope_to_tree(big_v).nodes.at(0).r == rb.r, "slope_to_tree r differs from the linear solve");
    o.require(slope_to_tree(small).nodes.at(0).r == rs.r, "slope_to_tree r differs from the linear solve");
    o.require(compare_v(big_v, small) == Verdict::A_before_B, "((1,5),(1,-5)) not ranked first");
    if (o.pass) {
        o.detail = std::to_string(S.entries.size()) + " partitions; leading r 11/6 before 5/6";
    }
    return o;
}

Outcome ac9() {
    Outcome o;
    const auto t = Clock::now();
    Truncation trunc;
    trunc.slope_bound = 4;
    std::size_t count = 0;
    for (int d = 1; d <= 4; ++d) {
        for (std::int64_t w = -8; w <= 8; ++w) {
            for (const auto& e : enum_V(d, w, trunc).entries) {
                ++count;
                const TreeSkeleton tree = slope_to_tree(e.A);
                o.require(tree_to_partition(tree) == e.A, "round trip fails at " + to_string(e.A));
                for (const TreeNode& n : tree.nodes) o.require(n.r > Rational(1, 2), "r <= 1/2 at " + to_string(e.A));
            }
        }
    }
    o.require(seconds_since(t) < 60.0, "slower than 1 min");
    if (o.pass) o.detail = std::to_string(count) + " partitions round-trip";
    return o;
}

struct Proc {
    int code;
    std::string out;
};

Proc run_cli(const std::string& args) {
    const std::string cmd = std::string(HALLSOD_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool valid_lines(const std::string& schema_name, const std::string& text, std::string& why) {
    const auto v = schema::Validator::load(std::string(HALLSOD_SCHEMA_DIR) + "/" + schema_name + ".schema.json");
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const std::exception& e) {
            why = "not JSON: " + line;
            return false;
        }
        if (!v.validate(j, why)) return false;
        ++n;
    }
    if (n == 0) why = "no output";
    return n > 0;
}

Outcome ac10() {
    Outcome o;
    std::string why;
    const std::string windows = "windows --quiver tripled-jordan --d 2 --w 4";
    const std::string rinv = "r-invariant --quiver tripled-jordan --d 2 --weight 5,-5";
    const std::string pbw = "pbw-table --dmax 1 --wmax 3";
    const Proc w1 = run_cli(windows), w2 = run_cli(windows);
    o.require(w1.code == 0 && w1.out == w2.out, "windows not byte-stable");
    o.require(valid_lines("windows", w1.out, why), "windows: " + why);
    std::istringstream wl(w1.out);
    int lines = 0;
    for (std::string l; std::getline(wl, l);) ++lines;
    o.require(lines == 2, "windows: expected two lines");
    const Proc r1 = run_cli(rinv), r2 = run_cli(rinv);
    o.require(r1.code == 0 && r1.out == r2.out, "r-invariant not byte-stable");
    o.require(valid_lines("r-invariant", r1.out, why), "r-invariant: " + why);
    const Proc p1 = run_cli(pbw), p2 = run_cli(pbw);
    o.require(p1.code == 0 && p1.out == p2.out, "pbw-table not byte-stable");
    o.require(p1.out.rfind("d\tw\tm\tp\n", 0) == 0 && p1.out.find("\nstatus\tOK\n") != std::string::npos,
              "pbw-table TSV layout");
    for (std::int64_t w = -3; w <= 3; ++w) {
        o.require(p1.out.find("1\t" + std::to_string(w) + "\t1\t1\n") != std::string::npos, "pbw-table row missing");
    }
    const Proc pj = run_cli(pbw + " --format json");
    o.require(pj.code == 0 && valid_lines("pbw-table", pj.out, why), "pbw-table json: " + why);
    o.require(run_cli("r-invariant --weight 5,x").code == 1, "malformed weight must exit 1");
    o.require(run_cli("windows --quiver nowhere --d 2 --w 0").code == 1, "unknown quiver must exit 1");
    o.require(run_cli("shuffle zeta --x 1 --params 2,3").code == 1, "pole must exit 1");
    o.require(run_cli("shuffle equals [1]z1 [1]2*z1").code == 2, "failed verification must exit 2");
    o.require(run_cli("verify-bijection --d 2 --w 0 --bound 6").code == 0, "passing verification must exit 0");
    if (o.pass) o.detail = "examples schema-valid and byte-stable; exit codes 0/1/2";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC-1", ac1}, {"AC-2", ac2}, {"AC-3", ac3}, {"AC-4", ac4}, {"AC-5", ac5},
        {"AC-6", ac6}, {"AC-7", ac7}, {"AC-8", ac8}, {"AC-9", ac9}, {"AC-10", ac10},
    };
    std::set<std::string> only(argv + 1, argv + argc);
    bool all = true;
    for (const auto& [name, fn] : criteria) {
        if (!only.empty() && !only.count(name)) continue;
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << name << " " << (o.pass ? "PASS" : "FAIL") << " " << o.detail << std::endl;
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
