// One line per acceptance criterion; exit status 1 when any criterion fails.
#include <iostream>
#include <sstream>
#include <string>

#include "../tools/app.hpp"
#include "cohid/catalogue.hpp"
#include "cohid/formality.hpp"
#include "cohid/random.hpp"

using namespace cohid;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool ok, const std::string& detail) {
    std::cout << "AC" << id << ' ' << (ok ? "PASS" : "FAIL") << "  " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

std::string cli(std::vector<std::string> args) {
    args.insert(args.begin(), "cohid");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    app::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return out.str();
}

DgKuModule model(const std::string& ref) { return to_dgku(builtin(ref)); }
std::string cp(int n, int j) { return "cp:" + std::to_string(n) + ":" + std::to_string(j); }
Rational half(long p) { return Rational(p, 2); }

DgKuModule random_module(Rng& rng) {
    return uniform(rng, 0, 1) ? random_dgku(Field::rationals(), rng) : random_dgku_formal(Field::rationals(), rng);
}

void tetrahedron() {
    struct Edge {
        const char* a;
        const char* b;
        const char* expected;
    };
    const Edge edges[] = {{"pt", "cp:1:1", "1"}, {"pt", "m:0", "2"},    {"pt", "m:1", "7/2"},
                          {"cp:1:1", "m:0", "2"}, {"cp:1:1", "m:1", "7/2"}, {"m:0", "m:1", "3"}};
    bool ok = true;
    std::string detail;
    for (const auto& e : edges) {
        std::string out = cli({"dist", e.a, e.b});
        std::string d = out.substr(out.find(" d=") + 3);
        d.pop_back();
        ok = ok && d == e.expected;
        detail += std::string(detail.empty() ? "" : ", ") + e.a + "-" + e.b + "=" + d;
    }
    report(1, "tetrahedron of pt, CP^1, M0, M1 via dist", ok, detail);
}

void cp_tables() {
    std::size_t cases = 0, bad = 0;
    for (int n = 1; n <= 12; ++n) {
        for (int m = 1; m <= 12; ++m) {
            Rational same = std::min(Rational(std::abs(n - m)), std::max(half(m + 1), half(n + 1)));
            Rational trivial = n == m ? Rational(0) : half(1);
            bad += d_cohI_k(model(cp(n, 1)), model(cp(m, 1)), 0) != ExtendedRational(same);
            bad += d_cohI_k(model(cp(n, 0)), model(cp(m, 0)), 0) != ExtendedRational(trivial);
            cases += 2;
        }
        bad += d_cohI_k(model(cp(n, 0)), model(cp(n, 1)), 0) != ExtendedRational(Rational((n + 1) / 2));
        ++cases;
    }
    report(2, "CP^n tables for 1 <= n, m <= 12", bad == 0, std::to_string(cases) + " entries, " + std::to_string(bad) + " wrong");
}

Rational m0_vs_cp(int n) {
    if (n <= 5) return 2;
    if (n <= 9) return 3;
    if (n <= 13) return n - 6;
    return half(n + 1);
}

Rational m1_vs_cp(int n) {
    if (n <= 2) return half(7);
    if (n <= 5) return 6 - n;
    if (n == 6) return half(1);
    if (n <= 13) return n - 6;
    return half(n + 1);
}

void m_tables() {
    auto m0 = model("m:0"), m1 = model("m:1");
    std::size_t bad = 0;
    for (int n = 1; n <= 20; ++n) {
        auto c = model(cp(n, 1));
        bad += d_cohI_k(m0, c, 0) != ExtendedRational(m0_vs_cp(n));
        bad += d_cohI_k(m1, c, 0) != ExtendedRational(m1_vs_cp(n));
        bad += d_cohI_k(m0, c, 1) != ExtendedRational(2);
        bad += d_cohI_k(m1, c, 1) != ExtendedRational(2);
    }
    report(3, "M0 and M1 against CP^n for 1 <= n <= 20, both splits", bad == 0, "80 entries, " + std::to_string(bad) + " wrong");
}

void model_cohomology() {
    auto m1 = model("m:1");
    auto h1 = cohomology_ku(m1);
    auto lengths = [&](int k) {
        std::string s;
        Barcode bars = split_barcode(h1, k).sorted();
        for (const auto& b : bars.bars()) s += (s.empty() ? "" : ",") + b.length().str();
        return s;
    };
    std::string even = lengths(0), odd = lengths(1);
    long c0 = cup_k(cohomology_ku(model("m:0")), 0), c1 = cup_k(h1, 0);
    bool ok = (even == "7,1" || even == "1,7") && odd == "4,4" && c0 == 3 && c1 == 6 && m1.top() == 16;
    report(4, "M1 torsion orders and cup lengths", ok,
           "D=" + std::to_string(m1.top()) + ", even " + even + ", odd " + odd + ", cup(M0)=" + std::to_string(c0) + ", cup(M1)=" + std::to_string(c1));
}

void closed_forms() {
    Rng rng(5005);
    Field f = Field::rationals();
    std::size_t bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto m = trial < 100 ? random_dgku_formal(f, rng) : random_dgku(f, rng);
        auto h = cohomology_ku(m);
        for (int k = 0; k <= 1; ++k) {
            bad += distance_to_ground(h, k) != d_cohI_k(m, ground_module(f), k);
            bad += distance_to_ku_mod_u2(h, k) != d_cohI_k(m, ku_mod_u2_module(f), k);
        }
    }
    report(5, "closed forms against K and K[u]/(u^2) equal the engine", bad == 0,
           "200 modules, " + std::to_string(bad) + " mismatches");
}

void isometry_oracle() {
    Rng rng(6006);
    std::size_t bad = 0, infinite = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Barcode s = random_barcode(rng, 3), t = random_barcode(rng, 3);
        auto d = bottleneck_distance(s, t);
        bad += d != bottleneck_bruteforce(s, t);
        infinite += d.is_infinite();
    }
    report(6, "bottleneck matching equals brute force", bad == 0,
           "300 pairs, " + std::to_string(infinite) + " infinite, " + std::to_string(bad) + " mismatches");
}

void formality() {
    Rng rng(7007);
    std::size_t bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto x = random_dg_module(Field::rationals(), rng, 5, 5, 4);
        auto w = formality_witness(x);
        bad += !(verify_witness(x, w) && is_quasi_isomorphism(w.q, x, w.psi) && is_quasi_isomorphism(w.q, w.hx, w.g));
    }
    report(7, "formality witnesses are quasi-isomorphisms", bad == 0, "100 modules, " + std::to_string(bad) + " failed");
}

void totalization() {
    Rng rng(8008);
    std::size_t bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Barcode b = random_integer_barcode(rng, 5, 0, 6, false);
        bad += !(decompose(totalize(random_filtration(b, rng))) == b);
    }
    auto a = builtin("m:1");
    auto h = cohomology_ku(to_dgku(a));
    bool m1 = true;
    for (int k = 0; k <= 1; ++k) m1 = m1 && decompose(totalize(u_exponent_filtration(a, k))) == split_barcode(h, k);
    report(8, "totalization recovers the barcode", bad == 0 && m1,
           "100 filtrations, " + std::to_string(bad) + " failed; M1 u-exponent filtration " + (m1 ? "ok" : "differs"));
}

void sub_half() {
    Rng rng(9009);
    std::size_t below = 0, bad = 0, pairs = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto m = random_module(rng);
        auto n = trial % 3 == 0 ? change_basis(m, rng) : random_module(rng);
        auto hm = cohomology_ku(m), hn = cohomology_ku(n);
        for (int k = 0; k <= 1; ++k) {
            ++pairs;
            if (d_cohI_k(hm, hn, k) < ExtendedRational(half(1))) {
                ++below;
                bad += !(split_barcode(hm, k) == split_barcode(hn, k));
            }
        }
    }
    report(9, "distance below 1/2 forces equal split barcodes", bad == 0 && below > 0,
           std::to_string(pairs) + " pairs, " + std::to_string(below) + " below 1/2, " + std::to_string(bad) + " violations");
}

void sandwich() {
    Rng rng(10010);
    std::size_t checked = 0, bad = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto hm = cohomology_ku(random_module(rng)), hn = cohomology_ku(random_module(rng));
        if (is_ground(hm) || is_ground(hn)) continue;
        for (int k = 0; k <= 1; ++k) {
            auto b = cup_bounds(hm, hn, k);
            auto d = d_cohI_k(hm, hn, k);
            bad += !(b.lower && ExtendedRational(*b.lower) <= d && d <= ExtendedRational(b.upper));
            ++checked;
        }
    }
    auto m0 = cohomology_ku(model("m:0")), m1 = cohomology_ku(model("m:1")), c6 = cohomology_ku(model("cp:6:1"));
    auto b = cup_bounds(m0, m1, 0);
    auto d = d_cohI_k(m0, m1, 0);
    auto via_cp = d_cohI_k(m0, c6, 0).value() - d_cohI_k(m1, c6, 0).value();
    bool chain = b.lower && *b.lower == half(3) && b.upper == half(7) && d == ExtendedRational(3) &&
                 via_cp == Rational(3) - half(1) && ExtendedRational(via_cp) < d && d < ExtendedRational(b.upper);
    report(10, "cup-length bounds sandwich the distance", bad == 0 && chain,
           std::to_string(checked) + " instances, " + std::to_string(bad) + " violations; M0,M1: cup bounds " +
               (b.lower ? b.lower->str() : "-") + ".." + b.upper.str() + ", 3-1/2=" + via_cp.str() + " < " + d.str() +
               " < " + b.upper.str());
}

void infinite_separation() {
    bool ok = true;
    std::size_t loops = 0;
    for (const char* a : {"x_a:1", "x_a:-1", "x_a:2", "x_a:1/3"})
        for (const char* loop : {"loop", "loop:2", "loop:1,4"}) {
            std::string out = cli({"dist", a, loop});
            ok = ok && out.find(" d=inf\n") != std::string::npos;
        }
    Rng rng(11011);
    bool seen_zero = false, seen_half = false;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> da, db;
        for (int k = uniform(rng, 0, 3); k > 0; --k) da.push_back(uniform(rng, 0, 8));
        for (int k = uniform(rng, 0, 3); k > 0; --k) db.push_back(uniform(rng, 0, 8));
        if (trial % 4 == 0) db = da;
        auto ha = cohomology_ku(loop_shape_module(da)), hb = cohomology_ku(loop_shape_module(db));
        auto d = loop_shape_distance(ha, hb);
        bool same = split_barcode(ha, 0) == split_barcode(hb, 0) && split_barcode(ha, 1) == split_barcode(hb, 1);
        ok = ok && d == ExtendedRational(same ? Rational(0) : half(1)) && d == d_cohI(loop_shape_module(da), loop_shape_module(db));
        seen_zero = seen_zero || same;
        seen_half = seen_half || !same;
        ++loops;
    }
    report(11, "infinite bars separate, loop shapes sit at 0 or 1/2", ok && seen_zero && seen_half,
           "12 finite-vs-loop pairs, " + std::to_string(loops) + " loop-shape pairs");
}

void x_a_family() {
    const char* refs[] = {"x_a:1", "x_a:-1", "x_a:2", "x_a:1/3"};
    bool ok = true;
    for (const char* a : refs)
        for (const char* b : refs) ok = ok && d_cohI(model(a), model(b)) == ExtendedRational(0);
    report(12, "X_a family is at distance zero", ok, "16 pairs, a in {1,-1,2,1/3}");
}

void degree_shift() {
    Rng rng(13013);
    std::size_t bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto m = random_module(rng), n = random_module(rng);
        int l = uniform(rng, 0, 5);
        auto sm = regrade(m, l), sn = regrade(n, l);
        auto d0 = d_cohI_k(m, n, 0), d1 = d_cohI_k(m, n, 1);
        auto e0 = d_cohI_k(sm, sn, 0), e1 = d_cohI_k(sm, sn, 1);
        bad += l % 2 == 0 ? !(e0 == d0 && e1 == d1) : !(e0 == d1 && e1 == d0);
    }
    report(13, "even regrading keeps (d0,d1), odd regrading swaps them", bad == 0,
           "100 pairs, " + std::to_string(bad) + " violations");
}

}  // namespace

int main() {
    tetrahedron();
    cp_tables();
    m_tables();
    model_cohomology();
    closed_forms();
    isometry_oracle();
    formality();
    totalization();
    sub_half();
    sandwich();
    infinite_separation();
    x_a_family();
    degree_shift();
    return failures == 0 ? 0 : 1;
}
