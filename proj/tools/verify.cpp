#include "verify.hpp"

#include <sstream>
#include <stdexcept>

#include "cohid/catalogue.hpp"
#include "cohid/fiber.hpp"
#include "cohid/formality.hpp"
#include "cohid/random.hpp"

namespace cohid::app {

namespace {

using Case = std::function<std::string(Rng&, const VerifyOptions&)>;

// Runs count trials; a trial returns a non-empty string to report a failure.
CheckResult trials(const std::string& name, std::size_t count, std::uint64_t seed, const VerifyOptions& opts,
                   const Case& body) {
    CheckResult r{name, true, 0, ""};
    Rng rng(seed);
    for (std::size_t c = 0; c < count; ++c) {
        std::string failure;
        try {
            failure = body(rng, opts);
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        ++r.cases;
        if (!failure.empty()) {
            r.passed = false;
            r.detail = "trial " + std::to_string(c) + ": " + failure;
            break;
        }
    }
    return r;
}

std::string differ(const std::string& what, const std::string& a, const std::string& b) {
    return what + ": " + a + " vs " + b;
}

Rational random_rational(Rng& rng) {
    int q = uniform(rng, 1, 9);
    return Rational(uniform(rng, -20, 20), q);
}

std::string check_rank_transpose(Rng& rng, const VerifyOptions& o) {
    Field f = uniform(rng, 0, 1) ? o.field : Field::prime(7);
    Matrix m = random_matrix(f, uniform(rng, 0, 5), uniform(rng, 0, 5), rng);
    if (rank(m) != rank(m.transpose())) return "rank differs from rank of transpose for " + m.str();
    return "";
}

std::string check_kernel(Rng& rng, const VerifyOptions& o) {
    Field f = uniform(rng, 0, 1) ? o.field : Field::prime(5);
    Matrix m = random_matrix(f, uniform(rng, 1, 5), uniform(rng, 1, 6), rng, 1);
    auto ker = kernel_basis(m);
    if (ker.size() + rank(m) != m.cols()) return "kernel dimension plus rank differs from cols for " + m.str();
    for (const auto& v : ker)
        if (!is_zero(m * v)) return "kernel vector not killed for " + m.str();
    if (rank(Matrix::from_columns(f, m.cols(), ker)) != ker.size()) return "kernel basis is dependent";
    return "";
}

std::string check_solve(Rng& rng, const VerifyOptions& o) {
    Matrix m = random_matrix(o.field, uniform(rng, 1, 5), uniform(rng, 1, 5), rng, 1);
    Vector b = uniform(rng, 0, 1) ? m * random_matrix(o.field, m.cols(), 1, rng).column(0)
                                  : random_matrix(o.field, m.rows(), 1, rng).column(0);
    auto x = solve(m, b);
    bool consistent = rank(hstack(m, Matrix::from_columns(o.field, m.rows(), {b}))) == rank(m);
    if (x.has_value() != consistent) return "solvability misreported for " + m.str();
    if (x && !(m * *x == b)) return "solution does not satisfy m x = b";
    return "";
}

std::string check_rational_axioms(Rng& rng, const VerifyOptions&) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    if (!((a + b) + c == a + (b + c))) return "addition not associative";
    if (!((a * b) * c == a * (b * c))) return "multiplication not associative";
    if (!(a * b == b * a) || !(a + b == b + a)) return "not commutative";
    if (!(a * (b + c) == a * b + a * c)) return "not distributive";
    if (!b.is_zero() && !((a / b) * b == a)) return "division does not invert multiplication";
    return "";
}

std::string check_pseudometric(Rng& rng, const VerifyOptions&) {
    Barcode s = random_barcode(rng, 4), t = random_barcode(rng, 4), u = random_barcode(rng, 4);
    if (!(bottleneck_distance(s, s) == ExtendedRational(Rational(0)))) return "d(S,S) != 0 for " + s.str();
    ExtendedRational st = bottleneck_distance(s, t), ts = bottleneck_distance(t, s);
    if (!(st == ts)) return differ("asymmetric", st.str(), ts.str());
    ExtendedRational su = bottleneck_distance(s, u), tu = bottleneck_distance(t, u);
    if (su > st + tu) return "triangle inequality fails for " + s.str() + " | " + t.str() + " | " + u.str();
    return "";
}

std::string check_oracle(Rng& rng, const VerifyOptions&) {
    Barcode s = random_barcode(rng, 3), t = random_barcode(rng, 3);
    ExtendedRational fast = bottleneck_distance(s, t), slow = bottleneck_bruteforce(s, t);
    if (!(fast == slow)) return differ(s.str() + " | " + t.str(), fast.str(), slow.str());
    return "";
}

std::string check_monotone(Rng& rng, const VerifyOptions&) {
    Barcode s = random_barcode(rng, 4), t = random_barcode(rng, 4);
    Rational e1(uniform(rng, 0, 12), 2), e2 = e1 + Rational(uniform(rng, 0, 4), 2);
    if (is_interleaved(s, t, e1) && !is_interleaved(s, t, e2)) return "feasibility lost when eps grows";
    return "";
}

std::string check_round_trip(Rng& rng, const VerifyOptions& o) {
    Barcode b = random_integer_barcode(rng, 5, -2, 5, true);
    Barcode back = decompose(change_basis(realize(b, o.field), rng));
    if (!(back == b)) return differ("round trip", b.str(), back.str());
    return "";
}

std::string check_formality(Rng& rng, const VerifyOptions& o) {
    PersistenceDgModule x = random_dg_module(o.field, rng);
    FormalityWitness w = formality_witness(x);
    if (!verify_witness(x, w)) return "witness does not induce homology isomorphisms";
    return "";
}

std::string check_homology_invariance(Rng& rng, const VerifyOptions& o) {
    PersistenceDgModule x = random_dg_module(o.field, rng), y = random_dg_module(o.field, rng);
    ExtendedRational direct = d_cohI_persistence(x, y);
    ExtendedRational via = d_cohI_persistence(PersistenceDgModule::from_modules(homology(x)),
                                              PersistenceDgModule::from_modules(homology(y)));
    if (!(direct == via)) return differ("distance changes under passage to homology", direct.str(), via.str());
    return "";
}

std::string check_interleaving_bound(Rng& rng, const VerifyOptions& o) {
    PersistenceModule m = change_basis(realize(random_integer_barcode(rng, 4, 0, 4, true), o.field), rng);
    int eps = uniform(rng, 0, 2);
    std::vector<Matrix> p;
    std::vector<Matrix> pinv;
    for (int i = m.lo(); i <= m.hi(); ++i) {
        p.push_back(random_invertible(o.field, m.dim(i), rng));
        pinv.push_back(*inverse(p.back()));
    }
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < m.maps().size(); ++k) maps.push_back(p[k + 1] * m.maps()[k] * pinv[k]);
    PersistenceModule n(o.field, m.lo(), m.hi(), m.dims(), maps, m.tail());
    NatTransformation phi{eps, {}}, psi{eps, {}};
    for (int i = m.lo(); i <= m.hi(); ++i) {
        std::size_t k = static_cast<std::size_t>(i - m.lo());
        phi.components.push_back(n.composite(i, i + eps) * p[k]);
        psi.components.push_back(m.composite(i, i + eps) * pinv[k]);
    }
    if (!verify_interleaving(m, n, phi, psi, eps)) return "valid interleaving rejected";
    if (bottleneck_distance(decompose(m), decompose(n)) > ExtendedRational(Rational(eps)))
        return "interleaved modules farther apart than eps";
    return "";
}

ExtendedRational mutated(ExtendedRational v, bool on) { return on ? v + ExtendedRational(Rational(1, 2)) : v; }

std::string check_closed_forms(Rng& rng, const VerifyOptions& o) {
    KuCohomology h = cohomology_ku(random_dgku_formal(o.field, rng));
    KuCohomology ground = cohomology_ku(ground_module(o.field)), ku2 = cohomology_ku(ku_mod_u2_module(o.field));
    for (int k = 0; k <= 1; ++k) {
        ExtendedRational cf = mutated(distance_to_ground(h, k), o.mutate == "ground");
        ExtendedRational engine = d_cohI_k(h, ground, k);
        if (!(cf == engine))
            return differ("distance to the ground field, k=" + std::to_string(k) + " on " + split_barcode(h, k).str(),
                          cf.str(), engine.str());
        cf = mutated(distance_to_ku_mod_u2(h, k), o.mutate == "ku2");
        engine = d_cohI_k(h, ku2, k);
        if (!(cf == engine))
            return differ("distance to K[u]/(u^2), k=" + std::to_string(k) + " on " + split_barcode(h, k).str(),
                          cf.str(), engine.str());
    }
    return "";
}

std::string check_degree_shift(Rng& rng, const VerifyOptions& o) {
    DgKuModule m = random_dgku(o.field, rng), n = random_dgku(o.field, rng);
    int l = uniform(rng, 0, 3);
    DgKuModule ms = regrade(m, l), ns = regrade(n, l);
    ExtendedRational d0 = d_cohI_k(m, n, 0), d1 = d_cohI_k(m, n, 1);
    ExtendedRational s0 = d_cohI_k(ms, ns, 0), s1 = d_cohI_k(ms, ns, 1);
    bool ok = l % 2 == 0 ? (d0 == s0 && d1 == s1) : (d0 == s1 && d1 == s0);
    if (!ok)
        return "shift by " + std::to_string(l) + ": (" + d0.str() + "," + d1.str() + ") became (" + s0.str() + "," +
               s1.str() + ")";
    return "";
}

std::string check_sub_half(Rng& rng, const VerifyOptions& o) {
    DgKuModule m = random_dgku(o.field, rng);
    DgKuModule n = uniform(rng, 0, 1) ? change_basis(m, rng) : random_dgku(o.field, rng);
    KuCohomology hm = cohomology_ku(m), hn = cohomology_ku(n);
    for (int k = 0; k <= 1; ++k)
        if (d_cohI_k(hm, hn, k) < ExtendedRational(Rational(1, 2)) && !(split_barcode(hm, k) == split_barcode(hn, k)))
            return "distance below 1/2 with different barcodes " + split_barcode(hm, k).str() + " | " +
                   split_barcode(hn, k).str();
    return "";
}

std::string check_sandwich(Rng& rng, const VerifyOptions& o) {
    KuCohomology hm = cohomology_ku(random_dgku(o.field, rng)), hn = cohomology_ku(random_dgku(o.field, rng));
    if (is_ground(hm) || is_ground(hn)) return "";
    for (int k = 0; k <= 1; ++k) {
        CupBounds b = cup_bounds(hm, hn, k);
        if (o.mutate == "cup") b.upper = b.upper - Rational(1, 2);
        ExtendedRational d = d_cohI_k(hm, hn, k);
        if (ExtendedRational(*b.lower) > d || d > ExtendedRational(b.upper))
            return "bounds " + b.lower->str() + " <= " + d.str() + " <= " + b.upper.str() + " violated for " +
                   split_barcode(hm, k).str() + " | " + split_barcode(hn, k).str();
    }
    return "";
}

std::string check_totalization(Rng& rng, const VerifyOptions& o) {
    Barcode b = random_integer_barcode(rng, 5, 0, 6, false);
    FilteredKtModule fm = random_filtration(b, rng, o.field);
    Barcode tot = decompose(totalize(fm));
    if (!(tot == b)) return differ("totalization", b.str(), tot.str());
    return "";
}

std::string check_representatives(Rng& rng, const VerifyOptions& o) {
    DgKuModule m = random_dgku(o.field, rng);
    KuCohomology h = cohomology_ku(m);
    for (int n = 0; n + 2 <= h.top; ++n) {
        const auto& reps = h.spaces[static_cast<std::size_t>(n)].representatives();
        for (std::size_t j = 0; j < reps.size(); ++j) {
            Vector r = reps[j];
            if (n >= 1) {
                Matrix dprev = m.d_at(n - 1);
                Vector shift = dprev * random_matrix(o.field, dprev.cols(), 1, rng).column(0);
                for (std::size_t c = 0; c < r.size(); ++c) r[c] = r[c] + shift[c];
            }
            Vector image = h.spaces[static_cast<std::size_t>(n + 2)].coords(m.u_at(n) * r);
            if (!(image == h.u_action[static_cast<std::size_t>(n)].column(j)))
                return "u-action depends on the representative in degree " + std::to_string(n);
        }
    }
    return "";
}

std::string check_infinite_separation(Rng& rng, const VerifyOptions& o) {
    DgKuModule m = random_dgku(o.field, rng);
    std::vector<int> units;
    for (int c = uniform(rng, 0, 3); c > 0; --c) units.push_back(uniform(rng, 0, 8));
    ExtendedRational d = d_cohI(m, loop_shape_module(units, o.field));
    if (!d.is_infinite()) return "finite distance " + d.str() + " to a module with an infinite bar";
    return "";
}

std::string check_e2_collapse(Rng& rng, const VerifyOptions&) {
    FiberSignature a, b;
    for (auto* s : {&a, &b}) {
        int top = uniform(rng, 0, 7);
        for (int l = 0; l <= top; ++l) s->dims.push_back(static_cast<std::size_t>(uniform(rng, 0, 3) == 0 ? 1 : 0));
    }
    int k = uniform(rng, 0, 1);
    Barcode ba = collapse_barcode(a, k), bb = collapse_barcode(b, k);
    ExtendedRational oracle = ba.size() + bb.size() <= 8 ? bottleneck_bruteforce(ba, bb) : bottleneck_distance(ba, bb);
    ExtendedRational sorted = e2_collapse_distance(a, b, k);
    if (!(oracle == sorted)) return differ("collapse distance " + ba.str() + " | " + bb.str(), sorted.str(), oracle.str());
    return "";
}

std::string check_graded_commutativity(Rng& rng, const VerifyOptions&) {
    FreeCdga a = uniform(rng, 0, 1) ? m_model(1) : x_a_model(Rational(1));
    auto random_monomial = [&] {
        Monomial m = a.unit();
        for (std::size_t g = 0; g < m.size(); ++g) m[g] = a.generators()[g].degree % 2 ? uniform(rng, 0, 1) : uniform(rng, 0, 2);
        return m;
    };
    Monomial x = random_monomial(), y = random_monomial();
    auto [sxy, pxy] = a.multiply(x, y);
    auto [syx, pyx] = a.multiply(y, x);
    int expected = (a.degree(x) * a.degree(y)) % 2 ? -1 : 1;
    if (sxy != expected * syx || (sxy != 0 && pxy != pyx))
        return "xy != (-1)^{|x||y|} yx for " + a.str(x) + " and " + a.str(y);
    return "";
}

CheckResult catalogue_regression(const VerifyOptions& o) {
    CheckResult r{"catalogue barcodes", true, 0, ""};
    auto expect = [&](const std::string& ref, int k, const Barcode& want) {
        ++r.cases;
        if (!r.passed) return;
        try {
            Barcode got = split_barcode(cohomology_ku(to_dgku(builtin(ref), std::nullopt, o.field)), k);
            if (!(got == want)) {
                r.passed = false;
                r.detail = ref + " k=" + std::to_string(k) + ": " + got.str() + " vs expected " + want.str();
            }
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = ref + ": " + e.what();
        }
    };
    auto bar = [](int a, int b) { return Bar(Rational(a), Rational(b)); };
    for (int n = 1; n <= 4; ++n) {
        Barcode units;
        for (int i = 0; i <= n; ++i) units.add(bar(i, i + 1));
        expect("cp:" + std::to_string(n) + ":0", 0, units);
        expect("cp:" + std::to_string(n) + ":1", 0, {bar(0, n + 1)});
    }
    expect("m:0", 0, {bar(0, 4), bar(3, 7)});
    expect("m:0", 1, {bar(1, 5), bar(1, 5)});
    expect("m:1", 0, {bar(0, 7), bar(3, 4)});
    expect("m:1", 1, {bar(1, 5), bar(1, 5)});
    // Over F_p the family is only the same family when a is a unit mod p.
    for (Rational a : {Rational(1), Rational(-1), Rational(2), Rational(1, 3)}) {
        bool unit = o.field.is_rational() || (a.numerator() % static_cast<long>(o.field.characteristic()) != 0 &&
                                              a.denominator() % static_cast<long>(o.field.characteristic()) != 0);
        if (unit) expect("x_a:" + a.str(), 0, {bar(0, 3), bar(1, 2)});
    }
    return r;
}

std::vector<Check> make_checks() {
    auto wrap = [](const std::string& name, Case body) {
        return [name, body](std::size_t count, std::uint64_t seed, const VerifyOptions& o) {
            return trials(name, count, seed, o, body);
        };
    };
    std::vector<std::tuple<std::string, std::size_t, std::size_t, Case>> entries{
        {"rank equals rank of the transpose", 40, 200, check_rank_transpose},
        {"kernel dimension plus rank equals column count", 40, 200, check_kernel},
        {"solve returns exact solutions", 40, 200, check_solve},
        {"rational arithmetic is a field", 100, 500, check_rational_axioms},
        {"bottleneck distance is a pseudometric", 40, 200, check_pseudometric},
        {"bottleneck matching agrees with brute force", 60, 300, check_oracle},
        {"interleaving feasibility is monotone", 40, 200, check_monotone},
        {"decompose inverts realize under basis change", 30, 100, check_round_trip},
        {"formality witness gives homology isomorphisms", 20, 100, check_formality},
        {"dbg distance depends only on homology", 20, 100, check_homology_invariance},
        {"interleaving certificates bound the bottleneck distance", 30, 100, check_interleaving_bound},
        {"closed forms match the matching engine", 50, 200, check_closed_forms},
        {"regrading preserves or swaps the splits", 30, 100, check_degree_shift},
        {"distance below one half forces equal barcodes", 30, 100, check_sub_half},
        {"cup-length bounds sandwich the distance", 30, 100, check_sandwich},
        {"totalization preserves the barcode", 30, 100, check_totalization},
        {"u-action is independent of representatives", 30, 100, check_representatives},
        {"infinite bars force infinite distance", 20, 100, check_infinite_separation},
        {"sorted pairing solves the collapse assignment", 50, 200, check_e2_collapse},
        {"products are graded commutative", 50, 300, check_graded_commutativity},
    };
    std::vector<Check> out;
    for (auto& [name, fast, full, body] : entries) out.push_back({name, fast, full, wrap(name, body)});
    out.push_back({"catalogue barcodes", 1, 1, [](std::size_t, std::uint64_t, const VerifyOptions& o) {
                       return catalogue_regression(o);
                   }});
    return out;
}

}  // namespace

const std::vector<Check>& checks() {
    static const std::vector<Check> all = make_checks();
    return all;
}

CheckResult run_check(const std::string& name, std::size_t count, const VerifyOptions& opts) {
    const auto& all = checks();
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i].name == name) return all[i].run(count, opts.seed * 1000003ULL + i, opts);
    throw std::invalid_argument("unknown check: " + name);
}

std::vector<CheckResult> run_suite(const VerifyOptions& opts) {
    if (opts.suite != "fast" && opts.suite != "full") throw std::invalid_argument("unknown suite: " + opts.suite);
    if (!opts.mutate.empty() && opts.mutate != "ground" && opts.mutate != "ku2" && opts.mutate != "cup")
        throw std::invalid_argument("unknown mutation: " + opts.mutate);
    std::vector<CheckResult> out;
    for (const auto& c : checks()) out.push_back(run_check(c.name, opts.suite == "fast" ? c.fast_count : c.full_count, opts));
    return out;
}

}  // namespace cohid::app
