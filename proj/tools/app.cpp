#include "app.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "cohid/catalogue.hpp"
#include "cohid/json_io.hpp"
#include "reference.hpp"
#include "verify.hpp"

namespace cohid::app {

using nlohmann::json;

namespace {

std::vector<int> parse_degrees(const std::string& list, const std::string& ref) {
    std::vector<int> out;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.size() > 6 || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad loop reference: " + ref);
        out.push_back(std::stoi(tok));
    }
    return out;
}

}  // namespace

ResolvedModule resolve(const std::string& ref, const Field& f, std::optional<int> trunc) {
    auto no_trunc = [&] {
        if (trunc) throw std::invalid_argument("--trunc applies only to model references, not " + ref);
    };
    if (!ref.empty() && ref[0] == '@') {
        json j = io::read_json_file(ref.substr(1));
        if (j.is_object() && j.contains("generators")) {
            FreeCdga a = io::model_from_json(j);
            return {to_dgku(a, trunc, f), a.tail().has_value()};
        }
        if (j.is_object() && j.contains("dims")) {
            no_trunc();
            return {io::dgku_from_json(j, f), true};
        }
        throw std::invalid_argument(ref + " is neither a model nor a dg K[u]-module");
    }
    if (ref == "loop") {
        no_trunc();
        return {loop_shape_module({}, f), true};
    }
    if (ref.rfind("loop:", 0) == 0) {
        no_trunc();
        return {loop_shape_module(parse_degrees(ref.substr(5), ref), f), true};
    }
    return {to_dgku(builtin(ref), trunc, f), true};
}

namespace {

struct Globals {
    Field field = Field::rationals();
    std::optional<int> trunc;
    bool json = false;
    std::uint64_t seed = 1;
};

// Left-aligned columns separated by two spaces.
void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows, bool as_json) {
    if (as_json) {
        json a = json::array();
        for (const auto& r : rows) {
            json o = json::object();
            for (std::size_t c = 0; c < header.size(); ++c) o[header[c]] = r[c];
            a.push_back(o);
        }
        out << a.dump(2) << "\n";
        return;
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t c = 0; c < r.size(); ++c) {
            s += r[c];
            if (c + 1 < r.size()) s += std::string(width[c] - r[c].size() + 2, ' ');
        }
        out << s << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
}

int cmd_barcode(const Globals& g, const std::string& ref, std::optional<int> k, std::ostream& out) {
    ResolvedModule m = resolve(ref, g.field, g.trunc);
    KuCohomology h = cohomology_ku(m.module);
    // Without a declared tail only bars ending by this split index are certified.
    int certified = (m.module.top() - 1) / 2;
    std::vector<int> ks = k ? std::vector<int>{*k} : std::vector<int>{0, 1};
    bool doubtful = false;
    std::map<int, Barcode> codes;
    for (int kk : ks) {
        codes[kk] = split_barcode(h, kk);
        for (const auto& bar : codes[kk].bars())
            doubtful = doubtful || (!m.declared_tail && bar.right > ExtendedRational(Rational(certified)));
    }
    if (g.json) {
        json o = {{"model", ref}};
        if (k) {
            o["k"] = *k;
            o["barcode"] = io::to_json(codes[*k]);
        } else {
            o["barcodes"] = {{"0", io::to_json(codes[0])}, {"1", io::to_json(codes[1])}};
        }
        if (!m.declared_tail) o["certified_through"] = certified;
        out << o.dump(2) << "\n";
        return 0;
    }
    if (k)
        out << codes[*k].str() << "\n";
    else
        for (int kk : ks) out << "k=" << kk << ": " << codes[kk].str() << "\n";
    if (doubtful) out << "note: bars ending after " << certified << " may be truncation artifacts\n";
    return 0;
}

Barcode read_barcode(const std::string& path) {
    json j = io::read_json_file(!path.empty() && path[0] == '@' ? path.substr(1) : path);
    if (j.is_object() && j.contains("barcode")) return io::barcode_from_json(j.at("barcode"));
    return io::barcode_from_json(j);
}

int cmd_bottleneck(const Globals& g, const std::string& a, const std::string& b, std::ostream& out) {
    ExtendedRational d = bottleneck_distance(read_barcode(a), read_barcode(b));
    if (g.json)
        out << json{{"distance", d.str()}}.dump(2) << "\n";
    else
        out << d.str() << "\n";
    return 0;
}

int cmd_dist(const Globals& g, const std::string& a, const std::string& b, std::ostream& out) {
    KuCohomology ha = cohomology_ku(resolve(a, g.field, g.trunc).module);
    KuCohomology hb = cohomology_ku(resolve(b, g.field, g.trunc).module);
    ExtendedRational d0 = d_cohI_k(ha, hb, 0), d1 = d_cohI_k(ha, hb, 1), d = max(d0, d1);
    if (g.json)
        out << json{{"d0", d0.str()}, {"d1", d1.str()}, {"d", d.str()}}.dump(2) << "\n";
    else
        out << "d0=" << d0.str() << " d1=" << d1.str() << " d=" << d.str() << "\n";
    return 0;
}

std::vector<int> range_or(std::optional<int> v, int hi) {
    if (v) {
        if (*v < 1) throw std::invalid_argument("table parameters must be at least 1");
        return {*v};
    }
    std::vector<int> r;
    for (int i = 1; i <= hi; ++i) r.push_back(i);
    return r;
}

int cmd_table(const Globals& g, const std::string& name, std::optional<int> n, std::optional<int> m,
              const std::string& j, std::ostream& out) {
    std::vector<std::vector<std::string>> rows;
    bool all_ok = true;
    auto split_distance = [&](const std::string& a, const std::string& b, int k) {
        return d_cohI_k(resolve(a, g.field, g.trunc).module, resolve(b, g.field, g.trunc).module, k);
    };
    auto verdict = [&](const ExtendedRational& got, const std::optional<Rational>& want) {
        if (!want) return std::string("-");
        bool ok = got == ExtendedRational(*want);
        all_ok = all_ok && ok;
        return std::string(ok ? "yes" : "NO");
    };
    std::vector<std::string> header;
    if (name == "tetra") {
        header = {"a", "b", "d", "expected", "match"};
        for (const auto& e : tetrahedron()) {
            ExtendedRational d = max(split_distance(e.a, e.b, 0), split_distance(e.a, e.b, 1));
            rows.push_back({e.a, e.b, d.str(), e.value.str(), verdict(d, e.value)});
        }
    } else if (name == "cp") {
        if (j != "0" && j != "1" && j != "mixed") throw std::invalid_argument("--j must be 0, 1 or mixed");
        header = {"n", "m", "j", "d0", "expected", "match"};
        for (int a : range_or(n, 12))
            for (int b : (j == "mixed" && !m) ? std::vector<int>{a} : range_or(m, 12)) {
                std::string left = "cp:" + std::to_string(a) + ":" + (j == "mixed" ? "0" : j);
                std::string right = "cp:" + std::to_string(b) + ":" + (j == "mixed" ? "1" : j);
                ExtendedRational d = split_distance(left, right, 0);
                std::optional<Rational> want;
                if (j == "1") want = cp_same_map(a, b);
                if (j == "0") want = cp_trivial_map(a, b);
                if (j == "mixed" && a == b) want = cp_mixed(a);
                rows.push_back({std::to_string(a), std::to_string(b), j, d.str(), want ? want->str() : "-",
                                verdict(d, want)});
            }
    } else if (name == "mcp") {
        header = {"model", "n", "d0", "expected", "d1", "expected1", "match"};
        for (int a : range_or(n, 20))
            for (int mj = 0; mj <= 1; ++mj) {
                std::string model = "m:" + std::to_string(mj), cp = "cp:" + std::to_string(a) + ":1";
                ExtendedRational d0 = split_distance(model, cp, 0), d1 = split_distance(model, cp, 1);
                Rational w0 = m_vs_cp(mj, a), w1 = m_vs_cp_odd(mj, a);
                bool ok = d0 == ExtendedRational(w0) && d1 == ExtendedRational(w1);
                all_ok = all_ok && ok;
                rows.push_back({"M" + std::to_string(mj), std::to_string(a), d0.str(), w0.str(), d1.str(), w1.str(),
                                ok ? "yes" : "NO"});
            }
    } else {
        throw std::invalid_argument("unknown table: " + name);
    }
    print_table(out, header, rows, g.json);
    return all_ok ? 0 : 1;
}

int cmd_totalize(const Globals& g, const std::string& path, std::ostream& out) {
    FilteredKtModule fm = io::filtered_from_json(io::read_json_file(!path.empty() && path[0] == '@' ? path.substr(1) : path), g.field);
    Barcode tot = decompose(totalize(fm)), orig = decompose(fm.module);
    bool equal = tot == orig;
    if (g.json)
        out << json{{"tot", io::to_json(tot)}, {"module", io::to_json(orig)}, {"equal", equal}}.dump(2) << "\n";
    else
        out << "tot: " << tot.str() << "\nmodule: " << orig.str() << "\nequal: " << (equal ? "yes" : "no") << "\n";
    return 0;
}

int cmd_verify(const Globals& g, const std::string& suite, const std::string& mutate, std::ostream& out) {
    VerifyOptions opts{suite, g.seed, mutate, g.field};
    auto results = run_suite(opts);
    std::size_t failed = 0;
    for (const auto& r : results) failed += !r.passed;
    if (g.json) {
        json a = json::array();
        for (const auto& r : results)
            a.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
        out << json{{"suite", suite}, {"seed", g.seed}, {"results", a}, {"failed", failed}}.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            out << (r.passed ? "PASS  " : "FAIL  ") << r.name << " (" << r.cases << " cases)";
            if (!r.passed) out << ": " << r.detail;
            out << "\n";
        }
        out << results.size() << " checks, " << failed << " failed\n";
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact barcodes and cohomology interleaving distances over K[u]"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string field = "q", format = "text";
    int trunc = 0;
    std::uint64_t seed = 1;
    app.add_option("--field", field, "q or fp:<p>");
    CLI::Option* trunc_opt = app.add_option("--trunc", trunc, "truncation degree for model references");
    app.add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", seed, "seed for verify");

    std::string model, a, b, table_name, j = "1", suite, mutate;
    int k = 0, n = 0, m = 0;
    auto* barcode = app.add_subcommand("barcode", "k-split barcodes of a module");
    barcode->add_option("--model", model, "module reference")->required();
    CLI::Option* k_opt = barcode->add_option("--k", k)->check(CLI::Range(0, 1));
    auto* bottleneck = app.add_subcommand("bottleneck", "bottleneck distance of two barcode files");
    bottleneck->add_option("a", a)->required();
    bottleneck->add_option("b", b)->required();
    auto* dist = app.add_subcommand("dist", "d0, d1 and d_CohI of two modules");
    dist->add_option("a", a)->required();
    dist->add_option("b", b)->required();
    auto* table = app.add_subcommand("table", "reproduce a distance table: cp, mcp or tetra");
    table->add_option("name", table_name)->required()->check(CLI::IsMember({"cp", "mcp", "tetra"}));
    CLI::Option* n_opt = table->add_option("--n", n);
    CLI::Option* m_opt = table->add_option("--m", m);
    table->add_option("--j", j, "0, 1 or mixed");
    auto* tot = app.add_subcommand("totalize", "totalization of a filtered K[t]-module file");
    tot->add_option("file", a)->required();
    auto* verify = app.add_subcommand("verify", "randomized invariant suites: fast or full");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember({"fast", "full"}));
    verify->add_option("--mutate", mutate, "perturb a closed form: ground, ku2 or cup");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    try {
        Globals g;
        g.field = Field::parse(field);
        if (trunc_opt->count()) g.trunc = trunc;
        g.json = format == "json";
        g.seed = seed;
        auto opt = [](CLI::Option* o, int v) { return o->count() ? std::optional<int>(v) : std::nullopt; };
        if (barcode->parsed()) return cmd_barcode(g, model, opt(k_opt, k), out);
        if (bottleneck->parsed()) return cmd_bottleneck(g, a, b, out);
        if (dist->parsed()) return cmd_dist(g, a, b, out);
        if (table->parsed()) return cmd_table(g, table_name, opt(n_opt, n), opt(m_opt, m), j, out);
        if (tot->parsed()) return cmd_totalize(g, a, out);
        if (verify->parsed()) return cmd_verify(g, suite, mutate, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace cohid::app
