#include "cohid/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cohid::io {

namespace {

const json& field_of(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
    return j.at(key);
}

int int_of(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw std::invalid_argument(what + " must be an integer");
    return j.get<int>();
}

std::size_t count_of(const json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw std::invalid_argument(what + " must be a count");
    return j.get<std::size_t>();
}

const json& array_of(const json& j, std::size_t n, const std::string& what) {
    if (!j.is_array()) throw std::invalid_argument(what + " must be an array");
    if (j.size() != n)
        throw std::invalid_argument(what + " must have " + std::to_string(n) + " entries, got " +
                                    std::to_string(j.size()));
    return j;
}

Vector vector_from_json(const json& j, std::size_t n, const Field& f, const std::string& what) {
    array_of(j, n, what);
    Vector v;
    for (const auto& x : j) v.emplace_back(f, rational_from_json(x));
    return v;
}

json vector_to_json(const Vector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.to_rational().str());
    return a;
}

json tail_to_json(const KuTailSpec& t) {
    return {{"kind", t.kind == KuTail::zero_above ? "zero" : "u_periodic"}, {"above", t.above}};
}

KuTailSpec tail_from_json(const json& j) {
    KuTailSpec t;
    std::string kind = field_of(j, "kind").get<std::string>();
    if (kind == "zero")
        t.kind = KuTail::zero_above;
    else if (kind == "u_periodic")
        t.kind = KuTail::u_periodic_above;
    else
        throw std::invalid_argument("unknown tail kind: " + kind);
    t.above = int_of(field_of(j, "above"), "tail.above");
    return t;
}

// Terms with a repeated odd generator vanish and are dropped.
Polynomial polynomial_from_json(const std::vector<Generator>& gens, const json& j, const std::string& what) {
    if (!j.is_array()) throw std::invalid_argument(what + " must be a list of [coefficient, monomial] pairs");
    FreeCdga alg(gens, {}, {}, 2);
    Polynomial p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2 || !term[1].is_string())
            throw std::invalid_argument(what + ": each term is [coefficient, \"monomial\"]");
        Monomial m = alg.parse_monomial(term[1].get<std::string>());
        bool vanishes = false;
        for (std::size_t i = 0; i < m.size(); ++i) vanishes = vanishes || (gens[i].degree % 2 == 1 && m[i] > 1);
        if (vanishes) continue;
        p = add(p, monomial_poly(m, rational_from_json(term[0])));
    }
    return p;
}

}  // namespace

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw std::invalid_argument("expected a rational string, got " + j.dump());
}

ExtendedRational extended_from_json(const json& j) {
    if (j.is_string()) return ExtendedRational::parse(j.get<std::string>());
    return ExtendedRational(rational_from_json(j));
}

json to_json(const Barcode& b) {
    json a = json::array();
    Barcode ordered = b.sorted();
    for (const auto& bar : ordered.bars()) a.push_back({bar.left.str(), bar.right.str()});
    return a;
}

Barcode barcode_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("barcode must be a list of [left, right] pairs");
    Barcode b;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("bar must be a two-element array");
        ExtendedRational left = extended_from_json(e[0]);
        if (left.is_infinite()) throw std::invalid_argument("bar with infinite left endpoint is not representable");
        b.add(Bar(left.value(), extended_from_json(e[1])));
    }
    return b;
}

json to_json(const Matrix& m) {
    json a = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vector_to_json(m.row(r)));
    return a;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const Field& f) {
    array_of(j, rows, "matrix");
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Vector v = vector_from_json(j[r], cols, f, "matrix row");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[c];
    }
    return m;
}

json to_json(const PersistenceModule& m) {
    json maps = json::array();
    for (const auto& x : m.maps()) maps.push_back(to_json(x));
    return {{"window", {m.lo(), m.hi()}}, {"dims", m.dims()}, {"maps", maps}, {"tail", tail_name(m.tail())}};
}

PersistenceModule persistence_module_from_json(const json& j, const Field& f) {
    const json& w = array_of(field_of(j, "window"), 2, "window");
    int lo = int_of(w[0], "window[0]"), hi = int_of(w[1], "window[1]");
    if (hi < lo) throw std::invalid_argument("window must satisfy lo <= hi");
    std::size_t n = static_cast<std::size_t>(hi - lo + 1);
    const json& jd = array_of(field_of(j, "dims"), n, "dims");
    std::vector<std::size_t> dims;
    for (const auto& x : jd) dims.push_back(count_of(x, "dims entry"));
    const json& jm = array_of(field_of(j, "maps"), n - 1, "maps");
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k + 1 < n; ++k) maps.push_back(matrix_from_json(jm[k], dims[k + 1], dims[k], f));
    Tail tail = j.contains("tail") ? parse_tail(j.at("tail").get<std::string>()) : Tail::zero;
    return PersistenceModule(f, lo, hi, std::move(dims), std::move(maps), tail);
}

json to_json(const PersistenceDgModule& x) {
    json dims = json::array(), d = json::array(), t = json::array();
    for (int i = x.ilo(); i <= x.ihi(); ++i) {
        json dc = json::array(), dd = json::array(), tt = json::array();
        for (int n = x.nlo(); n <= x.nhi(); ++n) {
            dc.push_back(x.dim(i, n));
            if (n < x.nhi()) dd.push_back(to_json(x.d(i, n)));
            if (i < x.ihi()) tt.push_back(to_json(x.t(i, n)));
        }
        dims.push_back(dc);
        d.push_back(dd);
        if (i < x.ihi()) t.push_back(tt);
    }
    return {{"window_i", {x.ilo(), x.ihi()}}, {"window_n", {x.nlo(), x.nhi()}}, {"dims", dims}, {"d", d},
            {"t", t}, {"tail", tail_name(x.tail())}};
}

PersistenceDgModule persistence_dg_from_json(const json& j, const Field& f) {
    const json& wi = array_of(field_of(j, "window_i"), 2, "window_i");
    const json& wn = array_of(field_of(j, "window_n"), 2, "window_n");
    int ilo = int_of(wi[0], "window_i[0]"), ihi = int_of(wi[1], "window_i[1]");
    int nlo = int_of(wn[0], "window_n[0]"), nhi = int_of(wn[1], "window_n[1]");
    if (ihi < ilo || nhi < nlo) throw std::invalid_argument("windows must satisfy lo <= hi");
    std::size_t ni = static_cast<std::size_t>(ihi - ilo + 1), nn = static_cast<std::size_t>(nhi - nlo + 1);
    const json& jd = array_of(field_of(j, "dims"), ni, "dims");
    std::vector<std::vector<std::size_t>> dims;
    for (const auto& col : jd) {
        array_of(col, nn, "dims column");
        std::vector<std::size_t> c;
        for (const auto& x : col) c.push_back(count_of(x, "dims entry"));
        dims.push_back(std::move(c));
    }
    const json& jdd = array_of(field_of(j, "d"), ni, "d");
    const json& jt = array_of(field_of(j, "t"), ni - 1, "t");
    std::vector<std::vector<Matrix>> d, t;
    for (std::size_t a = 0; a < ni; ++a) {
        array_of(jdd[a], nn - 1, "d column");
        std::vector<Matrix> dc;
        for (std::size_t b = 0; b + 1 < nn; ++b)
            dc.push_back(matrix_from_json(jdd[a][b], dims[a][b + 1], dims[a][b], f));
        d.push_back(std::move(dc));
        if (a + 1 < ni) {
            array_of(jt[a], nn, "t column");
            std::vector<Matrix> tc;
            for (std::size_t b = 0; b < nn; ++b) tc.push_back(matrix_from_json(jt[a][b], dims[a + 1][b], dims[a][b], f));
            t.push_back(std::move(tc));
        }
    }
    Tail tail = j.contains("tail") ? parse_tail(j.at("tail").get<std::string>()) : Tail::zero;
    return PersistenceDgModule(f, ilo, ihi, nlo, nhi, std::move(dims), std::move(d), std::move(t), tail);
}

json to_json(const DgKuModule& m) {
    json d = json::array(), u = json::array();
    for (const auto& x : m.d()) d.push_back(to_json(x));
    for (const auto& x : m.u()) u.push_back(to_json(x));
    return {{"window", {0, m.top()}}, {"dims", m.dims()}, {"d", d}, {"u", u}, {"tail", tail_to_json(m.tail())}};
}

DgKuModule dgku_from_json(const json& j, const Field& f) {
    const json& w = array_of(field_of(j, "window"), 2, "window");
    if (int_of(w[0], "window[0]") != 0) throw std::invalid_argument("dg K[u]-module window must start at 0");
    int top = int_of(w[1], "window[1]");
    if (top < 2) throw std::invalid_argument("dg K[u]-module window must reach degree 2");
    std::size_t n = static_cast<std::size_t>(top + 1);
    const json& jd = array_of(field_of(j, "dims"), n, "dims");
    std::vector<std::size_t> dims;
    for (const auto& x : jd) dims.push_back(count_of(x, "dims entry"));
    const json& jdd = array_of(field_of(j, "d"), n - 1, "d");
    const json& ju = array_of(field_of(j, "u"), n - 2, "u");
    std::vector<Matrix> d, u;
    for (std::size_t k = 0; k + 1 < n; ++k) d.push_back(matrix_from_json(jdd[k], dims[k + 1], dims[k], f));
    for (std::size_t k = 0; k + 2 < n; ++k) u.push_back(matrix_from_json(ju[k], dims[k + 2], dims[k], f));
    return DgKuModule(f, std::move(dims), std::move(d), std::move(u), tail_from_json(field_of(j, "tail")));
}

json to_json(const FilteredKtModule& m) {
    json filt = json::array();
    for (const auto& deg : m.filtration) {
        json levels = json::array();
        for (const auto& lev : deg) {
            json vs = json::array();
            for (const auto& v : lev) vs.push_back(vector_to_json(v));
            levels.push_back(vs);
        }
        filt.push_back(levels);
    }
    return {{"module", to_json(m.module)}, {"filtration", filt}};
}

FilteredKtModule filtered_from_json(const json& j, const Field& f) {
    FilteredKtModule fm;
    fm.module = persistence_module_from_json(field_of(j, "module"), f);
    const json& jf = field_of(j, "filtration");
    if (!jf.is_array()) throw std::invalid_argument("filtration must be an array");
    for (std::size_t k = 0; k < jf.size(); ++k) {
        if (!jf[k].is_array()) throw std::invalid_argument("filtration entry must be an array of levels");
        std::vector<std::vector<Vector>> levels;
        for (const auto& lev : jf[k]) {
            if (!lev.is_array()) throw std::invalid_argument("filtration level must be an array of vectors");
            std::vector<Vector> vs;
            for (const auto& v : lev) vs.push_back(vector_from_json(v, fm.module.dim(static_cast<int>(k)), f, "filtration vector"));
            levels.push_back(std::move(vs));
        }
        fm.filtration.push_back(std::move(levels));
    }
    validate(fm);
    return fm;
}

json to_json(const FreeCdga& a) {
    json gens = json::array();
    for (const auto& g : a.generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
    auto poly = [&](const Polynomial& p) {
        json terms = json::array();
        for (const auto& [m, c] : p) terms.push_back({c.str(), a.str(m)});
        return terms;
    };
    json diff = json::object();
    for (std::size_t g = 0; g < a.generators().size(); ++g)
        if (!a.generator_differential(g).empty()) diff[a.generators()[g].name] = poly(a.generator_differential(g));
    json out = {{"generators", gens}, {"differential", diff}, {"u_action", poly(a.u_action())},
                {"truncation", a.truncation()}};
    if (a.tail()) out["tail"] = tail_to_json(*a.tail());
    return out;
}

FreeCdga model_from_json(const json& j) {
    const json& jg = field_of(j, "generators");
    if (!jg.is_array()) throw std::invalid_argument("generators must be an array");
    std::vector<Generator> gens;
    for (const auto& g : jg) {
        Generator x;
        x.name = field_of(g, "name").get<std::string>();
        x.degree = int_of(field_of(g, "degree"), "generator degree");
        gens.push_back(x);
    }
    std::map<std::string, Polynomial> diff;
    if (j.contains("differential")) {
        const json& jd = j.at("differential");
        if (!jd.is_object()) throw std::invalid_argument("differential must be an object");
        for (auto it = jd.begin(); it != jd.end(); ++it)
            diff[it.key()] = polynomial_from_json(gens, it.value(), "d(" + it.key() + ")");
    }
    Polynomial u;
    if (j.contains("u_generator") && j.contains("u_action"))
        throw std::invalid_argument("give either u_generator or u_action, not both");
    if (j.contains("u_generator")) {
        FreeCdga scratch(gens, {}, {}, 2);
        u = monomial_poly(scratch.generator(scratch.generator_index(j.at("u_generator").get<std::string>())));
    } else if (j.contains("u_action")) {
        u = polynomial_from_json(gens, j.at("u_action"), "u_action");
    }
    int trunc = int_of(field_of(j, "truncation"), "truncation");
    std::optional<KuTailSpec> tail;
    if (j.contains("tail")) tail = tail_from_json(j.at("tail"));
    return FreeCdga(gens, diff, u, trunc, tail);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
    }
}

}  // namespace cohid::io
