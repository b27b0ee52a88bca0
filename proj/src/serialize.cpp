#include "jetalg/serialize.hpp"

#include <charconv>

namespace jetalg {

namespace {

const json &field(const json &j, const char *key) {
    if (!j.is_object())
        throw Error("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end())
        throw Error(std::string("missing field '") + key + "'");
    return *it;
}

std::int64_t int_from_json(const json &j) {
    if (!j.is_number_integer())
        throw Error("expected an integer, got " + j.dump());
    return j.get<std::int64_t>();
}

LatticePoint point_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2)
        throw Error("index must be a two-element integer array, got " + j.dump());
    return {int_from_json(j[0]), int_from_json(j[1])};
}

json point_to_json(LatticePoint p) { return json::array({p.m1, p.m2}); }

template <class Element>
json terms_to_json(const Element &x) {
    json terms = json::array();
    for (const auto &[k, c] : x) {
        LatticePoint p;
        if constexpr (std::is_same_v<typename Element::key_type, MultiIndex>)
            p = k.as_point();
        else
            p = k;
        terms.push_back({{"coeff", rational_to_json(c)}, {"index", point_to_json(p)}});
    }
    return terms;
}

template <class Element>
Element terms_from_json(const json &j) {
    if (!j.is_array())
        throw Error("terms must be an array");
    Element x;
    for (const auto &t : j) {
        const LatticePoint p = point_from_json(field(t, "index"));
        const Rational c = rational_from_json(field(t, "coeff"));
        if constexpr (std::is_same_v<typename Element::key_type, MultiIndex>)
            x.add(MultiIndex(p.m1, p.m2), c);
        else
            x.add(p, c);
    }
    return x;
}

} // namespace

std::string algebra_name(const AnyElement &x) {
    return std::visit(
        [](const auto &e) -> std::string {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, GAElement>)
                return "GA";
            else
                return T::basis_type::name;
        },
        x);
}

json rational_to_json(const Rational &q) { return to_string(q); }

Rational rational_from_json(const json &j) {
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw Error("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

json element_to_json(const AnyElement &x) {
    return std::visit(
        [](const auto &e) -> json {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, GAElement>)
                return {{"algebra", "GA"}, {"g_terms", terms_to_json(e.g)}, {"a_terms", terms_to_json(e.a)}};
            else
                return {{"algebra", algebra_name(e)}, {"terms", terms_to_json(e)}};
        },
        x);
}

AnyElement element_from_json(const json &j) {
    const json &alg = field(j, "algebra");
    if (!alg.is_string())
        throw Error("'algebra' must be a string");
    const std::string name = alg.get<std::string>();
    if (name == "G")
        return terms_from_json<GElement>(field(j, "terms"));
    if (name == "A")
        return terms_from_json<AElement>(field(j, "terms"));
    if (name == "L")
        return terms_from_json<LElement>(field(j, "terms"));
    if (name == "Bplus")
        return terms_from_json<BPlusElement>(field(j, "terms"));
    if (name == "GA")
        return GAElement{terms_from_json<GElement>(field(j, "g_terms")), terms_from_json<AElement>(field(j, "a_terms"))};
    throw Error("unknown algebra '" + name + "'");
}

json matrix_to_json(const QMatrix &a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j)
            row.push_back(rational_to_json(a(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

QMatrix matrix_from_json(const json &j) {
    if (!j.is_array() || j.empty())
        throw Error("matrix must be a nonempty array of rows");
    std::vector<QVector> rows;
    for (const auto &r : j) {
        if (!r.is_array())
            throw Error("matrix row must be an array");
        QVector row;
        for (const auto &x : r)
            row.push_back(rational_from_json(x));
        rows.push_back(std::move(row));
    }
    return QMatrix::from_rows(rows, rows.front().size());
}

namespace {

QMatrix square_from_json(const json &j, std::size_t dim, const char *what) {
    QMatrix a = matrix_from_json(j);
    if (a.rows() != dim || a.cols() != dim)
        throw Error(std::string(what) + " must be a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    return a;
}

std::size_t dim_from_json(const json &j) {
    const auto d = int_from_json(field(j, "dim"));
    if (d < 1)
        throw Error("'dim' must be positive");
    return static_cast<std::size_t>(d);
}

} // namespace

json sl2_to_json(const SL2Rep &rep) {
    return {{"dim", rep.dim()}, {"e", matrix_to_json(rep.e())}, {"f", matrix_to_json(rep.f())}, {"h", matrix_to_json(rep.h())}};
}

SL2Rep sl2_from_json(const json &j) {
    const std::size_t d = dim_from_json(j);
    return {square_from_json(field(j, "e"), d, "e"), square_from_json(field(j, "f"), d, "f"),
            square_from_json(field(j, "h"), d, "h")};
}

std::string index_key(MultiIndex i) { return std::to_string(i.r1()) + "," + std::to_string(i.r2()); }

MultiIndex index_from_key(const std::string &key) {
    const auto comma = key.find(',');
    if (comma == std::string::npos)
        throw Error("index key must look like \"i,j\", got '" + key + "'");
    std::int64_t a = 0, b = 0;
    const char *first = key.data();
    const char *mid = first + comma;
    const char *last = first + key.size();
    auto r1 = std::from_chars(first, mid, a);
    auto r2 = std::from_chars(mid + 1, last, b);
    if (r1.ec != std::errc() || r1.ptr != mid || r2.ec != std::errc() || r2.ptr != last)
        throw Error("index key must look like \"i,j\", got '" + key + "'");
    return {a, b};
}

namespace {

json generator_map_to_json(const std::map<MultiIndex, QMatrix> &gens) {
    json out = json::object();
    for (const auto &[i, m] : gens)
        out[index_key(i)] = matrix_to_json(m);
    return out;
}

std::map<MultiIndex, QMatrix> generator_map_from_json(const json &j, std::size_t dim) {
    if (!j.is_object())
        throw Error("generator map must be an object keyed by \"i,j\"");
    std::map<MultiIndex, QMatrix> gens;
    for (const auto &[key, value] : j.items()) {
        const MultiIndex i = index_from_key(key);
        if (!gens.emplace(i, square_from_json(value, dim, "generator")).second)
            throw Error("duplicate generator index '" + key + "'");
    }
    return gens;
}

} // namespace

json bplus_rep_to_json(const BPlusRep &rep) {
    return {{"dim", rep.dim()}, {"gens", generator_map_to_json(rep.gens())}};
}

BPlusRep bplus_rep_from_json(const json &j, bool validate) {
    const std::size_t d = dim_from_json(j);
    auto gens = generator_map_from_json(field(j, "gens"), d);
    return validate ? validate_bplus_rep(d, std::move(gens)) : BPlusRep::unchecked(d, std::move(gens));
}

json spec_to_json(const JetModuleSpec &spec) {
    if (spec.is_f()) {
        const FSpec &f = spec.f();
        return {{"kind", "F"},
                {"alpha", json::array({rational_to_json(f.alpha.first), rational_to_json(f.alpha.second)})},
                {"lambda", rational_to_json(f.lambda)},
                {"rep", sl2_to_json(f.rep)}};
    }
    return {{"kind", "B"}, {"lambda", rational_to_json(spec.b().lambda)}, {"rep", bplus_rep_to_json(spec.b().rep)}};
}

JetModuleSpec spec_from_json(const json &j, bool validate) {
    const json &kind = field(j, "kind");
    if (!kind.is_string())
        throw Error("'kind' must be \"F\" or \"B\"");
    const Rational lambda = rational_from_json(field(j, "lambda"));
    if (kind == "F") {
        const json &alpha = field(j, "alpha");
        if (!alpha.is_array() || alpha.size() != 2)
            throw Error("'alpha' must be a pair of rationals");
        return make_f_spec({rational_from_json(alpha[0]), rational_from_json(alpha[1])}, lambda,
                           sl2_from_json(field(j, "rep")));
    }
    if (kind == "B")
        return make_b_spec(lambda, bplus_rep_from_json(field(j, "rep"), validate));
    throw Error("'kind' must be \"F\" or \"B\"");
}

json vector_to_json(const ModuleVector &v) {
    json support = json::array();
    for (const auto &[g, u] : v.support()) {
        json vec = json::array();
        for (const auto &q : u)
            vec.push_back(rational_to_json(q));
        support.push_back({{"grade", point_to_json(g)}, {"vec", std::move(vec)}});
    }
    return {{"dim", v.dim()}, {"support", std::move(support)}};
}

ModuleVector vector_from_json(const json &j) {
    const std::size_t d = dim_from_json(j);
    const json &support = field(j, "support");
    if (!support.is_array())
        throw Error("'support' must be an array");
    ModuleVector v(d);
    for (const auto &entry : support) {
        const LatticePoint g = point_from_json(field(entry, "grade"));
        const json &vec = field(entry, "vec");
        if (!vec.is_array() || vec.size() != d)
            throw Error("'vec' must have " + std::to_string(d) + " entries");
        QVector u;
        for (const auto &x : vec)
            u.push_back(rational_from_json(x));
        v.add(g, u);
    }
    return v;
}

json reductive_to_json(const ReductiveElement &x) {
    return {{"sl2", matrix_to_json(x.sl2())}, {"z1", rational_to_json(x.z1())}, {"z2", rational_to_json(x.z2())}};
}

json family_to_json(const PolyOperatorFamily &f) {
    return {{"dim", f.dim}, {"coeffs", generator_map_to_json(f.coeffs)}};
}

PolyOperatorFamily family_from_json(const json &j) {
    PolyOperatorFamily f;
    f.dim = dim_from_json(j);
    for (auto &[i, m] : generator_map_from_json(field(j, "coeffs"), f.dim))
        if (!m.is_zero())
            f.coeffs.emplace(i, std::move(m));
    return f;
}

json axiom_report_to_json(const std::vector<AxiomResult> &report) {
    json out = json::array();
    for (const auto &r : report)
        out.push_back({{"axiom", r.axiom},
                       {"pass", r.pass},
                       {"counterexample", r.counterexample ? json{{"detail", *r.counterexample}} : json(nullptr)}});
    return out;
}

} // namespace jetalg
