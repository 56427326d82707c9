#include "bsassign/serialize.hpp"

#include <stdexcept>

namespace bsassign {

namespace {

Json integer_to_json(const Integer& z) {
    if (auto v = to_int64(z))
        return Json(*v);
    return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer())
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string())
        return Integer(j.get<std::string>());
    throw std::invalid_argument("expected integer or decimal string");
}

}  // namespace

Json to_json(const Rational& q) {
    return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("rational must be a [num, den] pair");
    Rational q(integer_from_json(j[0]), integer_from_json(j[1]));
    if (q.get_den() == 0)
        throw std::invalid_argument("rational has zero denominator");
    q.canonicalize();
    return q;
}

Json to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const Term& t : p.terms()) {
        Json term;
        term["coef"] = to_json(t.coef);
        term["exp"] = t.mono;
        terms.push_back(std::move(term));
    }
    Json out;
    out["terms"] = std::move(terms);
    return out;
}

Polynomial polynomial_from_json(const Json& j, int nvars) {
    if (!j.is_object() || !j.contains("terms"))
        throw std::invalid_argument("polynomial must be { \"terms\": [...] }");
    std::vector<Term> terms;
    for (const Json& t : j.at("terms")) {
        Monomial mono = t.at("exp").get<Monomial>();
        if (static_cast<int>(mono.size()) != nvars)
            throw std::invalid_argument("exponent vector has wrong length");
        for (int e : mono)
            if (e < 0)
                throw std::invalid_argument("negative exponent");
        terms.push_back(Term{std::move(mono), rational_from_json(t.at("coef"))});
    }
    return Polynomial::from_terms(nvars, std::move(terms));
}

Json to_json(const RationalFunction& f) {
    Json out;
    out["num"] = to_json(f.num());
    Json den = Json::array();
    for (const Polynomial& d : f.den())
        den.push_back(to_json(d));
    out["den"] = std::move(den);
    return out;
}

RationalFunction ratfun_from_json(const Json& j, int nvars) {
    Polynomial num = polynomial_from_json(j.at("num"), nvars);
    std::vector<Polynomial> den;
    for (const Json& d : j.at("den"))
        den.push_back(polynomial_from_json(d, nvars));
    return RationalFunction::quotient(std::move(num), den);
}

Json to_json(const Word& w) { return Json(w.letters); }

Word word_from_json(const Json& j) {
    Word w;
    w.letters = j.get<std::vector<int>>();
    return w;
}

Json graph_to_json(const BSGraph& g) {
    Json out;
    out["type"] = g.lie_type().name();
    out["word"] = to_json(g.word());
    Json vertices = Json::array();
    for (VertexMask v = 0; v < g.vertex_count(); ++v)
        vertices.push_back(v);
    out["vertices"] = std::move(vertices);
    Json edges = Json::array();
    for (VertexMask v = 0; v < g.vertex_count(); ++v) {
        for (int t = 1; t <= g.dim(); ++t) {
            VertexMask w = v ^ (VertexMask{1} << (t - 1));
            Json e;
            e["from"] = v;
            e["to"] = w;
            e["label"] = to_json(from_weight(g.edge_label(v, t)));
            edges.push_back(std::move(e));
        }
    }
    out["edges"] = std::move(edges);
    return out;
}

Json assignment_to_json(const Assignment& a) {
    Json out;
    out["type"] = a.graph().lie_type().name();
    out["word"] = to_json(a.graph().word());
    Json values = Json::array();
    for (const Polynomial& p : a.values())
        values.push_back(to_json(p));
    out["values"] = std::move(values);
    return out;
}

Assignment assignment_from_json(const Json& j, std::optional<LieType> lt) {
    LieType type = lt.value_or(LieType{Family::A, 1});
    if (j.contains("type")) {
        type = LieType::parse(j.at("type").get<std::string>());
        if (lt && !(lt->family == type.family && lt->rank == type.rank))
            throw std::invalid_argument("assignment file type disagrees with --type");
    } else if (!lt) {
        throw std::invalid_argument("assignment JSON lacks \"type\" and no --type was given");
    }
    Word word = word_from_json(j.at("word"));
    auto graph = BSGraph::build_shared(type, word);
    const Json& values = j.at("values");
    if (values.size() != graph->vertex_count())
        throw std::invalid_argument("assignment has wrong number of values");
    std::vector<Polynomial> polys;
    polys.reserve(values.size());
    for (const Json& v : values)
        polys.push_back(polynomial_from_json(v, type.rank));
    return Assignment::checked(std::move(graph), std::move(polys));
}

Json basis_to_json(const BasisMatrix& b) {
    const BSGraph& g = *b.graph;
    Json out;
    out["kind"] = b.kind == BasisKind::Assignment ? "assignment" : "cohomological";
    out["type"] = g.lie_type().name();
    out["word"] = to_json(g.word());
    Json vertices = Json::array();
    for (VertexMask v = 0; v < g.vertex_count(); ++v)
        vertices.push_back(v);
    out["vertices"] = vertices;
    out["columns"] = vertices;
    Json rows = Json::array();
    for (std::size_t i = 0; i < b.mat.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < b.mat.cols(); ++j)
            row.push_back(to_json(b.mat.at(i, j)));
        rows.push_back(std::move(row));
    }
    out["entries"] = std::move(rows);
    return out;
}

Json coefficients_to_json(const CoefficientVector& c) {
    Json out = Json::array();
    for (const RationalFunction& f : c)
        out.push_back(to_json(f));
    return out;
}

Json defect_to_json(const DefectReport& report) {
    const BSGraph& g = *report.trace.basis.graph;
    Json out;
    out["type"] = g.lie_type().name();
    out["word"] = to_json(g.word());
    Json cols = Json::array();
    for (VertexMask j : report.defect_columns) {
        Json col;
        col["column"] = j;
        col["subword"] = g.vertex_name(j);
        col["coefficients"] = coefficients_to_json(report.coefficients[j]);
        cols.push_back(std::move(col));
    }
    out["defect_columns"] = std::move(cols);
    return out;
}

Json morse_to_json(const MorseGeneratorSet& set) {
    const BSGraph& g = *set.graph;
    Json out;
    out["type"] = g.lie_type().name();
    out["word"] = to_json(g.word());
    Json xi = Json::array();
    for (const Rational& v : set.xi.values)
        xi.push_back(to_json(v));
    out["xi"] = std::move(xi);
    Json vertices = Json::array();
    for (const MorseVertexReport& report : set.per_vertex) {
        Json v;
        v["vertex"] = report.vertex;
        v["subword"] = g.vertex_name(report.vertex);
        v["flow_up"] = report.flow_up;
        Json gens = Json::array();
        for (const Assignment& eta : report.generators) {
            Json values = Json::array();
            for (const Polynomial& p : eta.values())
                values.push_back(to_json(p));
            gens.push_back(std::move(values));
        }
        v["generators"] = std::move(gens);
        Json ideal = Json::array();
        for (const Polynomial& p : report.ideal_minimal)
            ideal.push_back(to_json(p));
        v["ideal"] = std::move(ideal);
        v["principal"] = report.principal;
        vertices.push_back(std::move(v));
    }
    out["vertices"] = std::move(vertices);
    Json minimal = Json::array();
    for (const GeneratorRef& ref : set.minimal) {
        Json m;
        m["vertex"] = ref.vertex;
        m["subword"] = g.vertex_name(ref.vertex);
        m["index"] = ref.index;
        Json values = Json::array();
        for (const Polynomial& p : set.generator(ref).values())
            values.push_back(to_json(p));
        m["values"] = std::move(values);
        minimal.push_back(std::move(m));
    }
    out["minimal_generators"] = std::move(minimal);
    return out;
}

}  // namespace bsassign
