#include "symrep/json_io.hpp"

namespace symrep {

namespace {

std::string int_str(const Int& x) { return x.get_str(); }
std::string rat_str(const Rat& x) { return x.get_str(); }

Int int_from(const Json& j) { return Int(j.get<std::string>()); }

Rat rat_from(const Json& j) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), j.get<std::string>().c_str(), 10) != 0 ||
        mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw InputError("bad rational in JSON: " + j.dump());
    r.canonicalize();
    return r;
}

}  // namespace

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
    return Partition(j.get<std::vector<int>>());
}

Json to_json(const Decomposition& v) {
    Json mults = Json::array();
    for (const auto& [shape, mult] : v.mults)
        mults.push_back(Json{{"shape", to_json(shape)}, {"mult", int_str(mult)}});
    return Json{{"n", v.n}, {"mults", mults}, {"dimension", int_str(v.dimension())}};
}

Decomposition decomposition_from_json(const Json& j) {
    Decomposition v;
    v.n = j.at("n").get<int>();
    for (const auto& entry : j.at("mults")) {
        Int mult = int_from(entry.at("mult"));
        if (mult < 0) throw InputError("negative multiplicity in JSON");
        if (mult != 0)
            v.mults.emplace(partition_from_json(entry.at("shape")), std::move(mult));
    }
    return v;
}

Json to_json(const Polynomial& f) {
    Json terms = Json::array();
    for (const auto& [exp, c] : f.terms())
        terms.push_back(Json{{"exponents", exp}, {"coeff", rat_str(c)}});
    return Json{{"n", f.n()}, {"degree", f.degree()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j) {
    Polynomial f(j.at("n").get<int>(), j.at("degree").get<int>());
    for (const auto& term : j.at("terms"))
        f.add_term(term.at("exponents").get<std::vector<int>>(),
                   rat_from(term.at("coeff")));
    return f;
}

Json to_json(const SYTableau& t) {
    return Json{{"shape", to_json(t.shape)}, {"rows", t.rows}};
}

Json to_json(const SSYTableau& t) {
    return Json{{"shape", to_json(t.shape)},
                {"content", to_json(t.content)},
                {"rows", t.rows}};
}

Json to_json(const BoundCheck& c) {
    return Json{{"n", c.n},
                {"d", c.d},
                {"r", int_str(c.r)},
                {"dim_max", int_str(c.dim_max)},
                {"target", int_str(c.target)},
                {"equality", c.equality},
                {"threshold_holds", c.threshold_holds}};
}

BoundCheck bound_check_from_json(const Json& j) {
    BoundCheck c;
    c.n = j.at("n").get<int>();
    c.d = j.at("d").get<int>();
    c.r = int_from(j.at("r"));
    c.dim_max = int_from(j.at("dim_max"));
    c.target = int_from(j.at("target"));
    c.equality = j.at("equality").get<bool>();
    c.threshold_holds = j.at("threshold_holds").get<bool>();
    return c;
}

Json to_json(const CharacterTable& t) {
    Json shapes = Json::array();
    for (const auto& s : t.shapes()) shapes.push_back(to_json(s));
    Json classes = Json::array();
    for (const auto& c : t.classes())
        classes.push_back(Json{{"type", to_json(c.type)}, {"size", int_str(c.size)}});
    Json values = Json::array();
    for (std::size_t s = 0; s < t.shapes().size(); ++s) {
        Json row = Json::array();
        for (std::size_t c = 0; c < t.classes().size(); ++c)
            row.push_back(int_str(t.value(s, c)));
        values.push_back(std::move(row));
    }
    return Json{{"n", t.n()}, {"shapes", shapes}, {"classes", classes}, {"values", values}};
}

Json to_json(const KostkaInequalityReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations)
        violations.push_back(Json{{"lambda", to_json(v.lambda)},
                                  {"mu", to_json(v.mu)},
                                  {"lhs", int_str(v.lhs)},
                                  {"rhs", int_str(v.rhs)}});
    return Json{{"n", r.n}, {"checked", r.checked}, {"violations", violations}};
}

KostkaInequalityReport kostka_inequality_report_from_json(const Json& j) {
    KostkaInequalityReport r;
    r.n = j.at("n").get<int>();
    r.checked = j.at("checked").get<long>();
    for (const auto& v : j.at("violations"))
        r.violations.push_back(InequalityCell{partition_from_json(v.at("lambda")),
                                              partition_from_json(v.at("mu")),
                                              int_from(v.at("lhs")),
                                              int_from(v.at("rhs"))});
    return r;
}

namespace {

Json to_json(const AppendixTable& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows)
        rows.push_back(Json{{"lambda", to_json(row.lambda)},
                            {"kostka", int_str(row.kostka_value)},
                            {"dim", int_str(row.dim)},
                            {"lhs", int_str(row.lhs)},
                            {"rhs", int_str(row.rhs)}});
    return Json{{"n", t.n}, {"mu", to_json(t.mu)}, {"rows", rows}};
}

}  // namespace

Json to_json(const AppendixReport& r) {
    Json computed = Json::array(), reference = Json::array();
    for (const auto& t : r.computed) computed.push_back(to_json(t));
    for (const auto& t : r.reference) reference.push_back(to_json(t));
    return Json{{"computed", computed}, {"reference", reference}, {"matches", r.matches}};
}

Json to_json(const ElementaryReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations)
        violations.push_back(Json{{"n", v.n},
                                  {"l", v.l},
                                  {"p", v.p},
                                  {"lhs", rat_str(v.lhs)},
                                  {"rhs", rat_str(v.rhs)}});
    return Json{{"n_max", r.n_max},     {"l_max", r.l_max},
                {"p_max", r.p_max},     {"checked", r.checked},
                {"skipped", r.skipped}, {"violations", violations}};
}

Json to_json(const MainInequalityReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back(Json{{"lambda", to_json(row.lambda)},
                            {"lhs", int_str(row.lhs)},
                            {"rhs", int_str(row.rhs)}});
    Json violations = Json::array();
    for (const auto& v : r.violations) violations.push_back(to_json(v));
    return Json{{"n", r.n}, {"d", r.d}, {"rows", rows}, {"violations", violations}};
}

Json to_json(const BoundGridReport& r) {
    Json cells = Json::array();
    for (const auto& cell : r.cells)
        cells.push_back(Json{{"check", to_json(cell.check)},
                             {"consistent", cell.consistent}});
    return Json{{"checked", r.checked},
                {"inconsistent", r.inconsistent},
                {"cells", cells}};
}

BoundGridReport bound_grid_report_from_json(const Json& j) {
    BoundGridReport r;
    r.checked = j.at("checked").get<long>();
    r.inconsistent = j.at("inconsistent").get<long>();
    for (const auto& cell : j.at("cells"))
        r.cells.push_back(BoundGridCell{bound_check_from_json(cell.at("check")),
                                        cell.at("consistent").get<bool>()});
    return r;
}

Json to_json(const GeneratorCertificate& c) {
    return Json{{"generator", to_json(c.generator)},
                {"seed", c.seed},
                {"attempts", c.attempts},
                {"principal", c.principal},
                {"span_dim", int_str(c.span_dim)},
                {"target_dim", int_str(c.target_dim)}};
}

}  // namespace symrep
