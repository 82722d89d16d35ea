#include "lssa/json_io.hpp"

#include <fstream>
#include <map>
#include <set>

namespace lssa {

AlgebraPtr algebra_from_name(const std::string& name) {
    static std::map<std::string, AlgebraPtr> cache;
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;

    AlgebraKind kind;
    if (name.rfind("gl(", 0) == 0)
        kind = AlgebraKind::gl;
    else if (name.rfind("sl(", 0) == 0)
        kind = AlgebraKind::sl;
    else
        throw error("unknown algebra: " + name);
    size_t bar = name.find('|');
    size_t close = name.find(')');
    if (bar == std::string::npos || close == std::string::npos)
        throw error("unknown algebra: " + name);
    int m = std::stoi(name.substr(3, bar - 3));
    int n = std::stoi(name.substr(bar + 1, close - bar - 1));
    AlgebraPtr g = LieSuperalgebra::make(kind, m, n);
    cache[name] = g;
    return g;
}

namespace {

ParamContextPtr context_from_json(const json& j) {
    std::vector<std::string> names;
    if (j.contains("parameters"))
        for (const auto& p : j.at("parameters")) names.push_back(p.get<std::string>());
    if (names.empty()) return nullptr;
    return ParamContext::make(names);
}

json parameters_to_json(const ParamContextPtr& ctx) {
    json out = json::array();
    if (ctx)
        for (const auto& n : ctx->names()) out.push_back(n);
    return out;
}

/* The shared context of all entries (contexts are merged by arithmetic, so
 * any non-constant entry carries the full context). */
ParamContextPtr common_context(const std::vector<Matrix>& ms) {
    for (const auto& m : ms)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (m.at(i, j).context()) return m.at(i, j).context();
    return nullptr;
}

} // namespace

std::vector<std::string> used_parameters(const ProductTable& t) {
    ParamContextPtr ctx = common_context(t.left_mult());
    return ctx ? ctx->names() : std::vector<std::string>{};
}

json table_to_json(const ProductTable& t) {
    const auto& g = *t.algebra();
    json out;
    out["algebra"] = g.name();
    out["parameters"] = json::array();
    for (const auto& n : used_parameters(t)) out["parameters"].push_back(n);
    json basis = json::array();
    for (int i = 0; i < g.dim(); ++i) basis.push_back(g.element(i).label);
    out["basis"] = basis;
    json products = json::object();
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j) {
            json cell = json::object();
            for (int l = 0; l < g.dim(); ++l) {
                const Scalar& c = t.coeff(i, j, l);
                if (!c.is_zero()) cell[g.element(l).label] = c.str();
            }
            if (!cell.empty())
                products[g.element(i).label + "*" + g.element(j).label] = std::move(cell);
        }
    out["products"] = std::move(products);
    return out;
}

ProductTable table_from_json(const json& j) {
    AlgebraPtr g = algebra_from_name(j.at("algebra").get<std::string>());
    ParamContextPtr ctx = context_from_json(j);

    if (j.contains("basis")) {
        const auto& basis = j.at("basis");
        if (static_cast<int>(basis.size()) != g->dim()) throw error("basis size mismatch");
        for (int i = 0; i < g->dim(); ++i)
            if (basis[static_cast<size_t>(i)].get<std::string>() != g->element(i).label)
                throw error("basis label mismatch at position " + std::to_string(i));
    }

    std::vector<Matrix> lm(static_cast<size_t>(g->dim()), Matrix(g->dim(), g->dim()));
    for (const auto& [key, cell] : j.at("products").items()) {
        size_t star = key.find('*');
        if (star == std::string::npos) throw error("bad product key: " + key);
        int i = g->index_of(key.substr(0, star));
        int jj = g->index_of(key.substr(star + 1));
        for (const auto& [target, expr] : cell.items()) {
            int l = g->index_of(target);
            lm[static_cast<size_t>(i)].at(l, jj) = Scalar::parse(ctx, expr.get<std::string>());
        }
    }
    return ProductTable(g, std::move(lm));
}

namespace {

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j, const ParamContextPtr& ctx) {
    int rows = static_cast<int>(j.size());
    int cols = rows > 0 ? static_cast<int>(j.at(0).size()) : 0;
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = Scalar::parse(ctx, j.at(static_cast<size_t>(i))
                                                .at(static_cast<size_t>(c))
                                                .get<std::string>());
    return m;
}

} // namespace

json rep_to_json(const Representation& r) {
    json out;
    out["algebra"] = r.algebra->name();
    out["parameters"] = parameters_to_json(common_context(r.action));
    out["even_basis"] = r.space.even_labels();
    out["odd_basis"] = r.space.odd_labels();
    json action = json::object();
    for (int i = 0; i < r.algebra->dim(); ++i)
        action[r.algebra->element(i).label] = matrix_to_json(r.act(i));
    out["action"] = std::move(action);
    return out;
}

Representation rep_from_json(const json& j) {
    AlgebraPtr g = algebra_from_name(j.at("algebra").get<std::string>());
    ParamContextPtr ctx = context_from_json(j);
    SuperSpace space(j.at("even_basis").get<std::vector<std::string>>(),
                     j.at("odd_basis").get<std::vector<std::string>>());
    std::vector<Matrix> action(static_cast<size_t>(g->dim()));
    for (int i = 0; i < g->dim(); ++i) {
        const json& m = j.at("action").at(g->element(i).label);
        action[static_cast<size_t>(i)] = matrix_from_json(m, ctx);
        if (action[static_cast<size_t>(i)].rows() != space.dim() ||
            action[static_cast<size_t>(i)].cols() != space.dim())
            throw error("action matrix size mismatch for " + g->element(i).label);
    }
    return Representation{g, std::move(space), std::move(action)};
}

json cocycle_to_json(const Cocycle& c) {
    json out;
    out["representation"] = rep_to_json(c.rep);
    out["q"] = matrix_to_json(c.q);
    return out;
}

Cocycle cocycle_from_json(const json& j) {
    Representation rep = rep_from_json(j.at("representation"));
    ParamContextPtr ctx = context_from_json(j.at("representation"));
    Matrix q = matrix_from_json(j.at("q"), ctx);
    return Cocycle{std::move(rep), std::move(q)};
}

json witness_to_json(const WitnessReport& w) {
    json out;
    out["module"] = w.module_name;
    out["superdim"] = w.superdim;
    out["failing_elements"] = w.failing_elements;
    out["certified_generic_rank"] = w.certified_generic_rank;
    out["required_rank"] = w.required_rank;
    out["certified"] = w.certified;
    out["obstruction"] = w.obstruction;
    return out;
}

json report_to_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json jc;
        jc["name"] = c.name;
        jc["status"] = c.pass ? "pass" : "fail";
        jc["details"] = c.details;
        jc["time_ms"] = c.ms;
        checks.push_back(std::move(jc));
    }
    json out;
    out["suite"] = r.suite;
    out["pass"] = r.pass();
    out["checks"] = std::move(checks);
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace lssa
