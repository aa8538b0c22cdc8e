#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "rhiza/cocycle.hpp"
#include "rhiza/structure.hpp"

namespace rhiza {

using Json = nlohmann::ordered_json;

enum class Field { Q, Qi };

inline std::string to_string(Field f) { return f == Field::Q ? "Q" : "Qi"; }

inline Field field_from_string(const std::string& s) {
    if (s == "Q") return Field::Q;
    if (s == "Qi") return Field::Qi;
    throw ParseError("unknown field tag '" + s + "' (expected Q or Qi)");
}

// ---------------------------------------------------------------------------
// Scalars and tensors
// ---------------------------------------------------------------------------

inline Scalar scalar_from_json(const Json& j, Field field, const std::string& where) {
    if (!j.is_string())
        throw ParseError(where + ": scalar entries must be strings");
    Scalar s;
    try {
        s = Scalar::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
    if (field == Field::Q && !s.is_real())
        throw ParseError(where + ": imaginary entry in a Q-field file");
    return s;
}

inline Json tensor_to_json(const BilinearOp& op) {
    Json out = Json::array();
    for (int i = 0; i < op.dim(); ++i) {
        Json plane = Json::array();
        for (int j = 0; j < op.dim(); ++j) {
            Json row = Json::array();
            for (int k = 0; k < op.dim(); ++k) row.push_back(op.c(i, j, k).str());
            plane.push_back(std::move(row));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

inline BilinearOp tensor_from_json(const Json& j, int dim, Field field, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw ShapeError(where + ": tensor must be a dim x dim x dim array");
    BilinearOp op(dim);
    for (int i = 0; i < dim; ++i) {
        const Json& plane = j[static_cast<size_t>(i)];
        if (!plane.is_array() || static_cast<int>(plane.size()) != dim)
            throw ShapeError(where + ": tensor must be a dim x dim x dim array");
        for (int jj = 0; jj < dim; ++jj) {
            const Json& row = plane[static_cast<size_t>(jj)];
            if (!row.is_array() || static_cast<int>(row.size()) != dim)
                throw ShapeError(where + ": tensor must be a dim x dim x dim array");
            for (int k = 0; k < dim; ++k)
                op.c(i, jj, k) = scalar_from_json(row[static_cast<size_t>(k)], field,
                                                  where + "[" + std::to_string(i + 1) + "][" +
                                                      std::to_string(jj + 1) + "][" +
                                                      std::to_string(k + 1) + "]");
        }
    }
    return op;
}

inline Json grid_to_json(const Matrix& m) {
    Json out = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        out.push_back(std::move(row));
    }
    return out;
}

inline Matrix grid_from_json(const Json& j, int rows, int cols, Field field,
                             const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw ShapeError(where + ": expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const Json& row = j[static_cast<size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ShapeError(where + ": expected " + std::to_string(cols) + " columns");
        for (int c = 0; c < cols; ++c)
            m(r, c) = scalar_from_json(row[static_cast<size_t>(c)], field,
                                       where + "[" + std::to_string(r + 1) + "][" +
                                           std::to_string(c + 1) + "]");
    }
    return m;
}

// ---------------------------------------------------------------------------
// Documents. Each document serializes canonically (fixed key order, canonical
// scalar strings), so parse -> serialize is byte-identical on canonical
// files.
// ---------------------------------------------------------------------------

struct AlgebraDocument {
    Field field = Field::Q;
    std::variant<Algebra, TwoOpAlgebra> value;

    bool is_two_op() const { return std::holds_alternative<TwoOpAlgebra>(value); }
    const Algebra& algebra() const {
        if (!std::holds_alternative<Algebra>(value))
            throw ShapeError("expected a single-operation algebra file");
        return std::get<Algebra>(value);
    }
    const TwoOpAlgebra& two_op() const {
        if (!std::holds_alternative<TwoOpAlgebra>(value))
            throw ShapeError("expected a rhizaform (two-operation) file");
        return std::get<TwoOpAlgebra>(value);
    }
};

inline Json algebra_to_json(const Algebra& a, Field field) {
    Json j;
    j["kind"] = "algebra";
    j["field"] = to_string(field);
    j["dim"] = a.dim;
    j["mul"] = tensor_to_json(a.mul);
    return j;
}

inline Json two_op_to_json(const TwoOpAlgebra& t, Field field) {
    Json j;
    j["kind"] = "rhizaform";
    j["field"] = to_string(field);
    j["dim"] = t.dim;
    j["succ"] = tensor_to_json(t.succ);
    j["prec"] = tensor_to_json(t.prec);
    return j;
}

inline Json algebra_document_to_json(const AlgebraDocument& doc) {
    if (doc.is_two_op()) return two_op_to_json(doc.two_op(), doc.field);
    return algebra_to_json(doc.algebra(), doc.field);
}

namespace detail {

inline const Json& require_key(const Json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing required key '" + key + "'");
    return *it;
}

inline int require_dim(const Json& j, const std::string& key, const std::string& where) {
    const Json& d = require_key(j, key, where);
    if (!d.is_number_integer() || d.get<int>() < 0)
        throw ParseError(where + ": '" + key + "' must be a non-negative integer");
    return d.get<int>();
}

inline Field document_field(const Json& j, const std::string& where) {
    const Json& f = require_key(j, "field", where);
    if (!f.is_string()) throw ParseError(where + ": 'field' must be a string");
    return field_from_string(f.get<std::string>());
}

} // namespace detail

inline AlgebraDocument algebra_document_from_json(const Json& j, const std::string& where) {
    const Json& kind = detail::require_key(j, "kind", where);
    Field field = detail::document_field(j, where);
    int dim = detail::require_dim(j, "dim", where);
    if (kind == "algebra") {
        Algebra a(dim, tensor_from_json(detail::require_key(j, "mul", where), dim, field,
                                        where + ".mul"));
        return {field, std::move(a)};
    }
    if (kind == "rhizaform") {
        TwoOpAlgebra t(dim,
                       tensor_from_json(detail::require_key(j, "succ", where), dim, field,
                                        where + ".succ"),
                       tensor_from_json(detail::require_key(j, "prec", where), dim, field,
                                        where + ".prec"));
        return {field, std::move(t)};
    }
    throw ParseError(where + ": unknown kind '" + std::string(kind.is_string() ? kind.get<std::string>() : "?") + "'");
}

struct MatrixDocument {
    Field field = Field::Q;
    Matrix value; // column j = image of basis vector j
};

inline Json matrix_to_json(const Matrix& m, Field field) {
    Json j;
    j["kind"] = "matrix";
    j["field"] = to_string(field);
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = grid_to_json(m);
    return j;
}

inline MatrixDocument matrix_document_from_json(const Json& j, const std::string& where) {
    if (detail::require_key(j, "kind", where) != "matrix")
        throw ParseError(where + ": expected kind 'matrix'");
    Field field = detail::document_field(j, where);
    int rows = detail::require_dim(j, "rows", where);
    int cols = detail::require_dim(j, "cols", where);
    return {field, grid_from_json(detail::require_key(j, "entries", where), rows, cols, field,
                                  where + ".entries")};
}

struct BimoduleDocument {
    Field field = Field::Q;
    Bimodule value;
};

inline Json bimodule_to_json(const Bimodule& b, Field field) {
    Json j;
    j["kind"] = "bimodule";
    j["field"] = to_string(field);
    j["base"] = algebra_to_json(b.base, field);
    j["module_dim"] = b.module_dim;
    Json l = Json::array(), r = Json::array();
    for (const Matrix& m : b.l) l.push_back(grid_to_json(m));
    for (const Matrix& m : b.r) r.push_back(grid_to_json(m));
    j["l"] = std::move(l);
    j["r"] = std::move(r);
    return j;
}

inline BimoduleDocument bimodule_document_from_json(const Json& j, const std::string& where) {
    if (detail::require_key(j, "kind", where) != "bimodule")
        throw ParseError(where + ": expected kind 'bimodule'");
    Field field = detail::document_field(j, where);
    AlgebraDocument base = algebra_document_from_json(detail::require_key(j, "base", where),
                                                      where + ".base");
    int mdim = detail::require_dim(j, "module_dim", where);
    const Json& lj = detail::require_key(j, "l", where);
    const Json& rj = detail::require_key(j, "r", where);
    int n = base.algebra().dim;
    if (!lj.is_array() || !rj.is_array() || static_cast<int>(lj.size()) != n ||
        static_cast<int>(rj.size()) != n)
        throw ShapeError(where + ": l and r must hold one matrix per base basis vector");
    std::vector<Matrix> l, r;
    for (int i = 0; i < n; ++i) {
        l.push_back(grid_from_json(lj[static_cast<size_t>(i)], mdim, mdim, field,
                                   where + ".l[" + std::to_string(i + 1) + "]"));
        r.push_back(grid_from_json(rj[static_cast<size_t>(i)], mdim, mdim, field,
                                   where + ".r[" + std::to_string(i + 1) + "]"));
    }
    return {field, Bimodule(base.algebra(), mdim, std::move(l), std::move(r))};
}

struct FormDocument {
    Field field = Field::Q;
    BilinearForm value;
};

inline Json form_to_json(const BilinearForm& f, Field field) {
    Json j;
    j["kind"] = "form";
    j["field"] = to_string(field);
    j["dim"] = f.dim;
    j["gram"] = grid_to_json(f.gram);
    return j;
}

inline FormDocument form_document_from_json(const Json& j, const std::string& where) {
    if (detail::require_key(j, "kind", where) != "form")
        throw ParseError(where + ": expected kind 'form'");
    Field field = detail::document_field(j, where);
    int dim = detail::require_dim(j, "dim", where);
    return {field, BilinearForm(dim, grid_from_json(detail::require_key(j, "gram", where), dim,
                                                    dim, field, where + ".gram"))};
}

struct SubspaceDocument {
    Field field = Field::Q;
    Subspace value;

    SubspaceDocument(Field f, Subspace s) : field(f), value(std::move(s)) {}
};

inline Json subspace_to_json(const Subspace& s, Field field) {
    Json j;
    j["kind"] = "subspace";
    j["field"] = to_string(field);
    j["ambient"] = s.ambient();
    j["basis"] = grid_to_json(s.basis());
    return j;
}

inline SubspaceDocument subspace_document_from_json(const Json& j, const std::string& where) {
    if (detail::require_key(j, "kind", where) != "subspace")
        throw ParseError(where + ": expected kind 'subspace'");
    Field field = detail::document_field(j, where);
    int ambient = detail::require_dim(j, "ambient", where);
    const Json& bj = detail::require_key(j, "basis", where);
    if (!bj.is_array()) throw ShapeError(where + ": basis must be an array of rows");
    std::vector<Vec> rows;
    for (size_t r = 0; r < bj.size(); ++r) {
        Matrix row = grid_from_json(Json::array({bj[r]}), 1, ambient, field,
                                    where + ".basis[" + std::to_string(r + 1) + "]");
        rows.push_back(row.row(0));
    }
    return {field, Subspace::span_of(rows, ambient)};
}

inline Json witness_to_json(const DoubleConstructionWitness& w, Field field) {
    Json j;
    j["kind"] = "double_witness";
    j["field"] = to_string(field);
    j["ambient"] = algebra_to_json(w.ambient, field);
    j["part_a"] = subspace_to_json(w.part_a, field);
    j["part_b"] = subspace_to_json(w.part_b, field);
    j["form"] = form_to_json(w.form, field);
    j["candidate"] = w.candidate;
    return j;
}

inline DoubleConstructionWitness witness_from_json(const Json& j, const std::string& where) {
    if (detail::require_key(j, "kind", where) != "double_witness")
        throw ParseError(where + ": expected kind 'double_witness'");
    AlgebraDocument amb = algebra_document_from_json(detail::require_key(j, "ambient", where),
                                                     where + ".ambient");
    SubspaceDocument pa = subspace_document_from_json(detail::require_key(j, "part_a", where),
                                                      where + ".part_a");
    SubspaceDocument pb = subspace_document_from_json(detail::require_key(j, "part_b", where),
                                                      where + ".part_b");
    FormDocument f = form_document_from_json(detail::require_key(j, "form", where),
                                             where + ".form");
    std::string cand;
    if (auto it = j.find("candidate"); it != j.end() && it->is_string())
        cand = it->get<std::string>();
    return DoubleConstructionWitness(amb.algebra(), pa.value, pb.value, f.value, cand);
}

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

inline std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file '" + path + "'");
    out << text;
}

inline Json parse_json_file(const std::string& path) {
    std::string text = read_text_file(path);
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("file '" + path + "' is not valid JSON");
    return j;
}

inline AlgebraDocument parse_algebra(const std::string& path) {
    return algebra_document_from_json(parse_json_file(path), path);
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline Json violations_to_json(const std::vector<Violation>& violations) {
    Json out = Json::array();
    for (const auto& v : violations) {
        Json vj;
        vj["axiom"] = v.axiom;
        vj["indices"] = v.indices;
        Json res = Json::array();
        for (const auto& s : v.residual) res.push_back(s.str());
        vj["residual"] = std::move(res);
        out.push_back(std::move(vj));
    }
    return out;
}

// Schema: command (string array), pass (bool), optional error (string),
// violations (array), optional derived (object). Field order is fixed.
inline Json make_report(const std::vector<std::string>& argv_echo, bool pass,
                        const std::vector<Violation>& violations = {},
                        const Json& derived = Json(), const std::string& error = "") {
    Json j;
    j["command"] = argv_echo;
    j["pass"] = pass;
    if (!error.empty()) j["error"] = error;
    j["violations"] = violations_to_json(violations);
    if (!derived.is_null()) j["derived"] = derived;
    return j;
}

// Solution families with named variables, for classify2 output.
inline Json family_to_json(const SolutionFamily& fam, int nvars,
                           const std::vector<std::string>& names) {
    Json j;
    Json solved = Json::object();
    for (const auto& [v, e] : fam.solved) solved[names[static_cast<size_t>(v)]] = e.str(names);
    j["solved"] = std::move(solved);
    Json free_list = Json::array();
    for (int v = 0; v < nvars; ++v)
        if (!fam.solved.count(v)) free_list.push_back(names[static_cast<size_t>(v)]);
    j["free"] = std::move(free_list);
    Json nz = Json::array();
    for (const auto& c : fam.nonzero) nz.push_back(c.str(names));
    j["nonzero"] = std::move(nz);
    return j;
}

inline std::vector<std::string> succ_slot_names(int dim) {
    std::vector<std::string> names;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                names.push_back("succ[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                                "][" + std::to_string(k + 1) + "]");
    return names;
}

} // namespace rhiza
