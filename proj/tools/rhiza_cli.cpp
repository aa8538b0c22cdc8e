// Command-line surface of the rhizaform algebra workbench. Every command
// prints a JSON report on stdout and exits with:
//   0  property holds / success
//   1  property fails (the report carries witnesses)
//   2  usage or input error
//
// File conventions: all files are JSON with exact scalars as strings
// ("a/b", "a/b+c/d*i"). Tensors are dim x dim x dim nested arrays with
// c[i][j][k] the e_k coefficient of e_i * e_j (zero-based in files, one-based
// in reports). Matrix files use the column-as-image convention: column j is
// the image of basis vector j.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rhiza/io.hpp"
#include "rhiza/operators.hpp"

using namespace rhiza;

namespace {

std::vector<std::string> g_argv;

int emit(const Json& report, int code) {
    std::cout << dump_document(report);
    return code;
}

int emit_check(const IdentityReport& rep, const Json& derived = Json()) {
    return emit(make_report(g_argv, rep.pass, rep.violations, derived), rep.pass ? 0 : 1);
}

Field default_field() {
    const char* env = std::getenv("RHIZA_FIELD");
    if (env == nullptr || *env == '\0') return Field::Q;
    return field_from_string(env);
}

struct Options {
    std::string file, file2, out;
    std::string axiom, op, convention = "plus", kind;
    int height = 0;
    int max_k = 0;
};

int run_check(const Options& o) {
    AlgebraDocument doc = parse_algebra(o.file);
    if (o.axiom == "anti-assoc") return emit_check(check_anti_associative(doc.algebra()));
    if (o.axiom == "jacobi-jordan") return emit_check(check_jacobi_jordan(doc.algebra()));
    if (o.axiom == "pre-jj") return emit_check(check_pre_jacobi_jordan(doc.algebra()));
    if (o.axiom == "rhizaform") return emit_check(check_rhizaform(doc.two_op()));
    return emit_check(check_anti_assoc_admissible(doc.two_op()));
}

int run_derive(const Options& o) {
    AlgebraDocument doc = parse_algebra(o.file);
    Algebra result;
    if (o.op == "sum") {
        result = sum_operation(doc.two_op());
    } else if (o.op == "circ") {
        result = circ_operation(doc.two_op(), o.convention == "minus" ? CircConvention::Minus
                                                                      : CircConvention::Plus);
    } else {
        result = jj_bracket(doc.algebra());
    }
    Json out = algebra_to_json(result, doc.field);
    if (!o.out.empty()) write_text_file(o.out, dump_document(out));
    return emit(make_report(g_argv, true, {}, Json{{"algebra", out}}), 0);
}

int run_bimodule_check(const Options& o) {
    BimoduleDocument doc = bimodule_document_from_json(parse_json_file(o.file), o.file);
    return emit_check(check_bimodule(doc.value));
}

int run_semidirect(const Options& o) {
    BimoduleDocument doc = bimodule_document_from_json(parse_json_file(o.file), o.file);
    Json out = algebra_to_json(semidirect_product(doc.value), doc.field);
    if (!o.out.empty()) write_text_file(o.out, dump_document(out));
    return emit(make_report(g_argv, true, {}, Json{{"algebra", out}}), 0);
}

int run_double(const Options& o) {
    AlgebraDocument doc = parse_algebra(o.file);
    Json out = algebra_to_json(hat_double(doc.two_op()), doc.field);
    if (!o.out.empty()) write_text_file(o.out, dump_document(out));
    return emit(make_report(g_argv, true, {}, Json{{"algebra", out}}), 0);
}

int run_oop_verify(const Options& o) {
    BimoduleDocument b = bimodule_document_from_json(parse_json_file(o.file), o.file);
    MatrixDocument t = matrix_document_from_json(parse_json_file(o.file2), o.file2);
    return emit_check(check_o_operator(OOperator(b.value, t.value)));
}

int run_rb_verify(const Options& o) {
    AlgebraDocument a = parse_algebra(o.file);
    MatrixDocument r = matrix_document_from_json(parse_json_file(o.file2), o.file2);
    return emit_check(check_rota_baxter(a.algebra(), r.value));
}

int run_rb_search(const Options& o) {
    AlgebraDocument a = parse_algebra(o.file);
    std::vector<Matrix> found = rb_search(a.algebra(), o.height);
    Json mats = Json::array();
    for (const Matrix& m : found) mats.push_back(grid_to_json(m));
    Json derived{{"count", found.size()}, {"matrices", mats}};
    return emit(make_report(g_argv, true, {}, derived), 0);
}

int run_induce_rb(const Options& o) {
    AlgebraDocument a = parse_algebra(o.file);
    MatrixDocument r = matrix_document_from_json(parse_json_file(o.file2), o.file2);
    Json out = two_op_to_json(rb_induce(a.algebra(), r.value), a.field);
    if (!o.out.empty()) write_text_file(o.out, dump_document(out));
    return emit(make_report(g_argv, true, {}, Json{{"rhizaform", out}}), 0);
}

int run_induce_oop(const Options& o) {
    BimoduleDocument b = bimodule_document_from_json(parse_json_file(o.file), o.file);
    MatrixDocument t = matrix_document_from_json(parse_json_file(o.file2), o.file2);
    Json out = two_op_to_json(induce_on_module(OOperator(b.value, t.value)), b.field);
    if (!o.out.empty()) write_text_file(o.out, dump_document(out));
    return emit(make_report(g_argv, true, {}, Json{{"rhizaform", out}}), 0);
}

int run_induce_cocycle(const Options& o) {
    AlgebraDocument a = parse_algebra(o.file);
    FormDocument f = form_document_from_json(parse_json_file(o.file2), o.file2);
    Json out = two_op_to_json(cocycle_induce(a.algebra(), f.value), a.field);
    if (!o.out.empty()) write_text_file(o.out, dump_document(out));
    return emit(make_report(g_argv, true, {}, Json{{"rhizaform", out}}), 0);
}

int run_cocycle_check(const Options& o) {
    AlgebraDocument a = parse_algebra(o.file);
    FormDocument f = form_document_from_json(parse_json_file(o.file2), o.file2);
    return emit_check(check_connes_cocycle(a.algebra(), f.value));
}

int run_double_construct(const Options& o) {
    AlgebraDocument doc = parse_algebra(o.file);
    DoubleConstructionWitness w = build_double(doc.two_op());
    IdentityReport rep = check_double(w);
    Json out = witness_to_json(w, doc.field);
    if (!o.out.empty()) write_text_file(o.out, dump_document(out));
    return emit(make_report(g_argv, rep.pass, rep.violations, Json{{"witness", out}}),
                rep.pass ? 0 : 1);
}

int run_series(const Options& o) {
    AlgebraDocument doc = parse_algebra(o.file);
    SeriesKind kind = o.kind == "left"    ? SeriesKind::Left
                      : o.kind == "right" ? SeriesKind::Right
                                          : SeriesKind::Full;
    SeriesResult res = series(doc.two_op(), kind, o.max_k);
    Json terms = Json::array();
    for (const Subspace& s : res.terms) terms.push_back(subspace_to_json(s, doc.field));
    Json derived;
    derived["kind"] = o.kind;
    derived["terms"] = std::move(terms);
    derived["nilindex"] = res.nilindex ? Json(*res.nilindex) : Json(nullptr);
    return emit(make_report(g_argv, true, {}, derived), 0);
}

int run_center(const Options& o) {
    AlgebraDocument doc = parse_algebra(o.file);
    Subspace z = doc.is_two_op() ? center(doc.two_op()) : center(doc.algebra());
    return emit(make_report(g_argv, true, {}, Json{{"subspace", subspace_to_json(z, doc.field)}}),
                0);
}

int run_ideal(const Options& o) {
    AlgebraDocument doc = parse_algebra(o.file);
    SubspaceDocument s = subspace_document_from_json(parse_json_file(o.file2), o.file2);
    bool ok = is_ideal(doc.two_op(), s.value);
    return emit(make_report(g_argv, ok, {}, Json{{"is_ideal", ok}}), ok ? 0 : 1);
}

int run_quotient_center(const Options& o) {
    AlgebraDocument doc = parse_algebra(o.file);
    Json out = two_op_to_json(quotient_by_center(doc.two_op()), doc.field);
    if (!o.out.empty()) write_text_file(o.out, dump_document(out));
    return emit(make_report(g_argv, true, {}, Json{{"rhizaform", out}}), 0);
}

int run_classify2() {
    Field field = default_field();
    Classification2 cls = classify2();
    std::vector<std::string> names = succ_slot_names(2);
    int nv = SymTensor::slot_count(2);
    Json derived;
    derived["field"] = to_string(field);
    derived["gamma_family"] = family_to_json(cls.gamma_family, nv, names);
    Json nonab = Json::array();
    for (const auto& f : cls.nonabelian.families) nonab.push_back(family_to_json(f, nv, names));
    derived["nonabelian_families"] = std::move(nonab);
    Json ab = Json::array();
    for (const auto& f : cls.abelian.families) ab.push_back(family_to_json(f, nv, names));
    derived["abelian_families"] = std::move(ab);
    Json classes = Json::array();
    for (const auto& c : cls.classes) {
        Json cj;
        cj["tag"] = to_string(c.tag);
        cj["lambda"] = c.lambda ? Json(c.lambda->str()) : Json(nullptr);
        cj["note"] = c.note;
        if (c.tag != CanonicalClass2::Tag::Rh2 || c.lambda)
            cj["representative"] =
                two_op_to_json(class2_representative(c.tag, c.lambda.value_or(Scalar(0))), field);
        classes.push_back(std::move(cj));
    }
    derived["classes"] = std::move(classes);
    return emit(make_report(g_argv, true, {}, derived), 0);
}

int run_canon2(const Options& o) {
    AlgebraDocument doc = parse_algebra(o.file);
    CanonicalClass2 c = canon2(doc.two_op());
    Json derived;
    derived["tag"] = to_string(c.tag);
    derived["lambda"] = c.lambda ? Json(c.lambda->str()) : Json(nullptr);
    derived["witness"] = matrix_to_json(c.witness, doc.field);
    derived["representative"] =
        two_op_to_json(class2_representative(c.tag, c.lambda.value_or(Scalar(0))), doc.field);
    return emit(make_report(g_argv, true, {}, derived), 0);
}

int run_iso2(const Options& o) {
    AlgebraDocument d1 = parse_algebra(o.file);
    AlgebraDocument d2 = parse_algebra(o.file2);
    Iso2Result res = iso2(d1.two_op(), d2.two_op());
    if (res.witness)
        return emit(make_report(g_argv, true, {},
                                Json{{"witness", matrix_to_json(*res.witness, d1.field)}}),
                    0);
    return emit(make_report(g_argv, false, {},
                            Json{{"distinguishing_invariant", res.distinguishing_invariant}}),
                1);
}

} // namespace

int main(int argc, char** argv) {
    g_argv.assign(argv, argv + argc);

    CLI::App app{"rhiza: exact-arithmetic workbench for rhizaform algebras.\n"
                 "Files are JSON; scalars are exact strings over Q or Q(i); matrix files\n"
                 "use the column-as-image convention (column j = image of basis vector j);\n"
                 "tensor entry c[i][j][k] is the e_k coefficient of e_i * e_j."};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check", "Check a defining identity on an algebra file");
    check->add_option("file", o.file, "algebra or rhizaform JSON file")->required();
    check->add_option("--axiom", o.axiom, "identity to check")
        ->required()
        ->check(CLI::IsMember({"anti-assoc", "jacobi-jordan", "pre-jj", "rhizaform", "admissible"}));

    auto* derive = app.add_subcommand("derive", "Derive sum/circ/bracket operations");
    derive->add_option("file", o.file)->required();
    derive->add_option("--op", o.op)->required()->check(CLI::IsMember({"sum", "circ", "bracket"}));
    derive->add_option("--convention", o.convention)
        ->check(CLI::IsMember({"plus", "minus"}));
    derive->add_option("-o,--out", o.out, "output file");

    auto* bimodule_cmd = app.add_subcommand("bimodule", "Bimodule operations");
    bimodule_cmd->require_subcommand(1);
    auto* bimodule_check = bimodule_cmd->add_subcommand("check", "Verify the bimodule conditions");
    bimodule_check->add_option("file", o.file)->required();

    auto* semidirect = app.add_subcommand("semidirect", "Semidirect product algebra of a bimodule");
    semidirect->add_option("file", o.file)->required();
    semidirect->add_option("-o,--out", o.out);

    auto* dbl = app.add_subcommand("double", "Hat-double algebra of a rhizaform file");
    dbl->add_option("file", o.file)->required();
    dbl->add_option("-o,--out", o.out);

    auto* oop = app.add_subcommand("oop", "O-operator commands");
    oop->require_subcommand(1);
    auto* oop_verify = oop->add_subcommand("verify", "Verify the O-operator identity");
    oop_verify->add_option("bimodule", o.file)->required();
    oop_verify->add_option("T", o.file2, "operator matrix file (module -> base)")->required();

    auto* rb = app.add_subcommand("rb", "Rota-Baxter commands");
    rb->require_subcommand(1);
    auto* rb_verify = rb->add_subcommand("verify", "Verify the Rota-Baxter identity");
    rb_verify->add_option("algebra", o.file)->required();
    rb_verify->add_option("R", o.file2)->required();
    auto* rb_search_cmd = rb->add_subcommand("search", "Exhaustive bounded-height search");
    rb_search_cmd->add_option("algebra", o.file)->required();
    rb_search_cmd->add_option("--height", o.height, "max |numerator|, |denominator| per entry")
        ->required()
        ->check(CLI::NonNegativeNumber);

    auto* induce = app.add_subcommand("induce", "Induced rhizaform structures");
    induce->require_subcommand(1);
    auto* induce_rb = induce->add_subcommand("rb", "From a Rota-Baxter operator");
    induce_rb->add_option("algebra", o.file)->required();
    induce_rb->add_option("R", o.file2)->required();
    induce_rb->add_option("-o,--out", o.out);
    auto* induce_oop = induce->add_subcommand("oop", "From an O-operator (module structure)");
    induce_oop->add_option("bimodule", o.file)->required();
    induce_oop->add_option("T", o.file2)->required();
    induce_oop->add_option("-o,--out", o.out);
    auto* induce_cocycle = induce->add_subcommand("cocycle", "From a nondegenerate Connes cocycle");
    induce_cocycle->add_option("algebra", o.file)->required();
    induce_cocycle->add_option("B", o.file2)->required();
    induce_cocycle->add_option("-o,--out", o.out);

    auto* cocycle_cmd = app.add_subcommand("cocycle", "Connes cocycle commands");
    cocycle_cmd->require_subcommand(1);
    auto* cocycle_check = cocycle_cmd->add_subcommand("check", "Verify the cocycle identity");
    cocycle_check->add_option("algebra", o.file)->required();
    cocycle_check->add_option("B", o.file2)->required();

    auto* dc = app.add_subcommand("double-construct",
                                  "Verified double construction over a rhizaform file");
    dc->add_option("file", o.file)->required();
    dc->add_option("-o,--out", o.out);

    auto* series_cmd = app.add_subcommand("series", "Nilpotency series");
    series_cmd->add_option("file", o.file)->required();
    series_cmd->add_option("--kind", o.kind)
        ->required()
        ->check(CLI::IsMember({"left", "right", "full"}));
    series_cmd->add_option("--max", o.max_k, "maximum number of terms")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* center_cmd = app.add_subcommand("center", "Center of an algebra or rhizaform file");
    center_cmd->add_option("file", o.file)->required();

    auto* ideal_cmd = app.add_subcommand("ideal", "Is the subspace an ideal?");
    ideal_cmd->add_option("file", o.file)->required();
    ideal_cmd->add_option("subspace", o.file2)->required();

    auto* qc = app.add_subcommand("quotient-center", "Quotient by the center");
    qc->add_option("file", o.file)->required();
    qc->add_option("-o,--out", o.out);

    app.add_subcommand("classify2", "Two-dimensional classification (RHIZA_FIELD sets the field tag)");

    auto* canon2_cmd = app.add_subcommand("canon2", "Canonical class of a 2-dim rhizaform file");
    canon2_cmd->add_option("file", o.file)->required();

    auto* iso2_cmd = app.add_subcommand("iso2", "Isomorphism decision in dimension 2");
    iso2_cmd->add_option("a", o.file)->required();
    iso2_cmd->add_option("b", o.file2)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cout << dump_document(make_report(g_argv, false, {}, Json(), e.what()));
        return 2;
    }

    try {
        if (check->parsed()) return run_check(o);
        if (derive->parsed()) return run_derive(o);
        if (bimodule_check->parsed()) return run_bimodule_check(o);
        if (semidirect->parsed()) return run_semidirect(o);
        if (dbl->parsed()) return run_double(o);
        if (oop_verify->parsed()) return run_oop_verify(o);
        if (rb_verify->parsed()) return run_rb_verify(o);
        if (rb_search_cmd->parsed()) return run_rb_search(o);
        if (induce_rb->parsed()) return run_induce_rb(o);
        if (induce_oop->parsed()) return run_induce_oop(o);
        if (induce_cocycle->parsed()) return run_induce_cocycle(o);
        if (cocycle_check->parsed()) return run_cocycle_check(o);
        if (dc->parsed()) return run_double_construct(o);
        if (series_cmd->parsed()) return run_series(o);
        if (center_cmd->parsed()) return run_center(o);
        if (ideal_cmd->parsed()) return run_ideal(o);
        if (qc->parsed()) return run_quotient_center(o);
        if (app.get_subcommand("classify2")->parsed()) return run_classify2();
        if (canon2_cmd->parsed()) return run_canon2(o);
        if (iso2_cmd->parsed()) return run_iso2(o);
        std::cout << dump_document(make_report(g_argv, false, {}, Json(), "no command"));
        return 2;
    } catch (const PostconditionError& e) {
        std::cout << dump_document(make_report(g_argv, false, {}, Json(), e.what()));
        return 1;
    } catch (const Error& e) {
        std::cout << dump_document(make_report(g_argv, false, {}, Json(), e.what()));
        return 2;
    } catch (const std::exception& e) {
        std::cout << dump_document(make_report(g_argv, false, {}, Json(), e.what()));
        return 2;
    }
}
