#include <catch_amalgamated.hpp>

#include "cli_runner.hpp"
#include "corpus.hpp"
#include "rhiza/io.hpp"

using namespace rhiza;
using namespace rhiza::testsupport;

TEST_CASE("algebra documents round trip byte-identically") {
    for (const auto& inst : rhizaform_corpus()) {
        if (inst.t.dim > 4) continue;
        bool real = true;
        for (int i = 0; i < inst.t.dim && real; ++i)
            for (int j = 0; j < inst.t.dim && real; ++j)
                for (int k = 0; k < inst.t.dim && real; ++k)
                    real = inst.t.succ.c(i, j, k).is_real() && inst.t.prec.c(i, j, k).is_real();
        Json j = two_op_to_json(inst.t, real ? Field::Q : Field::Qi);
        std::string text = dump_document(j);
        AlgebraDocument doc = algebra_document_from_json(Json::parse(text), inst.name);
        CHECK(doc.two_op() == inst.t);
        CHECK(dump_document(algebra_document_to_json(doc)) == text);
    }
}

TEST_CASE("fixture files parse to the expected objects") {
    AlgebraDocument rh1 = parse_algebra(fixture("rh1.json"));
    CHECK(rh1.field == Field::Q);
    CHECK(rh1.two_op().prec.c(0, 0, 1) == Scalar(1));
    CHECK(rh1.two_op().succ.is_zero());

    AlgebraDocument a2 = parse_algebra(fixture("alg2.json"));
    CHECK_FALSE(a2.is_two_op());
    CHECK(a2.algebra().mul.c(0, 0, 1) == Scalar(1));

    AlgebraDocument gi = parse_algebra(fixture("gamma_i.json"));
    CHECK(gi.field == Field::Qi);
    CHECK(gi.two_op().succ.c(0, 0, 1) == Scalar::imaginary_unit());
}

TEST_CASE("parse failures carry diagnostics") {
    CHECK_THROWS_AS(parse_algebra(fixture("missing.json")), ParseError);
    CHECK_THROWS_AS(parse_algebra(fixture("malformed.json")), ParseError);
    CHECK_THROWS_AS(parse_algebra(fixture("shape_mismatch.json")), ShapeError);
    CHECK_THROWS_MATCHES(parse_algebra(fixture("malformed.json")), ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("zero denominator")));

    // imaginary entries are rejected in Q-field files
    Json j = two_op_to_json(gamma_member(Scalar::imaginary_unit()), Field::Q);
    CHECK_THROWS_AS(algebra_document_from_json(j, "inline"), ParseError);
}

TEST_CASE("matrix, bimodule, form, subspace documents round trip") {
    Matrix m(2, 3);
    m(0, 0) = Scalar::rational(1, 2);
    m(1, 2) = Scalar(0) - Scalar::imaginary_unit();
    std::string mt = dump_document(matrix_to_json(m, Field::Qi));
    MatrixDocument md = matrix_document_from_json(Json::parse(mt), "m");
    CHECK(md.value == m);
    CHECK(dump_document(matrix_to_json(md.value, md.field)) == mt);

    Bimodule b = regular_bimodule(nonabelian2());
    std::string bt = dump_document(bimodule_to_json(b, Field::Q));
    BimoduleDocument bd = bimodule_document_from_json(Json::parse(bt), "b");
    CHECK(bd.value.base.mul == b.base.mul);
    CHECK(bd.value.l == b.l);
    CHECK(bd.value.r == b.r);
    CHECK(dump_document(bimodule_to_json(bd.value, bd.field)) == bt);

    BilinearForm f(2, Matrix::identity(2));
    std::string ft = dump_document(form_to_json(f, Field::Q));
    FormDocument fd = form_document_from_json(Json::parse(ft), "f");
    CHECK(fd.value.gram == f.gram);
    CHECK(dump_document(form_to_json(fd.value, fd.field)) == ft);

    Subspace s = Subspace::span_of({Vec{Scalar(1), Scalar(2)}}, 2);
    std::string st = dump_document(subspace_to_json(s, Field::Q));
    SubspaceDocument sd = subspace_document_from_json(Json::parse(st), "s");
    CHECK(sd.value == s);
    CHECK(dump_document(subspace_to_json(sd.value, sd.field)) == st);

    DoubleConstructionWitness w =
        build_double(class2_representative(CanonicalClass2::Tag::Rh1));
    std::string wt = dump_document(witness_to_json(w, Field::Q));
    DoubleConstructionWitness wd = witness_from_json(Json::parse(wt), "w");
    CHECK(wd.ambient.mul == w.ambient.mul);
    CHECK(wd.part_a == w.part_a);
    CHECK(wd.form.gram == w.form.gram);
    CHECK(dump_document(witness_to_json(wd, Field::Q)) == wt);
}

TEST_CASE("non-canonical subspace input canonicalizes on parse") {
    Json j;
    j["kind"] = "subspace";
    j["field"] = "Q";
    j["ambient"] = 2;
    j["basis"] = Json::array({Json::array({"2", "2"}), Json::array({"1", "0"})});
    SubspaceDocument d = subspace_document_from_json(j, "s");
    CHECK(d.value == Subspace::full(2));
}

TEST_CASE("scalar field tags are validated") {
    CHECK_THROWS_AS(field_from_string("R"), ParseError);
    CHECK(to_string(Field::Qi) == "Qi");
}
