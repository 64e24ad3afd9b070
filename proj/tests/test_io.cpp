#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bihom/constructions.hpp"
#include "bihom/io.hpp"
#include "bihom/search.hpp"
#include "support/corpus.hpp"

using namespace bihom;
using namespace bihom::testsupport;

namespace {

const FieldDescriptor QQ = FieldDescriptor::rationals();
const FieldDescriptor GF3 = FieldDescriptor::gf(3);

const char* kZeroNsDocument = R"json({
  "format_version": 1,
  "field": "GF(3)",
  "dim": 1,
  "kind_claim": "bihom_ns",
  "ops": {
    "prec": [[["0 mod 3"]]],
    "succ": [[["0 mod 3"]]],
    "vee": [[["0 mod 3"]]]
  },
  "maps": {
    "alpha": [["1 mod 3"]],
    "beta": [["1 mod 3"]]
  }
})json";

}  // namespace

TEST_CASE("parse a canonical zero-algebra file") {
    PresentationDocument doc = parse_presentation(kZeroNsDocument);
    CHECK(doc.algebra.dim == 1);
    CHECK(doc.algebra.field == GF3);
    CHECK(doc.algebra.kind_claim == "bihom_ns");
    CHECK(doc.algebra.op("prec") == BilinearOp::zero(GF3, 1));
    CHECK(check_bihom_ns(doc.algebra).pass);
}

TEST_CASE("scalar entries may be plain integers") {
    std::string text = R"json({"format_version":1,"field":"QQ","dim":1,
        "ops":{"mu":[[[1]]]},"maps":{"alpha":[["1"]],"beta":[[1]]}})json";
    PresentationDocument doc = parse_presentation(text);
    CHECK(doc.algebra.op("mu").at(0, 0, 0) == Scalar::one(QQ));
}

TEST_CASE("zero denominator is a parse error") {
    std::string text = R"json({"format_version":1,"field":"QQ","dim":1,
        "ops":{"mu":[[["1/0"]]]},"maps":{}})json";
    CHECK_THROWS_AS(parse_presentation(text), ParseError);
}

TEST_CASE("malformed and invalid documents") {
    CHECK_THROWS_AS(parse_presentation("{"), ParseError);
    CHECK_THROWS_AS(parse_presentation("{}"), ParseError);  // no format_version
    CHECK_THROWS_AS(parse_presentation(R"json({"format_version":2,"field":"QQ","dim":1})json"), ParseError);
    CHECK_THROWS_AS(parse_presentation(R"json({"format_version":1,"field":"QQ","dim":0})json"),
                    ValidationError);
    // wrong tensor arity
    CHECK_THROWS_AS(parse_presentation(
                        R"json({"format_version":1,"field":"QQ","dim":2,"ops":{"mu":[[["1"]]]}})json"),
                    ValidationError);
    // module names without dim_M
    CHECK_THROWS_AS(parse_presentation(
                        R"json({"format_version":1,"field":"QQ","dim":1,"ops":{"l":[[["1"]]]}})json"),
                    ValidationError);
    // claimed kind missing its ops
    CHECK_THROWS_AS(parse_presentation(
                        R"json({"format_version":1,"field":"QQ","dim":1,"kind_claim":"bihom_ns",
                            "ops":{},"maps":{}})json"),
                    ValidationError);
    CHECK_THROWS_AS(parse_presentation(
                        R"json({"format_version":1,"field":"QQ","dim":1,"kind_claim":"nonsense",
                            "ops":{},"maps":{}})json"),
                    ValidationError);
}

TEST_CASE("serialization round trip over the corpus") {
    size_t tried = 0;
    for (const auto& p : corpus().bihom_ns) {
        if (++tried > 25) break;
        PresentationDocument doc = wrap(p);
        std::string bytes = serialize(doc);
        PresentationDocument back = parse_presentation(bytes);
        CHECK(back.algebra.structurally_equal(doc.algebra));
        CHECK(serialize(back) == bytes);  // canonical form is idempotent
    }
}

TEST_CASE("module documents round trip with H and pi") {
    size_t tried = 0;
    for (const auto& t : corpus().twisted_rb) {
        if (++tried > 10) break;
        PresentationDocument doc = wrap(t);
        std::string bytes = serialize(doc);
        PresentationDocument back = parse_presentation(bytes);
        REQUIRE(back.has_module());
        CHECK(*back.bimodule == t.bimodule);
        REQUIRE(back.cocycle.has_value());
        CHECK(*back.cocycle == t.cocycle);
        REQUIRE(back.pi.has_value());
        CHECK(*back.pi == t.pi);
        TwistedRBInstance reparsed = back.twisted_rb();
        CHECK(check_twisted_rb(reparsed).pass);
        CHECK(serialize(back) == bytes);
    }
}

TEST_CASE("provenance round trips") {
    PresentationDocument doc = wrap(with_id_maps(ground_field(QQ)));
    doc.provenance = Provenance{"yau_twist", {"0123456789abcdef"}};
    PresentationDocument back = parse_presentation(serialize(doc));
    REQUIRE(back.provenance.has_value());
    CHECK(back.provenance->construction == "yau_twist");
    CHECK(back.provenance->inputs == std::vector<std::string>{"0123456789abcdef"});
}

TEST_CASE("digest is stable content addressing") {
    PresentationDocument a = wrap(with_id_maps(ground_field(QQ)));
    PresentationDocument b = wrap(with_id_maps(ground_field(QQ)));
    CHECK(digest(a) == digest(b));
    CHECK(digest(a).size() == 16);
    PresentationDocument c = wrap(with_id_maps(zero_algebra(QQ, 1)));
    CHECK(digest(a) != digest(c));
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
}

TEST_CASE("map and vector documents") {
    LinearMap m = diag(GF3, {1, 2});
    LinearMap back = parse_map_document(serialize_map_document(m));
    CHECK(back == m);

    Vector v(QQ, 3);
    v[0] = Scalar::rational(1, 2);
    v[2] = Scalar::rational(-7, 3);
    Vector vb = parse_vector_document(serialize_vector_document(v));
    CHECK(vb == v);
}

TEST_CASE("report documents serialize deterministically with sorted keys") {
    AlgebraPresentation p = dual_numbers(QQ);
    BimodulePresentation b = regular_bimodule(p);
    b.left_action.at(0, 0, 0) += Scalar::one(QQ);
    ReportDocument r;
    r.input_digest = digest(wrap(b));
    r.results.emplace_back("bimodule", check_bimodule(b));
    r.results.emplace_back("bihom_associative", check_bihom_associative(p));
    std::string bytes = serialize(r);
    CHECK(bytes == serialize(r));
    CHECK(bytes.find("\"failed_axiom\"") != std::string::npos);
    CHECK(bytes.find("\"witness\"") != std::string::npos);
    CHECK_FALSE(r.all_pass());
    CHECK_FALSE(r.any_prerequisite_failure());
}

TEST_CASE("search spec documents parse") {
    std::string text = R"json({
      "format_version": 1,
      "field": "GF(2)",
      "dim": 1,
      "target": "bihom_associative",
      "base": {
        "format_version": 1, "field": "GF(2)", "dim": 1,
        "ops": {"mu": [[["0"]]]},
        "maps": {"alpha": [["1"]], "beta": [["1"]]}
      },
      "unknowns": [{"kind": "op", "name": "mu"}],
      "budget": 16,
      "seed": 5
    })json";
    SearchSpec spec = parse_search_spec(text);
    CHECK(spec.candidate_count() == 2);
    auto witnesses = search_witnesses(spec, spec.target);
    CHECK(witnesses.size() == 2);

    CHECK_THROWS_AS(parse_search_spec("{}"), ParseError);
}
