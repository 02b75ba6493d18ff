#include <doctest.h>

#include "bier/bier.hpp"
#include "bier/corpus.hpp"
#include "bier/json_io.hpp"
#include "bier/render.hpp"

using namespace bier;

TEST_CASE("JSON input schema")
{
    Complex K = complex_from_json_text(R"({"m": 4, "facets": [[1,2,3],[4]]})");
    CHECK(K.ground_size() == 4);
    CHECK(K.face_count() == 9);

    CHECK_THROWS_WITH_AS(complex_from_json_text(R"({"facets": []})"), doctest::Contains("\"m\""),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(complex_from_json_text(R"({"m": 40, "facets": []})"), doctest::Contains("1..32"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(complex_from_json_text(R"({"m": 3, "facets": [[4]]})"), doctest::Contains("facets[0]"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(complex_from_json_text(R"({"m": 3, "facets": 7})"), doctest::Contains("facets"),
                         std::invalid_argument);
    CHECK_THROWS(complex_from_json_text("{not json"));
}

TEST_CASE("JSON serialization is canonical and stable")
{
    Complex a = complex_from_json_text(R"({"m": 4, "facets": [[1,2,3],[4]]})");
    Complex b = complex_from_json_text(R"({"m": 4, "facets": [[4],[3,2,1],[1,2]]})");
    CHECK(complex_to_json(a) == complex_to_json(b));
    CHECK(complex_to_json(a) == complex_to_json(a));

    BierComplex B = bier_sphere(a);
    CHECK(bier_to_json(B).find("\"base_m\":4") != std::string::npos);
}

TEST_CASE("betti table rendering")
{
    BettiTable t;
    t.add(0, 0, 1);
    t.add(1, 2, 2);
    t.add(2, 4, 1);
    const std::string table = render_betti_table(t, OutputFormat::Table);
    CHECK(table == "i\\j 0 1 2 3 4\n"
                   "0   1 . . . .\n"
                   "1   . . 2 . .\n"
                   "2   . . . . 1\n");
    CHECK(render_betti_table(t, OutputFormat::Csv) == "i,j,value\n0,0,1\n1,2,2\n2,4,1\n");
    CHECK(render_betti_table(t, OutputFormat::Json) ==
          "[{\"i\":0,\"j\":0,\"value\":1},{\"i\":1,\"j\":2,\"value\":2},{\"i\":2,\"j\":4,\"value\":1}]");
}

TEST_CASE("classification rendering")
{
    Complex K = make_complex(2, {VertexSubset::of({1})});
    auto rows = all_pairs_classification(K);
    const std::string csv = render_classify_rows(rows, 2, OutputFormat::Csv);
    CHECK(csv.find("I,J,tag,detail,betti\n") == 0);
    CHECK(csv.find(",,cross-polytope,r=0,1\n") != std::string::npos);
    const std::string tbl = render_classify_rows(rows, 2, OutputFormat::Table);
    CHECK(tbl == render_classify_rows(all_pairs_classification(K), 2, OutputFormat::Table));
}

TEST_CASE("corpus enumeration counts")
{
    CHECK(all_complexes(1).size() == 1);
    CHECK(all_complexes(2).size() == 4);
    CHECK(all_complexes(3).size() == 18);
    CHECK(all_complexes(4).size() == 166);
    for (const Complex& K : all_complexes(3)) {
        CHECK(K.ground_size() == 3);
        CHECK(K.face_count() < 8);
        CHECK(K.contains(VertexSubset()));
    }
}

TEST_CASE("random corpus determinism")
{
    RandomComplexSource a(5, 99), b(5, 99), c(5, 100);
    bool all_equal = true, any_diff = false;
    for (int t = 0; t < 10; ++t) {
        Complex ka = a.next(), kb = b.next(), kc = c.next();
        all_equal = all_equal && (ka == kb);
        any_diff = any_diff || !(ka == kc);
    }
    CHECK(all_equal);
    CHECK(any_diff);
}
