#include "doctest.h"
#include "support.hpp"

#include "ramsey/certify.hpp"
#include "ramsey/error.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/rbc.hpp"

using namespace ramsey;

namespace {

// Counterexamples on small colourings are re-validated by the oracle: the
// embedded vertex set must contain the target in the stated colour.
void oracle_recheck(const Certificate& cert, const TwoColoring& c) {
    if (cert.verified() || c.order() > oracle::kMaxContainsOrder) {
        return;
    }
    const auto& ce = *cert.counterexample;
    const auto& g = ce.color == Color::Red ? c.red() : c.blue();
    const auto& p = ce.color == Color::Red ? cert.red_target : *cert.blue_target;
    CHECK(oracle::oracle_contains(induced(g, ce.vertices), p));
}

} // namespace

TEST_SUITE("certify") {

TEST_CASE("verify examples") {
    const auto fan = verify(fan_construction(4, 4));
    CHECK(fan.verified());
    CHECK_FALSE(fan.counterexample.has_value());
    CHECK(fan.construction.family == "fan");
    CHECK(fan.construction.claimed_bound == 18);

    const auto w = verify(w5w7_construction());
    CHECK(w.verified());

    const TwoColoring all_red(complete_graph(9));
    const auto k9 = verify(all_red, PatternSpec::fan(2), PatternSpec::fan(2));
    CHECK_FALSE(k9.verified());
    REQUIRE(k9.counterexample.has_value());
    CHECK(k9.counterexample->color == Color::Red);
    CHECK(is_embedding(all_red.red(), PatternSpec::fan(2), k9.counterexample->vertices));
    oracle_recheck(k9, all_red);
    CHECK(certificate_consistent(k9, all_red));
}

TEST_CASE("blue refutations carry a blue embedding") {
    const TwoColoring all_blue(empty_graph(9));
    const auto c = verify(all_blue, PatternSpec::fan(2), PatternSpec::wheel(5));
    REQUIRE(c.counterexample.has_value());
    CHECK(c.counterexample->color == Color::Blue);
    CHECK(is_embedding(all_blue.blue(), PatternSpec::wheel(5), c.counterexample->vertices));
    oracle_recheck(c, all_blue);
}

TEST_CASE("red is checked first") {
    const TwoColoring c(complete_graph(9));
    const auto cert = verify(c, PatternSpec::clique(3), PatternSpec::clique(1));
    REQUIRE(cert.counterexample.has_value());
    CHECK(cert.counterexample->color == Color::Red);
}

TEST_CASE("W5/W7 colouring with a wheel:6 blue target") {
    // The blue neighbourhood of every vertex is an independent-set blow-up of a
    // bipartite or triangle-free base with no odd closed 5-walk, so no blue W6.
    const auto c = w5w7_construction();
    const auto cert = verify(c.coloring, PatternSpec::wheel(5), PatternSpec::wheel(6));
    CHECK(cert.verified() == !oracle::oracle_contains(c.coloring.blue(), PatternSpec::wheel(6)));
    CHECK(cert.verified());
}

TEST_CASE("ramsey witness verification") {
    const std::array<std::size_t, 2> s15{1, 5};
    const auto c13 = verify_ramsey_witness(circulant(13, s15), PatternSpec::clique(3), PatternSpec::clique(5));
    CHECK(c13.verified());
    CHECK(c13.construction.family == "ramsey-witness");
    CHECK(verify_ramsey_witness(c7_with_chords(), PatternSpec::clique(3), std::nullopt).verified());
    const auto k4 = verify_ramsey_witness(complete_graph(4), PatternSpec::k4_minus_e(), PatternSpec::clique(2));
    CHECK_FALSE(k4.verified());
    CHECK(k4.counterexample->color == Color::Red);
    const auto blue = verify_ramsey_witness(circulant(13, s15), PatternSpec::clique(3), PatternSpec::clique(4));
    CHECK_FALSE(blue.verified());
    CHECK(blue.counterexample->color == Color::Blue);
    oracle_recheck(blue, TwoColoring(circulant(13, s15)));
}

TEST_CASE("colour swap consistency") {
    std::mt19937_64 rng(61);
    const std::vector<PatternSpec> pats{PatternSpec::fan(2), PatternSpec::wheel(5), PatternSpec::kipas(5),
                                        PatternSpec::clique(4), PatternSpec::k4_minus_e(), PatternSpec::cycle(6)};
    for (int t = 0; t < 80; ++t) {
        const TwoColoring c(testing::random_graph(5 + rng() % 8, 0.5, rng));
        const auto& r = pats[rng() % pats.size()];
        const auto& b = pats[rng() % pats.size()];
        const auto a = verify(c, r, b);
        const auto s = verify(c.swapped(), b, r);
        CHECK(a.verified() == s.verified());
        CHECK(certificate_consistent(a, c));
        CHECK(certificate_consistent(s, c.swapped()));
        oracle_recheck(a, c);
        oracle_recheck(s, c.swapped());
    }
}

TEST_CASE("certificates are bound to their colouring") {
    const auto c = w5w7_construction();
    const auto cert = verify(c);
    CHECK(certificate_consistent(cert, c.coloring));
    CHECK_FALSE(certificate_consistent(cert, c.coloring.swapped()));
    CHECK(cert.coloring_sha.size() == 64);
    CHECK(cert.coloring_sha == coloring_sha256(c.coloring));
    CHECK(coloring_sha256(TwoColoring(empty_graph(0))) == coloring_sha256(TwoColoring(empty_graph(0))));
    // SHA-256 of "rbc 0\n".
    CHECK(coloring_sha256(TwoColoring(empty_graph(0))) ==
          "454f3047df48ff058eac41838c159faf1097feb16033f8cfdb93b476bf792cc9");

    auto forged = cert;
    forged.result = Verdict::Refuted;
    CHECK_FALSE(certificate_consistent(forged, c.coloring));
    forged.counterexample = Counterexample{Color::Red, {0, 1, 2, 3, 4}};
    CHECK_FALSE(certificate_consistent(forged, c.coloring));
}

TEST_CASE("certificate JSON round trip") {
    const TwoColoring k9(complete_graph(9));
    for (const auto& cert : {verify(fan_construction(5, 5)), verify(k9, PatternSpec::fan(2), PatternSpec::fan(2)),
                             verify_ramsey_witness(c7_with_chords(), PatternSpec::clique(3), std::nullopt)}) {
        const auto j = to_json(cert);
        for (const char* field : {"construction", "order", "red_target", "blue_target", "result", "counterexample",
                                  "coloring_sha", "elapsed_ms"}) {
            CHECK(j.contains(field));
        }
        CHECK(certificate_from_json(j) == cert);
        CHECK(certificate_from_json(nlohmann::json::parse(j.dump())) == cert);
    }
    const auto j = to_json(verify(k9, PatternSpec::fan(2), PatternSpec::fan(2)));
    CHECK(j["result"] == "refuted");
    CHECK(j["counterexample"]["color"] == "red");
    CHECK(j["red_target"] == "fan:2");
}

TEST_CASE("malformed certificate JSON") {
    auto j = to_json(verify(w5w7_construction()));
    auto missing = j;
    missing.erase("coloring_sha");
    CHECK_THROWS_AS(certificate_from_json(missing), ParseError);
    auto bad_result = j;
    bad_result["result"] = "maybe";
    CHECK_THROWS_AS(certificate_from_json(bad_result), ParseError);
    auto inconsistent = j;
    inconsistent["result"] = "refuted";
    CHECK_THROWS_AS(certificate_from_json(inconsistent), ParseError);
    auto bad_pattern = j;
    bad_pattern["red_target"] = "wheel";
    CHECK_THROWS_AS(certificate_from_json(bad_pattern), ParseError);
    CHECK_THROWS_AS(certificate_from_json(nlohmann::json::array()), ParseError);
}

TEST_CASE("rbc files") {
    const auto c = fan_construction(4, 4).coloring;
    const auto text = to_rbc(c, {{"family", "fan"}, {"claimed_bound", "18"}});
    CHECK(text.rfind("rbc 17\n# family fan\n# claimed_bound 18\n", 0) == 0);
    const auto back = parse_rbc(text);
    CHECK(back.coloring == c);
    CHECK(back.meta("family") == "fan");
    CHECK(back.meta("claimed_bound") == "18");
    CHECK(back.meta("absent").empty());
    CHECK(canonical_rbc(c).find('#') == std::string::npos);

    std::mt19937_64 rng(67);
    for (int t = 0; t < 30; ++t) {
        const TwoColoring r(testing::random_graph(rng() % 30, 0.4, rng));
        CHECK(parse_rbc(to_rbc(r)).coloring == r);
    }
    CHECK(parse_rbc("rbc 3\n# just a note\n0 1 # trailing\n\n1 2\n").coloring.red().edge_count() == 2);

    CHECK_THROWS_AS(parse_rbc(""), ParseError);
    CHECK_THROWS_AS(parse_rbc("rbx 3\n"), ParseError);
    CHECK_THROWS_AS(parse_rbc("rbc three\n"), ParseError);
    CHECK_THROWS_AS(parse_rbc("rbc 3\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_rbc("rbc 3\n0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_rbc("rbc 3\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_rbc("rbc 3\n0 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_rbc("rbc 3\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_rbc("rbc 3\n0\n"), ParseError);
}

TEST_CASE("table reproduction") {
    const auto rows = reproduce_tables();
    REQUIRE(rows.size() == 2);
    const auto& w56 = rows[0];
    CHECK(w56.name == "w5w6");
    CHECK(w56.n.front() == 5);
    CHECK(w56.n.back() == 15);
    CHECK(w56.derived.size() == 11);
    CHECK(w56.derived[0] == 27);
    CHECK(w56.derived[1] == 35);
    CHECK(w56.derived[4] == 71);
    CHECK(w56.derived.back() == 147);
    const auto& w7 = rows[1];
    CHECK(w7.name == "w7");
    CHECK(w7.derived.size() == 6);
    CHECK(w7.derived[0] == 31);
    CHECK(w7.derived[2] == 55);
    CHECK(w7.derived.back() == 97);
    for (const auto& r : rows) {
        CHECK(r.ok());
        CHECK(r.derived == r.published);
    }
    CHECK(k3_clique_table().size() == 13);
    CHECK(k4me_clique_table().size() == 8);
}

}
