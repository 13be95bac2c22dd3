#include "lipwb/errors.hpp"
#include "lipwb/json_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace lipwb;

TEST(JsonRational, CanonicalStringsOnly) {
    EXPECT_EQ(q_to_json(Q(-7, 2)), Json("-7/2"));
    EXPECT_EQ(q_from_json(Json("11/18")), Q(11, 18));
    EXPECT_THROW(q_from_json(Json("2/4")), ParseError);
    EXPECT_THROW(q_from_json(Json(3)), ParseError);
    EXPECT_THROW(q_from_json(Json(0.5)), ParseError);
    EXPECT_EQ(qvec_from_json(qvec_to_json({Q(1), Q(-1, 3)})), (QVec{Q(1), Q(-1, 3)}));
}

TEST(JsonSpace, RoundTrip) {
    auto sp = truncate(catalog("example48"), 6);
    auto back = space_from_json(parse_json_text(space_to_json(*sp).dump()));
    EXPECT_EQ(back->dist, sp->dist);
    EXPECT_EQ(back->labels, sp->labels);
    EXPECT_EQ(back->name, sp->name);
}

TEST(JsonSpace, NonzeroBaseIsRepointed) {
    auto j = parse_json_text(R"({"name":"l","base":2,"points":["a","b","c"],"dist":[["0","1","3"],["1","0","2"],["3","2","0"]]})");
    auto sp = space_from_json(j);
    EXPECT_EQ(sp->labels[0], "c");
    EXPECT_EQ(sp->d(0, 1), Q(2));
    EXPECT_EQ(sp->d(0, 2), Q(3));
}

TEST(JsonSpace, Errors) {
    EXPECT_THROW(space_from_json(parse_json_text(R"({"dist":[["0","1"],["1"]]})")), StructuralError);
    EXPECT_THROW(space_from_json(parse_json_text(R"({"dist":[["0","3","1"],["3","0","1"],["1","1","0"]]})")),
                 ModelDefinitionError);
    EXPECT_THROW(space_from_json(parse_json_text(R"({"dist":[["0","1"],["1","0"]],"base":5})")), StructuralError);
    EXPECT_THROW(parse_json_text("{not json"), ParseError);
    EXPECT_THROW(space_from_json(parse_json_text(R"({"dist":[[0,1],[1,0]]})")), ParseError);
}

TEST(JsonFunction, NamedAndInline) {
    auto sp = integer_space(3);
    LipschitzFunction f(sp, {0, Q(1, 2), -1});
    auto g = function_from_json(function_to_json(f), sp);
    EXPECT_EQ(g.values, f.values);
    auto h = function_from_json(parse_json_text(function_to_json(f, true).dump()));
    EXPECT_EQ(h.values, f.values);
    EXPECT_EQ(h.space->dist, sp->dist);
    auto other = discrete_space(3);
    EXPECT_THROW(function_from_json(function_to_json(f), other), ParseError);
    EXPECT_THROW(function_from_json(function_to_json(f)), ParseError);
}

TEST(JsonFreeElement, RoundTrip) {
    auto sp = integer_space(4);
    FreeElement mu(sp, {{1, Q(2)}, {3, Q(-1, 4)}});
    auto back = free_element_from_json(free_element_to_json(mu), sp);
    EXPECT_EQ(back.weights, mu.weights);
    EXPECT_THROW(free_element_from_json(parse_json_text(R"({"weights":{"x":"1"}})"), sp), ParseError);
    auto fn = free_norm_to_json(free_norm_lp(mu));
    EXPECT_EQ(fn["norm"], Json(to_string(free_norm_lp(mu).norm)));
    EXPECT_TRUE(fn.contains("dual_witness"));
}

TEST(JsonPL, ExtendModes) {
    PiecewiseLinearFunction f({-1, 0, 1}, {1, 0, 1}, true, false);
    auto j = pl_to_json(f);
    EXPECT_EQ(j["extend"], "left");
    auto g = pl_from_json(j);
    EXPECT_EQ(g.xs, f.xs);
    EXPECT_TRUE(g.extend_left);
    EXPECT_FALSE(g.extend_right);
    auto bad = j;
    bad["extend"] = "both";
    EXPECT_THROW(pl_from_json(bad), ParseError);
}

TEST(JsonTree, RoundTrip) {
    auto t = caterpillar_tree(3, 1);
    t.base = 2;
    auto back = tree_from_json(parse_json_text(tree_to_json(t).dump()));
    EXPECT_EQ(back.vertices, t.vertices);
    EXPECT_EQ(back.base, 2u);
    EXPECT_EQ(tree_metric(back)->dist, tree_metric(t)->dist);
}

TEST(JsonReport, Fields) {
    auto fam = build_prop23(truncate(catalog("prop23"), 5));
    auto rep = verify_isometry(fam, standard_battery(4, 2, 3, 7));
    auto j = report_to_json(rep, 5, true);
    for (const char* k : {"theorem", "space", "N", "checker", "target", "coeff_count", "seed", "exact_pass", "norm_bounded",
                          "residue_pass", "failures", "worst_defect", "witness_samples"})
        EXPECT_TRUE(j.contains(k)) << k;
    EXPECT_EQ(j["seed"], 7);
    EXPECT_EQ(j["target"], "sup-norm");
    EXPECT_EQ(j["worst_defect"], "0");
    EXPECT_EQ(report_to_json(rep)["checker"], Json(nullptr));
}

TEST(JsonCheck, FailureCarriesWitness) {
    auto j = check_to_json(check_prop42(*integer_space(10), {2, 3}));
    EXPECT_EQ(j["passed"], false);
    EXPECT_EQ(j["clause"], "separation");
    EXPECT_EQ(j["values"], Json::array({"1", "2"}));
}

TEST(Files, AtomicWriteAndRead) {
    auto dir = std::filesystem::temp_directory_path() / "lipwb_json_io_test";
    std::filesystem::remove_all(dir);
    auto path = (dir / "sub" / "out.json").string();
    write_atomic(path, "{\"a\":1}");
    write_atomic(path, "{\"a\":2}");
    EXPECT_EQ(read_file(path), "{\"a\":2}");
    EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
    EXPECT_THROW(read_file((dir / "missing").string()), ParseError);
    std::filesystem::remove_all(dir);
}
