#include <doctest.h>

#include "generators.hpp"
#include "hypdiv/fo.hpp"
#include "hypdiv/reductions.hpp"
#include "truth_table.hpp"

#include <fstream>
#include <sstream>

using namespace hypdiv;
using namespace hypdiv::fo;

namespace {

std::vector<Formula> corpus()
{
    std::ifstream in(HYPDIV_TEST_DATA "/corpus.fo");
    REQUIRE(in);
    std::vector<Formula> out;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#')
            out.push_back(parse_fo(line));
    return out;
}

const Graph k3(3, {{1, 2}, {1, 3}, {2, 3}});
const Graph p3(3, {{1, 2}, {2, 3}});
const Graph k2(2, {{1, 2}});

} // namespace

TEST_CASE("parse examples")
{
    const auto f = parse_fo("exists x. exists y. (E(x,y) & ~(x=y))");
    CHECK(f.kind() == Kind::Exists);
    CHECK(f.left().kind() == Kind::Exists);
    CHECK(f.left().left().kind() == Kind::And);
    CHECK(quantifier_depth(f) == 2);
    CHECK(node_count(f) == 6);

    CHECK_THROWS_AS(parse_fo("E(x,y)"), UnboundVariable);
    CHECK(is_sentence(parse_fo("forall x. (exists y. E(x,y))")));
    CHECK(free_variables(parse_fo_formula("(E(x,y) & x=z)")) == std::set<std::string>{"x", "y", "z"});
}

TEST_CASE("syntax errors carry positions")
{
    try {
        parse_fo("exists x E(x,x)");
        FAIL("expected a syntax error");
    } catch (const SyntaxError & e) {
        CHECK(e.position == 9);
    }
    CHECK_THROWS_AS(parse_fo("(E(x,x) & E(x,x)"), SyntaxError);
    CHECK_THROWS_AS(parse_fo("exists exists. x=x"), SyntaxError);
    CHECK_THROWS_AS(parse_fo("exists X. X=X"), SyntaxError);
    CHECK_THROWS_AS(parse_fo("exists x. x=x extra"), SyntaxError);
    CHECK_THROWS_AS(parse_fo(""), SyntaxError);
}

TEST_CASE("printing round-trips")
{
    for (const auto & f : corpus()) {
        const auto printed = to_string(f);
        CHECK(parse_fo(printed) == f);
        CHECK(to_string(parse_fo(printed)) == printed);
    }
    CHECK(to_string(parse_fo("exists  x .  ~ ( x = x )")) == "exists x. ~(x=x)");
}

TEST_CASE("evaluation examples")
{
    CHECK(eval_fo(k3, parse_fo("exists x. exists y. (~(x=y) & E(x,y))")));
    CHECK_FALSE(eval_fo(k3, parse_fo("exists x. exists y. exists z. (((~(x=y) & ~(y=z)) & ~(x=z)) & "
                                      "((~E(x,y) & ~E(y,z)) & ~E(x,z)))")));
    CHECK(eval_fo(p3, parse_fo("forall x. exists y. E(x,y)")));
    CHECK_FALSE(eval_fo(Graph(3, {{1, 2}}), parse_fo("forall x. exists y. E(x,y)")));
    CHECK_THROWS_AS(eval_fo(k3, parse_fo_formula("E(x,y)")), ContractError);
    CHECK(eval_fo(p3, parse_fo_formula("E(x,y)"), {{"x", 1}, {"y", 2}}));
    CHECK_FALSE(eval_fo(p3, parse_fo_formula("E(x,y)"), {{"x", 1}, {"y", 3}}));
    CHECK_THROWS_AS(eval_fo(p3, parse_fo_formula("E(x,y)"), {{"x", 1}}), ContractError);
    // shadowing
    CHECK(eval_fo(p3, parse_fo("exists x. (E(x,x) | exists x. x=x)")));
}

TEST_CASE("eval agrees with the truth-table evaluator on small graphs")
{
    const auto sentences = corpus();
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto & g : testsupport::all_graphs(n))
            for (const auto & phi : sentences)
                CHECK(eval_fo(g, phi) == testsupport::truth_table_eval(g, phi));
}

TEST_CASE("default classifier on the embedding of K2")
{
    const auto g = distance_graph(embed_subdivided(k2), 1);
    const auto v = phi_v();
    CHECK(free_variables(v) == std::set<std::string>{"x"});
    CHECK(node_count(v) == 8);
    CHECK(eval_fo(g, v, {{"x", 1}}));
    CHECK(eval_fo(g, v, {{"x", 2}}));
    CHECK_FALSE(eval_fo(g, v, {{"x", 3}}));
    CHECK(eval_fo(g, v, {{"x", 4}}));  // the leaf passes as well
}

TEST_CASE("rewrite of a single edge atom")
{
    const auto f = rewrite_fo(parse_fo("exists x. exists y. E(x,y)"));
    const auto expected = parse_fo(
        "exists x. (forall c0. (E(x,c0) -> exists c1. (~(c1=x) & E(c0,c1))) & "
        "exists y. (forall c2. (E(y,c2) -> exists c3. (~(c3=y) & E(c2,c3))) & "
        "exists s4. ((E(x,s4) & E(s4,y)) & ~(x=y))))");
    CHECK(f == expected);
}

TEST_CASE("rewrite rules with a trivial classifier")
{
    const auto top = parse_fo_formula("x=x");
    CHECK(rewrite_fo(parse_fo("forall x. x=x"), top) == parse_fo("forall x. (x=x -> x=x)"));
    CHECK(rewrite_fo(parse_fo("exists a. exists b. E(a,b)"), top) ==
          parse_fo("exists a. (a=a & exists b. (b=b & exists s0. ((E(a,s0) & E(s0,b)) & ~(a=b))))"));
    CHECK_THROWS_AS(rewrite_fo(parse_fo("forall x. x=x"), parse_fo("exists x. x=x")), ContractError);
    CHECK_THROWS_AS(rewrite_fo(parse_fo("forall x. x=x"), parse_fo_formula("E(x,y)")), ContractError);
    CHECK_THROWS_AS(rewrite_fo(parse_fo_formula("E(x,y)")), ContractError);
}

TEST_CASE("fresh names never capture")
{
    // the sentence already uses the names the rewriter would pick first
    const auto phi = parse_fo("exists s0. exists c0. exists c1. (E(s0,c0) & E(c0,c1))");
    const auto renamed = parse_fo("exists a. exists b. exists d. (E(a,b) & E(b,d))");
    const auto out = rewrite_fo(phi), reference = rewrite_fo(renamed);
    CHECK(is_sentence(out));
    CHECK(node_count(out) == node_count(reference));
    testsupport::Rng rng(51);
    for (int trial = 0; trial < 10; ++trial) {
        const auto h = testsupport::random_graph(rng, 4, 0.5);
        const auto g = distance_graph(embed_subdivided(h), 1);
        CHECK(eval_fo(g, out) == eval_fo(g, reference));
    }
}

TEST_CASE("rewritten size stays within twenty times the original")
{
    for (const auto & phi : corpus()) {
        const auto out = rewrite_fo(phi);
        CHECK(is_sentence(out));
        CHECK(node_count(out) <= 20 * node_count(phi));
    }
}

TEST_CASE("embedding harness records every cell")
{
    const auto sentences = corpus();
    const auto records = run_embedding_harness({k2, p3}, sentences, phi_v());
    CHECK(records.size() == 2 * sentences.size());
    for (const auto & rec : records) {
        CHECK(rec.agree == (rec.host_value == rec.embedded_value));
        CHECK(rec.rewritten_size <= 20 * rec.original_size);
    }
    // K2 embedded: only the leaf is misclassified
    CHECK(records.front().misclassified == 1);
}
