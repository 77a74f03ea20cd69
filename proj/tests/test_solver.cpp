#include <doctest.h>

#include "generators.hpp"
#include "hypdiv/solver.hpp"

#include <algorithm>
#include <set>

using namespace hypdiv;

namespace {

PartialVector pv(std::string_view s) { return PartialVector::from_string(s); }

Instance inst(std::size_t k, std::size_t r, std::initializer_list<const char *> rows)
{
    std::vector<PartialVector> v;
    for (auto s : rows)
        v.push_back(pv(s));
    const auto d = v.empty() ? 0 : v.front().size();
    return Instance(d, k, r, std::move(v));
}

// Direct transcription of the displayed formula, no saturation, small arguments only.
unsigned long long zeta_direct(unsigned long long k, unsigned long long r)
{
    unsigned long long base = (k - 1) * 2 * (3 * (k - 1) * (r + 1) + 2 * r);
    unsigned long long sum = 0, fact = 1;
    for (unsigned long long alpha = 1; alpha <= (k - 1) * (r + 1) + r; ++alpha) {
        fact *= alpha;
        unsigned long long p = 1;
        for (unsigned long long i = 0; i < alpha; ++i)
            p *= base;
        sum += fact * p;
    }
    unsigned long long three = 1;
    for (unsigned long long i = 0; i < (k - 1) * (r + 1); ++i)
        three *= 3;
    return three * sum;
}

bool has_kind(const SolveOutcome & o, TraceStep::Kind kind)
{
    return std::any_of(o.trace.begin(), o.trace.end(), [kind](const TraceStep & s) { return s.kind == kind; });
}

} // namespace

TEST_CASE("zeta values")
{
    for (std::size_t r = 0; r <= 5; ++r)
        CHECK(zeta(1, r) == 0);
    CHECK(zeta(2, 1) == 225936);
    CHECK(zeta(2, 1) == zeta_direct(2, 1));
    CHECK(zeta(2, 0) == zeta_direct(2, 0));
    CHECK(zeta(3, 0) == zeta_direct(3, 0));
    CHECK(zeta(10, 10) == big_count_cap);
    CHECK_THROWS_AS(zeta(0, 1), ContractError);
}

TEST_CASE("zeta_plus dominates zeta and the target is +2")
{
    for (std::size_t k = 1; k <= 5; ++k)
        for (std::size_t r = 0; r <= 5; ++r) {
            CHECK(zeta_plus(k, r) >= zeta(k, r));
            CHECK(sunflower_target(k, r) == (k - 1) * 2 * (3 * (k - 1) * (r + 1) + 2 * r) + 2);
        }
    // k = 2, r = 0: a* = 8, one α-term: 3 · (2 + 1!·7) = 27
    CHECK(zeta_plus(2, 0) == 27);
}

TEST_CASE("thresholds and overrides")
{
    const auto plain = Thresholds::for_parameters(2, 1);
    CHECK_FALSE(plain.overridden);
    CHECK(plain.zeta_gate >= plain.zeta);
    CHECK(plain.sunflower_target >= 2);

    ThresholdOverrides o;
    o.zeta_gate = 5;
    o.sunflower_target = 3;
    const auto over = Thresholds::for_parameters(2, 1, o);
    CHECK(over.overridden);
    CHECK(over.zeta_gate == 5);
    CHECK(over.sunflower_target == 3);
}

TEST_CASE("heavy wildcard reduction")
{
    const auto i = inst(2, 1, {"????0", "00000"});
    const auto red = reduce_heavy_wildcard(i);
    REQUIRE(red);
    CHECK(red->reduced.k() == 1);
    CHECK(red->reduced.rows() == std::vector<PartialVector>{pv("00000")});
    CHECK(red->record.position == 0);

    CHECK(reduce_heavy_wildcard(inst(1, 3, {"1?", "00"})));
    CHECK_FALSE(reduce_heavy_wildcard(inst(2, 1, {"??00", "0000"})));
    CHECK_FALSE(reduce_heavy_wildcard(inst(0, 1, {"????"})));
}

TEST_CASE("heavy wildcard lift example")
{
    const auto reduced = inst(1, 1, {"0000"});
    const HeavyWildcardRecord rec{pv("???0"), 0, 2};
    const auto lifted = lift_heavy_wildcard(reduced, {{pv("0000")}, {0}}, rec);
    CHECK(lifted.completed.front() == pv("1100"));
    const Instance original(4, 2, 1, {pv("???0"), pv("0000")});
    CHECK(verify_solution(original, lifted).ok);

    CHECK(lifted_row(pv("???0"), {pv("0000")}, 1) == pv("1100"));
    CHECK(lifted_row(pv("1??"), {}, 4) == pv("100"));
    CHECK_THROWS_AS(lift_heavy_wildcard(reduced, {{pv("0000")}, {}}, rec), ContractError);
}

TEST_CASE("heavy wildcard invariance against the oracle")
{
    testsupport::Rng rng(31);
    int checked = 0;
    for (int trial = 0; trial < 600 && checked < 150; ++trial) {
        std::uniform_int_distribution<std::size_t> ks(1, 3), rs(0, 2), ds(2, 6), ms(1, 6);
        const auto i = testsupport::random_instance(rng, ds(rng), ms(rng), ks(rng), rs(rng), 0.5, 16);
        const auto red = reduce_heavy_wildcard(i);
        if (!red)
            continue;
        ++checked;
        const auto before = oracle_solve(i);
        const auto after = oracle_solve(red->reduced);
        CHECK(before.answer == after.answer);
        if (after.witness)
            CHECK(verify_solution(i, lift_heavy_wildcard(red->reduced, *after.witness, red->record)).ok);
    }
    CHECK(checked > 50);
}

TEST_CASE("greedy bounded neighbourhood")
{
    ThresholdOverrides o;
    o.zeta_gate = 2;
    const auto i = inst(2, 1, {"000", "011", "101", "110"});
    const auto t = Thresholds::for_parameters(2, 1, o);
    const auto s = greedy_bounded_neighborhood(i, t);
    REQUIRE(s);
    CHECK(s->selected == std::vector<std::size_t>{0, 1});
    CHECK(verify_solution(i, *s).ok);
    CHECK(oracle_solve(i).answer == Answer::Yes);

    const auto zero = greedy_bounded_neighborhood(inst(0, 1, {"000"}), t);
    REQUIRE(zero);
    CHECK(zero->selected.empty());

    // default gate is far above |M|
    CHECK_FALSE(greedy_bounded_neighborhood(i, Thresholds::for_parameters(2, 1)));
}

TEST_CASE("neighbour signature")
{
    // x = (1,?,0,0) against 0000: D at coordinate 0, box at coordinate 1
    CHECK(neighbour_signature(pv("0000"), pv("1?00")) == std::vector<std::uint32_t>{1, 2});
    // coordinates where v is unknown are skipped
    CHECK(neighbour_signature(pv("?0"), pv("11")) == std::vector<std::uint32_t>{3});
    CHECK(neighbour_signature(pv("01"), pv("01")).empty());
}

TEST_CASE("find_irrelevant_vector on the unit-vector family")
{
    const auto i = inst(2, 1, {"0000", "1000", "0100", "0010", "0001"});
    ThresholdOverrides o;
    o.zeta_gate = 5;
    o.sunflower_target = 3;
    const auto t = Thresholds::for_parameters(2, 1, o);
    const auto f = find_irrelevant_vector(i, 0, t);
    REQUIRE(f);
    CHECK(*f >= 1);
    CHECK(*f <= 4);

    std::vector<PartialVector> rest;
    for (std::size_t j = 0; j < i.size(); ++j)
        if (j != *f)
            rest.push_back(i.row(j));
    CHECK(oracle_solve(Instance(4, 2, 1, rest)).answer == oracle_solve(i).answer);

    // too many wildcards on some row
    CHECK_FALSE(find_irrelevant_vector(inst(2, 1, {"0000", "???0", "0100", "0010", "0001"}), 0, t));
    // neighbourhood below the gate
    CHECK_FALSE(find_irrelevant_vector(inst(2, 1, {"0000", "1111"}), 0, t));
}

TEST_CASE("overridden pruning is not certified")
{
    // k = 4, r = 1 on 0000 plus four unit vectors: the unit vectors form the
    // only 4-diversity set, so deleting one changes the answer.
    const auto i = inst(4, 1, {"0000", "1000", "0100", "0010", "0001"});
    ThresholdOverrides o;
    o.zeta_gate = 5;
    o.sunflower_target = 3;
    const auto f = find_irrelevant_vector(i, 0, Thresholds::for_parameters(4, 1, o));
    REQUIRE(f);
    CHECK(oracle_solve(i).answer == Answer::Yes);
    std::vector<PartialVector> rest;
    for (std::size_t j = 0; j < i.size(); ++j)
        if (j != *f)
            rest.push_back(i.row(j));
    CHECK(oracle_solve(Instance(4, 4, 1, rest)).answer == Answer::No);
}

TEST_CASE("brute force examples")
{
    CHECK(brute_force_small(inst(2, 1, {"00", "01"})).answer == Answer::No);

    const auto yes = brute_force_small(inst(2, 1, {"0?", "11"}));
    REQUIRE(yes.answer == Answer::Yes);
    CHECK(yes.witness->completed == std::vector<PartialVector>{pv("00"), pv("11")});

    const auto empty = brute_force_small(Instance(0, 0, 5, {}));
    CHECK(empty.answer == Answer::Yes);
    CHECK(empty.witness->selected.empty());
}

TEST_CASE("solve examples")
{
    CHECK(solve(inst(2, 2, {"000", "111"})).answer == Answer::Yes);
    CHECK(solve(inst(2, 1, {"00", "01"})).answer == Answer::No);
    CHECK(solve(Instance(3, 1, 0, {})).answer == Answer::No);
    CHECK(solve(Instance(3, 0, 0, {})).answer == Answer::Yes);
    CHECK(solve(inst(3, 0, {"0", "0", "0"})).answer == Answer::No);
    CHECK(solve(inst(2, 0, {"?", "?"})).answer == Answer::Yes);
}

TEST_CASE("duplicate capping is recorded and sound")
{
    const auto i = inst(2, 1, {"?0", "?0", "?0", "?0"});
    const auto out = solve(i);
    CHECK(has_kind(out, TraceStep::Kind::DuplicateCap));
    CHECK(out.answer == oracle_solve(i).answer);
}

TEST_CASE("oracle examples and caps")
{
    CHECK(oracle_solve(inst(1, 0, {"?"})).answer == Answer::Yes);
    const auto two = oracle_solve(inst(2, 0, {"?", "?"}));
    REQUIRE(two.answer == Answer::Yes);
    CHECK(two.witness->completed == std::vector<PartialVector>{pv("0"), pv("1")});

    std::vector<PartialVector> many(17, pv("0"));
    CHECK_THROWS_AS(oracle_solve(Instance(1, 1, 0, many)), OracleInfeasible);
    CHECK_THROWS_AS(oracle_solve(Instance(21, 1, 0, {PartialVector::from_string(std::string(21, '?'))})),
                    OracleInfeasible);
    OracleLimits wide;
    wide.max_rows = 64;
    CHECK(oracle_solve(Instance(1, 1, 0, many), wide).answer == Answer::Yes);
}

TEST_CASE("oracle witness is independent of thread count")
{
    testsupport::Rng rng(32);
    for (int trial = 0; trial < 40; ++trial) {
        const auto i = testsupport::random_instance(rng, 5, 6, 3, 1, 0.4, 14);
        OracleLimits one, four;
        one.threads = 1;
        four.threads = 4;
        const auto a = oracle_solve(i, one), b = oracle_solve(i, four);
        CHECK(a.answer == b.answer);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("solve agrees with the oracle on random instances")
{
    testsupport::Rng rng(33);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<std::size_t> ks(0, 4), rs(0, 3), ds(1, 8), ms(0, 9);
        const auto i = testsupport::random_instance(rng, ds(rng), ms(rng), ks(rng), rs(rng), 0.25, 14);
        const auto expected = oracle_solve(i).answer;
        const auto got = solve(i);
        CHECK(got.answer == expected);
        CHECK(got.witness.has_value() == (got.answer == Answer::Yes));
        if (got.witness)
            CHECK(verify_solution(i, *got.witness).ok);
        CHECK(brute_force_small(i).answer == expected);
    }
}

TEST_CASE("duplicate cap invariance")
{
    testsupport::Rng rng(34);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<std::size_t> ks(1, 3), extra(1, 4);
        const auto base = testsupport::random_instance(rng, 3, 3, ks(rng), 1, 0.3, 9);
        auto rows = base.rows();
        const auto copies = extra(rng);
        for (std::size_t c = 0; c < base.k() + copies; ++c)
            rows.push_back(rows.front());
        const Instance padded(base.d(), base.k(), base.r(), rows);
        std::vector<PartialVector> capped = base.rows();
        for (std::size_t c = 0; c + 1 < base.k(); ++c)
            capped.push_back(rows.front());
        OracleLimits wide;
        wide.max_rows = 64;
        CHECK(oracle_solve(padded, wide).answer == oracle_solve(Instance(base.d(), base.k(), base.r(), capped), wide).answer);
    }
}

TEST_CASE("solve is deterministic")
{
    testsupport::Rng rng(35);
    for (int trial = 0; trial < 30; ++trial) {
        const auto i = testsupport::random_instance(rng, 12, 40, 3, 2, 0.1, 1000);
        const auto a = solve(i), b = solve(i);
        CHECK(a.answer == b.answer);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("solve with overrides exercises pruning and bounded greedy")
{
    testsupport::Rng rng(36);
    ThresholdOverrides o;
    o.zeta_gate = 3;
    o.sunflower_target = 3;
    SolveOptions options;
    options.overrides = o;
    int pruned = 0;
    for (int trial = 0; trial < 200; ++trial) {
        // rows within one flip of a random centre, so greedy alone fails
        const auto centre = testsupport::random_vector(rng, 6, 0.0);
        std::uniform_int_distribution<std::size_t> coord(0, 5);
        std::vector<PartialVector> rows;
        for (int j = 0; j < 12; ++j) {
            auto v = centre;
            const auto c = coord(rng);
            v.set(c, v[c] == Cell::One ? Cell::Zero : Cell::One);
            rows.push_back(j == 0 ? centre : v);
        }
        const Instance i(6, 3, 1, rows);
        const auto out = solve(i, options);
        pruned += has_kind(out, TraceStep::Kind::Prune) ? 1 : 0;
        if (out.witness)
            CHECK(verify_solution(i, *out.witness).ok);
    }
    CHECK(pruned > 0);
}
