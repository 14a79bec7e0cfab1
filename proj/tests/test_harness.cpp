#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rootdom/campaign.hpp"
#include "rootdom/harness.hpp"

using namespace rootdom;

namespace {

Graph path(int n) { return generate({Family::Path, n}).graph; }

Instance instance(Graph g, Graph h, Vertex root) {
    Instance inst;
    inst.g = std::move(g);
    inst.h = RootedGraph(std::move(h), root);
    return inst;
}

}  // namespace

TEST(Theorems, NamesRoundTrip) {
    for (TheoremId t : kAllTheorems) EXPECT_EQ(parse_theorem(theorem_name(t)), t);
    EXPECT_THROW(parse_theorem("Z9"), InputError);
}

TEST(Theorems, MustHoldSet) {
    std::set<std::string> must;
    for (TheoremId t : kAllTheorems)
        if (default_must_hold(t)) must.insert(std::string(theorem_name(t)));
    EXPECT_EQ(must, (std::set<std::string>{"D2", "R1", "R2", "R3", "R4", "I1", "I3", "I4", "I5", "C2", "C3"}));
}

TEST(Checks, D2OnFigureOneInstance) {
    Graph c3 = generate({Family::Cycle, 3}).graph;
    for (Vertex r = 0; r < 3; ++r) {
        Verdict v = check(TheoremId::D2, instance(path(4), c3, r));
        EXPECT_EQ(v.outcome, Outcome::Pass);
        EXPECT_EQ(v.values["GH.gamma"], 4);
    }
}

TEST(Checks, R5BranchTwoOnComb) {
    Verdict v = check(TheoremId::R5, instance(path(4), generate({Family::Complete, 2}).graph, 0));
    EXPECT_EQ(v.outcome, Outcome::Pass);
    EXPECT_EQ(v.branch, "ii");
    EXPECT_EQ(v.values["GH.roman"], 6);
}

TEST(Checks, R5BranchOneOnP3End) {
    Verdict v = check(TheoremId::R5, instance(path(3), path(3), 0));
    EXPECT_EQ(v.outcome, Outcome::Pass);
    EXPECT_EQ(v.branch, "i");
}

TEST(Checks, C2OnRandomTree) {
    Instance inst = instance(path(2), random_tree(7, 99), 0);
    Verdict v = check(TheoremId::C2, inst);
    EXPECT_EQ(v.outcome, Outcome::Pass);
    EXPECT_EQ(v.values["H.connected"], 7 - leaves(inst.h.graph).size());
}

TEST(Checks, InfeasibleWhenHIsDisconnected) {
    Verdict v = check(TheoremId::C1, instance(path(3), generate({Family::Empty, 2}).graph, 0));
    EXPECT_EQ(v.outcome, Outcome::Infeasible);
}

TEST(Checks, NotApplicableOutsideHypothesis) {
    // C2 needs a tree H.
    Verdict v = check(TheoremId::C2, instance(path(2), generate({Family::Cycle, 4}).graph, 0));
    EXPECT_EQ(v.outcome, Outcome::NotApplicable);
    EXPECT_FALSE(v.hypothesis_applicable);
}

TEST(ClosedForms, SpecExamples) {
    Verdict a = closed_form_check(ClosedFormFamily::Caterpillar, 4, 2);
    EXPECT_EQ(a.outcome, Outcome::Pass);
    EXPECT_EQ(a.values["GH.i"], 6);
    Verdict b = closed_form_check(ClosedFormFamily::SubdividedStarProduct, 3, 2);
    EXPECT_EQ(b.outcome, Outcome::Pass);
    EXPECT_EQ(b.values["GH.i"], 4);
    Verdict c = closed_form_check(ClosedFormFamily::Caterpillar, 2, 3);
    EXPECT_EQ(c.outcome, Outcome::Pass);
    EXPECT_EQ(c.values["GH.i"], 4);
}

TEST(ClosedForms, ValuesMatchNaiveOracle) {
    for (int n = 2; n <= 4; ++n)
        for (int m = 2; m <= 3; ++m)
            for (auto fam : {ClosedFormFamily::Caterpillar, ClosedFormFamily::SubdividedStarProduct}) {
                Verdict v = closed_form_check(fam, n, m);
                const Family hf = fam == ClosedFormFamily::Caterpillar ? Family::Star : Family::SubdividedStar;
                Graph prod = rooted_product(path(n), generate({hf, m}).rooted()).product;
                EXPECT_EQ(v.values["GH.i"], oracle::Naive(prod).value(Parameter::IndependentDomination));
            }
}

TEST(Replay, PayloadRoundTripReproducesVerdict) {
    Instance inst = instance(generate({Family::Complete, 4}).graph, generate({Family::Empty, 2}).graph, 1);
    Verdict v = check(TheoremId::S1, inst);
    ASSERT_EQ(v.outcome, Outcome::Fail);
    ASSERT_FALSE(v.witness.is_null());
    auto [t, back] = instance_from_replay(Json::parse(v.witness.dump()));
    EXPECT_EQ(t, TheoremId::S1);
    Verdict again = check(t, back);
    EXPECT_EQ(again.to_json().dump(), v.to_json().dump());
}

TEST(Replay, MalformedPayload) {
    EXPECT_THROW(instance_from_replay(Json{{"theorem", "D2"}}), InputError);
}

TEST(Campaign, EmptyTheoremListGivesEmptyReport) {
    CampaignConfig cfg;
    cfg.theorems.clear();
    CampaignReport r = run_campaign(cfg);
    EXPECT_TRUE(r.theorems.empty());
    EXPECT_EQ(r.exit_code(), 0);
}

TEST(Campaign, ConfigJsonRoundTripAndValidation) {
    CampaignConfig cfg = CampaignConfig::from_json(Json{{"theorems", {"D2", "I6"}}, {"trials", 7}, {"seed", 3}});
    EXPECT_EQ(cfg.theorems.size(), 2u);
    EXPECT_EQ(cfg.trials, 7);
    CampaignConfig back = CampaignConfig::from_json(cfg.to_json());
    EXPECT_EQ(back.to_json().dump(), cfg.to_json().dump());
    EXPECT_THROW(CampaignConfig::from_json(Json{{"trails", 3}}), InputError);
    EXPECT_THROW(CampaignConfig::from_json(Json{{"max_g", 9}}), InputError);
    EXPECT_THROW(CampaignConfig::from_json(Json{{"theorems", {"Q1"}}}), InputError);
}

TEST(Campaign, ClosedFormGridCoversBothFamilies) {
    CampaignConfig cfg;
    cfg.theorems = {TheoremId::I6};
    CampaignReport r = run_campaign(cfg);
    ASSERT_EQ(r.theorems.size(), 1u);
    EXPECT_EQ(r.theorems[0].instances, 2 * 5 * 3);
    EXPECT_EQ(r.theorems[0].pass, 30);
}

TEST(Campaign, ReportIsIndependentOfWorkerCount) {
    CampaignConfig cfg;
    cfg.theorems = {TheoremId::D1, TheoremId::R5, TheoremId::C4};
    cfg.trials = 12;
    Json one = run_campaign(cfg).to_json();
    cfg.jobs = 3;
    Json three = run_campaign(cfg).to_json();
    one.erase("metadata");
    three.erase("metadata");
    one["config"].erase("jobs");
    three["config"].erase("jobs");
    EXPECT_EQ(one.dump(), three.dump());
}

TEST(Campaign, ProductSweepStaysWithinBounds) {
    CampaignConfig cfg;
    for (int trial = 0; trial < 100; ++trial) {
        for (const Instance& inst : detail::instances_for(cfg, TheoremId::D2, trial)) {
            EXPECT_GE(inst.g.order(), 2);
            EXPECT_LE(inst.g.order(), cfg.max_g);
            EXPECT_GE(inst.h.graph.order(), 2);
            EXPECT_LE(inst.h.graph.order(), cfg.max_h);
        }
    }
}
