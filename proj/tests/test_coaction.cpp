#include "doctest.h"

#include "jokerlab/builtins.hpp"
#include "jokerlab/coaction.hpp"
#include "jokerlab/stable.hpp"

using namespace jokerlab;

namespace {

Matrix mat(const FiniteField& f, std::string text) {
    for (char& c : text)
        if (c == ';') c = '\n';
    return Matrix::parse_text(f, text);
}

struct Fixture {
    FiniteField f4 = FiniteField::f4();
    Q8Embedding emb = q8_embed(8);
};

}  // namespace

TEST_SUITE("coaction") {

TEST_CASE("digit evaluation of the embedded generators") {
    Fixture fx;
    const FiniteGroup& q8 = fx.emb.q8;
    const O2Element& i = fx.emb.images[q8.index_of("i")];
    const O2Element& j = fx.emb.images[q8.index_of("j")];
    const O2Element& k = fx.emb.images[q8.index_of("k")];
    const O2Element& m1 = fx.emb.images[q8.index_of("-1")];
    CHECK(alpha_eval(fx.f4, 0, i).str() == "1");
    CHECK(alpha_eval(fx.f4, 1, i).str() == "1");
    CHECK(alpha_eval(fx.f4, 2, i).str() == "w");
    CHECK(alpha_eval(fx.f4, 0, j).str() == "1");
    CHECK(alpha_eval(fx.f4, 1, j).str() == "w2");
    CHECK(alpha_eval(fx.f4, 2, j).str() == "w");
    CHECK(alpha_eval(fx.f4, 1, k).str() == "w");
    CHECK(alpha_eval(fx.f4, 2, k).str() == "w");
    CHECK(alpha_eval(fx.f4, 1, m1).str() == "0");
}

TEST_CASE("two-cell coaction with the degree-2 attaching class") {
    Fixture fx;
    CoactionSpec s = builtin_coaction_spec("cone_eta");
    CHECK_NOTHROW(validate_coaction_spec(s));
    CHECK(!has_unknowns(s));
    const FiniteGroup& q8 = fx.emb.q8;
    CHECK(coaction_matrix(s, fx.f4, fx.emb.images[q8.index_of("i")]) ==
          mat(fx.f4, "1 1; 0 1"));
    CHECK(coaction_matrix(s, fx.f4, fx.emb.images[q8.index_of("j")]) ==
          mat(fx.f4, "1 w2; 0 1"));
    CoactionEvaluation ev = evaluate_coaction(s, fx.f4, fx.emb);
    CHECK(ev.left_module.dim() == 2);
    CHECK(right_matrices_form_action(q8, ev.right_matrices));
}

TEST_CASE("two-cell coaction with the degree-4 attaching class") {
    Fixture fx;
    CoactionSpec s = builtin_coaction_spec("cone_nu");
    const FiniteGroup& q8 = fx.emb.q8;
    CHECK(coaction_matrix(s, fx.f4, fx.emb.images[q8.index_of("i")]) ==
          mat(fx.f4, "1 1; 0 1"));
    CHECK(coaction_matrix(s, fx.f4, fx.emb.images[q8.index_of("j")]) ==
          mat(fx.f4, "1 w; 0 1"));
    CHECK_NOTHROW(evaluate_coaction(s, fx.f4, fx.emb));
}

TEST_CASE("three-cell coaction transposes to the small faithful module") {
    Fixture fx;
    CoactionSpec s = builtin_coaction_spec("three_cell");
    const FiniteGroup& q8 = fx.emb.q8;
    Matrix mi = coaction_matrix(s, fx.f4, fx.emb.images[q8.index_of("i")]);
    Matrix mj = coaction_matrix(s, fx.f4, fx.emb.images[q8.index_of("j")]);
    CHECK(mi == mat(fx.f4, "1 1 w; 0 1 1; 0 0 1"));
    CHECK(mj == mat(fx.f4, "1 w w; 0 1 w2; 0 0 1"));
    CHECK(mi.transpose() == mat(fx.f4, "1 0 0; 1 1 0; w 1 1"));
    CHECK(mj.transpose() == mat(fx.f4, "1 0 0; w 1 0; w w2 1"));
    Matrix left_i =
        coaction_matrix(s, fx.f4, fx.emb.images[q8.index_of("i")], ActionSide::left);
    CHECK(left_i == mi.transpose());
    CoactionEvaluation ev = evaluate_coaction(s, fx.f4, fx.emb);
    CHECK(ev.left_module.dim() == 3);
    CHECK(module_iso(ev.left_module, builtin_module("W3")).has_value());
    CHECK(endotrivial(ev.left_module));
}

TEST_CASE("the degree-8 two-cell coaction is trivial in this range") {
    Fixture fx;
    CoactionSpec s = builtin_coaction_spec("cone_sigma");
    CoactionEvaluation ev = evaluate_coaction(s, fx.f4, fx.emb);
    for (std::size_t g = 0; g < 8; ++g) CHECK(ev.right_matrices[g].is_identity());
}

TEST_CASE("a fully known consistent formula is its own sole completion") {
    Fixture fx;
    CompletionReport rep =
        complete_coaction(builtin_coaction_spec("cone_eta"), fx.f4, fx.emb);
    REQUIRE(rep.assignments.size() == 1);
    CHECK(rep.assignments[0].empty());
    CHECK(rep.completed.size() == 1);
}

TEST_CASE("inconsistent fixed data admits no completion") {
    Fixture fx;
    CoactionSpec bad;
    bad.name = "bad";
    bad.entries.push_back({"xbar0", 0, {{0, {}, 0, "1"}}});
    bad.entries.push_back({"xbar2", 2, {{0, {}, 1, "1"}, {1, {1}, 0, "1"}}});
    CHECK_NOTHROW(validate_coaction_spec(bad));
    CompletionReport rep = complete_coaction(bad, fx.f4, fx.emb);
    CHECK(rep.assignments.empty());
    CHECK(rep.completed.empty());
}

TEST_CASE("the partially known five-cell coaction") {
    Fixture fx;
    CoactionSpec s = builtin_coaction_spec("sigma_nu_partial");
    REQUIRE(has_unknowns(s));
    CompletionReport rep = complete_coaction(s, fx.f4, fx.emb);
    CHECK(rep.assignments.size() == 4);
    CHECK(rep.center_trivial_in_all);
    bool zero_seen = false;
    for (const auto& asg : rep.assignments) {
        bool all_zero = true;
        for (const auto& v : asg) all_zero = all_zero && v.is_zero();
        zero_seen = zero_seen || all_zero;
    }
    CHECK(zero_seen);
    std::size_t gm1 = fx.emb.q8.index_of("-1");
    for (const CoactionSpec& comp : rep.completed) {
        CoactionEvaluation ev = evaluate_coaction(comp, fx.f4, fx.emb);
        CHECK(ev.right_matrices[gm1].is_identity());
        CHECK(!endotrivial(ev.left_module));
    }
}

TEST_CASE("structural validation rejects malformed formulas") {
    CoactionSpec up;  // upper-triangular violation: first entry hits a later one
    up.name = "up";
    up.entries.push_back({"a0", 0, {{1, {}, 0, "1"}}});
    up.entries.push_back({"a2", 2, {{1, {}, 0, "1"}}});
    CHECK_THROWS_AS(validate_coaction_spec(up), Error);

    CoactionSpec tok;  // unknown coefficient token
    tok.name = "tok";
    tok.entries.push_back({"a0", 0, {{0, {}, 0, "q"}}});
    CHECK_THROWS_AS(validate_coaction_spec(tok), Error);

    CoactionSpec diag;  // diagonal term must carry u_power 0
    diag.name = "diag";
    diag.entries.push_back({"a0", 0, {{0, {}, 1, "1"}}});
    CHECK_THROWS_AS(validate_coaction_spec(diag), Error);
}

TEST_CASE("builtin catalogue") {
    auto names = builtin_coaction_names();
    CHECK(names.size() == 5);
    for (const std::string& n : names) CHECK_NOTHROW(builtin_coaction_spec(n));
    CHECK_THROWS_AS(builtin_coaction_spec("nosuch"), Error);
}

}  // TEST_SUITE
