#include "doctest.h"

#include "cylgame/builders.hpp"
#include "cylgame/cone_strategy.hpp"
#include "cylgame/ef.hpp"
#include "cylgame/game.hpp"
#include "cylgame/rainbow.hpp"
#include "cylgame/strategy.hpp"

using namespace cylgame;

TEST_CASE("EF on complete graphs") {
  CHECK(solve_ef(complete_graph(4), complete_graph(3), 4, 4).winner == Player::Forall);
  CHECK(solve_ef(complete_graph(4), complete_graph(3), 3, 5).winner == Player::Exists);
  CHECK(solve_ef(complete_graph(4), complete_graph(3), 4, 3).winner == Player::Exists);
  CHECK(solve_ef(complete_graph(3), complete_graph(4), 5, 5).winner == Player::Exists);
}

TEST_CASE("EF certificate survives verification, a corrupted one does not") {
  const auto g = complete_graph(4), h = complete_graph(3);
  GameResult r = solve_ef(g, h, 4, 4);
  CHECK(verify_ef_strategy(g, h, 4, 4, r.certificate).ok);
  REQUIRE_FALSE(r.certificate.moves.empty());
  r.certificate.moves.erase(r.certificate.moves.begin());
  CHECK_FALSE(verify_ef_strategy(g, h, 4, 4, r.certificate).ok);
}

TEST_CASE("linear orders") {
  CHECK(solve_ef(linear_order(3), linear_order(4), 3, 5).winner == Player::Exists);
  CHECK(solve_ef(linear_order(4), linear_order(3), 4, 4).winner == Player::Forall);
  CHECK(solve_ef(linear_order(4), linear_order(3), 3, 4).winner == Player::Forall);
}

TEST_CASE("maddux E_2 games") {
  const auto e2 = maddux_E(2);
  // representable on 5 points, so exists survives every round
  const GameResult r = solve_ra_game(e2, 5, 3);
  CHECK(r.winner == Player::Exists);
  CHECK(verify_strategy(GameSpec{GameVariant::RA, nullptr, &e2, 5, 3}, r.certificate).ok);
}

TEST_CASE("E_1 is representable on two points") {
  const auto e1 = maddux_E(1);
  const GameResult r = solve_ra_game(e1, 4, -1);
  CHECK(r.winner == Player::Exists);
}

TEST_CASE("weak cone strategy is rejected") {
  const auto a43 = rainbow_ca(3, 4, 3);
  const auto model = make_ca_model(a43, 6, GameVariant::BoldG);
  const GameSpec spec{GameVariant::BoldG, &a43, nullptr, 6, 0};

  StrategyCertificate strong = unfold_forall(*model, cone_bombardment(a43, 6, {1, 2, 3, 4}), true, 0);
  strong.game = GameVariant::BoldG;
  strong.winner = Player::Forall;
  strong.safety = true;
  CHECK(verify_strategy(spec, strong).ok);

  StrategyCertificate weak = unfold_forall(*model, cone_bombardment(a43, 6, {1, 2, 3}), true, 0);
  weak.game = GameVariant::BoldG;
  weak.winner = Player::Forall;
  weak.safety = true;
  const Report r = verify_strategy(spec, weak);
  CHECK_FALSE(r.ok);
  CHECK(r.condition == "not-covered");
}

TEST_CASE("order rainbow decreasing sequence") {
  const auto s = order_rainbow_ca(3, 3, 3);
  const auto model = make_ca_model(s, 6, GameVariant::BoldG);
  StrategyCertificate c = unfold_forall(*model, decreasing_sequence(s, 6, 3), true, 0);
  c.game = GameVariant::BoldG;
  c.winner = Player::Forall;
  c.safety = true;
  CHECK(verify_strategy(GameSpec{GameVariant::BoldG, &s, nullptr, 6, 0}, c).ok);
}

TEST_CASE("move legality helpers") {
  const auto e2 = maddux_E(2);
  const GameSpec spec{GameVariant::RA, nullptr, &e2, 4, 2};
  const AtomId id = e2.at("Id"), a = e2.at("a");
  CHECK(initial_move_problem(spec, a, {id, a, a, id}).empty());
  CHECK_FALSE(initial_move_problem(spec, a, {id, a, e2.at("b"), id}).empty());
}

TEST_CASE("lyndon check on a representable structure") {
  const LyndonResult l = lyndon_check(maddux_E(2), 4);
  CHECK(l.k_star == 4);
}
