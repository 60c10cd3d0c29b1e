// Frozen .phatic source for the default scenario, embedded so the CLI works
// with no data files on disk. Must stay byte-identical to
// ruleset_text(default_scenario()); a test guards the equality.
#pragma once

namespace phatic {

inline const char* builtin_ruleset_text() {
    // The + 1 skips the newline that follows the raw-string open paren.
    return 1 + R"PHATIC(
% conversation ruleset for scenario 'default' (generated)
% floor(open|waiting) serializes moves; spoke/elapsed count content turns only

rule greet_bob_alice: floor(open) * may_greet(bob) -o floor(open).
rule greet_alice_bob: floor(open) * may_greet(alice) -o floor(open).

rule small_talk_weekend: floor(open) * topic(none) * !absent may_greet(X) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(weekend) * chatting * spoke(C,N2) * elapsed(E2) * budget(B).
rule small_talk_weather: floor(open) * topic(none) * !absent may_greet(X) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(weather) * chatting * spoke(C,N2) * elapsed(E2) * budget(B).

rule topic_talk_baseball_typical_positive: floor(open) * topic(T0) * segue(T0,baseball) * opinion(C,baseball,positive) * !absent voiced(C,baseball,positive) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(baseball) * segue(T0,baseball) * opinion(C,baseball,positive) * voiced(C,baseball,positive) * spoke(C,N2) * elapsed(E2) * budget(B) * react_typical(C,baseball,positive).
rule topic_talk_baseball_enthusiastic_positive: floor(open) * topic(T0) * segue(T0,baseball) * opinion(C,baseball,positive) * !absent voiced(C,baseball,positive) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(baseball) * segue(T0,baseball) * opinion(C,baseball,positive) * voiced(C,baseball,positive) * spoke(C,N2) * elapsed(E2) * budget(B) * react_enth(C,baseball,positive).
rule topic_talk_baseball_typical_negative: floor(open) * topic(T0) * segue(T0,baseball) * opinion(C,baseball,negative) * !absent voiced(C,baseball,negative) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(baseball) * segue(T0,baseball) * opinion(C,baseball,negative) * voiced(C,baseball,negative) * spoke(C,N2) * elapsed(E2) * budget(B) * react_typical(C,baseball,negative).
rule topic_talk_baseball_enthusiastic_negative: floor(open) * topic(T0) * segue(T0,baseball) * opinion(C,baseball,negative) * !absent voiced(C,baseball,negative) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(baseball) * segue(T0,baseball) * opinion(C,baseball,negative) * voiced(C,baseball,negative) * spoke(C,N2) * elapsed(E2) * budget(B) * react_enth(C,baseball,negative).
rule topic_talk_soccer_typical_positive: floor(open) * topic(T0) * segue(T0,soccer) * opinion(C,soccer,positive) * !absent voiced(C,soccer,positive) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(soccer) * segue(T0,soccer) * opinion(C,soccer,positive) * voiced(C,soccer,positive) * spoke(C,N2) * elapsed(E2) * budget(B) * react_typical(C,soccer,positive).
rule topic_talk_soccer_enthusiastic_positive: floor(open) * topic(T0) * segue(T0,soccer) * opinion(C,soccer,positive) * !absent voiced(C,soccer,positive) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(soccer) * segue(T0,soccer) * opinion(C,soccer,positive) * voiced(C,soccer,positive) * spoke(C,N2) * elapsed(E2) * budget(B) * react_enth(C,soccer,positive).
rule topic_talk_pop_typical_positive: floor(open) * topic(T0) * segue(T0,pop) * opinion(C,pop,positive) * !absent voiced(C,pop,positive) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(pop) * segue(T0,pop) * opinion(C,pop,positive) * voiced(C,pop,positive) * spoke(C,N2) * elapsed(E2) * budget(B) * react_typical(C,pop,positive).
rule topic_talk_pop_enthusiastic_positive: floor(open) * topic(T0) * segue(T0,pop) * opinion(C,pop,positive) * !absent voiced(C,pop,positive) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(pop) * segue(T0,pop) * opinion(C,pop,positive) * voiced(C,pop,positive) * spoke(C,N2) * elapsed(E2) * budget(B) * react_enth(C,pop,positive).
rule topic_talk_pop_typical_negative: floor(open) * topic(T0) * segue(T0,pop) * opinion(C,pop,negative) * !absent voiced(C,pop,negative) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(pop) * segue(T0,pop) * opinion(C,pop,negative) * voiced(C,pop,negative) * spoke(C,N2) * elapsed(E2) * budget(B) * react_typical(C,pop,negative).
rule topic_talk_pop_enthusiastic_negative: floor(open) * topic(T0) * segue(T0,pop) * opinion(C,pop,negative) * !absent voiced(C,pop,negative) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(pop) * segue(T0,pop) * opinion(C,pop,negative) * voiced(C,pop,negative) * spoke(C,N2) * elapsed(E2) * budget(B) * react_enth(C,pop,negative).
rule topic_talk_rock_typical_positive: floor(open) * topic(T0) * segue(T0,rock) * opinion(C,rock,positive) * !absent voiced(C,rock,positive) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(rock) * segue(T0,rock) * opinion(C,rock,positive) * voiced(C,rock,positive) * spoke(C,N2) * elapsed(E2) * budget(B) * react_typical(C,rock,positive).
rule topic_talk_rock_enthusiastic_positive: floor(open) * topic(T0) * segue(T0,rock) * opinion(C,rock,positive) * !absent voiced(C,rock,positive) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(rock) * segue(T0,rock) * opinion(C,rock,positive) * voiced(C,rock,positive) * spoke(C,N2) * elapsed(E2) * budget(B) * react_enth(C,rock,positive).

rule continue_talking_weekend: floor(open) * topic(weekend) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(weekend) * spoke(C,N2) * elapsed(E2) * budget(B).
rule continue_talking_weather: floor(open) * topic(weather) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(weather) * spoke(C,N2) * elapsed(E2) * budget(B).
rule continue_talking_baseball: floor(open) * topic(baseball) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(baseball) * spoke(C,N2) * elapsed(E2) * budget(B).
rule continue_talking_soccer: floor(open) * topic(soccer) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(soccer) * spoke(C,N2) * elapsed(E2) * budget(B).
rule continue_talking_running: floor(open) * topic(running) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(running) * spoke(C,N2) * elapsed(E2) * budget(B).
rule continue_talking_pop: floor(open) * topic(pop) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(pop) * spoke(C,N2) * elapsed(E2) * budget(B).
rule continue_talking_country: floor(open) * topic(country) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(country) * spoke(C,N2) * elapsed(E2) * budget(B).
rule continue_talking_rock: floor(open) * topic(rock) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(rock) * spoke(C,N2) * elapsed(E2) * budget(B).

rule change_topic_baseball_running: floor(open) * topic(baseball) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(running) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_running_baseball: floor(open) * topic(running) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(baseball) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_baseball_soccer: floor(open) * topic(baseball) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(soccer) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_soccer_baseball: floor(open) * topic(soccer) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(baseball) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_baseball_weather: floor(open) * topic(baseball) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(weather) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_weather_baseball: floor(open) * topic(weather) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(baseball) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_baseball_weekend: floor(open) * topic(baseball) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(weekend) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_weekend_baseball: floor(open) * topic(weekend) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(baseball) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_country_pop: floor(open) * topic(country) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(pop) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_pop_country: floor(open) * topic(pop) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(country) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_country_rock: floor(open) * topic(country) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(rock) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_rock_country: floor(open) * topic(rock) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(country) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_country_weather: floor(open) * topic(country) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(weather) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_weather_country: floor(open) * topic(weather) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(country) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_country_weekend: floor(open) * topic(country) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(weekend) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_weekend_country: floor(open) * topic(weekend) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(country) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_pop_rock: floor(open) * topic(pop) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(rock) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_rock_pop: floor(open) * topic(rock) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(pop) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_pop_weather: floor(open) * topic(pop) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(weather) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_weather_pop: floor(open) * topic(weather) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(pop) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_pop_weekend: floor(open) * topic(pop) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(weekend) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_weekend_pop: floor(open) * topic(weekend) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(pop) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_rock_weather: floor(open) * topic(rock) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(weather) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_weather_rock: floor(open) * topic(weather) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(rock) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_rock_weekend: floor(open) * topic(rock) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(weekend) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_weekend_rock: floor(open) * topic(weekend) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(rock) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_running_soccer: floor(open) * topic(running) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(soccer) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_soccer_running: floor(open) * topic(soccer) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(running) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_running_weather: floor(open) * topic(running) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(weather) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_weather_running: floor(open) * topic(weather) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(running) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_running_weekend: floor(open) * topic(running) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(weekend) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_weekend_running: floor(open) * topic(weekend) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(running) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_soccer_weather: floor(open) * topic(soccer) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(weather) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_weather_soccer: floor(open) * topic(weather) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(soccer) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_soccer_weekend: floor(open) * topic(soccer) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(weekend) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_weekend_soccer: floor(open) * topic(weekend) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(soccer) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_weather_weekend: floor(open) * topic(weather) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(weekend) * spoke(C,N2) * elapsed(E2) * budget(B).
rule change_topic_weekend_weather: floor(open) * topic(weekend) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * topic(weather) * spoke(C,N2) * elapsed(E2) * budget(B).

rule ask_question_baseball: floor(open) * topic(T0) * segue(T0,baseball) * partner(C,C') * opinion(C',baseball,P) * !absent asked(C,baseball) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(waiting) * topic(baseball) * segue(T0,baseball) * pending(C',C,baseball) * asked(C,baseball) * partner(C,C') * opinion(C',baseball,P) * spoke(C,N2) * elapsed(E2) * budget(B).
rule reciprocate_question_baseball: floor(waiting) * pending(C,C',baseball) * opinion(C,baseball,P) * affinity(C,C',A) * affinity(C',C,D) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (A2 = A + 1) * (D2 = D + 1) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * opinion(C,baseball,P) * affinity(C,C',A2) * affinity(C',C,D2) * spoke(C,N2) * elapsed(E2) * budget(B).
rule ask_question_soccer: floor(open) * topic(T0) * segue(T0,soccer) * partner(C,C') * opinion(C',soccer,P) * !absent asked(C,soccer) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(waiting) * topic(soccer) * segue(T0,soccer) * pending(C',C,soccer) * asked(C,soccer) * partner(C,C') * opinion(C',soccer,P) * spoke(C,N2) * elapsed(E2) * budget(B).
rule reciprocate_question_soccer: floor(waiting) * pending(C,C',soccer) * opinion(C,soccer,P) * affinity(C,C',A) * affinity(C',C,D) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (A2 = A + 1) * (D2 = D + 1) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * opinion(C,soccer,P) * affinity(C,C',A2) * affinity(C',C,D2) * spoke(C,N2) * elapsed(E2) * budget(B).
rule ask_question_pop: floor(open) * topic(T0) * segue(T0,pop) * partner(C,C') * opinion(C',pop,P) * !absent asked(C,pop) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(waiting) * topic(pop) * segue(T0,pop) * pending(C',C,pop) * asked(C,pop) * partner(C,C') * opinion(C',pop,P) * spoke(C,N2) * elapsed(E2) * budget(B).
rule reciprocate_question_pop: floor(waiting) * pending(C,C',pop) * opinion(C,pop,P) * affinity(C,C',A) * affinity(C',C,D) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (A2 = A + 1) * (D2 = D + 1) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * opinion(C,pop,P) * affinity(C,C',A2) * affinity(C',C,D2) * spoke(C,N2) * elapsed(E2) * budget(B).
rule ask_question_rock: floor(open) * topic(T0) * segue(T0,rock) * partner(C,C') * opinion(C',rock,P) * !absent asked(C,rock) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (N2 = N + 1) * (E2 = E + 1) -o floor(waiting) * topic(rock) * segue(T0,rock) * pending(C',C,rock) * asked(C,rock) * partner(C,C') * opinion(C',rock,P) * spoke(C,N2) * elapsed(E2) * budget(B).
rule reciprocate_question_rock: floor(waiting) * pending(C,C',rock) * opinion(C,rock,P) * affinity(C,C',A) * affinity(C',C,D) * spoke(C,N) * elapsed(E) * budget(B) * (E < B - 4) * (A2 = A + 1) * (D2 = D + 1) * (N2 = N + 1) * (E2 = E + 1) -o floor(open) * opinion(C,rock,P) * affinity(C,C',A2) * affinity(C',C,D2) * spoke(C,N2) * elapsed(E2) * budget(B).

rule initiate_goodbye_bob_alice: floor(F) * chatting * elapsed(E) * budget(B) * (3 * E >= B) -o elapsed(E) * budget(B) * farewell_owed(alice).
rule initiate_goodbye_alice_bob: floor(F) * chatting * elapsed(E) * budget(B) * (3 * E >= B) -o elapsed(E) * budget(B) * farewell_owed(bob).
rule say_goodbye_bob_alice: farewell_owed(bob) -o ().
rule say_goodbye_alice_bob: farewell_owed(alice) -o ().
rule terminate_conversation: floor(F) * chatting * feels(C,annoyed) * partner(C,C') -o feels(C,annoyed) * partner(C,C') * farewell_owed(C').

% bookkeeping: silent reactions and the fairness monitor
rule annoyed_by_unfair_participation: chatting * feels(C,content) * partner(C,C') * spoke(C',S) * elapsed(E) * (S > 2/3 * E) -o chatting * feels(C,annoyed) * partner(C,C') * spoke(C',S) * elapsed(E).
rule like_from_agreement: chatting * react_typical(C,T,P) * partner(C,C') * opinion(C',T,P) * affinity(C',C,A) * (A2 = A + 1) -o chatting * partner(C,C') * opinion(C',T,P) * affinity(C',C,A2).
rule happy_from_enthusiastic_agreement: chatting * react_enth(C,T,P) * partner(C,C') * opinion(C',T,P) * affinity(C',C,A) * feels(C',content) * (A2 = A + 1) -o chatting * partner(C,C') * opinion(C',T,P) * affinity(C',C,A2) * feels(C',happy).
rule dislike_from_disagreement_positive: chatting * react_enth(C,T,positive) * partner(C,C') * opinion(C',T,negative) * affinity(C',C,A) * feels(C,content) * (A2 = A - 2) -o chatting * partner(C,C') * opinion(C',T,negative) * affinity(C',C,A2) * feels(C,sad).
rule dislike_from_disagreement_negative: chatting * react_enth(C,T,negative) * partner(C,C') * opinion(C',T,positive) * affinity(C',C,A) * feels(C,content) * (A2 = A - 2) -o chatting * partner(C,C') * opinion(C',T,positive) * affinity(C',C,A2) * feels(C,sad).
)PHATIC";
}

}  // namespace phatic
