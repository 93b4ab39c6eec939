#include <charconv>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tourney/answer.hpp"
#include "tourney/errors.hpp"
#include "tourney/language.hpp"
#include "tourney/verifiable.hpp"

using namespace tourney;
namespace tt = tourney::testing;

namespace {

// Independent scanner: every "\boxed{" whose braces close, scanning on from
// the end of the previous hit.
std::optional<std::string> last_box_oracle(const std::string& s) {
  const std::string open = "\\boxed{";
  std::optional<std::string> last;
  std::size_t from = 0;
  while (true) {
    const auto at = s.find(open, from);
    if (at == std::string::npos) break;
    int depth = 1;
    std::size_t k = at + open.size();
    for (; k < s.size() && depth > 0; ++k) {
      if (s[k] == '\\' && k + 1 < s.size() && (s[k + 1] == '{' || s[k + 1] == '}')) {
        ++k;
        continue;
      }
      if (s[k] == '{') ++depth;
      if (s[k] == '}') --depth;
    }
    if (depth == 0) {
      last = s.substr(at + open.size(), k - 1 - (at + open.size()));
      from = k;
    } else {
      from = at + 1;
    }
  }
  return last;
}

// Shortest round-trip rendering of the parsed double.
std::string decimal_oracle(const std::string& s) {
  const double v = std::stod(s);
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v == 0 ? 0.0 : v);
  return std::string(buf, res.ptr);
}

const auto& clf() { return *ScriptNgramClassifier::instance(); }

}  // namespace

TEST_SUITE("verifiable") {
  TEST_CASE("extract_boxed examples") {
    CHECK(extract_boxed("… answer is \\boxed{42}.") == std::optional<std::string>("42"));
    CHECK(extract_boxed("\\boxed{\\frac{1}{2}}") == std::optional<std::string>("\\frac{1}{2}"));
    CHECK_FALSE(extract_boxed("no box here"));
    CHECK(extract_boxed("\\boxed{a} then \\boxed{b}") == std::optional<std::string>("b"));
    CHECK(extract_boxed("\\boxed{a} then \\boxed{b}") == last_box_oracle("\\boxed{a} then \\boxed{b}"));
    CHECK(extract_boxed("\\boxed{x} and \\boxed{42") == std::optional<std::string>("x"));
  }

  TEST_CASE("extract_boxed agrees with an independent scanner on random texts") {
    const std::vector<std::string> pieces{"\\boxed{", "}", "{", "a", "42", " ", "\\frac", "\\{", "\\}", "x"};
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1), len(0, 14);
    for (int i = 0; i < 3000; ++i) {
      std::string s;
      for (auto n = len(rng); n > 0; --n) s += pieces[pick(rng)];
      INFO(s);
      CHECK(extract_boxed(s) == last_box_oracle(s));
      CHECK((score_format(s) == 1) == extract_boxed(s).has_value());
    }
  }

  TEST_CASE("normalize_answer examples") {
    CHECK(normalize_answer("  42. ") == "42");
    CHECK(normalize_answer("$\\frac{1}{2}$") == "\\frac{1}{2}");
    CHECK(normalize_answer("3.50") == "3.5");
    CHECK(normalize_answer("3.50") == decimal_oracle("3.50"));
    CHECK(normalize_answer("a   b\t c") == "a b c");
    CHECK(normalize_answer("4/6") == "2/3");
    CHECK(normalize_answer("-0.0") == "0");
  }

  TEST_CASE("decimal canonical form matches the round-trip oracle") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long long> whole(-99999, 99999);
    std::uniform_int_distribution<int> frac(0, 9999), zeros(0, 3), sign(0, 1);
    for (int i = 0; i < 2000; ++i) {
      std::string s = std::to_string(whole(rng));
      if (sign(rng)) {
        std::string f = std::to_string(frac(rng));
        f = std::string(4 - f.size(), '0') + f;
        s += "." + f + std::string(static_cast<std::size_t>(zeros(rng)), '0');
      }
      INFO(s);
      CHECK(normalize_answer(s) == decimal_oracle(s));
    }
  }

  TEST_CASE("score_accuracy and score_format") {
    CHECK(score_accuracy(make_response("t", 0, "\\boxed{42}"), "42") == 1);
    CHECK(score_accuracy(make_response("t", 0, "42"), "42") == 0);
    CHECK(score_accuracy(make_response("t", 0, "\\boxed{42.0}"), "42") == 1);
    CHECK(normalize_answer("42.0") == decimal_oracle("42.0"));
    CHECK(score_format("so \\boxed{42}") == 1);
    CHECK(score_format("so \\boxed{42") == 0);
    CHECK(score_format("") == 0);
  }

  TEST_CASE("score_accuracy is invariant under normalization") {
    for (std::string raw : {" 3.50 ", "$7$", "4/6", "\\frac{1}{2}", "12.", "x  +  1"}) {
      const auto gold = normalize_answer("3.5");
      CHECK(score_accuracy(make_response("t", 0, "\\boxed{" + raw + "}"), gold) ==
            score_accuracy(make_response("t", 0, "\\boxed{" + normalize_answer(raw) + "}"), gold));
    }
  }

  TEST_CASE("language_fraction examples") {
    const auto all = language_fraction("El gato come pescado todos los días", "es", clf());
    CHECK(all.fraction == 1.0);
    const auto math = language_fraction("2 + 2 = 4", "es", clf());
    CHECK(math.counted_units == 0);
    CHECK(math.fraction == 0.0);
    CHECK(math.counted_units + math.excluded_units == segment_units("2 + 2 = 4").size());
    CHECK_THROWS_AS(language_fraction("hola", "xx", clf()), UnsupportedLanguage);
  }

  TEST_CASE("seven of ten hand-labeled units in the target language") {
    const std::string text = "El gato come pescado todos los días. The cat eats.";
    const std::vector<std::pair<std::string, std::string>> hand{
        {"El", "es"},  {"gato", "es"}, {"come", "es"}, {"pescado", "es"}, {"todos", "es"},
        {"los", "es"}, {"días", "es"}, {"The", "en"},  {"cat", "en"},     {"eats", "en"}};
    const auto r = language_fraction(text, "es", clf());
    REQUIRE(r.per_unit_labels.size() == hand.size());
    std::size_t target = 0;
    for (std::size_t i = 0; i < hand.size(); ++i) {
      const auto& u = r.per_unit_labels[i];
      CHECK(text.substr(u.begin, u.end - u.begin) == hand[i].first);
      CHECK(u.lang == hand[i].second);
      target += hand[i].second == "es";
    }
    CHECK(r.counted_units == 10);
    CHECK(r.fraction == static_cast<double>(target) / 10.0);
    CHECK(r.fraction == 0.7);
    CHECK(score_language(text, "es", clf()) == 1);
  }

  TEST_CASE("math, markup and digits are excluded") {
    const auto r = language_fraction(
        "Primero calculamos $x^2 = 9$, entonces x = 3. Por lo tanto la respuesta es \\boxed{3}.", "es",
        clf());
    CHECK(r.fraction == 1.0);
    CHECK(r.excluded_units > 0);
    CHECK(r.counted_units + r.excluded_units ==
          segment_units("Primero calculamos $x^2 = 9$, entonces x = 3. Por lo tanto la respuesta es \\boxed{3}.").size());
  }

  TEST_CASE("non-Latin scripts are routed by block") {
    CHECK(language_fraction("Ответ равен сорока двум.", "ru", clf()).fraction == 1.0);
    CHECK(language_fraction("答えは四十二です。", "ja", clf()).fraction == 1.0);
    CHECK(language_fraction("答案是四十二。", "zh", clf()).fraction == 1.0);
    CHECK(language_fraction("उत्तर बयालीस है।", "hi", clf()).fraction == 1.0);
  }

  TEST_CASE("monotonicity of the fraction") {
    const std::string base = "The cat eats fish. El gato come pescado.";
    const double f0 = language_fraction(base, "es", clf()).fraction;
    const double f1 = language_fraction(base + " La respuesta correcta es el número.", "es", clf()).fraction;
    CHECK(f1 >= f0);
    const double f2 = language_fraction(base + " $x + 2 = 5$ 17 + 4", "es", clf()).fraction;
    CHECK(f2 == f0);
    const double f3 =
        language_fraction("The cat eats fish. El gato 3 + 4 come pescado.", "es", clf()).fraction;
    CHECK(f3 == f0);
  }

  TEST_CASE("fidelity threshold is inclusive") {
    CHECK(fidelity_passes(0.70) == 1);
    CHECK(fidelity_passes(0.69) == 0);
    CHECK(fidelity_passes(0.6999) == 0);
    CHECK(score_language("", "es", clf()) == 0);
    CHECK_THROWS_AS(fidelity_passes(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(fidelity_passes(0.5, 1.5), DomainError);
  }

  TEST_CASE("eval_metrics examples") {
    auto g = tt::group(8);
    g.task.target_lang = "en";
    for (std::size_t i = 0; i < 8; ++i)
      g.responses[i] = make_response("t0", i, std::string("The final answer is ") + (i < 4 ? "\\boxed{42}" : "\\boxed{7}"));
    const std::vector<RolloutGroup> one{g};
    const std::vector<TaskInstance> ds{g.task};
    const auto m = eval_metrics(one, ds, clf());
    CHECK(m.accuracy_pct == 50.0);
    CHECK(m.fidelity_pct == 100.0);

    auto right = tt::group(2, {}, "a");
    auto wrong = tt::group(2, {}, "b");
    for (auto& r : right.responses) r = make_response("a", r.rollout_index, "The answer is \\boxed{42}");
    const std::vector<RolloutGroup> two{right, wrong};
    const std::vector<TaskInstance> ds2{right.task, wrong.task};
    CHECK(eval_metrics(two, ds2, clf()).accuracy_pct == 50.0);

    const std::vector<RolloutGroup> missing{tt::group(2, {}, "zzz")};
    CHECK_THROWS_AS(eval_metrics(missing, ds, clf()), MissingTask);
  }

  TEST_CASE("eval_metrics averages uniformly over tasks") {
    // Per-task accuracies 1, 0.5, 0 over groups of 1, 2 and 5 responses.
    auto mk = [](std::string id, std::size_t n, std::size_t correct) {
      auto g = tt::group(n, {}, id);
      for (std::size_t i = 0; i < n; ++i)
        g.responses[i] = make_response(id, i, i < correct ? "ok \\boxed{42}" : "no \\boxed{1}");
      return g;
    };
    const std::vector<RolloutGroup> gs{mk("a", 1, 1), mk("b", 2, 1), mk("c", 5, 0)};
    const std::vector<TaskInstance> ds{gs[0].task, gs[1].task, gs[2].task};
    // Spreadsheet oracle.
    const double task_uniform = (1.0 + 0.5 + 0.0) / 3.0 * 100.0;
    const double response_uniform = (1.0 + 1.0 + 0.0) / 8.0 * 100.0;
    const auto m = eval_metrics(gs, ds, clf());
    CHECK(m.accuracy_pct == doctest::Approx(task_uniform));
    CHECK(m.accuracy_pct == doctest::Approx(50.0));
    CHECK(m.accuracy_pct != doctest::Approx(response_uniform));
    CHECK(m.tasks == 3);
    CHECK(m.responses == 8);
  }
}
