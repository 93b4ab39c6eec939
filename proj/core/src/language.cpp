#include "tourney/language.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "language_corpora.hpp"
#include "tourney/answer.hpp"
#include "tourney/errors.hpp"

namespace tourney {

namespace {

struct CodePoint {
  char32_t cp;
  std::size_t begin;
  std::size_t end;
};

// Lenient decoder: an invalid byte becomes U+FFFD spanning that byte.
std::vector<CodePoint> decode_utf8(std::string_view s) {
  std::vector<CodePoint> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    std::size_t len = 1;
    char32_t cp = 0xFFFD;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 >> 5) == 0x6) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 >> 4) == 0xE) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 >> 3) == 0x1E) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      out.push_back({0xFFFD, i, i + 1});
      ++i;
      continue;
    }
    if (i + len > s.size()) {
      out.push_back({0xFFFD, i, i + 1});
      ++i;
      continue;
    }
    bool ok = true;
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(s[i + k]);
      if ((b >> 6) != 0x2) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    if (!ok) {
      out.push_back({0xFFFD, i, i + 1});
      ++i;
      continue;
    }
    out.push_back({cp, i, i + len});
    i += len;
  }
  return out;
}

enum class Script : std::uint8_t {
  None,
  Latin,
  Cyrillic,
  Arabic,
  Devanagari,
  Bengali,
  Telugu,
  Thai,
  Hangul,
  Cjk,  // Han and Kana together so Japanese stays in one unit
};

enum class CharClass : std::uint8_t { Space, Letter, Mark, Digit, Math, Punct };

bool in(char32_t c, char32_t lo, char32_t hi) { return c >= lo && c <= hi; }

bool is_space_cp(char32_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v' ||
         c == 0x00A0 || c == 0x3000 || in(c, 0x2000, 0x200B) || c == 0x202F || c == 0x205F;
}

bool is_digit_cp(char32_t c) {
  return in(c, '0', '9') || in(c, 0x0660, 0x0669) || in(c, 0x06F0, 0x06F9) ||
         in(c, 0x0966, 0x096F) || in(c, 0x09E6, 0x09EF) || in(c, 0x0C66, 0x0C6F) ||
         in(c, 0x0E50, 0x0E59) || in(c, 0xFF10, 0xFF19);
}

bool is_math_cp(char32_t c) {
  switch (c) {
    case '+': case '-': case '*': case '/': case '=': case '<': case '>': case '^':
    case '_': case '|': case '~': case '%': case '\\': case '{': case '}': case '$':
    case 0x00B1: case 0x00B2: case 0x00B3: case 0x00B9: case 0x00B0: case 0x00D7:
    case 0x00F7: case 0x00AC: case 0x2032: case 0x2033: case 0x2212:
      return true;
    default:
      break;
  }
  return in(c, 0x0370, 0x03FF) ||  // Greek letters are variables here
         in(c, 0x2070, 0x209F) || in(c, 0x2150, 0x218F) || in(c, 0x2190, 0x21FF) ||
         in(c, 0x2200, 0x22FF) || in(c, 0x2300, 0x23FF) || in(c, 0x27C0, 0x27EF) ||
         in(c, 0x2980, 0x29FF) || in(c, 0x2A00, 0x2AFF) || in(c, 0x1D400, 0x1D7FF);
}

bool is_mark_cp(char32_t c) {
  return in(c, 0x0300, 0x036F) || in(c, 0x1AB0, 0x1AFF) || in(c, 0x1DC0, 0x1DFF) ||
         in(c, 0x20D0, 0x20FF) || in(c, 0xFE20, 0xFE2F) || c == 0x200C || c == 0x200D;
}

Script script_of(char32_t c) {
  if (c == 0x060C || c == 0x061B || c == 0x061F || c == 0x06D4 || c == 0x0964 || c == 0x0965)
    return Script::None;  // Arabic and Indic punctuation
  if (in(c, 'a', 'z') || in(c, 'A', 'Z')) return Script::Latin;
  if (in(c, 0x00C0, 0x024F) && c != 0x00D7 && c != 0x00F7) return Script::Latin;
  if (in(c, 0x1E00, 0x1EFF) || in(c, 0xFF21, 0xFF3A) || in(c, 0xFF41, 0xFF5A)) return Script::Latin;
  if (in(c, 0x0400, 0x052F)) return Script::Cyrillic;
  if (in(c, 0x0600, 0x06FF) || in(c, 0x0750, 0x077F) || in(c, 0xFB50, 0xFDFF) ||
      in(c, 0xFE70, 0xFEFF))
    return Script::Arabic;
  if (in(c, 0x0900, 0x097F)) return Script::Devanagari;
  if (in(c, 0x0980, 0x09FF)) return Script::Bengali;
  if (in(c, 0x0C00, 0x0C7F)) return Script::Telugu;
  if (in(c, 0x0E00, 0x0E7F)) return Script::Thai;
  if (in(c, 0xAC00, 0xD7AF) || in(c, 0x1100, 0x11FF) || in(c, 0x3130, 0x318F)) return Script::Hangul;
  if (in(c, 0x3040, 0x30FF) || in(c, 0x31F0, 0x31FF) || in(c, 0xFF66, 0xFF9F) ||
      in(c, 0x4E00, 0x9FFF) || in(c, 0x3400, 0x4DBF) || in(c, 0xF900, 0xFAFF) ||
      in(c, 0x20000, 0x2FA1F) || c == 0x3005)
    return Script::Cjk;
  return Script::None;
}

bool is_kana(char32_t c) {
  return in(c, 0x3040, 0x30FF) || in(c, 0x31F0, 0x31FF) || in(c, 0xFF66, 0xFF9F);
}

CharClass class_of(char32_t c) {
  if (is_space_cp(c)) return CharClass::Space;
  if (is_mark_cp(c)) return CharClass::Mark;
  if (is_digit_cp(c)) return CharClass::Digit;
  if (is_math_cp(c)) return CharClass::Math;
  if (script_of(c) != Script::None) return CharClass::Letter;
  // Marks belonging to an Indic/Thai block are letters of that block above;
  // what remains is punctuation and symbols.
  return CharClass::Punct;
}

char32_t to_lower(char32_t c) {
  if (in(c, 'A', 'Z')) return c + 32;
  if (in(c, 0x00C0, 0x00DE) && c != 0x00D7) return c + 32;
  if (c == 0x0130) return 'i';  // Turkish dotted capital I
  if ((in(c, 0x0100, 0x012F) || in(c, 0x0132, 0x0137) || in(c, 0x014A, 0x0177)) && c % 2 == 0)
    return c + 1;
  if ((in(c, 0x0139, 0x0148) || in(c, 0x0179, 0x017E)) && c % 2 == 1) return c + 1;
  if (in(c, 0x1E00, 0x1EFF) && c % 2 == 0) return c + 1;
  if (in(c, 0xFF21, 0xFF3A)) return c - 0xFF21 + 'a';
  if (in(c, 0xFF41, 0xFF5A)) return c - 0xFF41 + 'a';
  return c;
}

// Byte ranges covered by inline math and TeX markup.
std::vector<bool> markup_mask(std::string_view text) {
  std::vector<bool> mask(text.size(), false);
  auto mark = [&](std::size_t b, std::size_t e) {
    for (std::size_t k = b; k < e && k < mask.size(); ++k) mask[k] = true;
  };
  for (const auto& s : find_boxed(text)) mark(s.begin, s.end);

  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '$') {
      const bool display = i + 1 < text.size() && text[i + 1] == '$';
      const std::string_view close = display ? "$$" : "$";
      const auto end = text.find(close, i + close.size());
      if (end == std::string_view::npos) {
        mark(i, i + close.size());
        i += close.size();
      } else {
        mark(i, end + close.size());
        i = end + close.size();
      }
      continue;
    }
    if (c == '\\' && i + 1 < text.size()) {
      const char n = text[i + 1];
      if (n == '(' || n == '[') {
        const std::string_view close = n == '(' ? "\\)" : "\\]";
        const auto end = text.find(close, i + 2);
        const auto stop = end == std::string_view::npos ? i + 2 : end + 2;
        mark(i, stop);
        i = stop;
        continue;
      }
      std::size_t j = i + 1;
      while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i + 1) j = i + 2;  // escaped symbol such as \{ or \%
      mark(i, j);
      i = j;
      continue;
    }
    ++i;
  }
  return mask;
}

struct Run {
  enum Kind { Word, Digits, Math } kind;
  Script script = Script::None;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t letters = 0;
  bool ascii_only = true;
};

void segment_token(const std::vector<CodePoint>& cps, std::size_t lo, std::size_t hi,
                   const std::vector<bool>& mask, std::vector<TextUnit>& out) {
  std::vector<Run> runs;
  bool saw_punct = false;

  auto cls_at = [&](std::size_t k) {
    return mask[cps[k].begin] ? CharClass::Math : class_of(cps[k].cp);
  };
  auto joiner = [](char32_t c) { return c == '\'' || c == 0x2019 || c == '-'; };

  std::size_t k = lo;
  while (k < hi) {
    const auto cls = cls_at(k);
    if (cls == CharClass::Punct || cls == CharClass::Mark) {
      saw_punct = true;
      ++k;
      continue;
    }
    Run run{Run::Math, Script::None, cps[k].begin, cps[k].end};
    if (cls == CharClass::Letter) {
      run.kind = Run::Word;
      run.script = script_of(cps[k].cp);
      std::size_t m = k;
      while (m < hi) {
        const auto c = cls_at(m);
        if (c == CharClass::Letter && script_of(cps[m].cp) == run.script) {
          ++run.letters;
          if (cps[m].cp >= 0x80) run.ascii_only = false;
        } else if (c == CharClass::Mark && m > k) {
          run.ascii_only = false;
        } else if (joiner(cps[m].cp) && m + 1 < hi && cls_at(m + 1) == CharClass::Letter &&
                   script_of(cps[m + 1].cp) == run.script) {
          // apostrophe / hyphen inside a word
        } else {
          break;
        }
        run.end = cps[m].end;
        ++m;
      }
      k = m;
    } else if (cls == CharClass::Digit) {
      run.kind = Run::Digits;
      std::size_t m = k;
      while (m < hi) {
        const auto c = cls_at(m);
        const bool sep = (cps[m].cp == '.' || cps[m].cp == ',') && m + 1 < hi &&
                         cls_at(m + 1) == CharClass::Digit;
        if (c != CharClass::Digit && !sep) break;
        run.end = cps[m].end;
        ++m;
      }
      k = m;
    } else {
      std::size_t m = k;
      while (m < hi && cls_at(m) == CharClass::Math) {
        run.end = cps[m].end;
        ++m;
      }
      k = m;
    }
    runs.push_back(run);
  }

  if (runs.empty()) {
    if (saw_punct) out.push_back({cps[lo].begin, cps[hi - 1].end, UnitKind::Excluded});
    return;
  }

  const bool formula = std::any_of(runs.begin(), runs.end(),
                                   [](const Run& r) { return r.kind != Run::Word; });
  for (const auto& r : runs) {
    UnitKind kind = r.kind == Run::Word ? UnitKind::Word : UnitKind::Excluded;
    // A lone ASCII letter is a variable name: "x", "2x", "f(x)".
    if (r.kind == Run::Word && r.script == Script::Latin && r.letters == 1 && r.ascii_only &&
        (formula || runs.size() == 1))
      kind = UnitKind::Excluded;
    out.push_back({r.begin, r.end, kind});
  }
}

constexpr std::array<std::string_view, 9> kScriptLangs = {"ru", "ar", "hi", "bn", "te",
                                                          "th", "ko", "zh", "ja"};

std::string_view script_lang(Script s) {
  switch (s) {
    case Script::Cyrillic:
      return "ru";
    case Script::Arabic:
      return "ar";
    case Script::Devanagari:
      return "hi";
    case Script::Bengali:
      return "bn";
    case Script::Telugu:
      return "te";
    case Script::Thai:
      return "th";
    case Script::Hangul:
      return "ko";
    default:
      break;
  }
  return {};
}

constexpr char32_t kBoundary = 0x2;
constexpr double kTrigramAlpha = 0.1;
constexpr double kLexiconWeight = 0.6;

std::u32string lower_word(const std::vector<CodePoint>& cps) {
  std::u32string w;
  w.reserve(cps.size());
  for (const auto& c : cps) {
    if (is_mark_cp(c.cp)) {
      w += c.cp;
      continue;
    }
    w += to_lower(c.cp);
  }
  return w;
}

std::uint64_t pack(char32_t a, char32_t b, char32_t c = 0) {
  return (static_cast<std::uint64_t>(a) << 42) | (static_cast<std::uint64_t>(b) << 21) | c;
}

// True when the gap between two words closes a sentence or clause: a line
// break or terminal punctuation that is not a decimal point.
bool closes_sentence(std::string_view gap) {
  const auto cps = decode_utf8(gap);
  for (std::size_t i = 0; i < cps.size(); ++i) {
    switch (cps[i].cp) {
      case U'\n':
      case U'!': case U'?': case U';':
      case U'\u3002': case U'\uFF01': case U'\uFF1F': case U'\u0964': case U'\u061F': case U'\u061B':
        return true;
      case U'.': case U':': {
        const bool digit_before = i > 0 && is_digit_cp(cps[i - 1].cp);
        const bool digit_after = i + 1 < cps.size() && is_digit_cp(cps[i + 1].cp);
        if (!(digit_before && digit_after)) return true;
        break;
      }
      default:
        break;
    }
  }
  return false;
}

}  // namespace

struct ScriptNgramClassifier::Model {
  struct Latin {
    std::string lang;
    std::unordered_map<std::u32string, double> word_counts;
    double total_words = 0;
    std::unordered_map<std::uint64_t, double> trigrams;
    std::unordered_map<std::uint64_t, double> contexts;
  };
  std::vector<Latin> latin;
  double vocab = 1;

  double log_prob(const Latin& m, const std::u32string& w) const {
    double tri = 0.0;
    char32_t p2 = kBoundary, p1 = kBoundary;
    auto step = [&](char32_t c) {
      const auto t = m.trigrams.find(pack(p2, p1, c));
      const auto x = m.contexts.find(pack(p2, p1));
      const double num = (t == m.trigrams.end() ? 0.0 : t->second) + kTrigramAlpha;
      const double den = (x == m.contexts.end() ? 0.0 : x->second) + kTrigramAlpha * vocab;
      tri += std::log(num / den);
      p2 = p1;
      p1 = c;
    };
    for (char32_t c : w) step(c);
    step(kBoundary);
    const auto it = m.word_counts.find(w);
    const double tri_term = std::log(1.0 - kLexiconWeight) + tri;
    if (it == m.word_counts.end()) return tri_term;
    const double lex_term = std::log(kLexiconWeight * it->second / m.total_words);
    const double hi = std::max(lex_term, tri_term);
    return hi + std::log(std::exp(lex_term - hi) + std::exp(tri_term - hi));
  }

  // Normalized log-posteriors over the admissible Latin models.
  std::vector<std::pair<const Latin*, double>> posteriors(
      const std::u32string& w, std::span<const std::string> candidates) const {
    std::vector<std::pair<const Latin*, double>> out;
    for (const auto& m : latin)
      if (std::find(candidates.begin(), candidates.end(), m.lang) != candidates.end())
        out.emplace_back(&m, log_prob(m, w));
    if (out.empty()) return out;
    double hi = out.front().second;
    for (const auto& p : out) hi = std::max(hi, p.second);
    double z = 0.0;
    for (const auto& p : out) z += std::exp(p.second - hi);
    const double lz = hi + std::log(z);
    for (auto& p : out) p.second -= lz;
    return out;
  }
};

bool LanguageClassifier::supports(std::string_view lang) const {
  const auto langs = languages();
  return std::find(langs.begin(), langs.end(), lang) != langs.end();
}

ScriptNgramClassifier::ScriptNgramClassifier() : model_(std::make_unique<Model>()) {
  std::unordered_set<char32_t> alphabet;
  for (const auto& corpus : detail::latin_corpora()) {
    Model::Latin m;
    m.lang = std::string(corpus.lang);
    for (const auto& unit : segment_units(corpus.text)) {
      if (unit.kind != UnitKind::Word) continue;
      const auto cps = decode_utf8(corpus.text.substr(unit.begin, unit.end - unit.begin));
      if (cps.empty() || script_of(cps.front().cp) != Script::Latin) continue;
      const auto w = lower_word(cps);
      m.word_counts[w] += 1.0;
      m.total_words += 1.0;
      char32_t p2 = kBoundary, p1 = kBoundary;
      auto add = [&](char32_t c) {
        m.trigrams[pack(p2, p1, c)] += 1.0;
        m.contexts[pack(p2, p1)] += 1.0;
        alphabet.insert(c);
        p2 = p1;
        p1 = c;
      };
      for (char32_t c : w) add(c);
      add(kBoundary);
    }
    model_->latin.push_back(std::move(m));
  }
  model_->vocab = static_cast<double>(alphabet.size() + 1);
}

ScriptNgramClassifier::~ScriptNgramClassifier() = default;

std::shared_ptr<const ScriptNgramClassifier> ScriptNgramClassifier::instance() {
  static const auto shared = std::make_shared<const ScriptNgramClassifier>();
  return shared;
}

std::vector<std::string> ScriptNgramClassifier::languages() const {
  std::vector<std::string> out;
  for (const auto& m : model_->latin) out.push_back(m.lang);
  for (auto l : kScriptLangs) out.emplace_back(l);
  return out;
}

LanguageLabel ScriptNgramClassifier::classify(std::string_view unit,
                                              std::span<const std::string> candidates) const {
  auto admissible = [&](std::string_view l) {
    return std::find(candidates.begin(), candidates.end(), l) != candidates.end();
  };
  const auto cps = decode_utf8(unit);

  std::map<Script, std::size_t> counts;
  bool kana = false;
  for (const auto& c : cps) {
    const auto s = script_of(c.cp);
    if (s == Script::None) continue;
    ++counts[s];
    kana = kana || is_kana(c.cp);
  }
  if (counts.empty()) return {"und", 0.0};
  const auto dominant =
      std::max_element(counts.begin(), counts.end(),
                       [](const auto& a, const auto& b) { return a.second < b.second; })
          ->first;

  if (dominant == Script::Cjk) {
    // Han without kana is ambiguous; prefer zh unless only ja is admissible.
    if (kana && admissible("ja")) return {"ja", 1.0};
    if (!kana && admissible("zh")) return {"zh", admissible("ja") ? 0.75 : 1.0};
    if (admissible("ja")) return {"ja", 0.5};
    return {"und", 0.0};
  }
  if (dominant != Script::Latin) {
    const auto lang = script_lang(dominant);
    if (admissible(lang)) return {std::string(lang), 1.0};
    return {"und", 0.0};
  }

  const auto post = model_->posteriors(lower_word(cps), candidates);
  if (post.empty()) return {"und", 0.0};
  const auto best = std::max_element(post.begin(), post.end(),
                                     [](const auto& a, const auto& b) { return a.second < b.second; });
  return {best->first->lang, std::exp(best->second)};
}

std::vector<LanguageLabel> LanguageClassifier::classify_units(
    std::span<const std::string_view> units, const std::vector<bool>&,
    std::span<const std::string> candidates) const {
  std::vector<LanguageLabel> out;
  out.reserve(units.size());
  for (auto u : units) out.push_back(classify(u, candidates));
  return out;
}

std::vector<LanguageLabel> ScriptNgramClassifier::classify_units(
    std::span<const std::string_view> units, const std::vector<bool>& sentence_start,
    std::span<const std::string> candidates) const {
  constexpr double kFloor = -4.0;
  constexpr std::array<double, 3> kWeight{1.0, 0.6, 0.3};

  std::vector<LanguageLabel> out(units.size());
  // Per Latin unit: clipped log-posterior per model index; empty otherwise.
  std::vector<std::vector<double>> evidence(units.size());
  std::vector<std::size_t> run_id(units.size(), 0);
  std::size_t run = 0;
  bool in_run = false;
  for (std::size_t i = 0; i < units.size(); ++i) {
    const auto cps = decode_utf8(units[i]);
    const bool latin = !cps.empty() && std::all_of(cps.begin(), cps.end(), [](const CodePoint& c) {
      const auto s = script_of(c.cp);
      return s == Script::Latin || s == Script::None;
    }) && std::any_of(cps.begin(), cps.end(), [](const CodePoint& c) {
      return script_of(c.cp) == Script::Latin;
    });
    if (!latin) {
      out[i] = classify(units[i], candidates);
      in_run = false;
      continue;
    }
    const auto post = model_->posteriors(lower_word(cps), candidates);
    if (post.empty()) {
      out[i] = {"und", 0.0};
      in_run = false;
      continue;
    }
    auto& ev = evidence[i];
    ev.assign(model_->latin.size(), kFloor);
    for (const auto& [m, lp] : post)
      ev[static_cast<std::size_t>(m - model_->latin.data())] = std::max(lp, kFloor);
    if (!in_run || (i < sentence_start.size() && sentence_start[i])) ++run;
    in_run = true;
    run_id[i] = run;
  }

  for (std::size_t i = 0; i < units.size(); ++i) {
    if (evidence[i].empty()) continue;
    std::vector<double> score(model_->latin.size(), 0.0);
    const auto lo = i >= 2 ? i - 2 : 0;
    const auto hi = std::min(units.size() - 1, i + 2);
    for (std::size_t j = lo; j <= hi; ++j) {
      if (evidence[j].empty() || run_id[j] != run_id[i]) continue;
      const double w = kWeight[j > i ? j - i : i - j];
      for (std::size_t l = 0; l < score.size(); ++l) score[l] += w * evidence[i == j ? i : j][l];
    }
    std::size_t best = 0;
    bool found = false;
    for (std::size_t l = 0; l < score.size(); ++l) {
      const bool admissible =
          std::find(candidates.begin(), candidates.end(), model_->latin[l].lang) != candidates.end();
      if (!admissible) continue;
      if (!found || score[l] > score[best]) {
        best = l;
        found = true;
      }
    }
    out[i] = found ? LanguageLabel{model_->latin[best].lang, std::exp(evidence[i][best])}
                   : LanguageLabel{"und", 0.0};
  }
  return out;
}

std::vector<TextUnit> segment_units(std::string_view text) {
  const auto cps = decode_utf8(text);
  const auto mask = markup_mask(text);
  std::vector<TextUnit> units;
  std::size_t k = 0;
  while (k < cps.size()) {
    if (is_space_cp(cps[k].cp)) {
      ++k;
      continue;
    }
    std::size_t m = k;
    while (m < cps.size() && !is_space_cp(cps[m].cp)) ++m;
    segment_token(cps, k, m, mask, units);
    k = m;
  }
  return units;
}

LanguageReport language_fraction(std::string_view text, std::string_view target_lang,
                                 const LanguageClassifier& classifier) {
  if (!classifier.supports(target_lang)) throw UnsupportedLanguage(std::string(target_lang));
  const auto candidates = classifier.languages();

  LanguageReport report;
  const auto units = segment_units(text);
  std::vector<std::string_view> words;
  std::vector<bool> sentence_start;
  std::vector<const TextUnit*> word_units;
  std::size_t prev_end = 0;
  for (const auto& u : units) {
    if (u.kind == UnitKind::Excluded) {
      ++report.excluded_units;
      continue;
    }
    sentence_start.push_back(words.empty() || closes_sentence(text.substr(prev_end, u.begin - prev_end)));
    words.push_back(text.substr(u.begin, u.end - u.begin));
    word_units.push_back(&u);
    prev_end = u.end;
  }

  const auto labels = classifier.classify_units(words, sentence_start, candidates);
  std::size_t in_target = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    ++report.counted_units;
    if (labels[i].lang == target_lang) ++in_target;
    report.per_unit_labels.push_back({word_units[i]->begin, word_units[i]->end, labels[i].lang});
  }
  report.fraction = report.counted_units == 0
                        ? 0.0
                        : static_cast<double>(in_target) / static_cast<double>(report.counted_units);
  return report;
}

}  // namespace tourney
