#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tourney {

struct LanguageLabel {
  std::string lang;  // ISO 639-1, or "und" when no candidate fits
  double confidence = 0.0;
};

// Plug-in contract: label one text unit given the admissible languages.
// Implementations must be safe to call concurrently on a const instance.
class LanguageClassifier {
 public:
  virtual ~LanguageClassifier() = default;
  virtual std::vector<std::string> languages() const = 0;
  virtual bool supports(std::string_view lang) const;
  virtual LanguageLabel classify(std::string_view unit,
                                 std::span<const std::string> candidates) const = 0;
  // Labels a sequence of units in reading order; sentence_start[i] marks a
  // unit that follows sentence-ending punctuation or a line break. The
  // default labels each unit on its own.
  virtual std::vector<LanguageLabel> classify_units(std::span<const std::string_view> units,
                                                    const std::vector<bool>& sentence_start,
                                                    std::span<const std::string> candidates) const;
};

// Bundled default. Non-Latin scripts are routed by Unicode block (Han/Kana,
// Hangul, Cyrillic, Arabic, Devanagari, Bengali, Telugu, Thai); Latin-script
// words are scored with per-language word-frequency and character-trigram
// models trained on small embedded corpora.
class ScriptNgramClassifier final : public LanguageClassifier {
 public:
  ScriptNgramClassifier();
  ~ScriptNgramClassifier() override;

  std::vector<std::string> languages() const override;
  LanguageLabel classify(std::string_view unit,
                         std::span<const std::string> candidates) const override;
  // Latin-script words pool evidence from up to two neighbours on each side
  // within the same sentence, so ambiguous words follow their context.
  std::vector<LanguageLabel> classify_units(std::span<const std::string_view> units,
                                            const std::vector<bool>& sentence_start,
                                            std::span<const std::string> candidates) const override;

  // Shared immutable instance.
  static std::shared_ptr<const ScriptNgramClassifier> instance();

 private:
  struct Model;
  std::unique_ptr<Model> model_;
};

enum class UnitKind { Word, Excluded };

struct TextUnit {
  std::size_t begin = 0;  // byte offsets into the source text
  std::size_t end = 0;
  UnitKind kind = UnitKind::Word;
};

// Whitespace tokens, further split at script changes and punctuation.
// Digits, math operators, Greek letters, single Latin letters inside
// formulas, TeX commands, $...$ / \(...\) / \[...\] spans, \boxed{...}
// templates and bare punctuation become Excluded units.
std::vector<TextUnit> segment_units(std::string_view text);

struct UnitLabel {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string lang;
};

struct LanguageReport {
  double fraction = 0.0;
  std::size_t counted_units = 0;
  std::size_t excluded_units = 0;
  std::vector<UnitLabel> per_unit_labels;
};

// Fraction of counted units labeled target_lang; 0 when nothing is counted.
// Throws UnsupportedLanguage if the classifier does not know target_lang.
LanguageReport language_fraction(std::string_view text, std::string_view target_lang,
                                 const LanguageClassifier& classifier);

}  // namespace tourney
