#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tourney {

// Byte range of one balanced \boxed{...}: [begin, end) covers the whole
// template, [content_begin, content_end) the inside of the braces.
struct BoxedSpan {
  std::size_t begin = 0;
  std::size_t content_begin = 0;
  std::size_t content_end = 0;
  std::size_t end = 0;
};

// Every balanced, non-overlapping \boxed{...} in left-to-right order. An
// unterminated template is skipped; escaped braces (\{ \}) do not count.
std::vector<BoxedSpan> find_boxed(std::string_view text);

// Contents of the last balanced \boxed{...}, raw.
std::optional<std::string> extract_boxed(std::string_view text);

// Trims, collapses whitespace, strips one layer of $...$ and a trailing
// period, then canonicalizes plain decimals ("3.50" -> "3.5") and integer
// ratios ("4/6" -> "2/3").
std::string normalize_answer(std::string_view raw);

// Splits a response into (chain of thought, raw boxed answer). The chain of
// thought is everything before the last box, or the whole text when there is
// none.
struct SplitResponse {
  std::string cot;
  std::optional<std::string> answer;
};
SplitResponse split_response(std::string_view text);

}  // namespace tourney
