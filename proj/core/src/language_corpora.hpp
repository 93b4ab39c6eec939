#pragma once

#include <span>
#include <string_view>

namespace tourney::detail {

struct LatinCorpus {
  std::string_view lang;
  std::string_view text;
};

// Short math-flavoured paragraphs, one per Latin-script language the bundled
// classifier recognises.
std::span<const LatinCorpus> latin_corpora();

}  // namespace tourney::detail
