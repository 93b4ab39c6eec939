#include "tourney/answer.hpp"

#include <cctype>
#include <cstdint>
#include <numeric>

namespace tourney {

namespace {

constexpr std::string_view kBoxed = "\\boxed{";

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string strip_leading_zeros(std::string_view digits) {
  std::size_t i = 0;
  while (i + 1 < digits.size() && digits[i] == '0') ++i;
  return std::string(digits.substr(i));
}

// "+007.500" -> "7.5", "-0.0" -> "0", ".5" -> "0.5". nullopt if not a decimal.
std::optional<std::string> canonical_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  std::string_view int_part = s.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;
  if (!frac_part.empty() && !all_digits(frac_part)) return std::nullopt;

  std::string whole = int_part.empty() ? "0" : strip_leading_zeros(int_part);
  while (!frac_part.empty() && frac_part.back() == '0') frac_part.remove_suffix(1);

  std::string out = whole;
  if (!frac_part.empty()) {
    out += '.';
    out += frac_part;
  }
  if (negative && out != "0") out.insert(out.begin(), '-');
  return out;
}

std::optional<std::uint64_t> to_u64(std::string_view digits) {
  std::uint64_t v = 0;
  for (char c : digits) {
    const auto d = static_cast<std::uint64_t>(c - '0');
    if (v > (UINT64_MAX - d) / 10) return std::nullopt;
    v = v * 10 + d;
  }
  return v;
}

// "-4/6" -> "-2/3", "8/4" -> "2". nullopt if not an integer ratio.
std::optional<std::string> canonical_ratio(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  auto num_s = trim(s.substr(0, slash));
  auto den_s = trim(s.substr(slash + 1));
  if (!all_digits(num_s) || !all_digits(den_s)) return std::nullopt;

  const auto num = to_u64(num_s);
  const auto den = to_u64(den_s);
  if (!num || !den) {
    // Too large to reduce; still drop leading zeros.
    std::string out = strip_leading_zeros(num_s) + "/" + strip_leading_zeros(den_s);
    return negative ? "-" + out : out;
  }
  if (*den == 0) return std::nullopt;
  if (*num == 0) return std::string("0");
  const auto g = std::gcd(*num, *den);
  std::string out = std::to_string(*num / g);
  if (*den / g != 1) out += "/" + std::to_string(*den / g);
  return negative ? "-" + out : out;
}

}  // namespace

std::vector<BoxedSpan> find_boxed(std::string_view text) {
  std::vector<BoxedSpan> spans;
  std::size_t pos = 0;
  while ((pos = text.find(kBoxed, pos)) != std::string_view::npos) {
    const std::size_t open = pos + kBoxed.size();
    int depth = 1;
    std::size_t i = open;
    for (; i < text.size(); ++i) {
      const char c = text[i];
      if (c == '\\' && i + 1 < text.size() && (text[i + 1] == '{' || text[i + 1] == '}')) {
        ++i;
        continue;
      }
      if (c == '{') {
        ++depth;
      } else if (c == '}') {
        if (--depth == 0) break;
      }
    }
    if (depth == 0) {
      spans.push_back({pos, open, i, i + 1});
      pos = i + 1;
    } else {
      pos = open;
    }
  }
  return spans;
}

std::optional<std::string> extract_boxed(std::string_view text) {
  const auto spans = find_boxed(text);
  if (spans.empty()) return std::nullopt;
  const auto& s = spans.back();
  return std::string(text.substr(s.content_begin, s.content_end - s.content_begin));
}

std::string normalize_answer(std::string_view raw) {
  std::string_view s = trim(raw);
  if (s.size() >= 2 && s.front() == '$' && s.back() == '$') s = trim(s.substr(1, s.size() - 2));
  if (!s.empty() && s.back() == '.') s = trim(s.substr(0, s.size() - 1));

  std::string collapsed;
  collapsed.reserve(s.size());
  bool in_space = false;
  for (char c : s) {
    if (is_space(c)) {
      in_space = true;
      continue;
    }
    if (in_space && !collapsed.empty()) collapsed += ' ';
    in_space = false;
    collapsed += c;
  }

  if (auto d = canonical_decimal(collapsed)) return *d;
  if (auto r = canonical_ratio(collapsed)) return *r;
  return collapsed;
}

SplitResponse split_response(std::string_view text) {
  const auto spans = find_boxed(text);
  if (spans.empty()) return {std::string(text), std::nullopt};
  const auto& s = spans.back();
  return {std::string(text.substr(0, s.begin)),
          std::string(text.substr(s.content_begin, s.content_end - s.content_begin))};
}

}  // namespace tourney
