#include <string>

#include "tourney/answer.hpp"
#include "tourney/judge.hpp"

namespace tourney {

namespace {

constexpr std::string_view kPrivilegedSystem =
    "You are an expert judge in evaluating the quality of responses to user queries.\n"
    "Your task is to determine which response (A or B) is preferable.\n"
    "You will be provided with the user query and the correct solution.\n"
    "The responses may be in various languages, but the solution will always be in English.\n"
    "Decide based on how well does each response align with the correct solution.\n"
    "The best response should have the closest meaning and intent to the correct solution.\n"
    "Write your analysis and end it by answering with either \\boxed{A} or \\boxed{B}.";

// Verbatim, including the mention of a correct solution that this variant
// never receives.
constexpr std::string_view kPlainSystem =
    "You are an expert judge in evaluating the quality of responses to user queries.\n"
    "Your task is to determine which response (A or B) is preferable.\n"
    "You will be provided with the user query and the correct solution.\n"
    "The responses may be in various languages.\n"
    "Write your analysis and end it by answering with either \\boxed{A} or \\boxed{B}.";

constexpr std::string_view kPrivilegedInstruction =
    "First, using the solution as reference, decide which of the two responses is the closest "
    "to the solution.\n";

constexpr std::string_view kPlainInstruction =
    "First, decide which of the two responses is preferable.\n";

constexpr std::string_view kClosing =
    "Finally, choose which is better by answering with either \\boxed{A} or \\boxed{B}.\n"
    "You MUST provide your reasoning before the answer.";

void block(std::string& out, std::string_view tag, std::string_view body) {
  out += '<';
  out += tag;
  out += ">\n";
  out += body;
  out += "\n</";
  out += tag;
  out += ">\n";
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

}  // namespace

JudgeRequest render_prompt(bool privileged, std::string_view query,
                           std::string_view reference_response, std::string_view resp_a,
                           std::string_view resp_b) {
  JudgeRequest req;
  req.metadata.privileged = privileged;
  req.system_message = privileged ? kPrivilegedSystem : kPlainSystem;

  auto& u = req.user_message;
  u.reserve(query.size() + reference_response.size() + resp_a.size() + resp_b.size() + 512);
  block(u, "Query", query);
  u += '\n';
  if (privileged) {
    block(u, "Correct Solution", reference_response);
    u += '\n';
  }
  block(u, "Response A", resp_a);
  u += '\n';
  block(u, "Response B", resp_b);
  u += privileged ? kPrivilegedInstruction : kPlainInstruction;
  u += kClosing;
  return req;
}

Verdict parse_verdict(std::string_view raw) {
  Verdict v{Choice::Invalid, std::string(raw)};
  for (const auto& span : find_boxed(raw)) {
    const auto content = trim(raw.substr(span.content_begin, span.content_end - span.content_begin));
    if (content == "A") v.choice = Choice::A;
    else if (content == "B") v.choice = Choice::B;
  }
  return v;
}

}  // namespace tourney
