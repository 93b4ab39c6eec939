#pragma once

#include <filesystem>
#include <functional>
#include <fstream>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tourney/analysis.hpp"
#include "tourney/types.hpp"

namespace tourney {

// Calls `fn(object, line_number)` for every non-blank line. Throws
// ParseError with the line number on malformed JSON.
void for_each_jsonl(std::istream& in,
                    const std::function<void(const nlohmann::json&, std::size_t)>& fn);

// Dataset lines: task_id, query, target_lang, gold_answer,
// reference_response. The whole file is rejected on the first bad line
// (ParseError, MissingField or DuplicateId).
std::vector<TaskInstance> load_dataset(const std::filesystem::path& path);
std::vector<TaskInstance> read_dataset(std::istream& in);

std::vector<RolloutGroup> read_groups(std::istream& in);
std::vector<RolloutGroup> load_groups(const std::filesystem::path& path);

struct NamedMatrix {
  std::string task_id;
  PreferenceMatrix matrix;
};

std::vector<NamedMatrix> read_matrices(std::istream& in);

void write_jsonl(std::ostream& out, const std::vector<nlohmann::json>& lines);

// Opens `path` for writing, or returns std::cout for "-" / empty.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path);
  std::ostream& stream();

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string csv_field(std::string_view s);

void write_pnt_csv(std::ostream& out, const std::vector<std::pair<std::size_t, PntReport>>& rows);
void write_graft_csv(std::ostream& out, const std::vector<GraftReport>& rows);
void write_h2h_csv(std::ostream& out, const std::vector<std::string>& names,
                   const std::vector<std::vector<double>>& matrix);

}  // namespace tourney
