#include "tourney/io.hpp"

#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <unordered_set>

#include "tourney/errors.hpp"
#include "tourney/iso639.hpp"
#include "tourney/serialization.hpp"

namespace tourney {

using nlohmann::json;

void for_each_jsonl(std::istream& in, const std::function<void(const json&, std::size_t)>& fn) {
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(lineno, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError(lineno, "expected a JSON object");
    fn(j, lineno);
  }
}

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

}  // namespace

std::vector<TaskInstance> read_dataset(std::istream& in) {
  std::vector<TaskInstance> tasks;
  std::unordered_set<std::string> ids;
  for_each_jsonl(in, [&](const json& j, std::size_t line) {
    auto t = task_from_line(j, line);
    if (!ids.insert(t.task_id).second) throw DuplicateId(line, t.task_id);
    if (!is_iso639_1(t.target_lang))
      throw ParseError(line, "target_lang '" + t.target_lang + "' is not an ISO 639-1 code");
    if (t.reference_response.empty()) throw ParseError(line, "reference_response is empty");
    tasks.push_back(std::move(t));
  });
  return tasks;
}

std::vector<TaskInstance> load_dataset(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_dataset(in);
}

std::vector<RolloutGroup> read_groups(std::istream& in) {
  std::vector<RolloutGroup> groups;
  for_each_jsonl(in, [&](const json& j, std::size_t line) {
    groups.push_back(group_from_line(j, line));
  });
  return groups;
}

std::vector<RolloutGroup> load_groups(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_groups(in);
}

std::vector<NamedMatrix> read_matrices(std::istream& in) {
  std::vector<NamedMatrix> out;
  for_each_jsonl(in, [&](const json& j, std::size_t line) {
    try {
      out.push_back({j.value("task_id", std::string{}), j.get<PreferenceMatrix>()});
    } catch (const json::exception& e) {
      throw ParseError(line, e.what());
    } catch (const DomainError& e) {
      throw ParseError(line, e.what());
    }
  });
  return out;
}

void write_jsonl(std::ostream& out, const std::vector<json>& lines) {
  for (const auto& l : lines) out << l.dump() << '\n';
}

OutputSink::OutputSink(const std::string& path) {
  if (path.empty() || path == "-") return;
  file_ = std::make_unique<std::ofstream>(path);
  if (!*file_) throw Error("cannot write " + path);
}

std::ostream& OutputSink::stream() { return file_ ? *file_ : std::cout; }

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_pnt_csv(std::ostream& out, const std::vector<std::pair<std::size_t, PntReport>>& rows) {
  out << "k,pnt,subsets,decided,cyclic,matrices,exhaustive_matrices\n";
  for (const auto& [k, r] : rows)
    out << fmt::format("{},{:.6f},{},{},{},{},{}\n", k, r.pnt, r.subsets, r.decided, r.cyclic,
                       r.per_matrix.size(), r.exhaustive_matrices);
}

void write_graft_csv(std::ostream& out, const std::vector<GraftReport>& rows) {
  out << "row_type,pairs,accuracy,ci95_low,ci95_high\n";
  for (const auto& r : rows)
    out << fmt::format("{},{},{:.6f},{:.6f},{:.6f}\n", to_string(r.row_type), r.pairs, r.accuracy,
                       r.ci95.low, r.ci95.high);
}

void write_h2h_csv(std::ostream& out, const std::vector<std::string>& names,
                   const std::vector<std::vector<double>>& matrix) {
  out << "model";
  for (const auto& n : names) out << ',' << csv_field(n);
  out << '\n';
  for (std::size_t i = 0; i < names.size(); ++i) {
    out << csv_field(names[i]);
    for (double v : matrix[i]) out << fmt::format(",{:.6f}", v);
    out << '\n';
  }
}

}  // namespace tourney
