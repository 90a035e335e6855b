#include "olcp/transcript.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace olcp {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad_line(std::size_t line, const std::string& what) {
  throw std::runtime_error("transcript line " + std::to_string(line) + ": " + what);
}

Rational parse_endpoint(const std::string& text, std::size_t line) {
  const auto r = Rational::parse(text);
  if (!r) bad_line(line, "bad endpoint \"" + text + "\"");
  return *r;
}

Stage parse_stage(const std::string& text, std::size_t line) {
  const auto stage = parse_stage_tag(text);
  if (!stage || *stage == Stage::Done) bad_line(line, "bad stage \"" + text + "\"");
  return *stage;
}

}  // namespace

void write_transcript_jsonl_record(std::ostream& out, const GameStep& step) {
  Json record;
  record["step"] = step.index;
  record["r"] = step.interval.right.to_string();
  record["chain"] = step.chain;
  record["stage"] = stage_tag(step.stage);
  record["chains"] = step.chains_so_far;
  if (step.width_so_far < 0) {
    record["width"] = nullptr;
  } else {
    record["width"] = step.width_so_far;
  }
  out << record.dump() << '\n';
}

void write_transcript_jsonl(std::ostream& out, std::span<const GameStep> steps) {
  for (const GameStep& step : steps) write_transcript_jsonl_record(out, step);
}

std::vector<GameStep> read_transcript_jsonl(std::istream& in) {
  std::vector<GameStep> steps;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Json record = Json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object()) bad_line(line_no, "not a JSON object");
    try {
      GameStep step;
      step.index = record.at("step").get<int>();
      step.interval.right = parse_endpoint(record.at("r").get<std::string>(), line_no);
      step.chain = record.at("chain").get<ChainId>();
      step.stage = parse_stage(record.at("stage").get<std::string>(), line_no);
      step.chains_so_far = record.at("chains").get<int>();
      const auto& width = record.at("width");
      step.width_so_far = width.is_null() ? -1 : width.get<int>();
      steps.push_back(std::move(step));
    } catch (const Json::exception& e) {
      bad_line(line_no, e.what());
    }
  }
  return steps;
}

const char* transcript_csv_header() { return "step,r,chain,stage,chains,width"; }

void write_transcript_csv_row(std::ostream& out, const GameStep& step) {
  out << step.index << ',' << step.interval.right.to_string() << ',' << step.chain
      << ',' << stage_tag(step.stage) << ',' << step.chains_so_far << ',';
  if (step.width_so_far >= 0) out << step.width_so_far;
  out << '\n';
}

void write_transcript_csv(std::ostream& out, std::span<const GameStep> steps) {
  out << transcript_csv_header() << '\n';
  for (const GameStep& step : steps) write_transcript_csv_row(out, step);
}

std::vector<GameStep> read_transcript_csv(std::istream& in) {
  std::vector<GameStep> steps;
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != transcript_csv_header()) bad_line(line_no, "bad header");
      saw_header = true;
      continue;
    }

    std::vector<std::string> fields;
    std::string field;
    std::istringstream row(line);
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (line.back() == ',') fields.push_back("");
    if (fields.size() != 6) bad_line(line_no, "expected 6 fields");

    auto to_int = [&](const std::string& text) {
      try {
        std::size_t used = 0;
        const int value = std::stoi(text, &used);
        if (used != text.size()) bad_line(line_no, "bad integer \"" + text + "\"");
        return value;
      } catch (const std::logic_error&) {
        bad_line(line_no, "bad integer \"" + text + "\"");
      }
    };

    GameStep step;
    step.index = to_int(fields[0]);
    step.interval.right = parse_endpoint(fields[1], line_no);
    step.chain = to_int(fields[2]);
    step.stage = parse_stage(fields[3], line_no);
    step.chains_so_far = to_int(fields[4]);
    step.width_so_far = fields[5].empty() ? -1 : to_int(fields[5]);
    steps.push_back(std::move(step));
  }
  if (!saw_header) throw std::runtime_error("transcript: missing csv header");
  return steps;
}

std::vector<ChainId> decisions(std::span<const GameStep> steps) {
  std::vector<ChainId> out;
  out.reserve(steps.size());
  for (const GameStep& step : steps) out.push_back(step.chain);
  return out;
}

}  // namespace olcp
