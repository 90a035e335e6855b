#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "olcp/arena.hpp"

namespace olcp {

// A transcript is the step list of a game in a line-oriented format, one
// record per presented interval:
//
//   jsonl  {"step":1,"r":"0","chain":0,"stage":"S1","chains":1,"width":1}
//          width is null when width checking was off.
//   csv    header step,r,chain,stage,chains,width then one row per step;
//          width is empty when off.
//
// Endpoints travel as exact "p/q" strings, so write/read round-trips are
// lossless. Readers throw std::runtime_error with the offending line
// number on malformed input.

void write_transcript_jsonl(std::ostream& out, std::span<const GameStep> steps);
std::vector<GameStep> read_transcript_jsonl(std::istream& in);

void write_transcript_csv(std::ostream& out, std::span<const GameStep> steps);
std::vector<GameStep> read_transcript_csv(std::istream& in);

// Single-record forms, for streaming a live game. The csv row does not
// include the header; write csv_header() once first.
void write_transcript_jsonl_record(std::ostream& out, const GameStep& step);
void write_transcript_csv_row(std::ostream& out, const GameStep& step);
const char* transcript_csv_header();

// The chain choices of a game in presentation order; replaying them with
// a scripted algorithm reproduces the game.
std::vector<ChainId> decisions(std::span<const GameStep> steps);

}  // namespace olcp
