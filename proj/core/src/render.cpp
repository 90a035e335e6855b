#include "olcp/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace olcp {

std::string summary_line(const GameResult& result) {
  std::ostringstream out;
  out << "chains=" << result.distinct_chains << " target=" << result.target
      << " width=";
  if (result.max_width < 0) {
    out << "unchecked";
  } else {
    out << result.max_width;
  }
  out << " forced=" << (result.forced ? "yes" : "no");
  return out.str();
}

std::string render_figure(const GameResult& result, int columns) {
  const ChainPartition& p = result.partition;
  if (p.empty()) return "(no elements)\n";
  columns = std::max(columns, 16);

  Rational lo = p.chain(0).front().left();
  Rational hi = p.chain(0).front().right;
  for (ChainId id = 0; id < p.chain_count(); ++id) {
    for (const UnitInterval& e : p.chain(id)) {
      lo = std::min(lo, e.left());
      hi = std::max(hi, e.right);
    }
  }

  const double lo_d = lo.to_double();
  const double span = std::max(hi.to_double() - lo_d, 1e-9);
  auto cell = [&](const Rational& v) {
    const double t = (v.to_double() - lo_d) / span;
    const int c = static_cast<int>(std::lround(t * (columns - 1)));
    return std::clamp(c, 0, columns - 1);
  };

  std::ostringstream out;
  out << "axis " << lo.to_string() << " .. " << hi.to_string() << "\n";
  for (ChainId id = 0; id < p.chain_count(); ++id) {
    std::string row(static_cast<std::size_t>(columns), ' ');
    for (const UnitInterval& e : p.chain(id)) {
      const int a = cell(e.left());
      const int b = cell(e.right);
      if (a == b) {
        row[static_cast<std::size_t>(a)] = '#';
        continue;
      }
      for (int c = a + 1; c < b; ++c) row[static_cast<std::size_t>(c)] = '=';
      row[static_cast<std::size_t>(a)] = '[';
      row[static_cast<std::size_t>(b)] = ']';
    }
    out << "chain " << id << (id < 10 ? "  " : " ") << row << "\n";
  }
  for (ChainId id = 0; id < p.chain_count(); ++id) {
    out << "chain " << id << ":";
    for (const UnitInterval& e : p.chain(id)) out << ' ' << e.right.to_string();
    out << "\n";
  }
  return out.str();
}

std::string describe_step(const AdversaryState& before, const AdversaryState& after,
                          const GameStep& step) {
  std::ostringstream out;
  out << "step " << step.index << " [" << stage_tag(step.stage) << "] "
      << step.interval.right.to_string() << " -> chain " << step.chain << ": ";

  switch (step.stage) {
    case Stage::S1:
      out << "stack chain " << after.stage1_count << " of " << after.k;
      break;
    case Stage::S2:
      if (before.stage1_chains.contains(step.chain)) {
        out << "merged into a stack chain, probe ceiling drops to "
            << after.stage2_hi.to_string();
      } else {
        out << "middle chain " << after.stage2_chains.size() << " of "
            << (after.k + 1) << ", probe floor rises to "
            << after.stage2_lo.to_string();
      }
      if (after.stage == Stage::S3) {
        out << "; middle band full, descending to ("
            << after.stage3_lo.to_string() << ", " << after.stage3_hi.to_string() << ")";
      }
      break;
    case Stage::S3:
      if (after.stage == Stage::S4) {
        out << "a middle chain reached down; squeeze window is now ("
            << after.stage4_lo.to_string() << ", " << after.stage4_hi.to_string() << ")";
      } else if (before.stage1_chains.contains(step.chain)) {
        out << "extended a stack chain downward, floor rises to "
            << after.stage3_lo.to_string();
      } else {
        out << "new low chain, floor rises to " << after.stage3_lo.to_string();
      }
      break;
    case Stage::S4:
      if (after.stage == Stage::S5) {
        out << "first value off the middle chains; pivot "
            << after.stage4_exit_value->to_string() << " fixed, closing value "
            << (*after.stage4_exit_value + 1).to_string();
      } else {
        out << "absorbed by a middle chain, squeeze floor rises to "
            << after.stage4_lo.to_string();
      }
      break;
    case Stage::S5:
      out << "closing value " << after.stage5_count << " of " << after.k;
      break;
    case Stage::Done:
      break;
  }

  if (after.win && !before.win) {
    out << "; target of " << after.target << " chains reached";
  }
  return out.str();
}

}  // namespace olcp
