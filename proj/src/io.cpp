// Copyright 2026 The argcog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "argcog/io.hpp"

#include <algorithm>
#include <regex>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "argcog/error.hpp"

namespace argcog::io {

namespace {

using Json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\v\f";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

// Splits on '\n'; the returned views keep their original line numbers
// (1-based) by position.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const auto start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

struct Declared {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::uint32_t> index;

  // Returns false when `name` is already declared.
  bool add(std::string name) {
    const auto id = static_cast<std::uint32_t>(labels.size());
    if (!index.emplace(name, id).second) return false;
    labels.push_back(std::move(name));
    return true;
  }
};

}  // namespace

Framework parse_apx(std::string_view text) {
  static const std::regex kArg(R"(arg\s*\(\s*([A-Za-z0-9_]+)\s*\)\s*\.)");
  static const std::regex kAtt(
      R"(att\s*\(\s*([A-Za-z0-9_]+)\s*,\s*([A-Za-z0-9_]+)\s*\)\s*\.)");

  struct PendingAttack {
    std::string source, target;
    std::size_t line;
    std::string text;
  };

  Declared args;
  std::vector<PendingAttack> pending;
  std::size_t line_no = 0;
  for (auto raw : split_lines(text)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '%') continue;
    std::match_results<std::string_view::const_iterator> m;
    if (std::regex_match(line.begin(), line.end(), m, kArg)) {
      if (!args.add(m[1].str())) {
        throw ParseError(ErrorKind::DuplicateLabel, line_no, std::string(line),
                         "argument '" + m[1].str() + "' declared twice");
      }
    } else if (std::regex_match(line.begin(), line.end(), m, kAtt)) {
      pending.push_back({m[1].str(), m[2].str(), line_no, std::string(line)});
    } else {
      throw ParseError(ErrorKind::SyntaxError, line_no, std::string(line),
                       "expected arg(NAME). or att(NAME,NAME).");
    }
  }

  std::vector<Attack> attacks;
  attacks.reserve(pending.size());
  for (const auto& p : pending) {
    auto source = args.index.find(p.source);
    auto target = args.index.find(p.target);
    if (source == args.index.end() || target == args.index.end()) {
      const auto& missing =
          source == args.index.end() ? p.source : p.target;
      throw ParseError(ErrorKind::UnknownLabel, p.line, p.text,
                       "undeclared argument '" + missing + "'");
    }
    attacks.push_back({source->second, target->second});
  }
  return Framework::from_indices(std::move(args.labels), attacks);
}

Framework parse_tgf(std::string_view text) {
  const auto lines = split_lines(text);
  if (std::none_of(lines.begin(), lines.end(),
                   [](std::string_view l) { return trim(l) == "#"; })) {
    throw Error(ErrorKind::MissingSeparator,
                "TGF input has no '#' line separating nodes from edges");
  }
  Declared ids;
  std::vector<std::string> labels;
  std::vector<Attack> attacks;
  bool separator_seen = false;
  std::size_t line_no = 0;
  for (auto raw : lines) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line == "#") {
      if (separator_seen) {
        throw ParseError(ErrorKind::SyntaxError, line_no, std::string(line),
                         "second '#' separator");
      }
      separator_seen = true;
      continue;
    }
    const auto tokens = split_ws(line);
    if (!separator_seen) {
      if (!ids.add(std::string(tokens[0]))) {
        throw ParseError(ErrorKind::DuplicateLabel, line_no, std::string(line),
                         "node '" + std::string(tokens[0]) + "' declared twice");
      }
      labels.emplace_back(tokens.size() == 1
                              ? tokens[0]
                              : trim(line.substr(tokens[0].size())));
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(ErrorKind::SyntaxError, line_no, std::string(line),
                       "expected an edge 'SRC DST'");
    }
    auto source = ids.index.find(std::string(tokens[0]));
    auto target = ids.index.find(std::string(tokens[1]));
    if (source == ids.index.end() || target == ids.index.end()) {
      const auto missing = source == ids.index.end() ? tokens[0] : tokens[1];
      throw ParseError(ErrorKind::UnknownLabel, line_no, std::string(line),
                       "undeclared node '" + std::string(missing) + "'");
    }
    attacks.push_back({source->second, target->second});
  }
  return Framework::from_indices(std::move(labels), attacks);
}

std::string render_af(const Framework& af, RenderFormat fmt) {
  if (fmt == RenderFormat::Json) {
    Json attacks = Json::array();
    for (const auto& a : af.attacks()) {
      attacks.push_back(Json::array({af.label(a.source), af.label(a.target)}));
    }
    Json doc;
    doc["arguments"] = af.labels();
    doc["attacks"] = std::move(attacks);
    return doc.dump();
  }
  std::string out;
  for (const auto& name : af.labels()) out += "arg(" + name + ").\n";
  for (const auto& a : af.attacks()) {
    out += "att(" + af.label(a.source) + "," + af.label(a.target) + ").\n";
  }
  return out;
}

std::string render_tgf(const Framework& af) {
  std::string out;
  for (const auto& name : af.labels()) out += name + "\n";
  out += "#\n";
  for (const auto& a : af.attacks()) {
    out += af.label(a.source) + " " + af.label(a.target) + "\n";
  }
  return out;
}

std::string render_extensions(const Framework& af, const ExtensionSet& sets,
                              RenderFormat fmt) {
  if (fmt == RenderFormat::Json) {
    Json doc = Json::array();
    for (auto s : sets) {
      Json members = Json::array();
      for (auto x : s) members.push_back(af.label(x));
      doc.push_back(std::move(members));
    }
    return doc.dump();
  }
  std::string out;
  for (auto s : sets) out += format_set(af, s) + "\n";
  return out;
}

}  // namespace argcog::io
