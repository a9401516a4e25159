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

#pragma once

#include <string>
#include <string_view>

#include "argcog/framework.hpp"

namespace argcog::io {

enum class RenderFormat { Text, Json };

/// Parses `arg(NAME).` / `att(NAME,NAME).` lines, NAME = [A-Za-z0-9_]+.
/// Blank lines and lines starting with '%' are skipped. Declarations may come
/// in any order, but every attacked or attacking name must be declared.
/// Throws ParseError{SyntaxError}, Error{UnknownLabel}, Error{DuplicateLabel}.
Framework parse_apx(std::string_view text);

/// Trivial Graph Format: `ID [LABEL]` node lines, a `#` line, then `SRC DST`
/// edge lines over IDs. A node's label defaults to its ID.
/// Throws ParseError{SyntaxError}, ParseError{UnknownLabel},
/// Error{DuplicateLabel}, Error{MissingSeparator}.
Framework parse_tgf(std::string_view text);

/// Text is APX (arguments in declaration order, then attacks by index);
/// JSON is {"arguments":[...],"attacks":[[src,dst],...]} on one line.
std::string render_af(const Framework& af, RenderFormat fmt);

/// TGF with labels as node IDs.
std::string render_tgf(const Framework& af);

/// Text is one `{a,b}` line per set; JSON is a list of label lists.
std::string render_extensions(const Framework& af, const ExtensionSet& sets,
                              RenderFormat fmt);

}  // namespace argcog::io
