/*
   Copyright 2026 The ddgk Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DDGK_TASK_HPP
#define DDGK_TASK_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ddgk/algebra.hpp"
#include "ddgk/modfree.hpp"
#include "ddgk/ordering.hpp"

namespace ddgk {

using Json = nlohmann::ordered_json;

enum class TaskKind { Gb, Reduce, Member, Hilbert, GkDim, ModuleGb, ModuleGkDim, OracleHf };

TaskKind parse_task_kind(const std::string& name);
std::string to_string(TaskKind kind);

/// A validated task file. rank == 0 means the task works with left ideals.
struct Task {
    DDAlgebra algebra;
    OrderingSpec ordering;
    ModuleExtension extension = ModuleExtension::TOP;
    TaskKind kind = TaskKind::Gb;
    std::size_t rank = 0;
    std::vector<Element> generators;
    std::vector<ModElement> module_generators;
    std::optional<Element> f;
    std::optional<std::size_t> t;
};

/// Parses and validates a task document. Throws ParseError and the
/// validation errors of the algebra layer.
Task parse_task(const std::string& text, const std::optional<std::string>& ordering_override = std::nullopt);

/// Runs the task. max_t overrides the file's t for the value tables.
Json run_task(const Task& task, std::optional<std::size_t> max_t = std::nullopt);

/// Plain-text rendering of a run_task result.
std::string render_text(const Json& result);

/// Term-list form of elements, the same shape the parser accepts.
Json element_to_json(const Element& f, const OrderingSpec& ord);
Json element_to_json(const ModElement& f, const ModuleOrderingSpec& ord);

/// Full command line: ddgk <task-file> [--json] [--ordering OVERRIDE] [--max-t N].
/// Returns the process exit code: 0 success, 2 invalid input, 3 computation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ddgk

#endif
