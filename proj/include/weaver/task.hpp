/// @file task.hpp
/// @brief Task plan data model and the strict task-list wire format.

#pragma once

#include <string>
#include <vector>

namespace weaver {

enum class TaskAction { create, update };

/// One work item: rewrite or create exactly one target file.
struct Task {
    int task_id = 0;
    TaskAction action = TaskAction::update;
    std::string target_path;
    std::string instruction;
    std::vector<std::string> context_paths;
};

/// Ordered work items plus an echo of the request they came from. The order
/// always satisfies execution_order over the task targets.
struct TaskPlan {
    std::vector<Task> tasks;
    std::string request_echo;
};

/// Strict parse of the documented JSON task array: exactly the five fields
/// per object, case-sensitive action strings, unknown fields rejected.
/// Throws TaskParseError with a location on any deviation. An empty array
/// parses to an empty list; the caller decides whether that is fatal.
std::vector<Task> parse_task_list(const std::string& raw);

const char* to_string(TaskAction a);

std::string plan_to_json(const TaskPlan& plan);

/// Inverse of plan_to_json; throws TaskParseError on malformed input.
TaskPlan plan_from_json(const std::string& text);

} // namespace weaver
