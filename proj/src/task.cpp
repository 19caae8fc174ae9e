#include "weaver/task.hpp"

#include "weaver/errors.hpp"

#include <json.hpp>

namespace weaver {

namespace {

Task parse_task_object(const nlohmann::json& item, const std::string& where) {
    if (!item.is_object()) throw TaskParseError(where + ": expected an object");
    Task task;
    bool saw_id = false, saw_action = false, saw_target = false, saw_instruction = false,
         saw_context = false;
    for (const auto& [key, value] : item.items()) {
        if (key == "task_id") {
            if (!value.is_number_integer() || value.get<long long>() <= 0) {
                throw TaskParseError(where + ".task_id: must be a positive integer");
            }
            task.task_id = value.get<int>();
            saw_id = true;
        } else if (key == "action") {
            if (!value.is_string()) throw TaskParseError(where + ".action: must be a string");
            std::string action = value.get<std::string>();
            if (action == "create") {
                task.action = TaskAction::create;
            } else if (action == "update") {
                task.action = TaskAction::update;
            } else {
                throw TaskParseError(where + ".action: '" + action +
                                     "' is not \"create\" or \"update\"");
            }
            saw_action = true;
        } else if (key == "target_path") {
            if (!value.is_string()) throw TaskParseError(where + ".target_path: must be a string");
            task.target_path = value.get<std::string>();
            saw_target = true;
        } else if (key == "instruction") {
            if (!value.is_string()) throw TaskParseError(where + ".instruction: must be a string");
            task.instruction = value.get<std::string>();
            saw_instruction = true;
        } else if (key == "context_paths") {
            if (!value.is_array()) throw TaskParseError(where + ".context_paths: must be an array");
            for (const auto& p : value) {
                if (!p.is_string()) {
                    throw TaskParseError(where + ".context_paths: entries must be strings");
                }
                task.context_paths.push_back(p.get<std::string>());
            }
            saw_context = true;
        } else {
            throw TaskParseError(where + ": unknown field '" + key + "'");
        }
    }
    if (!saw_id) throw TaskParseError(where + ": missing task_id");
    if (!saw_action) throw TaskParseError(where + ": missing action");
    if (!saw_target) throw TaskParseError(where + ": missing target_path");
    if (!saw_instruction) throw TaskParseError(where + ": missing instruction");
    if (!saw_context) throw TaskParseError(where + ": missing context_paths");
    return task;
}

} // namespace

std::vector<Task> parse_task_list(const std::string& raw) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(raw);
    } catch (const nlohmann::json::parse_error& e) {
        throw TaskParseError(std::string("task list is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw TaskParseError("task list root must be a JSON array");
    std::vector<Task> tasks;
    tasks.reserve(doc.size());
    size_t i = 0;
    for (const auto& item : doc) {
        tasks.push_back(parse_task_object(item, "task[" + std::to_string(i++) + "]"));
    }
    return tasks;
}

const char* to_string(TaskAction a) {
    return a == TaskAction::create ? "create" : "update";
}

std::string plan_to_json(const TaskPlan& plan) {
    nlohmann::ordered_json doc;
    doc["request"] = plan.request_echo;
    doc["tasks"] = nlohmann::ordered_json::array();
    for (const auto& t : plan.tasks) {
        nlohmann::ordered_json task;
        task["task_id"] = t.task_id;
        task["action"] = to_string(t.action);
        task["target_path"] = t.target_path;
        task["instruction"] = t.instruction;
        task["context_paths"] = t.context_paths;
        doc["tasks"].push_back(std::move(task));
    }
    return doc.dump(2) + "\n";
}

TaskPlan plan_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw TaskParseError(std::string("plan file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("tasks") || !doc["tasks"].is_array()) {
        throw TaskParseError("plan file must be an object with a tasks array");
    }
    TaskPlan plan;
    plan.request_echo = doc.value("request", "");
    size_t i = 0;
    for (const auto& item : doc["tasks"]) {
        plan.tasks.push_back(parse_task_object(item, "tasks[" + std::to_string(i++) + "]"));
    }
    return plan;
}

} // namespace weaver
