/// @file planner.hpp
/// @brief Maps a feature request onto an ordered, validated task plan.

#pragma once

#include "weaver/schema.hpp"
#include "weaver/task.hpp"

namespace weaver {

/// Prompts the provider with the schema + request + task contract and parses
/// the response into a TaskPlan.
///
/// An unparseable response earns exactly one corrective re-prompt quoting the
/// parse error; a second failure is a PlanningError. An empty plan, a task
/// updating a path outside the project, a create target that already exists
/// (or is malformed), duplicate/non-dense task ids, or context paths outside
/// the project are PlanningErrors naming the offenders. Accepted tasks are
/// reordered dependency-first via execution_order.
TaskPlan map_feature(const ProjectSchema& schema, const FeatureRequest& request,
                     Provider& provider);

/// The validation half of map_feature, applied to an already-parsed task
/// list (also used when re-running a saved plan). Throws PlanningError.
TaskPlan validate_and_order(std::vector<Task> tasks, const ProjectSchema& schema,
                            const FeatureRequest& request);

} // namespace weaver
