#include "finsphere/scoring/rubric.hpp"

#include <initializer_list>

#include "finsphere/common/errors.hpp"

namespace finsphere::scoring {

namespace {

void check_set(int value, std::initializer_list<int> allowed, const char* field) {
    for (int a : allowed)
        if (value == a) return;
    throw ValidationError(std::string(field) + " score " + std::to_string(value) +
                          " is outside its point set");
}

}  // namespace

void RubricScore::validate() const {
    check_set(conclusion, {0, 5, 10, 20}, "conclusion");
    check_set(content_dimensions, {0, 5, 10, 15, 18, 20, 25, 30}, "content_dimensions");
    check_set(logical_consistency, {0, 15}, "logical_consistency");
    check_set(structure, {0, 5}, "structure");
    check_set(language, {0, 5, 8, 10}, "language");
    check_set(data, {0, 5, 10, 15, 20}, "data");
}

void JudgeInput::validate() const {
    check_set(conclusion_tier, {0, 5, 10, 20}, "conclusion");
    check_set(content_dims_tier, {0, 5, 10, 15, 18, 20, 25, 30}, "content_dimensions");
    check_set(language_tier, {0, 5, 8, 10}, "language");
}

}  // namespace finsphere::scoring
