#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace vtcli {

// One invariant check: returns nothing on success, or a description of the
// first counterexample found.
struct Check {
    std::string name;
    std::function<std::optional<std::string>()> run;
};

std::vector<Check> words_suite();
std::vector<Check> vt_suite();
std::vector<Check> search_suite();
std::vector<Check> shiftreg_suite();

} // namespace vtcli
