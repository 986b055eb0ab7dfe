#pragma once

#include "regal/dsl.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace regal {

// Built-in models: "zero_one", "dollar" (takes the auction value v, default
// 2), "infinipede", "zigzag", "backbone". Throws ModelError for unknown
// names or dollar with v <= 0.
dsl::Model builtin_model(std::string_view name, std::optional<Rational> v = {});

std::vector<std::string> builtin_names();
std::string builtin_description(std::string_view name);

}  // namespace regal
