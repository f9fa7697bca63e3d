#pragma once

#include <string_view>

namespace semind::data {

/// Shipped coefficient tables (data/*.txt), compiled in.
std::string_view ap4_table();
std::string_view peenn_expansion();
std::string_view peenn_coefficients();

}  // namespace semind::data
