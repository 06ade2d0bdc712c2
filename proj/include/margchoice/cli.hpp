#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace margchoice {

inline constexpr int kExitPositive = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Command-line entry point; `args` excludes the program name.
///   check | rationalize | rum | luce | ircs | tsc | pf | avail  <dataset.json>
///   gen <rum|luce|ircs|tsc|avail> --n N --seed S [--batch K]
/// Exit 0 when the verdict is positive, 1 when negative, 2 on usage or
/// validation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace margchoice
