/*
   Copyright 2026 The hypermod Authors

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

// Command-line front end. Exit codes: 0 ok, 1 internal error, 2 usage,
// 3 mathematical precondition, 4 bounded search found nothing.

#ifndef HYPERMOD_CLI_HPP
#define HYPERMOD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypermod/hyperg.hpp"

namespace hypermod {

inline constexpr const char* kSchema = "hypermod/1";

enum ExitCode { kExitOk = 0, kExitInternal = 1, kExitUsage = 2, kExitPrecondition = 3, kExitNotFound = 4 };

// "1/2,2/3" -> {1/2, 2/3}; "" -> {}
std::vector<Rat> parse_rat_list(const std::string& text);
// ALPHA / BETA tokens, e.g. {"1/9,4/9,5/9", "/", "1/3,1"}; BETA may be absent.
HParams parse_params(const std::vector<std::string>& tokens);

struct Request {
  std::string command;
  std::vector<std::string> args;  // everything after the subcommand, as given
  std::string format;             // resolved output format
  unsigned long seed = 0;
  bool operator==(const Request& o) const {
    return command == o.command && args == o.args && format == o.format && seed == o.seed;
  }
};
Request request_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Request& r);

// argv-style arguments without the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypermod

#endif
