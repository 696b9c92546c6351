#include <cstdio>
#include <string>
#include <vector>

#include "puniv/io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  puniv::CommandResult result = puniv::run_command(args);
  std::fputs(result.text.c_str(), stdout);
  return result.exit_code;
}
