#include <cstdio>

int main() {
  std::puts("graphevo: subcommands not wired up yet");
  return 1;
}
