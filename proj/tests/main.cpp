#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>

#include "support.hpp"

int main(int argc, char** argv) {
  std::printf("random seed: %llu (override with STANLEY_TEST_SEED)\n",
              static_cast<unsigned long long>(testsupport::global_seed()));
  doctest::Context context(argc, argv);
  return context.run();
}
