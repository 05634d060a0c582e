/*
 * Copyright 2026 The klyachko authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klyachko/check.hpp"

#include <random>

using namespace klyachko;

namespace {

void run_fan(const char* name, int count, std::uint64_t seed) {
  const ToricVariety X = ToricVariety::create(catalog_fan(name));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const MonomialIdeal I = random_ideal(rng, X.num_rays());
    for (const auto& r : check_ideal(X, I)) {
      CAPTURE(name);
      CAPTURE(i);
      CAPTURE(r.witness);
      CHECK_MESSAGE(r.passed, r.name);
    }
  }
}

}  // namespace

TEST_CASE("P1") { run_fan("P1", 50, 101); }
TEST_CASE("P1xP1") { run_fan("P1xP1", 40, 102); }
TEST_CASE("H0") { run_fan("H0", 30, 103); }
TEST_CASE("H1") { run_fan("H1", 30, 104); }
TEST_CASE("H2") { run_fan("H2", 30, 105); }
TEST_CASE("P2xP1") { run_fan("P2xP1", 10, 106); }
