#pragma once

// Umbrella header. report.hpp is not included here because it pulls in
// nlohmann/json; include it directly when serializing.

#include "rootdiff/numtheory.hpp"
#include "rootdiff/falling.hpp"
#include "rootdiff/derivsum.hpp"
#include "rootdiff/criterion.hpp"
#include "rootdiff/harness.hpp"
