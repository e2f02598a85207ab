// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "skc/randgen.hpp"

namespace testgen = skc::gen;
