// Copyright 2026 The ewlpd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EWLPD_EWLPD_HPP_
#define EWLPD_EWLPD_HPP_

#include "ewlpd/rational.hpp"
#include "ewlpd/game.hpp"
#include "ewlpd/ewl.hpp"
#include "ewlpd/extensions.hpp"
#include "ewlpd/regions.hpp"
#include "ewlpd/verifier.hpp"
#include "ewlpd/figures.hpp"
#include "ewlpd/report.hpp"

#endif  // EWLPD_EWLPD_HPP_
