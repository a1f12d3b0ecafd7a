// SPDX-License-Identifier: Apache-2.0
//
// wipt-sim: Monte Carlo simulator for multi-antenna wireless information and power transfer
// Copyright (C) 2026 The wipt-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#ifndef WIPT_WIPT_HPP
#define WIPT_WIPT_HPP

#include "wipt/channel.hpp"
#include "wipt/error.hpp"
#include "wipt/experiment.hpp"
#include "wipt/feedback.hpp"
#include "wipt/optimize.hpp"
#include "wipt/random.hpp"
#include "wipt/stats.hpp"
#include "wipt/swipt.hpp"
#include "wipt/wpc.hpp"

#endif
