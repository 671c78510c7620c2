// Copyright 2026 The delaynet Authors
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

#ifndef DELAYNET_DELAYNET_HPP_
#define DELAYNET_DELAYNET_HPP_

#include "delaynet/continuous.hpp"
#include "delaynet/delay.hpp"
#include "delaynet/discrete.hpp"
#include "delaynet/errors.hpp"
#include "delaynet/graph.hpp"
#include "delaynet/lambert.hpp"
#include "delaynet/matrix.hpp"
#include "delaynet/netgen.hpp"
#include "delaynet/presets.hpp"
#include "delaynet/rng.hpp"
#include "delaynet/spectral.hpp"

#endif  // DELAYNET_DELAYNET_HPP_
