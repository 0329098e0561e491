/*
   Copyright 2026 The vakh authors

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
#pragma once

#include "vakh/analysis.hpp"
#include "vakh/bilinear.hpp"
#include "vakh/classify.hpp"
#include "vakh/errors.hpp"
#include "vakh/exppoly.hpp"
#include "vakh/soliton.hpp"
#include "vakh/tau.hpp"
#include "vakh/transform.hpp"
#include "vakh/two_soliton.hpp"
#include "vakh/presets.hpp"
