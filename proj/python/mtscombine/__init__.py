# Copyright 2026 The mtscombine Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Combining metrical task system heuristics under m-delayed bandit access."""

import json as _json

from ._mtscombine import *  # noqa: F401,F403
from ._mtscombine import run_experiment as _run_experiment
from ._mtscombine import sweep as _sweep

__version__ = "0.1.0"


def run(config, write=False):
  """Runs an experiment; `config` is a dict or a JSON string."""
  if not isinstance(config, str):
    config = _json.dumps(config)
  return _run_experiment(config, write)


def run_sweep(config, axis, values):
  """Sweeps one axis of `config` (dict or JSON string)."""
  if not isinstance(config, str):
    config = _json.dumps(config)
  return _sweep(config, axis, list(values))
